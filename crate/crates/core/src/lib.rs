//! Exact symbolic toolkit for local invariants of isolated hypersurface
//! singularities, Weierstrass fibration censuses, cusp deformation
//! analysis, invariant propagation across geometric transitions, and
//! sheaf-cohomology dimension counting on the bi-cubic.

pub mod algebra;
pub mod error;
pub mod fibration;
pub mod germ;
pub mod standard_basis;
pub mod versal;

pub use error::{Error, Result};
