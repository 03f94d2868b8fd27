//! The arithmetic substrate: exact coefficient fields, sparse
//! multivariate polynomials, monomial orders, derivatives, substitution,
//! division and resultants.

pub mod cyclotomic;
pub mod field;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ratfn;
pub mod roots;
pub mod rational;
pub mod resultant;
pub mod upoly;
pub mod value;

pub use cyclotomic::Cyclotomic;
pub use field::Field;
pub use linalg::Matrix;
pub use monomial::{Monomial, MonomialOrder, OrderKind, Ring};
pub use parse::{parse_expr, parse_poly, parse_poly_auto, Expr};
pub use poly::Polynomial;
pub use ratfn::{absorb_parameters, mpoly_gcd, mpoly_lcm, RatFn};
pub use rational::{rat, rat_int, rat_sqrt, Rat};
pub use resultant::{divide_with_remainder, resultant};
pub use upoly::UPoly;
pub use value::Value;
