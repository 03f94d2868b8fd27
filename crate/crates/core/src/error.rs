use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("resultant input has degree 0 in the elimination variable")]
    ZeroDegreeInput,
    #[error("rings differ: `{0}` vs `{1}`")]
    RingMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("local order rejected here; use mora for local orders")]
    LocalOrderRejected,
    #[error("global order rejected here; use groebner for global orders")]
    GlobalOrderRejected,
    #[error("quotient is infinite-dimensional")]
    InfiniteDimensional,
    #[error("singularity is not isolated (infinite local quotient)")]
    NonIsolated,
    #[error("elimination failed: {0}")]
    EliminationFailed(String),
    #[error("point does not lie on the variety (equation {0} is nonzero there)")]
    PointNotOnVariety(usize),
    #[error("singular locus is positive-dimensional")]
    PositiveDimensionalSingularLocus,
    #[error("degenerate fibration: discriminant vanishes identically")]
    DegenerateFibration,
    #[error("census contains a non-nodal entry; use the generalized formulas")]
    NonNodalCensus,
    #[error("unknown resolution structure for a census entry of class {0}")]
    UnknownResolutionStructure(String),
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("parity violation: c' + c'' = {0} is odd")]
    ParityViolation(i64),
    #[error("exact-sequence chase is underdetermined: {0}")]
    AmbiguousChase(String),
    #[error("{0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
