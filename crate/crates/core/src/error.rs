use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error(
        "matrix is not Hermitian: max |M - M^dagger| = {deviation:e} exceeds tolerance {tol:e}"
    )]
    NonHermitian { deviation: f64, tol: f64 },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("entry count {len} does not match shape {rows}x{cols}")]
    BadShape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("state vector norm {norm} differs from 1")]
    NotNormalized { norm: f64 },
    #[error("trace {trace} differs from 1")]
    NotUnitTrace { trace: f64 },
    #[error("minimum eigenvalue {min_eigenvalue:e} is below -{tol:e}")]
    NotPositive { min_eigenvalue: f64, tol: f64 },
    #[error("weight {weight} must be strictly positive")]
    NonPositiveWeight { weight: f64 },
    #[error("candidate state has no pair of distinct Schmidt weights")]
    NotHardy,
    #[error("observable acts on subsystem {found}, expected subsystem {expected}")]
    SubsystemMismatch { expected: u8, found: u8 },
    #[error("behavior table {setting} sums to {sum}, not 1")]
    MalformedBehavior { setting: usize, sum: f64 },
    #[error("simplex iteration limit {limit} exceeded")]
    NumericalBreakdown { limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
