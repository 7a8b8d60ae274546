use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operator is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("invalid tensor structure: {0}")]
    TensorStructure(String),

    #[error("invalid ensemble: {0}")]
    InvalidEnsemble(String),

    #[error("invalid POVM: {0}")]
    InvalidPovm(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("degenerate overlap cos(theta) = {0}: co-linear and orthogonal pairs are excluded")]
    DegenerateOverlap(f64),

    #[error("supports of rho_a and rho_b overlap in {overlap_dim} dimension(s)")]
    OverlappingSupports { overlap_dim: usize },

    #[error("Gram matrix is singular (min eigenvalue {min_eigenvalue:.3e})")]
    SingularGram { min_eigenvalue: f64 },

    #[error("ensemble is not comparable: support of state {state} lies in the span of the others")]
    Infeasible { state: usize },

    #[error("reduction check failed: {0}")]
    ReductionCheck(String),

    #[error("parse error: {0}")]
    Parse(String),
}
