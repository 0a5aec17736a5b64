use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("polynomial is not homogeneous: found terms of degree {first} and {second}")]
    NonHomogeneous { first: u32, second: u32 },

    #[error("unknown variable x{index}: ambient space has variables x0..x{r}")]
    UnknownVariable { index: usize, r: usize },

    #[error("the zero polynomial does not define a hypersurface")]
    ZeroPolynomial,

    #[error("a constant polynomial does not define a hypersurface")]
    ConstantPolynomial,

    #[error("dimension mismatch: expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degree {t} is below the Gotzmann number {d}")]
    BelowGotzmann { t: u32, d: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("zero vector has no projective class or primitive direction")]
    ZeroVector,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not lower triangular")]
    NotLowerTriangular,

    #[error("{needed} column tuples exceed the cap of {cap}")]
    CapExceeded { needed: u128, cap: u128 },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
