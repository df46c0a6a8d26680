use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("zero is not a valid {0} here")]
    ZeroInput(&'static str),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vectors are not orthogonal (dot product {dot})")]
    NotOrthogonal { dot: BigInt },

    #[error("vectors have unequal squared lengths ({left} vs {right})")]
    UnequalNorms { left: BigInt, right: BigInt },

    #[error("rows {i} and {j} violate the frame condition: {detail}")]
    FrameViolation { i: usize, j: usize, detail: String },

    #[error("pair is reducible: common factor {factor}")]
    ReduciblePair { factor: BigInt },

    #[error("frame is reducible: common factor {factor}")]
    ReducibleFrame { factor: BigInt },

    #[error("Gram determinant {det} is not a perfect square")]
    NonSquareGram { det: BigInt },

    #[error("degenerate pair: all minors vanish")]
    DegeneratePair,

    #[error("interpolation did not produce integer coefficients: {detail}")]
    NonIntegerFit { detail: String },

    #[error("no result within search bound {bound}")]
    NotFoundWithinBound { bound: BigInt },

    #[error("count data is inconsistent: {detail}")]
    CountMismatch { detail: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Exit-code style classification used by the command line front end.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
