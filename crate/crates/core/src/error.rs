use thiserror::Error;

/// Errors raised by the exact-arithmetic pipeline.
///
/// Validation failures (`LinearlyDependent`, `NotASubalgebra`, `InvalidProblem`,
/// `Decomposition`, `NotInRestrictedCartan`) mean the input does not describe a
/// homogeneous-space pair; the remaining variants are plain usage errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("basis is linearly dependent")]
    LinearlyDependent,

    #[error("not a subalgebra: bracket of basis elements {i} and {j} leaves the span")]
    NotASubalgebra { i: usize, j: usize },

    #[error("zero vector: no relations are derivable from an empty support")]
    ZeroVector,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "h is not stable under the restricted torus: its weight components \
         span {found} of {expected} dimensions"
    )]
    Decomposition { found: usize, expected: usize },

    #[error("vector lies outside the restricted Cartan: it pairs nontrivially with a relation")]
    NotInRestrictedCartan,

    #[error("problem invariant violated: {0}")]
    InvalidProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
