use thiserror::Error;

use crate::engine::ConditionTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("size mismatch: expected {expected} monomials, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    /// Input `k` (0-based) reduced to zero during elimination.
    #[error("polynomial {0} reduced to zero (inputs are linearly dependent)")]
    ZeroPivot(usize),

    #[error("shifted condition has no term of degree <= {cap}")]
    ZeroAfterTruncation { cap: u32 },

    #[error("interpolation conditions are linearly dependent (first failure at {tag})")]
    DependentConditions { tag: ConditionTag },

    #[error("monomial set is not an interpolating basis (T_Δ is singular)")]
    SingularBasis,

    #[error("problem has no interpolation conditions")]
    EmptyProblem,

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("candidate pool too large: {subsets} subsets exceed the limit of {limit}")]
    PoolTooLarge { subsets: u128, limit: u128 },

    #[error("no interpolating basis among the candidate monomials")]
    NoBasisInPool,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Errors from the polynomial expression parser. Positions are character offsets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },

    #[error("invalid rational literal `{literal}` at position {position}")]
    InvalidRational { literal: String, position: usize },

    #[error("invalid variable list: {0}")]
    InvalidVariables(String),

    #[error("`{text}` is not a monomial")]
    NotAMonomial { text: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
