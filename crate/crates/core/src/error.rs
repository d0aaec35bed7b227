use thiserror::Error;

/// Errors raised by constructions over finite preordered sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index {index} out of range for carrier of size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("preordered sets must be non-empty")]
    EmptyCarrier,

    #[error("relation is not transitive: {a}->{b} and {b}->{c} but not {a}->{c}")]
    NotTransitive { a: usize, b: usize, c: usize },

    #[error("relation is not a preorder")]
    NotPreorder,

    #[error("relation is not an equivalence relation")]
    NotEquivalence,

    #[error("relation is not a partial order")]
    NotPartialOrder,

    #[error("map is not monotone: {a} related to {b} but images {fa} and {fb} are not")]
    NotMonotone { a: usize, b: usize, fa: usize, fb: usize },

    #[error("map has length {got}, expected {expected}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("morphisms are not composable: codomain and domain differ")]
    EndpointMismatch,

    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("partition does not match the equivalence relation")]
    PartitionMismatch,

    #[error("first relation is not contained in the second")]
    NotContained,

    #[error("family of open sets is not an Alexandroff topology: {0}")]
    NotAlexandroff(&'static str),

    #[error("empty family")]
    EmptyFamily,

    #[error("carrier size {n} outside the enumeration cap 1..={cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("sequence is not short preexact: {0}")]
    NotPreexact(String),

    #[error("sequence is not short exact in the stable category: {0}")]
    NotShortExact(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
