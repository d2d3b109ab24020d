use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),

    #[error("not a numerical semigroup: gcd must be 1, got {0}")]
    GcdNotOne(i64),

    #[error("{0} is not a member of the semigroup")]
    NotMember(i64),

    #[error("Apery set requires a nonzero member, got {0}")]
    InvalidAperyElement(i64),

    #[error("Ap(S, {{}}) is all of S; an explicit window bound is required")]
    UnboundedApery,

    #[error("the semigroup has no unbalanced Betti elements")]
    NoUnbalancedBetti,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0}")]
    OutsideClosedForm(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("malformed table data: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
