use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0 cannot be a gap: every numerical set contains 0")]
    ZeroGap,

    #[error("no generators given")]
    EmptyGenerators,

    #[error("generators have gcd {0}: the generated monoid is not cofinite")]
    NotCofinite(u32),

    #[error("{0} is undefined for the set of all nonnegative integers")]
    UndefinedForNaturals(&'static str),

    #[error("{0} is not closed under addition")]
    NotASemigroup(String),

    #[error("({u}, {x}) is not a box: need u in T, x a gap of T, and u < x")]
    NotABox { u: u32, x: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{0} is not an element of the void")]
    NotInVoid(u32),

    #[error("{0:?} is not an order ideal of the void poset")]
    NotAnOrderIdeal(Vec<u32>),

    #[error("the numerical set {0} is not associated to the semigroup")]
    NotAssociated(String),

    #[error("void has {0} elements; at most 64 are supported")]
    VoidTooLarge(usize),

    #[error("expected a semigroup of {expected}, found {found}")]
    WrongInvariant { expected: String, found: String },

    #[error("parameter out of domain: {0}")]
    OutOfDomain(String),

    #[error("property violated: {0}")]
    PropertyViolated(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
