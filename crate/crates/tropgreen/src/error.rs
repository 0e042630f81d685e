use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("the involution x -> -x is not defined at -inf over the semiring T")]
    UndefinedInvolution,

    #[error("entry {value} is not a legal {flavor} value")]
    IllegalEntry { flavor: &'static str, value: String },

    #[error("operation {op} is not supported over {flavor}")]
    FlavorUnsupported {
        op: &'static str,
        flavor: &'static str,
    },

    #[error("chart projection undefined: {0}")]
    ChartUndefined(String),

    #[error("map has not been certified as a morphism")]
    NotAMorphism,

    #[error("vector is not a member of the convex set")]
    NotAMember,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("a convex set over FT needs at least one generator")]
    EmptyFinitarySet,

    #[error("parse error at {place}: {msg}")]
    Parse { place: String, msg: String },

    #[error("enumeration size {n} exceeds the cap {cap}; raise the cap explicitly")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
