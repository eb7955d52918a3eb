use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("m and n must be positive (got m={m}, n={n})")]
    NonPositive { m: u32, n: u32 },

    #[error("m and n must be coprime (got m={m}, n={n})")]
    NotCoprime { m: u32, n: u32 },

    #[error("m*n does not fit in a 64-bit rank (got m={m}, n={n})")]
    TooLarge { m: u32, n: u32 },

    #[error("cell ({u},{v}) is outside the {m}x{n} diagram")]
    CellOutOfRange { u: u32, v: u32, m: u32, n: u32 },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid highlighting: {0}")]
    InvalidHighlight(String),

    #[error("invalid Dyck triple ({a},{d},{s}): {reason}")]
    InvalidTriple {
        a: u32,
        d: u32,
        s: u32,
        reason: &'static str,
    },

    #[error("{0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer coefficient overflow")]
    Overflow,

    #[error("work bound exceeded: {required} paths needed, bound is {bound}")]
    WorkBound { required: String, bound: u128 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
