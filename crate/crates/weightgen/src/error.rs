use thiserror::Error;

/// Errors surfaced by the exact-arithmetic substrate and the
/// multiplicity-computation routes built on top of it.
#[derive(Debug, Error)]
pub enum Error {
    /// Arithmetic between two truncated series requires equal truncation orders.
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    /// A rational function has no power-series expansion at the origin.
    #[error("denominator has zero constant term; no power-series expansion exists")]
    ZeroConstantTerm,

    /// Series division produced a non-integer coefficient.
    #[error("series coefficient at t1^{0} t2^{1} is not an integer")]
    NonIntegralCoefficient(u32, u32),

    /// The Weyl alternating denominator must divide the numerator exactly.
    #[error("alternating denominator does not divide the numerator exactly")]
    InexactCharacterDivision,

    /// The requested computation route exists only for C2.
    #[error("method `{0}` is defined only for C2")]
    MethodUnsupported(&'static str),

    /// Malformed request from the command line or environment.
    #[error("{0}")]
    Usage(String),

    /// Border formulas are valid only for even p, even q with q <= p/2.
    #[error("border formulas require even p and q with q <= p/2; got p={0}, q={1}")]
    BorderDomain(i64, i64),

    /// Two closed formulas produced different values for the same weight.
    #[error("border formulas disagree at weight ({0},{1}): {2} vs {3}")]
    BorderOverlap(i64, i64, u64, u64),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
