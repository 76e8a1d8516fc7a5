use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("L and S must both be at least 1 (got L={l}, S={s})")]
    InvalidLs { l: i64, s: i64 },
    #[error("base must be at least 2 (got {0})")]
    InvalidBase(u64),
    #[error("interval count overflows u64 at depth {depth}")]
    CountOverflow { depth: u32 },
    #[error("depth {depth} needs {needed} intervals, above the cap of {cap}")]
    CapExceeded { depth: u32, needed: u64, cap: u64 },
    #[error("alpha must lie strictly inside (0, 1) (got {0})")]
    InvalidAlpha(f64),
    #[error("refinement fractions must be positive and sum to 1")]
    InvalidRule,
    #[error("point count must be at least 1")]
    EmptyPointSet,
    #[error("{count} points exceed the limit of {limit} for this computation")]
    TooManyPoints { count: usize, limit: usize },
    #[error("coordinate {value} of point {index} lies outside [0, 1)")]
    OutOfRange { index: usize, value: f64 },
    #[error("bases {a} and {b} share a common factor")]
    NonCoprimeBases { a: u32, b: u32 },
    #[error("dimension must be between {min} and {max} (got {got})")]
    InvalidDimension { got: usize, min: usize, max: usize },
    #[error("Weyl sums need a nonzero frequency")]
    ZeroFrequency,
    #[error("sample sizes must be positive and strictly increasing")]
    InvalidGrid,
    #[error("integrand {0} has no known exact value")]
    NoExactValue(&'static str),
    #[error("unknown integrand {0}")]
    UnknownIntegrand(alloc::string::String),
}
