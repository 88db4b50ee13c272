use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ruleset: {0}")]
    InvalidRuleset(String),

    #[error("cannot parse ruleset at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("heap size {requested} exceeds the state ceiling of {ceiling}")]
    ResourceLimit { requested: u64, ceiling: u64 },

    /// The progression does not satisfy `(c + 2) / 2 <= b < c`.
    #[error("progression b={b}, c={c} violates (c+2)/2 <= b < c")]
    HypothesisViolated { b: u64, c: u64 },

    /// `b < 5` without an explicit override.
    #[error("b={b} is below 5; pass the small-b override to analyse it anyway")]
    SmallStart { b: u64 },

    #[error("analysis needs a ruleset of the `{expected}` family, got `{got}`")]
    WrongFamily { expected: &'static str, got: String },

    #[error("n_max={n_max} is too small, need at least {required}")]
    InsufficientRange { n_max: u64, required: u64 },

    #[error("offset {offset} lies outside the period block [0, {period})")]
    OffsetOutOfRange { offset: u64, period: u64 },

    #[error(
        "no period is supported by the data ({len} values, tail multiple {min_tail_multiple})"
    )]
    InsufficientData {
        len: usize,
        min_tail_multiple: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed table at line {line}: {reason}")]
    Table { line: usize, reason: String },
}
