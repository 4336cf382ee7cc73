//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by sample construction, statistic evaluation, the envelope
/// engine and the reporting layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("values and labels have different lengths ({values} vs {labels})")]
    LengthMismatch { values: usize, labels: usize },

    #[error("group {group} has no observations")]
    EmptyGroup { group: usize },

    #[error("need at least {needed} groups, got {got}")]
    TooFewGroups { got: usize, needed: usize },

    #[error("group id {group} out of range (group count {count})")]
    UnknownGroup { group: usize, count: usize },

    #[error("non-finite value at position {index}")]
    NonFiniteValue { index: usize },

    #[error("pooled data range is degenerate (all values equal {value})")]
    DegenerateRange { value: f64 },

    #[error("sample is constant; standard deviation is zero")]
    ConstantSample,

    #[error("grid is invalid: {reason}")]
    InvalidGrid { reason: String },

    #[error("quantile level {tau} outside (0, 1]")]
    InvalidTau { tau: f64 },

    #[error("bandwidth {value} is not a positive finite number")]
    InvalidBandwidth { value: f64 },

    #[error("significance level {alpha} outside (0, 1)")]
    InvalidAlpha { alpha: f64 },

    #[error(
        "alpha * (s + 1) = {product:.3} < 1: no curve may be excluded; \
         raise the number of permutations"
    )]
    AlphaBudget { product: f64 },

    #[error("statistic {statistic} requires exactly {needed} groups, sample has {got}")]
    StatisticArity {
        statistic: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("curve sets have mismatched permutation counts")]
    MismatchedCurveSets,

    #[error("curve rows have inconsistent block structure")]
    InconsistentBlocks,

    #[error("retained index set is empty")]
    EmptyRetainedSet,

    #[error("enumeration would produce {count} label assignments (cap {cap})")]
    EnumerationTooLarge { count: u64, cap: u64 },

    #[error("scenario parameter invalid: {reason}")]
    InvalidScenario { reason: String },

    #[error("column '{name}' not found in CSV header")]
    MissingColumn { name: String },

    #[error("row {row}: cannot parse '{value}' as a finite number")]
    BadCsvValue { row: u64, value: String },

    #[error("reference group '{name}' not present in the data")]
    UnknownReferenceGroup { name: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
