use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(u64),

    #[error("a fibration needs at least one non-separating vanishing cycle (n >= 1)")]
    NoNonSeparating,

    #[error("separating census must have exactly floor(g/2) = {expected} entries, got {got}")]
    SeparatingLength { expected: usize, got: usize },

    #[error("separating type h = {h} is outside 1..={max}")]
    SeparatingType { h: u64, max: u64 },

    #[error("separating type h = {0} given more than once")]
    DuplicateSeparatingType(u64),

    #[error("slope 12 has no associated signature factor")]
    SlopeTwelve,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("unknown check id {id:?}; valid ids are {valid}")]
    UnknownCheck { id: String, valid: String },

    #[error("hypothesis not met: {0}")]
    Hypothesis(&'static str),

    #[error("region classification is defined for genus 2 only, got genus {0}")]
    RegionGenus(u64),

    #[error("slope {0} lies outside the genus-2 regions [2, 6)")]
    RegionOutOfRange(String),

    #[error("slope interval {slope} and ratio interval {ratio} disagree")]
    RegionMismatch {
        slope: &'static str,
        ratio: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
