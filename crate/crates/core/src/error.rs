use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),

    #[error("precision {0} bits is below the 53-bit minimum")]
    PrecisionTooLow(u32),

    #[error("sequence index {index} is out of range (defined for {first}..={last})")]
    IndexOutOfRange { index: usize, first: usize, last: usize },

    #[error("sequence value a_{index} = {value} violates {constraint}")]
    SequenceConstraint {
        index: usize,
        value: String,
        constraint: &'static str,
    },

    #[error("parameter is not an exact rational: {0}")]
    NotRational(String),

    #[error("p_{n}(x) vanishes numerically at x = {x}")]
    NearZeroDivisor { n: usize, x: String },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("degenerate leading coefficient: {0}")]
    DegenerateLeading(String),

    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("invalid rule/family pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
