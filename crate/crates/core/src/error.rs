use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in exact integer coefficient arithmetic")]
    Overflow,

    #[error("invalid denominator factor: q exponent must be at least 1")]
    InvalidFactor,

    #[error("invalid substitution for {var}: only 0 or 1 times a power of q may replace a weight in a denominator")]
    InvalidSubstitution { var: char },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    #[error("parameter error for `{id}`: {message}")]
    ParameterDomain { id: String, message: String },

    #[error("partition {partition} is not in {class}")]
    NotInClass { partition: String, class: &'static str },

    #[error("classification gap: {lambda} (n={n}) matches no case rule of `{id}`")]
    ClassificationGap { id: String, n: u32, lambda: String },

    #[error("ambiguous classification: {lambda} (n={n}) under `{id}`: {detail}")]
    Ambiguous {
        id: String,
        n: u32,
        lambda: String,
        detail: String,
    },

    #[error("table for `{id}` at n={n} is undefined: signature class {signature} has {product} product-side and {diff} difference-side members")]
    NonSingletonClass {
        id: String,
        n: u32,
        signature: String,
        product: usize,
        diff: usize,
    },

    #[error("series coefficient of `{id}` carries weight {monomial}, which maps to no watched part size")]
    UnwatchedWeight { id: String, monomial: String },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("linear system has a non-integral solution for unknown {unknown}: {value}")]
    NonIntegral { unknown: String, value: String },

    #[error("invalid discovery problem: {0}")]
    InvalidProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
