use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("gamma function pole at x = {0}")]
    GammaPole(f64),

    #[error("parabolic cylinder function lost accuracy: D_{order}({x}) error estimate {est:e}")]
    AccuracyLoss { order: f64, x: f64, est: f64 },

    #[error("parabolic cylinder function overflow: D_{order}({x})")]
    Overflow { order: f64, x: f64 },

    #[error("spectral equation requires c > 0 (c = 0 is handled by the merged-delta solver)")]
    ZeroDisplacement,

    #[error("only {found} of {requested} roots found in Q range [{q_min}, {q_max}]")]
    RangeExhausted { found: usize, requested: usize, q_min: f64, q_max: f64 },

    #[error("level labelling mismatch: expected {expected} nodes, counted {counted}")]
    Labeling { expected: usize, counted: usize },

    #[error("quadrature did not converge on [{a}, {b}]")]
    Quadrature { a: f64, b: f64 },

    #[error("eigensolver did not converge: {0}")]
    NonConvergence(String),

    #[error("sample {index} ({axis} = {value}): {source}")]
    AtSample { index: usize, axis: &'static str, value: f64, source: Box<Error> },
}

impl Error {
    /// The underlying error, looking through sample annotations.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtSample { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
