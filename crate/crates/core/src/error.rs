use thiserror::Error;

/// Errors produced by node generation, interpolation and the benchmark harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid degree {0}: need n >= 1")]
    InvalidDegree(usize),

    #[error("{what} = {value} lies outside [-1, 1]")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid interval [{a}, {b}]: need a < b")]
    InvalidInterval { a: f64, b: f64 },

    #[error("nodes {i} and {j} coincide")]
    DegenerateNodes { i: usize, j: usize },

    #[error("barycentric weight {index} is not finite (degree {n})")]
    NonfiniteWeight { index: usize, n: usize },

    #[error("length mismatch: {nodes} nodes but {values} values")]
    LengthMismatch { nodes: usize, values: usize },

    #[error("expected samples on {expected} nodes, got {found}")]
    WrongNodeFamily {
        expected: &'static str,
        found: &'static str,
    },

    #[error("unknown benchmark id {0}: valid ids are 1..=10")]
    InvalidBenchmark(u8),

    #[error("invalid grid of {0} points: need an odd count >= 3")]
    InvalidGrid(usize),

    #[error("grid of {0} points does not contain x = +-0.5")]
    MissingBreakpoint(usize),

    #[error("invalid degree range {from}..{to} step {step}")]
    InvalidRange { from: usize, to: usize, step: usize },

    #[error("epsilon must be positive, got {0}")]
    InvalidEpsilon(f64),

    #[error("threshold {epsilon} not reached up to n = {n_max}; best error {best}")]
    NotReached { epsilon: f64, n_max: usize, best: f64 },

    #[error("csv: {0}")]
    Csv(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
