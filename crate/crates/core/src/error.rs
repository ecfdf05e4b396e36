use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("metric is degenerate")]
    DegenerateMetric,

    #[error("center degenerate: {0} requires a non-degenerate center")]
    DegenerateCenter(&'static str),

    #[error("complement is not the orthogonal complement of the center: {0} requires v = z^perp")]
    NonOrthogonalComplement(&'static str),

    #[error("subspace is not a complement of the center")]
    NotComplement,

    #[error("algebra is not 2-step nilpotent: {0} requires [n,n] inside the center")]
    NotTwoStep(&'static str),

    #[error("metric is not ad-invariant: {0} requires a bi-invariant metric")]
    NotBiInvariant(&'static str),

    #[error("algebra is not solvable: the nilradical solver only accepts solvable input")]
    NotSolvable,

    #[error("linear map is not invertible")]
    NotInvertible,

    #[error("could not factor polynomial of degree {0} over the rationals within the search bound")]
    IrreducibleFactorizationIncomplete(usize),

    #[error("geodesic residual needs at least 5 samples, got {0}")]
    TooFewSamples(usize),

    #[error("vector does not lie in {0}")]
    NotInSubspace(&'static str),

    #[error("invalid time grid: {0}")]
    InvalidGrid(&'static str),

    #[error("unknown builtin '{0}'")]
    UnknownBuiltin(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidAlgebra(_) | Error::DimensionMismatch { .. } | Error::NotInSubspace(_) => 2,
            Error::Parse(_) | Error::Io(_) | Error::UnknownBuiltin(_) => 4,
            _ => 3,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
