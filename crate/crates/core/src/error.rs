use std::path::PathBuf;

/// Errors produced by the solvers, the oracle and the harness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A model parameter violates one of its admissibility constraints.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An argument is out of range for the operation (index, CP count, sweep grid).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An iterative solver stopped before meeting its tolerance.
    #[error("{solver} did not converge after {iterations} iterations (last residual {residual:e})")]
    NoConvergence {
        solver: &'static str,
        iterations: usize,
        residual: f64,
    },

    /// A one-dimensional search kept improving while expanding its bracket.
    #[error("{0}: objective appears unbounded")]
    Unbounded(&'static str),

    /// The entry scan walked past the configured CP cap.
    #[error("entry scan exceeded {0} content providers")]
    EntryScanCap(usize),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParams(_) | Error::InvalidArgument(_) | Error::Io { .. } => 1,
            Error::NoConvergence { .. } | Error::Unbounded(_) | Error::EntryScanCap(_) => 2,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
