use std::path::PathBuf;

use reachtop_core::graph::GraphError;
use reachtop_core::hochschild::HochschildError;
use reachtop_core::homology::HomologyError;
use reachtop_core::pipeline::PipelineError;
use reachtop_core::random::RandomError;

/// Errors surfaced by the command layer, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Guard(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 usage, 2 data (including IO), 3 guard exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) | CliError::Io { .. } => 2,
            CliError::Guard(_) => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::OracleGuard { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<HochschildError> for CliError {
    fn from(e: HochschildError) -> Self {
        match e {
            HochschildError::Guard { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Homology(h) => h.into(),
            other => CliError::Data(other.to_string()),
        }
    }
}

impl From<RandomError> for CliError {
    fn from(e: RandomError) -> Self {
        match e {
            RandomError::Homology(h) => h.into(),
            RandomError::InvalidProbability(_)
            | RandomError::InvalidRange { .. }
            | RandomError::NoRealisations => CliError::Usage(e.to_string()),
        }
    }
}
