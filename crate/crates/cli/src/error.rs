use std::path::PathBuf;

use dprt_core::DprtError;
use dprt_cost::CostError;
use thiserror::Error;

use crate::pgm::PgmError;
use crate::sinogram::SinogramError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Config(String),

    #[error("{}: {source}", path.display())]
    Pgm { path: PathBuf, source: PgmError },

    #[error("{}: {source}", path.display())]
    Sinogram {
        path: PathBuf,
        source: SinogramError,
    },

    #[error(transparent)]
    Dprt(#[from] DprtError),

    #[error(transparent)]
    Cost(#[from] CostError),

    #[error("{0}")]
    Verification(String),
}

impl CliError {
    /// 1 for bad input or configuration, 2 for verification and validity
    /// failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Dprt(DprtError::InvalidRadonArray(_)) | CliError::Verification(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}
