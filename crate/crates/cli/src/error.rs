use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(zeta_lab::Error),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed output data: {0}")]
    Format(String),
}

impl CliError {
    pub fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io {
            path: path.to_owned(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Verify(_) => EXIT_VERIFY,
            CliError::Io { .. } | CliError::Format(_) => EXIT_IO,
        }
    }
}

impl From<zeta_lab::Error> for CliError {
    fn from(e: zeta_lab::Error) -> Self {
        use zeta_lab::Error as E;
        match e {
            E::InvalidArgument(_) | E::EmptySum | E::CostGuard { .. } => CliError::Usage(e.to_string()),
            other => CliError::Domain(other),
        }
    }
}
