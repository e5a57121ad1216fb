use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{origin}, line {line}: {message}")]
    Parse {
        origin: String,
        line: usize,
        message: String,
    },

    #[error("{0}")]
    Claim(#[from] magic_compound::spectral::ClaimParseError),

    #[error(transparent)]
    Core(#[from] magic_compound::Error),

    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use magic_compound::Error as E;
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Claim(_) => EXIT_USAGE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::Core(e) => match e {
                E::UnknownFixture { .. } => EXIT_USAGE,
                E::Overflow { .. } | E::NoConvergence { .. } | E::Unverified { .. } => EXIT_NUMERIC,
                E::NonFinite { .. } => EXIT_NUMERIC,
                E::ShapeMismatch { .. }
                | E::InvalidDimensions(_)
                | E::InvalidArgument(_)
                | E::NotMagic { .. }
                | E::NotRegular { .. }
                | E::InconsistentGrid(_) => EXIT_PRECONDITION,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
