//! Command line front end, JSON wire formats, search configuration files and
//! the parallel search driver for [`bicover_core`].

pub mod cli;
pub mod config;
pub mod json;
pub mod parallel;
pub mod table;

use bicover_core::{CoverError, InvariantError, SingularityError};

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "BICOVER_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid cover type: {0}")]
    Cover(#[from] CoverError),
    #[error("{0}")]
    Invariant(#[from] InvariantError),
    #[error("{0}")]
    Singularity(#[from] SingularityError),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("malformed record: {0}")]
    Schema(String),
    #[error("invalid search bounds: {0}")]
    Bounds(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Name of the violated invariant or failure class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Cover(e) => e.kind(),
            Error::Invariant(e) => e.kind(),
            Error::Singularity(e) => e.kind(),
            Error::Config { .. } => "Config",
            Error::Schema(_) => "Schema",
            Error::Bounds(_) => "Bounds",
            Error::ThreadPool(_) => "ThreadPool",
            Error::Io(_) => "Io",
        }
    }

    /// 2 for internal inconsistencies, 1 for everything caused by input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invariant(e) if e.is_internal() => 2,
            Error::ThreadPool(_) => 2,
            _ => 1,
        }
    }
}
