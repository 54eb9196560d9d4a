//! Std-side drivers for `ppbinom-core`: rayon-backed evaluation, fixture
//! loading from disk, report rendering (text, JSON, CSV) and the
//! verification targets run by the `ppbinom` binary and the acceptance suite.

#![deny(unsafe_code)]

pub mod checks;
pub mod fixtures;
pub mod parallel;
pub mod report;

use std::path::PathBuf;

pub use ppbinom_core as core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] ppbinom_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
