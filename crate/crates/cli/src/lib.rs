//! Library half of the `qsl-horizon` executable: configuration loading,
//! file emission, and the figure-reproduction driver, kept callable so
//! integration tests can exercise the exact code paths the binary runs.

pub mod config;
pub mod output;

use output::OutputFormat;
use qsl_horizon::figures::{self, FigureId};
use std::io;
use std::path::Path;

/// Rebuilds one stock figure into `out_dir/<name>.{csv,svg}`; returns the
/// paths written.
pub fn reproduce(id: FigureId, out_dir: &Path, format: OutputFormat) -> Result<Vec<String>, ReproduceError> {
    std::fs::create_dir_all(out_dir).map_err(ReproduceError::Io)?;
    let table = figures::figure(id).map_err(ReproduceError::Compute)?;
    output::write_table(&table, &out_dir.join(id.name()), format).map_err(ReproduceError::Io)
}

/// Rebuilds all nine stock figures.
pub fn reproduce_all(out_dir: &Path, format: OutputFormat) -> Result<Vec<String>, ReproduceError> {
    let mut written = Vec::new();
    for id in FigureId::all() {
        written.extend(reproduce(id, out_dir, format)?);
    }
    Ok(written)
}

#[derive(Debug)]
pub enum ReproduceError {
    Io(io::Error),
    Compute(qsl_horizon::Error),
}

impl std::fmt::Display for ReproduceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReproduceError::Io(e) => write!(f, "io error: {e}"),
            ReproduceError::Compute(e) => write!(f, "computation failed: {e}"),
        }
    }
}

impl std::error::Error for ReproduceError {}
