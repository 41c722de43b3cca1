//! Library side of the `chronoline` command: configuration, sampling,
//! verification suites and spectrum reports.

pub mod config;
pub mod sample;
pub mod spectrum;
pub mod verify;

pub use config::{Format, Grid, RunConfig, Settings};
pub use sample::{cmd_sample, fmt_number, render, sample_rows, SampleRow};
pub use spectrum::{cmd_spectrum, load_spectrum, SpectrumReport};
pub use verify::{cmd_verify, Check, Suite};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification check fails or a computation aborts.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for invalid invocations and configurations.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] chronoline::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(_) | CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

/// Sizes the global thread pool from `CHRONOLINE_THREADS` when set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("CHRONOLINE_THREADS") else {
        return Ok(());
    };
    let n: usize = value.trim().parse().map_err(|_| CliError::Usage(format!("CHRONOLINE_THREADS must be a positive integer, got '{value}'")))?;
    if n == 0 {
        return Err(CliError::Usage("CHRONOLINE_THREADS must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Usage(e.to_string()))
}
