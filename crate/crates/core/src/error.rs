use thiserror::Error;

/// Errors reported by the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument out of supported range: {0}")]
    Range(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("accuracy cannot be certified: {0}")]
    AccuracyLoss(String),
    #[error("timeline waves are singular at tau = 0")]
    SingularTime,
    #[error("kernel is singular at coincident points")]
    SingularKernel,
    #[error("continuum normalization diverges at k = 0")]
    EdgeDivergence,
    #[error("spectrum is not commensurate within the denominator budget (best-effort tau_rev = {best_effort_tau_rev})")]
    IrrationalSpectrum { best_effort_tau_rev: f64 },
    #[error("time mesh does not belong to this spectrum: {0}")]
    MeshMismatch(String),
    #[error("quadrature did not converge: {0}")]
    NotConverged(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("density has zero norm")]
    ZeroNorm,
}

pub type Result<T> = std::result::Result<T, Error>;
