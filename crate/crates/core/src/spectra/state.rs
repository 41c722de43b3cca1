use num_complex::Complex64;
use std::fmt;
use std::sync::Arc;

use super::ContinuumBand;
use crate::error::{Error, Result};
use crate::oscquad::{integrate, integrate_half_line, QuadOptions};

/// Energy-normalized continuum amplitude `⟨E|ψ⟩`, evaluated at complex `E`
/// where an analytic continuation is available.
pub type ContinuumAmplitude = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// Spectral components of a state: `⟨E_j|ψ⟩` on discrete levels and
/// `⟨E|ψ⟩` on a continuum band.
#[derive(Clone)]
pub struct SpectralState {
    levels: Vec<f64>,
    discrete: Vec<Complex64>,
    continuum: Option<ContinuumAmplitude>,
}

impl fmt::Debug for SpectralState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpectralState")
            .field("levels", &self.levels)
            .field("discrete", &self.discrete)
            .field("continuum", &self.continuum.is_some())
            .finish()
    }
}

impl SpectralState {
    pub fn new(levels: Vec<f64>, discrete: Vec<Complex64>, continuum: Option<ContinuumAmplitude>) -> Result<Self> {
        if levels.len() != discrete.len() {
            return Err(Error::InvalidInput(format!("{} amplitudes for {} levels", discrete.len(), levels.len())));
        }
        if discrete.iter().any(|a| !a.is_finite()) || levels.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidInput("levels and amplitudes must be finite".into()));
        }
        Ok(Self { levels, discrete, continuum })
    }

    pub fn discrete(levels: &[f64], amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::new(levels.to_vec(), amplitudes, None)
    }

    pub fn continuum<A>(amplitude: A) -> Self
    where
        A: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        Self { levels: Vec::new(), discrete: Vec::new(), continuum: Some(Arc::new(amplitude)) }
    }

    /// Single stationary state `|E_j⟩` of the given spectrum.
    pub fn stationary(levels: &[f64], j: usize) -> Result<Self> {
        if j >= levels.len() {
            return Err(Error::InvalidInput(format!("level {j} out of range")));
        }
        let mut a = vec![Complex64::new(0.0, 0.0); levels.len()];
        a[j] = Complex64::new(1.0, 0.0);
        Self::discrete(levels, a)
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn discrete_amplitudes(&self) -> &[Complex64] {
        &self.discrete
    }

    pub fn continuum_amplitude(&self) -> Option<&ContinuumAmplitude> {
        self.continuum.as_ref()
    }

    /// Schrödinger evolution by laboratory time `t`: amplitudes gain `e^{-iEt}`.
    pub fn evolved(&self, t: f64) -> Self {
        self.with_phase(-t)
    }

    /// Shift of the system-time origin by `τ₀`: amplitudes gain `e^{iEτ₀}`.
    pub fn shifted_origin(&self, tau0: f64) -> Self {
        self.with_phase(tau0)
    }

    fn with_phase(&self, s: f64) -> Self {
        let discrete = self.levels.iter().zip(&self.discrete).map(|(e, a)| a * Complex64::from_polar(1.0, e * s)).collect();
        let continuum = self.continuum.as_ref().map(|f| {
            let f = Arc::clone(f);
            Arc::new(move |e: Complex64| f(e) * (Complex64::i() * s * e).exp()) as ContinuumAmplitude
        });
        Self { levels: self.levels.clone(), discrete, continuum }
    }

    pub fn discrete_norm_sqr(&self) -> f64 {
        self.discrete.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `Σ|⟨E_j|ψ⟩|² + ∫_band |⟨E|ψ⟩|² dE`.
    pub fn norm_sqr(&self, band: Option<&ContinuumBand>, tol: f64) -> Result<f64> {
        let mut total = self.discrete_norm_sqr();
        if let (Some(f), Some(b)) = (&self.continuum, band) {
            let density = |e: f64| Complex64::new(f(Complex64::new(e, 0.0)).norm_sqr(), 0.0);
            let opts = QuadOptions::new(tol);
            let r = match (b.e_min.is_finite(), b.e_max.is_finite()) {
                (true, true) => integrate(density, b.e_min, b.e_max, 16, &opts),
                (true, false) => integrate_half_line(density, b.e_min, 1.0, 1.0, 1.0, &opts),
                (false, true) => integrate_half_line(density, b.e_max, -1.0, 1.0, 1.0, &opts),
                (false, false) => {
                    let a = integrate_half_line(density, 0.0, 1.0, 1.0, 1.0, &opts);
                    let b = integrate_half_line(density, 0.0, -1.0, 1.0, 1.0, &opts);
                    a.add(b)
                }
            };
            if !r.converged {
                return Err(Error::NotConverged(format!("continuum norm, estimate {}", r.abs_error_estimate)));
            }
            total += r.value.re;
        }
        Ok(total)
    }
}
