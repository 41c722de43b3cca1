//! Oscillatory Fourier-type and principal-value quadrature: the numerical
//! oracle against which the closed-form timeline waves are checked.

mod adaptive;
mod fourier;
pub mod rules;
mod tail;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use adaptive::{integrate, integrate_half_line};
pub use fourier::{fourier_semiaxis, fourier_semiaxis_with, FourierOptions};
pub use tail::{delta_family_probe, pv_time_moment, pv_time_moment_with, tail_limit, DeltaOptions, DeltaProbe, PvOptions, TailOptions};

/// Value of a numerical integral with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub panels_used: usize,
    pub converged: bool,
    /// Truncation radius used for infinite ranges, when one applies.
    pub truncation: Option<f64>,
}

impl QuadratureResult {
    pub(crate) fn zero() -> Self {
        Self { value: Complex64::new(0.0, 0.0), abs_error_estimate: 0.0, panels_used: 0, converged: true, truncation: None }
    }

    pub(crate) fn add(mut self, other: QuadratureResult) -> Self {
        self.value += other.value;
        self.abs_error_estimate += other.abs_error_estimate;
        self.panels_used += other.panels_used;
        self.converged &= other.converged;
        self.truncation = match (self.truncation, other.truncation) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self
    }

    pub(crate) fn scale(mut self, s: f64) -> Self {
        self.value *= s;
        self.abs_error_estimate *= s.abs();
        self
    }
}

/// Tolerances and evaluation budget for one integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_evaluations: usize,
}

impl QuadOptions {
    pub const DEFAULT_BUDGET: usize = 1_000_000;

    pub fn new(abs_tol: f64) -> Self {
        Self { abs_tol, rel_tol: 0.0, max_evaluations: Self::DEFAULT_BUDGET }
    }
}

/// How oscillatory tails of Fourier-type integrals are tamed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DampingKind {
    /// Integrate along a ray tilted into the half-plane where `e^{iEτ}` decays.
    ContourRotation,
    /// Abel summation with `e^{-ε|E-E₀|}`, Richardson-extrapolated to ε → 0.
    ExponentialWindow,
    /// Plain accumulation of the tail with period averaging and extrapolation.
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DampingPolicy {
    pub kind: DampingKind,
    /// Rotation angle (radians) or initial window rate; zero only for `None`.
    pub strength: f64,
}

impl DampingPolicy {
    pub const DEFAULT_ROTATION: f64 = 0.01 * std::f64::consts::PI;

    pub fn none() -> Self {
        Self { kind: DampingKind::None, strength: 0.0 }
    }

    pub fn contour_rotation(angle: f64) -> crate::Result<Self> {
        if !(angle > 0.0 && angle < std::f64::consts::FRAC_PI_2) {
            return Err(crate::Error::InvalidInput(format!("rotation angle must lie in (0, pi/2), got {angle}")));
        }
        Ok(Self { kind: DampingKind::ContourRotation, strength: angle })
    }

    pub fn exponential_window(rate: f64) -> crate::Result<Self> {
        if !(rate > 0.0 && rate.is_finite()) {
            return Err(crate::Error::InvalidInput(format!("window rate must be positive, got {rate}")));
        }
        Ok(Self { kind: DampingKind::ExponentialWindow, strength: rate })
    }
}

impl Default for DampingPolicy {
    fn default() -> Self {
        Self { kind: DampingKind::ContourRotation, strength: Self::DEFAULT_ROTATION }
    }
}
