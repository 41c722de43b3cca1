use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::oscquad::{integrate, QuadOptions, QuadratureResult};
use crate::specfun::bessel_j_real;

/// `I_l(r₁, r₂) = P∫ τ Ξ^l_τ(r₁) [Ξ^l_τ(r₂)]* dτ`, in closed form and
/// optionally from the reduced Bessel-product integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PVIntegralResult {
    pub l: i32,
    pub r1: f64,
    pub r2: f64,
    pub closed_form: Complex64,
    pub numeric: Option<QuadratureResult>,
}

impl PVIntegralResult {
    /// `|numeric − closed_form|`, when the numeric path ran.
    pub fn discrepancy(&self) -> Option<f64> {
        self.numeric.map(|n| (n.value - self.closed_form).norm())
    }
}

/// Closed form `i(m/2) sgn(r₁−r₂) r_>^{-1} (r_</r_>)^l`; with `with_numeric`,
/// also the reduced integral by quadrature.
pub fn pv_integral_il(l: i32, r1: f64, r2: f64, mass: f64, with_numeric: bool) -> Result<PVIntegralResult> {
    if l < -1 {
        return Err(Error::InvalidInput(format!("l = {l} is below -1")));
    }
    if !(r1 > 0.0 && r2 > 0.0) || !r1.is_finite() || !r2.is_finite() || !(mass > 0.0) {
        return Err(Error::InvalidInput("radii and mass must be positive and finite".into()));
    }
    let (small, large) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
    let sign = if r1 > r2 {
        1.0
    } else if r1 < r2 {
        -1.0
    } else {
        0.0
    };
    let closed_form = Complex64::new(0.0, 0.5 * mass * sign / large * (small / large).powi(l));
    let numeric = if with_numeric { Some(pv_reduced_integral(l, r1, r2, mass, 1e-9)?) } else { None };
    Ok(PVIntegralResult { l, r1, r2, closed_form, numeric })
}

/// `i m√(r₁r₂) / (2(r₁²−r₂²)) ∫₀^∞ sin(sΔ)[J_{α+1}(s r₁²)J_α(s r₂²) − J_{α+1}(s r₂²)J_α(s r₁²)] ds/s`
/// with `Δ = r₁² − r₂²` and `α = (l − ½)/2`.
///
/// The range is split at `s₁ = 1/max(r²)`, where `s = u²` removes the
/// integrable endpoint singularity, and cut at `S`; the non-oscillatory
/// part of the Hankel expansion, `1/(π r₁ r₂ s²)`, supplies the tail beyond
/// `S`. `S` doubles until two cuts agree within `tol`.
pub fn pv_reduced_integral(l: i32, r1: f64, r2: f64, mass: f64, tol: f64) -> Result<QuadratureResult> {
    let (a, b) = (r1 * r1, r2 * r2);
    let delta = a - b;
    if delta == 0.0 {
        return Ok(QuadratureResult { value: Complex64::new(0.0, 0.0), abs_error_estimate: 0.0, panels_used: 0, converged: true, truncation: None });
    }
    let alpha = 0.5 * (l as f64 - 0.5);
    let bracket = |s: f64| -> f64 {
        let j = |nu: f64, x: f64| bessel_j_real(nu, x).unwrap_or(f64::NAN);
        (s * delta).sin() * (j(alpha + 1.0, s * a) * j(alpha, s * b) - j(alpha + 1.0, s * b) * j(alpha, s * a)) / s
    };
    let g = |s: f64| Complex64::new(bracket(s), 0.0);
    let top = a.max(b);
    let s1 = 1.0 / top;
    let opts = QuadOptions::new(0.01 * tol);
    let head = integrate(|u: f64| g(u * u) * (2.0 * u), 0.0, s1.sqrt(), 4, &opts);
    let piece = PI / (2.0 * top);
    let mean_tail = |s: f64| 1.0 / (PI * r1 * r2 * s);

    let mut lo = s1;
    let mut hi = 256.0 * s1.max(1.0 / a.min(b));
    let mut body = head;
    let mut previous: Option<f64> = None;
    let mut estimate = f64::INFINITY;
    let mut value = 0.0;
    let mut converged = false;
    for _ in 0..12 {
        let n = (((hi - lo) / piece).ceil() as usize).clamp(1, 2_000_000);
        let r = integrate(g, lo, hi, n, &opts);
        body = body.add(r);
        value = body.value.re + mean_tail(hi);
        if let Some(p) = previous {
            estimate = (value - p).abs() + body.abs_error_estimate;
            if estimate <= tol {
                converged = true;
                break;
            }
        }
        previous = Some(value);
        lo = hi;
        hi *= 2.0;
    }
    let prefactor = 0.5 * mass * (r1 * r2).sqrt() / delta;
    if !value.is_finite() {
        return Err(Error::NotConverged("Bessel evaluation failed in the reduced integral".into()));
    }
    Ok(QuadratureResult {
        value: Complex64::new(0.0, prefactor * value),
        abs_error_estimate: prefactor.abs() * estimate,
        panels_used: body.panels_used,
        converged,
        truncation: Some(lo),
    })
}
