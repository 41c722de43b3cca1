use num_complex::Complex64;
use std::f64::consts::PI;

use super::WaveKind;
use crate::error::{Error, Result};
use crate::oscquad::{fourier_semiaxis_with, DampingPolicy, FourierOptions, QuadratureResult};
use crate::specfun::airy_ai;
use crate::spectra::PhysicalParams;

/// Damping used for the free-particle energy integrals.
pub const FREE_ROTATION: f64 = 0.25 * PI;
/// Window rate used for the uniform-force energy integral.
pub const FREEFALL_WINDOW: f64 = 0.2;

/// Spherical Bessel `j_l(w)` for complex `w`: power series near the origin,
/// upward recurrence from `j_0`, `j_1` elsewhere.
pub fn spherical_bessel_j(l: u32, w: Complex64) -> Complex64 {
    if w.norm() < 1.0 + 0.5 * l as f64 {
        let mut df = 1.0;
        for k in 0..=l {
            df *= (2 * k + 1) as f64;
        }
        let lead = w.powu(l) / df;
        let q = -w * w / 2.0;
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 1..60 {
            term *= q / (k as f64 * (2 * l + 2 * k + 1) as f64);
            sum += term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        return lead * sum;
    }
    let j0 = w.sin() / w;
    if l == 0 {
        return j0;
    }
    let mut prev = j0;
    let mut cur = w.sin() / (w * w) - w.cos() / w;
    for n in 1..l {
        let next = cur * ((2 * n + 1) as f64) / w - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Numerical value of the energy integral defining `Ξ_τ` at a coordinate,
/// `(2π)^{-1/2} ∫ e^{-iEτ} C_E φ_E dE`, by oscillatory quadrature.
pub fn defining_integral(kind: WaveKind, coordinate: f64, tau: f64, params: PhysicalParams, tol: f64) -> Result<QuadratureResult> {
    let m = params.mass;
    let wave_number = move |e: Complex64| (2.0 * m * e).sqrt();
    let rotation = DampingPolicy::contour_rotation(FREE_ROTATION)?;
    let opts = FourierOptions::new(tol);
    let x = coordinate;
    match kind {
        WaveKind::FreeFall => {
            params.require_force()?;
            let f = params.force;
            let c = (2.0 * m * f).cbrt();
            let norm = (c * c / f.abs()).sqrt();
            let mut opts = opts;
            opts.window_origin = Some(-f * x);
            let amp = move |e: Complex64| {
                let t = -c * (x + e.re / f);
                if t > 100.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(norm * airy_ai(t).unwrap_or(0.0), 0.0)
                }
            };
            let window = DampingPolicy::exponential_window(FREEFALL_WINDOW)?;
            fourier_semiaxis_with(amp, -tau, f64::NEG_INFINITY, f64::INFINITY, window, &opts)
        }
        WaveKind::Free1dRight | WaveKind::Free1dLeft => {
            let s = if kind == WaveKind::Free1dRight { 1.0 } else { -1.0 };
            let amp = move |e: Complex64| {
                let k = wave_number(e);
                (m / (2.0 * PI * k)).sqrt() * (Complex64::i() * s * k * x).exp()
            };
            fourier_semiaxis_with(amp, -tau, 0.0, f64::INFINITY, rotation, &opts)
        }
        WaveKind::Free1dEven | WaveKind::Free1dOdd => {
            let even = kind == WaveKind::Free1dEven;
            let amp = move |e: Complex64| {
                let k = wave_number(e);
                let standing = if even { (k * x).cos() } else { (k * x).sin() };
                (m / (PI * k)).sqrt() * standing
            };
            fourier_semiaxis_with(amp, -tau, 0.0, f64::INFINITY, rotation, &opts)
        }
        WaveKind::Free3dRadial(l) => {
            if !(x > 0.0) {
                return Err(Error::InvalidInput(format!("radius must be positive, got {x}")));
            }
            let amp = move |e: Complex64| {
                let k = wave_number(e);
                (2.0 * m * k / PI).sqrt() * spherical_bessel_j(l, k * x)
            };
            fourier_semiaxis_with(amp, -tau, 0.0, f64::INFINITY, rotation, &opts)
        }
        WaveKind::Free3dUniversal => {
            let amp = move |e: Complex64| {
                let k = wave_number(e);
                (2.0 * m * k / PI).sqrt() / (4.0 * PI) * (Complex64::i() * k * x).exp()
            };
            fourier_semiaxis_with(amp, -tau, 0.0, f64::INFINITY, rotation, &opts)
        }
    }
}
