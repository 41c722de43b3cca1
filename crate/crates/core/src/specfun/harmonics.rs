use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Spherical harmonic `Y_l^m(θ, φ)` with the Condon–Shortley phase, for a
/// unit direction vector.
pub fn sph_harm(l: i64, m: i64, direction: [f64; 3]) -> Result<Complex64> {
    if l < 0 || m.abs() > l {
        return Err(Error::InvalidInput(format!("invalid harmonic indices (l={l}, m={m})")));
    }
    let norm = (direction[0].powi(2) + direction[1].powi(2) + direction[2].powi(2)).sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidInput(format!("direction must be a unit vector, |n| = {norm}")));
    }
    let cos_t = direction[2].clamp(-1.0, 1.0);
    let sin_t = direction[0].hypot(direction[1]);
    let phi = direction[1].atan2(direction[0]);
    let ma = m.unsigned_abs() as usize;
    let p = normalized_legendre(l as usize, ma, cos_t, sin_t);
    let y = Complex64::from_polar(p, ma as f64 * phi);
    if m >= 0 {
        Ok(y)
    } else if ma.is_multiple_of(2) {
        Ok(y.conj())
    } else {
        Ok(-y.conj())
    }
}

/// Orthonormal associated Legendre function (including 1/√(2π) from the
/// azimuthal factor) by the standard stable three-term recursion.
fn normalized_legendre(l: usize, m: usize, cos_t: f64, sin_t: f64) -> f64 {
    let mut pmm = 1.0 / (4.0 * PI).sqrt();
    for k in 1..=m {
        let kf = k as f64;
        pmm *= -((2.0 * kf + 1.0) / (2.0 * kf)).sqrt() * sin_t;
    }
    if l == m {
        return pmm;
    }
    let mut p_prev = pmm;
    let mut p = (2.0 * m as f64 + 3.0).sqrt() * cos_t * pmm;
    let mf = m as f64;
    for ll in (m + 2)..=l {
        let lf = ll as f64;
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let b = (((lf - 1.0) * (lf - 1.0) - mf * mf) / (4.0 * (lf - 1.0) * (lf - 1.0) - 1.0)).sqrt();
        let next = a * (cos_t * p - b * p_prev);
        p_prev = p;
        p = next;
    }
    p
}

/// Closed form `(1 - t²) / (2 (1 - 2t cos γ + t²)^{3/2})` of
/// `2π Σ_{l,m} Y_l^m(Ω₁) [Y_l^m(Ω₂)]* t^l`.
pub fn legendre_sum_kernel(t: f64, gamma: f64) -> Result<f64> {
    if !t.is_finite() || !gamma.is_finite() {
        return Err(Error::InvalidInput("non-finite argument".into()));
    }
    if t.abs() > 1.0 - 1e-9 {
        return Err(Error::Range(format!("|t| must not exceed 1 - 1e-9, got {t}")));
    }
    Ok((1.0 - t * t) / (2.0 * (1.0 - 2.0 * t * gamma.cos() + t * t).powf(1.5)))
}
