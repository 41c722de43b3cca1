use num_complex::Complex64;
use std::f64::consts::PI;

use super::{DiscreteSpectrum, RevivalData};
use crate::error::{Error, Result};

/// Relative mismatch below which a continued-fraction convergent is accepted.
pub const RATIONAL_MATCH: f64 = 1e-9;

/// Continued-fraction approximation `p/q` of `x > 0` with `q ≤ max_denominator`.
/// The flag reports whether `|x − p/q| ≤ RATIONAL_MATCH·x`; otherwise the
/// last admissible convergent is returned.
pub fn rationalize(x: f64, max_denominator: u64) -> (u64, u64, bool) {
    let (mut h1, mut h2) = (1u128, 0u128);
    let (mut k1, mut k2) = (0u128, 1u128);
    let mut best = (x.round().max(0.0) as u64, 1u64);
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        if !a.is_finite() || a > 1e18 {
            break;
        }
        let a = a as u128;
        let h = a * h1 + h2;
        let k = a * k1 + k2;
        if k > max_denominator as u128 || h > u64::MAX as u128 {
            break;
        }
        best = (h as u64, k as u64);
        if (x - h as f64 / k as f64).abs() <= RATIONAL_MATCH * x {
            return (best.0, best.1, true);
        }
        let frac = rest - rest.floor();
        if frac <= 0.0 {
            break;
        }
        rest = 1.0 / frac;
        (h2, h1) = (h1, h);
        (k2, k1) = (k1, k);
    }
    (best.0, best.1, false)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Common phase `θ ∈ (-π, π]`, winding numbers and worst residual at `tau`.
fn phase_fit(levels: &[f64], tau: f64) -> (f64, Vec<i64>, f64) {
    let sum: Complex64 = levels.iter().map(|e| Complex64::from_polar(1.0, (e * tau).rem_euclid(2.0 * PI))).sum();
    let mut theta = sum.arg();
    if theta <= -PI {
        theta += 2.0 * PI;
    }
    let n: Vec<i64> = levels.iter().map(|e| ((e * tau - theta) / (2.0 * PI)).round() as i64).collect();
    let residual = levels
        .iter()
        .zip(&n)
        .map(|(e, &k)| (e * tau - 2.0 * PI * k as f64 - theta).abs())
        .fold(0.0, f64::max);
    (theta, n, residual)
}

/// Shortest `τ_rev` with `E_j τ_rev ∈ θ + 2πℤ` for all levels, from
/// continued-fraction rationalization of the gap ratios `ΔE_j/ΔE_min`.
pub fn revival_time(spectrum: &DiscreteSpectrum, max_denominator: u64, tol: f64) -> Result<RevivalData> {
    let levels = spectrum.levels();
    if levels.len() < 2 {
        return Err(Error::InvalidInput("revival analysis needs at least two levels".into()));
    }
    if max_denominator == 0 || !(tol > 0.0) {
        return Err(Error::InvalidInput("max_denominator and tol must be positive".into()));
    }
    let gaps: Vec<f64> = levels.windows(2).map(|w| w[1] - w[0]).collect();
    let de_min = gaps.iter().copied().fold(f64::INFINITY, f64::min);
    let mut numerators = Vec::with_capacity(gaps.len());
    let mut denominators = Vec::with_capacity(gaps.len());
    let mut all_matched = true;
    for g in &gaps {
        let (p, q, ok) = rationalize(g / de_min, max_denominator);
        all_matched &= ok;
        numerators.push(p);
        denominators.push(q);
    }
    let mut lcm: Option<u128> = Some(1);
    for &q in &denominators {
        lcm = lcm.and_then(|l| (l / gcd(l, q as u128)).checked_mul(q as u128));
    }
    let product: f64 = denominators.iter().map(|&q| q as f64).product();
    let product_formula_tau = 2.0 * PI * product / de_min;
    let mut tau = match lcm {
        Some(l) => 2.0 * PI * l as f64 / de_min,
        None => product_formula_tau,
    };
    if !all_matched || lcm.is_none() {
        return Err(Error::IrrationalSpectrum { best_effort_tau_rev: tau });
    }
    for d in 2..=64u32 {
        while phase_fit(levels, tau / d as f64).2 < tol {
            tau /= d as f64;
        }
    }
    let (theta, n, max_residual) = phase_fit(levels, tau);
    if max_residual >= tol {
        return Err(Error::IrrationalSpectrum { best_effort_tau_rev: tau });
    }
    Ok(RevivalData {
        tau_rev: tau,
        theta,
        n,
        gap_denominators: denominators,
        gap_numerators: numerators,
        delta_e_min: de_min,
        product_formula_tau,
        max_residual,
    })
}
