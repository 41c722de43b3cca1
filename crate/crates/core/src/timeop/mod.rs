//! Time-operator kernels in the coordinate basis, the principal-value
//! integrals `I_l` behind them and the canonical-commutator checks.

mod commutator;
mod pv;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{legendre_sum_kernel, sph_harm};
use crate::spectra::{PhysicalParams, RevivalData, SpectralState};
use crate::systems::{dot3, norm3};
use crate::timeline::timeline_transform;

pub use commutator::{commutator_3d_check, commutator_3d_check_with, CommutatorGrid, GaussianTestFunction, TestFunction3d};
pub use pv::{pv_integral_il, pv_reduced_integral, PVIntegralResult};

/// Point at which a kernel is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Line(f64),
    Space([f64; 3]),
}

/// Matrix element `⟨r₁|T̂|r₂⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelValue {
    pub value: Complex64,
    pub r1: Coordinate,
    pub r2: Coordinate,
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// `⟨x|T̂|x′⟩ = i(m/4)(x + x′) sgn(x − x′)` for a free particle on the line.
pub fn kernel_1d_free(x: f64, x_prime: f64, mass: f64) -> KernelValue {
    let value = Complex64::new(0.0, 0.25 * mass * (x + x_prime) * sgn(x - x_prime));
    KernelValue { value, r1: Coordinate::Line(x), r2: Coordinate::Line(x_prime) }
}

/// Odd- and even-parity pieces `½xx′I₀(|x|,|x′|)` and `½|x||x′|I₋₁(|x|,|x′|)`
/// of the one-dimensional kernel.
pub fn kernel_1d_parity_split(x: f64, x_prime: f64, mass: f64) -> Result<(Complex64, Complex64)> {
    if x == 0.0 || x_prime == 0.0 {
        // On an axis the odd piece vanishes and the even piece takes its limit.
        let even = if x == x_prime { 0.0 } else { 0.25 * mass * (x.abs().max(x_prime.abs())) * sgn(x.abs() - x_prime.abs()) };
        return Ok((Complex64::new(0.0, 0.0), Complex64::new(0.0, even)));
    }
    let (a, b) = (x.abs(), x_prime.abs());
    let odd = pv_integral_il(0, a, b, mass, false)?.closed_form * (0.5 * x * x_prime);
    let even = pv_integral_il(-1, a, b, mass, false)?.closed_form * (0.5 * a * b);
    Ok((odd, even))
}

/// `⟨r⃗₁|T̂|r⃗₂⟩ = i(m/8π)(r₁² − r₂²)/|r⃗₁ − r⃗₂|³` for a free particle in space.
pub fn kernel_3d_free(r1: [f64; 3], r2: [f64; 3], mass: f64) -> Result<KernelValue> {
    let d = [r1[0] - r2[0], r1[1] - r2[1], r1[2] - r2[2]];
    let dist = norm3(d);
    if dist == 0.0 {
        return Err(Error::SingularKernel);
    }
    let value = Complex64::new(0.0, mass / (8.0 * PI) * (dot3(r1, r1) - dot3(r2, r2)) / (dist * dist * dist));
    Ok(KernelValue { value, r1: Coordinate::Space(r1), r2: Coordinate::Space(r2) })
}

fn radial_split(r1: [f64; 3], r2: [f64; 3]) -> Result<(f64, f64, f64)> {
    let (n1, n2) = (norm3(r1), norm3(r2));
    if n1 == n2 {
        return Err(Error::SingularKernel);
    }
    let cos = if n1 > 0.0 && n2 > 0.0 { (dot3(r1, r2) / (n1 * n2)).clamp(-1.0, 1.0) } else { 1.0 };
    Ok((n1, n2, cos))
}

/// The spatial kernel from its angular-momentum form
/// `i(m/2) sgn(r₁−r₂) r_>^{-1} Σ_l Σ_m Y Y* (r_</r_>)^l`, with the sum done in
/// closed form.
pub fn kernel_3d_partial_wave(r1: [f64; 3], r2: [f64; 3], mass: f64) -> Result<KernelValue> {
    let (n1, n2, cos) = radial_split(r1, r2)?;
    let (small, large) = if n1 < n2 { (n1, n2) } else { (n2, n1) };
    let sum = legendre_sum_kernel(small / large, cos.acos())? / (2.0 * PI);
    let value = Complex64::new(0.0, 0.5 * mass * sgn(n1 - n2) * sum / large);
    Ok(KernelValue { value, r1: Coordinate::Space(r1), r2: Coordinate::Space(r2) })
}

/// The angular-momentum series truncated at `l_max`, summed term by term
/// over spherical harmonics.
pub fn kernel_3d_partial_wave_truncated(r1: [f64; 3], r2: [f64; 3], mass: f64, l_max: u32) -> Result<KernelValue> {
    let (n1, n2, _) = radial_split(r1, r2)?;
    let (small, large) = if n1 < n2 { (n1, n2) } else { (n2, n1) };
    let t = small / large;
    let dir = |r: [f64; 3], n: f64| if n > 0.0 { [r[0] / n, r[1] / n, r[2] / n] } else { [0.0, 0.0, 1.0] };
    let (d1, d2) = (dir(r1, n1), dir(r2, n2));
    let mut sum = Complex64::new(0.0, 0.0);
    for l in 0..=l_max as i64 {
        let mut shell = Complex64::new(0.0, 0.0);
        for m in -l..=l {
            shell += sph_harm(l, m, d1)? * sph_harm(l, m, d2)?.conj();
        }
        sum += shell * t.powi(l as i32);
    }
    let value = Complex64::i() * (0.5 * mass * sgn(n1 - n2) / large) * sum;
    Ok(KernelValue { value, r1: Coordinate::Space(r1), r2: Coordinate::Space(r2) })
}

/// `⟨ψ|[T̂(τ₀), Ĥ]|ψ⟩ = i⟨ψ|ψ⟩ − iτ_rev|⟨τ₀|ψ⟩|²` for a periodic system.
pub fn commutator_periodic_term(state: &SpectralState, revival: &RevivalData, tau0: f64) -> Result<Complex64> {
    if state.continuum_amplitude().is_some() {
        return Err(Error::Unsupported("the periodic commutator needs a purely discrete state".into()));
    }
    let sample = timeline_transform(state, Some(revival), None, &[tau0], 1.0)?;
    Ok(Complex64::new(0.0, state.discrete_norm_sqr() - revival.tau_rev * sample.density[0]))
}

/// `T̂ψ = (1/iF) dψ/dx` on a uniform grid, for the uniformly accelerated
/// particle. Derivatives use fourth-order differences; a disagreement with
/// the second-order estimate above 1% of the largest derivative flags the
/// input as under-resolved.
pub fn apply_t_freefall(grid: &[f64], psi: &[Complex64], params: PhysicalParams) -> Result<Vec<Complex64>> {
    params.require_force()?;
    let force = params.force;
    let d = derivative(grid, psi)?;
    let scale = Complex64::new(0.0, -1.0 / force);
    Ok(d.into_iter().map(|v| v * scale).collect())
}

fn uniform_step(grid: &[f64]) -> Result<f64> {
    if grid.len() < 5 {
        return Err(Error::InvalidInput("need at least five grid points".into()));
    }
    let h = (grid[grid.len() - 1] - grid[0]) / (grid.len() - 1) as f64;
    if !(h > 0.0) || grid.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h) {
        return Err(Error::InvalidInput("grid must be uniform and increasing".into()));
    }
    Ok(h)
}

/// First derivative by Richardson-combined central differences, with
/// one-sided fourth-order stencils at the two ends.
pub(crate) fn derivative(grid: &[f64], f: &[Complex64]) -> Result<Vec<Complex64>> {
    if grid.len() != f.len() {
        return Err(Error::InvalidInput(format!("{} samples for {} grid points", f.len(), grid.len())));
    }
    let h = uniform_step(grid)?;
    let n = f.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    let mut disagreement: f64 = 0.0;
    for i in 0..n {
        out[i] = if i >= 2 && i + 2 < n {
            let d1 = (f[i + 1] - f[i - 1]) / (2.0 * h);
            let d2 = (f[i + 2] - f[i - 2]) / (4.0 * h);
            let rich = (4.0 * d1 - d2) / 3.0;
            disagreement = disagreement.max((rich - d1).norm());
            rich
        } else if i < 2 {
            (-25.0 * f[i] + 48.0 * f[i + 1] - 36.0 * f[i + 2] + 16.0 * f[i + 3] - 3.0 * f[i + 4]) / (12.0 * h)
        } else {
            (25.0 * f[i] - 48.0 * f[i - 1] + 36.0 * f[i - 2] - 16.0 * f[i - 3] + 3.0 * f[i - 4]) / (12.0 * h)
        };
    }
    let peak = out.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if disagreement > 0.01 * peak && disagreement > 1e-300 {
        return Err(Error::AccuracyLoss(format!("derivative refinement disagrees by {disagreement:.3e} (peak {peak:.3e})")));
    }
    Ok(out)
}

/// `⟨ψ|[T̂, Ĥ]|ψ⟩` for `Ĥ = p²/2m − Fx` on a uniform grid, with `T̂ = p/F`.
pub fn freefall_commutator_expectation(grid: &[f64], psi: &[Complex64], params: PhysicalParams) -> Result<Complex64> {
    let t_psi = apply_t_freefall(grid, psi, params)?;
    let d1 = derivative(grid, psi)?;
    let d2 = derivative(grid, &d1)?;
    let h_psi: Vec<Complex64> = grid.iter().zip(psi).zip(&d2).map(|((x, p), dd)| -dd / (2.0 * params.mass) - params.force * x * p).collect();
    let h = uniform_step(grid)?;
    let inner: Complex64 = t_psi.iter().zip(&h_psi).map(|(a, b)| a.conj() * b).sum::<Complex64>() * h;
    Ok(inner - inner.conj())
}
