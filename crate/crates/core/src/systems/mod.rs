//! Closed-form timeline waves `Ξ_τ` for free fall and the free particle in
//! one and three dimensions.

mod integral;

pub use integral::{defining_integral, spherical_bessel_j, FREEFALL_WINDOW, FREE_ROTATION};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{bessel_j, bessel_j_real, gamma, parabolic_cylinder_d, sph_harm, BranchedArgument};
use crate::spectra::PhysicalParams;

/// Direction of travel of the plane waves behind a 1D timeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Right,
    Left,
}

/// Parity of the standing waves behind a 1D timeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Which closed-form timeline wave to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WaveKind {
    FreeFall,
    Free1dRight,
    Free1dLeft,
    Free1dEven,
    Free1dOdd,
    Free3dRadial(u32),
    Free3dUniversal,
}

impl WaveKind {
    /// `Ξ_τ` at a coordinate (`x`, `r` or `ξ` depending on the kind).
    pub fn evaluate(self, coordinate: f64, tau: f64, params: PhysicalParams) -> Result<Complex64> {
        let m = params.mass;
        match self {
            WaveKind::FreeFall => freefall_wave(coordinate, tau, params),
            WaveKind::Free1dRight => free1d_directional_wave(Direction::Right, coordinate, tau, m),
            WaveKind::Free1dLeft => free1d_directional_wave(Direction::Left, coordinate, tau, m),
            WaveKind::Free1dEven => free1d_parity_wave(Parity::Even, coordinate, tau, m),
            WaveKind::Free1dOdd => free1d_parity_wave(Parity::Odd, coordinate, tau, m),
            WaveKind::Free3dRadial(l) => free3d_radial_wave(l, coordinate, tau, m),
            WaveKind::Free3dUniversal => free3d_universal_wave(coordinate, tau, m),
        }
    }

    pub fn name(self) -> String {
        match self {
            WaveKind::FreeFall => "freefall".into(),
            WaveKind::Free1dRight => "free1d_right".into(),
            WaveKind::Free1dLeft => "free1d_left".into(),
            WaveKind::Free1dEven => "free1d_even".into(),
            WaveKind::Free1dOdd => "free1d_odd".into(),
            WaveKind::Free3dRadial(_) => "free3d_radial".into(),
            WaveKind::Free3dUniversal => "free3d_universal".into(),
        }
    }

    /// Parses a system name; the radial kind takes its orbital number separately.
    pub fn parse(name: &str, l: u32) -> Result<Self> {
        Ok(match name {
            "freefall" => WaveKind::FreeFall,
            "free1d_right" => WaveKind::Free1dRight,
            "free1d_left" => WaveKind::Free1dLeft,
            "free1d_even" => WaveKind::Free1dEven,
            "free1d_odd" => WaveKind::Free1dOdd,
            "free3d_radial" => WaveKind::Free3dRadial(l),
            "free3d_universal" => WaveKind::Free3dUniversal,
            other => return Err(Error::InvalidInput(format!("unknown system '{other}'"))),
        })
    }
}

/// Projection `ξ = k̂·r⃗` of a position onto the propagation direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UniversalCoordinate {
    pub xi: f64,
}

impl UniversalCoordinate {
    pub fn project(k_hat: [f64; 3], r_vec: [f64; 3]) -> Result<Self> {
        let n = norm3(k_hat);
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidInput(format!("direction must be a unit vector, |k| = {n}")));
        }
        Ok(Self { xi: dot3(k_hat, r_vec) })
    }
}

pub(crate) fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

/// Uniform force: `√(|F|/2π) exp(iFxτ − iF²τ³/6m)`.
pub fn freefall_wave(x: f64, tau: f64, params: PhysicalParams) -> Result<Complex64> {
    params.require_force()?;
    let f = params.force;
    let phase = f * x * tau - f * f * tau * tau * tau / (6.0 * params.mass);
    Ok(Complex64::from_polar((f.abs() / (2.0 * PI)).sqrt(), phase))
}

/// Running-wave timeline: `(4√(πm))⁻¹ z^{3/2} e^{−x²z²/4} D_{−3/2}(∓ixz)`,
/// `z = √(m/iτ)`.
pub fn free1d_directional_wave(direction: Direction, x: f64, tau: f64, m: f64) -> Result<Complex64> {
    let zb = BranchedArgument::sqrt_mass_over_i_tau(m, tau)?;
    let z = zb.to_complex();
    let sign = match direction {
        Direction::Right => -1.0,
        Direction::Left => 1.0,
    };
    let d = parabolic_cylinder_d(-1.5, Complex64::i() * sign * x * z)?;
    let pre = 1.0 / (4.0 * (PI * m).sqrt());
    Ok(pre * zb.powf(1.5) * (-(x * x) * z * z / 4.0).exp() * d)
}

/// Standing-wave timeline of the given parity, from the `x ≥ 0` forms in
/// `J_{3/4}, J_{−1/4}` (odd) and `J_{1/4}, J_{−3/4}` (even), `z = m/4τ`.
pub fn free1d_parity_wave(parity: Parity, x: f64, tau: f64, m: f64) -> Result<Complex64> {
    if tau == 0.0 {
        return Err(Error::SingularTime);
    }
    let ax = x.abs();
    let z = m / (4.0 * tau.abs());
    let w = ax * ax * z;
    let value = if w == 0.0 {
        match parity {
            Parity::Odd => Complex64::new(0.0, 0.0),
            Parity::Even => {
                let limit = (2.0 * z).powf(0.75) / gamma(0.25);
                (2.0 / m).sqrt() * Complex64::from_polar(1.0, PI / 8.0) * Complex64::new(0.0, -limit)
            }
        }
    } else {
        let (upper, lower, shift) = match parity {
            Parity::Odd => (0.75, -0.25, -PI / 8.0),
            Parity::Even => (0.25, -0.75, PI / 8.0),
        };
        let bracket = Complex64::new(bessel_j_real(upper, w)?, -bessel_j_real(lower, w)?);
        (2.0 / m).sqrt() * (ax * z).powf(1.5) * Complex64::from_polar(1.0, w + shift) * bracket
    };
    let value = if tau < 0.0 { value.conj() } else { value };
    Ok(match parity {
        Parity::Odd if x < 0.0 => -value,
        _ => value,
    })
}

/// Radial timeline `Ξ^l_τ(r) = √(4r/m) z^{3/2} e^{ir²z − iπ(2α+1)/4} [J_{α+1}(r²z) − iJ_α(r²z)]`,
/// `2α = l − 1/2`, `z = m/4τ` with `arg z = π` for `τ < 0`. At `r = 0` only
/// `l = 0` survives, with value `−i e^{−iπ/8} 2^{1/4} √(4/m) z^{5/4} / Γ(3/4)`.
pub fn free3d_radial_wave(l: u32, r: f64, tau: f64, m: f64) -> Result<Complex64> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::InvalidInput(format!("radius must be non-negative, got {r}")));
    }
    let zb = BranchedArgument::mass_over_four_tau(m, tau)?;
    if r == 0.0 {
        if l > 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let phase = Complex64::from_polar(1.0, -PI / 8.0 - PI / 2.0);
        return Ok(phase * 2f64.powf(0.25) * (4.0 / m).sqrt() * zb.powf(1.25) / gamma(0.75));
    }
    let alpha = (l as f64 - 0.5) / 2.0;
    let arg = BranchedArgument::new(r * r * zb.modulus, zb.argument)?;
    let bracket = bessel_j(alpha + 1.0, arg)? - Complex64::i() * bessel_j(alpha, arg)?;
    let phase = (Complex64::i() * (arg.to_complex() - PI * (2.0 * alpha + 1.0) / 4.0)).exp();
    Ok((4.0 * r / m).sqrt() * zb.powf(1.5) * phase * bracket)
}

/// Universal timeline `3(16√(π³m))⁻¹ z^{5/2} e^{−ξ²z²/4} D_{−5/2}(−iξz)`, `z = √(m/iτ)`.
pub fn free3d_universal_wave(xi: f64, tau: f64, m: f64) -> Result<Complex64> {
    let zb = BranchedArgument::sqrt_mass_over_i_tau(m, tau)?;
    let z = zb.to_complex();
    let d = parabolic_cylinder_d(-2.5, -Complex64::i() * xi * z)?;
    let pre = 3.0 / (16.0 * (PI.powi(3) * m).sqrt());
    Ok(pre * zb.powf(2.5) * (-(xi * xi) * z * z / 4.0).exp() * d)
}

/// Partial-wave sum `Σ_{l ≤ l_max} i^l Ξ^l_τ(r) Σ_{m_l} Y_l^{m_l}(r̂) [Y_l^{m_l}(k̂)]*`.
pub fn universal_from_partial_waves(k_hat: [f64; 3], r_vec: [f64; 3], tau: f64, m: f64, l_max: u32) -> Result<Complex64> {
    let r = norm3(r_vec);
    UniversalCoordinate::project(k_hat, r_vec)?;
    if r == 0.0 {
        return Ok(free3d_radial_wave(0, 0.0, tau, m)? / (4.0 * PI));
    }
    let r_hat = [r_vec[0] / r, r_vec[1] / r, r_vec[2] / r];
    let mut total = Complex64::new(0.0, 0.0);
    let mut il = Complex64::new(1.0, 0.0);
    for l in 0..=l_max {
        let li = l as i64;
        let mut angular = Complex64::new(0.0, 0.0);
        for ml in -li..=li {
            angular += sph_harm(li, ml, r_hat)? * sph_harm(li, ml, k_hat)?.conj();
        }
        total += il * free3d_radial_wave(l, r, tau, m)? * angular;
        il *= Complex64::i();
    }
    Ok(total)
}
