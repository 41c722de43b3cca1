use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::oscquad::rules::{gauss_hermite, gauss_legendre};

/// Smooth, rapidly decaying function on 3-space with an analytic Laplacian.
pub trait TestFunction3d: Sync {
    fn value(&self, r: [f64; 3]) -> Complex64;
    fn laplacian(&self, r: [f64; 3]) -> Complex64;
    /// Centre and width of the region carrying the function.
    fn centre(&self) -> [f64; 3];
    fn width(&self) -> f64;
}

/// Normalized Gaussian `N e^{-|r−c|²/2w²}`, optionally multiplied by one
/// Cartesian coordinate `(r − c)_axis`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianTestFunction {
    pub centre: [f64; 3],
    pub width: f64,
    pub axis: Option<usize>,
    norm: f64,
}

impl GaussianTestFunction {
    pub fn new(centre: [f64; 3], width: f64) -> Result<Self> {
        Self::build(centre, width, None)
    }

    /// `(r − c)_axis` times the Gaussian: odd about the centre.
    pub fn dipole(centre: [f64; 3], width: f64, axis: usize) -> Result<Self> {
        if axis > 2 {
            return Err(Error::InvalidInput(format!("axis {axis} out of range")));
        }
        Self::build(centre, width, Some(axis))
    }

    fn build(centre: [f64; 3], width: f64, axis: Option<usize>) -> Result<Self> {
        if !(width > 0.0) || !width.is_finite() || centre.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput("width must be positive and centre finite".into()));
        }
        let base = PI.powf(-0.75) * width.powf(-1.5);
        let norm = if axis.is_some() { base * 2f64.sqrt() / width } else { base };
        Ok(Self { centre, width, axis, norm })
    }

    fn parts(&self, r: [f64; 3]) -> ([f64; 3], f64, f64) {
        let d = [r[0] - self.centre[0], r[1] - self.centre[1], r[2] - self.centre[2]];
        let rho2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
        let g = self.norm * (-rho2 / (2.0 * self.width * self.width)).exp();
        (d, rho2, g)
    }
}

impl TestFunction3d for GaussianTestFunction {
    fn value(&self, r: [f64; 3]) -> Complex64 {
        let (d, _, g) = self.parts(r);
        Complex64::new(self.axis.map_or(g, |k| d[k] * g), 0.0)
    }

    fn laplacian(&self, r: [f64; 3]) -> Complex64 {
        let (d, rho2, g) = self.parts(r);
        let w2 = self.width * self.width;
        let v = match self.axis {
            None => g * (rho2 / (w2 * w2) - 3.0 / w2),
            Some(k) => d[k] * g * (rho2 / (w2 * w2) - 5.0 / w2),
        };
        Complex64::new(v, 0.0)
    }

    fn centre(&self) -> [f64; 3] {
        self.centre
    }

    fn width(&self) -> f64 {
        self.width
    }
}

/// Resolution of the six-dimensional product rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorGrid {
    /// Gauss–Hermite points per centre-of-mass axis.
    pub centre_points: usize,
    /// Gauss–Legendre points in the separation `ρ`.
    pub radial_points: usize,
    /// Gauss–Legendre points in `cos θ`; `φ` uses twice as many.
    pub angular_points: usize,
}

impl CommutatorGrid {
    pub fn uniform(n: usize) -> Self {
        Self { centre_points: n, radial_points: n, angular_points: n }
    }
}

/// `⟨f|[T̂, Ĥ]|g⟩` for the free particle in space, refined over a ladder of
/// product grids until two successive values agree within `tol`.
pub fn commutator_3d_check(f: &dyn TestFunction3d, g: &dyn TestFunction3d, mass: f64, tol: f64) -> Result<Complex64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let mut previous: Option<Complex64> = None;
    for k in 1..=6 {
        let grid = CommutatorGrid { centre_points: 6 + 2 * k, radial_points: 8 * k, angular_points: 4 + 4 * k };
        let v = commutator_3d_check_with(f, g, mass, grid)?;
        if let Some(p) = previous {
            if (v - p).norm() <= tol {
                return Ok(v);
            }
        }
        previous = Some(v);
    }
    Err(Error::NotConverged("commutator quadrature did not settle on the finest grid".into()))
}

/// `−(1/2m) ∬ [f*(r⃗₁) K(r⃗₁,r⃗₂) ∇²g(r⃗₂) − ∇²f*(r⃗₁) K(r⃗₁,r⃗₂) g(r⃗₂)]` on one
/// product grid, with `K` the free-particle time kernel.
///
/// Coordinates are `R = (r⃗₁+r⃗₂)/2` and `ρ⃗ = r⃗₁ − r⃗₂` with `ρ⃗` in spherical
/// form, where `K d³ρ = i(m/4π)(ρ̂·R) dρ dΩ` is bounded. The rule is tuned
/// to Gaussian-class test functions through their centres and widths.
pub fn commutator_3d_check_with(f: &dyn TestFunction3d, g: &dyn TestFunction3d, mass: f64, grid: CommutatorGrid) -> Result<Complex64> {
    if !(mass > 0.0) || grid.centre_points == 0 || grid.radial_points == 0 || grid.angular_points == 0 {
        return Err(Error::InvalidInput("mass and grid sizes must be positive".into()));
    }
    let (cf, cg) = (f.centre(), g.centre());
    let (w1, w2) = (f.width() * f.width(), g.width() * g.width());
    let sep = ((cf[0] - cg[0]).powi(2) + (cf[1] - cg[1]).powi(2) + (cf[2] - cg[2]).powi(2)).sqrt();
    let rho_max = 12.0 * (w1 + w2).sqrt() + sep;
    // The product f(R + ρ⃗/2) g(R − ρ⃗/2) is a Gaussian in R around a
    // ρ⃗-dependent centre with deviation (1/w₁² + 1/w₂²)^{-1/2}.
    let sigma = (w1 * w2 / (w1 + w2)).sqrt();

    let (xn, xw) = gauss_hermite(grid.centre_points);
    let (rn, rw) = gauss_legendre(grid.radial_points);
    let (cn, cw) = gauss_legendre(grid.angular_points);
    let nphi = 2 * grid.angular_points;
    let mut outer = Vec::with_capacity(cn.len() * nphi * rn.len());
    for (c, wc) in cn.iter().zip(&cw) {
        let s = (1.0 - c * c).max(0.0).sqrt();
        for k in 0..nphi {
            let phi = 2.0 * PI * (k as f64 + 0.5) / nphi as f64;
            let dir = [s * phi.cos(), s * phi.sin(), *c];
            let wd = wc * 2.0 * PI / nphi as f64;
            for (x, wx) in rn.iter().zip(&rw) {
                outer.push((dir, 0.5 * rho_max * (x + 1.0), wd * 0.5 * rho_max * wx));
            }
        }
    }
    let stretch = std::f64::consts::SQRT_2 * sigma;
    let axis: Vec<(f64, f64)> = xn.iter().zip(&xw).map(|(x, wx)| (stretch * x, stretch * wx * (x * x).exp())).collect();

    let contributions: Vec<Complex64> = outer
        .par_iter()
        .map(|&(dir, rho, weight)| {
            let h = 0.5 * rho;
            let centre: [f64; 3] = std::array::from_fn(|i| (w2 * (cf[i] - h * dir[i]) + w1 * (cg[i] + h * dir[i])) / (w1 + w2));
            let mut acc = Complex64::new(0.0, 0.0);
            for &(x, wx) in &axis {
                for &(y, wy) in &axis {
                    for &(z, wz) in &axis {
                        let big_r = [centre[0] + x, centre[1] + y, centre[2] + z];
                        let proj = dir[0] * big_r[0] + dir[1] * big_r[1] + dir[2] * big_r[2];
                        let r1 = [big_r[0] + h * dir[0], big_r[1] + h * dir[1], big_r[2] + h * dir[2]];
                        let r2 = [big_r[0] - h * dir[0], big_r[1] - h * dir[1], big_r[2] - h * dir[2]];
                        let term = f.value(r1).conj() * g.laplacian(r2) - f.laplacian(r1).conj() * g.value(r2);
                        acc += term * (proj * wx * wy * wz);
                    }
                }
            }
            acc * weight
        })
        .collect();
    let total: Complex64 = contributions.iter().sum();
    let kernel_factor = Complex64::new(0.0, mass / (4.0 * PI));
    Ok(total * kernel_factor * (-1.0 / (2.0 * mass)))
}
