//! Special functions used by the closed-form timeline waves: Airy,
//! fractional-order Bessel, parabolic cylinder, spherical harmonics and the
//! Legendre generating-function kernel.

mod airy;
mod bessel;
mod branch;
mod gamma;
mod harmonics;
mod pcfd;

pub use airy::{airy_ai, AIRY_MAX, AIRY_MIN};
pub use bessel::{bessel_j, bessel_j_real};
pub use branch::BranchedArgument;
pub use gamma::{gamma, ln_gamma, rgamma};
pub use harmonics::{legendre_sum_kernel, sph_harm};
pub use pcfd::parabolic_cylinder_d;

/// Complex amplitude type used throughout the crate.
pub type ComplexValue = num_complex::Complex64;

/// Internal switch points, exposed for seam tests.
pub mod seams {
    pub const BESSEL_SERIES: f64 = super::bessel::SERIES_LIMIT;
    pub const BESSEL_HANKEL: f64 = super::bessel::HANKEL_LIMIT;
    pub const PCFD_SERIES: f64 = super::pcfd::SERIES_LIMIT;
    pub const PCFD_ASYMPTOTIC: f64 = super::pcfd::ASYMPTOTIC_LIMIT;
}
