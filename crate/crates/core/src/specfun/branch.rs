use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Complex number in polar form restricted to the principal sheet,
/// `modulus * exp(i * argument)` with `argument` in (-π, π].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchedArgument {
    pub modulus: f64,
    pub argument: f64,
}

impl BranchedArgument {
    pub fn new(modulus: f64, argument: f64) -> Result<Self> {
        if !modulus.is_finite() || modulus < 0.0 {
            return Err(Error::InvalidInput(format!("modulus must be finite and >= 0, got {modulus}")));
        }
        if !argument.is_finite() || argument <= -PI || argument > PI {
            return Err(Error::InvalidInput(format!("argument must lie in (-pi, pi], got {argument}")));
        }
        if modulus == 0.0 {
            return Ok(Self { modulus: 0.0, argument: 0.0 });
        }
        Ok(Self { modulus, argument })
    }

    /// Positive real number on the principal ray.
    pub fn real(x: f64) -> Result<Self> {
        Self::new(x, 0.0)
    }

    /// Polar form of a complex number; the negative real axis maps to argument π.
    pub fn from_complex(z: Complex64) -> Self {
        let modulus = z.norm();
        if modulus == 0.0 {
            return Self { modulus: 0.0, argument: 0.0 };
        }
        let mut argument = z.im.atan2(z.re);
        if argument <= -PI {
            argument = PI;
        }
        Self { modulus, argument }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(self.modulus, self.argument)
    }

    /// Principal-branch power `z^p`.
    pub fn powf(self, p: f64) -> Complex64 {
        if self.modulus == 0.0 {
            return if p == 0.0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
        }
        Complex64::from_polar(self.modulus.powf(p), p * self.argument)
    }

    /// `z = sqrt(m / (i tau))`: argument -π/4 for tau > 0 and +π/4 for tau < 0.
    pub fn sqrt_mass_over_i_tau(mass: f64, tau: f64) -> Result<Self> {
        if tau == 0.0 {
            return Err(Error::SingularTime);
        }
        let arg = if tau > 0.0 { -PI / 4.0 } else { PI / 4.0 };
        Self::new((mass / tau.abs()).sqrt(), arg)
    }

    /// `z = m / (4 tau)`: argument 0 for tau > 0 and π for tau < 0.
    pub fn mass_over_four_tau(mass: f64, tau: f64) -> Result<Self> {
        if tau == 0.0 {
            return Err(Error::SingularTime);
        }
        let arg = if tau > 0.0 { 0.0 } else { PI };
        Self::new(mass / (4.0 * tau.abs()), arg)
    }
}
