//! Quantum timelines: time bases built from spectral data, closed-form
//! timeline waves for free fall and the free particle, time-operator
//! kernels and the numerical checks that tie them together.
//!
//! Units are natural (ħ = 1). Time states carry the phase convention
//! `⟨x|τ⟩ = (2π)^{-1/2} ∫ e^{-iEτ} C_E φ_E(x) dE`, so that
//! `⟨τ|ψ⟩ = (2π)^{-1/2} ∫ e^{iEτ} ⟨E|ψ⟩ dE`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod oscquad;
pub mod specfun;
pub mod spectra;
pub mod systems;
pub mod timeline;
pub mod timeop;

pub use error::{Error, Result};
pub use specfun::{BranchedArgument, ComplexValue};
pub use spectra::{ContinuumBand, DiscreteSpectrum, PhysicalParams, RevivalData, SpectralState};
pub use timeline::{TimeMesh, TimelineSample};
