//! Quantum-mechanical and semiclassical spatial densities of `N` non-interacting
//! fermions bound in model potentials.
//!
//! The crate computes, on the quantum side, exact spectra and the density
//! profiles ρ(r), τ(r), τ₁(r), ξ(r) for a catalog of solvable systems
//! (1D box, 1D quartic well, isotropic harmonic oscillators, rectangular and
//! spherical/circular billiards, a coupled 2D quartic oscillator), and on the
//! semiclassical side the oscillating parts of the same densities as sums over
//! closed non-periodic classical orbits, together with the regularizations
//! needed at caustics (centers of radial systems) and classical turning points.
//!
//! Everything is `no_std` (with `alloc`); file formats and the CLI live in the
//! companion `codens` crate.

#![no_std]
#![allow(clippy::too_many_arguments)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod eigen;
pub mod error;
pub mod orbits;
pub mod potentials;
pub mod quadrature;
pub mod quantum;
pub mod regularize;
pub mod smooth_tf;
pub mod specfun;
pub mod thermal;

pub use error::CoreError;
pub use potentials::PotentialModel;

