//! Forward-scattering engine for surfaces carrying a separable
//! `(a(x) - b(y)) (dx^2 + dy^2)` metric with two hyperbolic-like cusps.
//!
//! The library computes, at a fixed energy:
//!  * the periodic angular spectrum (generalized angular momenta),
//!  * radial fundamental systems normalized at either cusp, built both by a
//!    Volterra fixed-point series and by direct adaptive integration,
//!  * characteristic and Weyl-Titchmarsh functions from Wronskians,
//!  * per-channel 2x2 scattering matrices and the block operator,
//!  * resonance (Regge-pole) ladders, large-momentum models, product
//!    factorizations, and a uniqueness harness that exercises shift and
//!    gauge invariance of the scattering data.
//!
//! See the `examples/` directory for one runnable entry point per
//! capability, and the `lsc` binary for the batch CLI.

pub mod angular;
pub mod analysis;
pub mod config;
pub mod dd;
pub mod inverse;
pub mod metric;
pub mod ode;
pub mod quad;
pub mod radial;
pub mod report;
pub mod scattering;
pub mod specfun;
pub mod verify;

pub use num_complex::Complex64;
