//! Complex gamma function and modified Bessel functions of purely imaginary
//! order, the kernel ingredients of the radial solution machinery.

mod bessel;
mod gamma;

pub use bessel::{
    bessel_i, bessel_i_order_zero, bessel_k, bessel_k_detailed, bessel_ray_tables,
    bessel_wronskian_check, modified_i_with_derivative, modified_k_with_derivative, BesselOrder,
    Branch, EvalPoint, RayTables, Z_SWITCH,
};
pub use gamma::{complex_gamma, gamma_ratio};

use num_complex::Complex64 as C64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecFunError {
    #[error("gamma pole at non-positive integer {at}")]
    PoleOfGamma { at: C64 },
    #[error("order parameter lambda = {lambda} must be positive")]
    InvalidOrder { lambda: f64 },
    #[error("argument {z} outside the right half-plane domain")]
    InvalidArgument { z: C64 },
    #[error("precision {precision} outside (0, 1e-6]")]
    InvalidPrecision { precision: f64 },
    #[error("{what} failed to converge at z = {z}")]
    NonConvergence { what: &'static str, z: C64 },
    #[error("ray integration for K failed at {z}: {detail}")]
    RayIntegration { z: C64, detail: String },
}
