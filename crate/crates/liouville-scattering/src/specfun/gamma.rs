//! Complex gamma function via the Stirling series with argument shifting.
//!
//! The Stirling tail with 15 Bernoulli terms is accurate far below 1e-16
//! relative once `Re z >= 12`; smaller real parts are handled with the
//! recurrence `Gamma(z) = Gamma(z + m) / (z (z+1) ... (z+m-1))`, which is
//! relatively stable (each factor contributes one rounding). This meets the
//! 1e-13 relative-error contract on |z| <= 50 without tuned rational
//! coefficients.

use crate::specfun::SpecFunError;
use num_complex::Complex64 as C64;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_74;

// B_{2k} / (2k (2k-1)) for k = 1..=15.
const STIRLING_COEFFS: [f64; 15] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0,
    657931.0 / 300.0,
    -3392780147.0 / 93960.0,
    1723168255201.0 / 2492028.0,
];

const SHIFT_THRESHOLD: f64 = 12.0;

/// log Gamma(z) for Re z >= SHIFT_THRESHOLD.
fn ln_gamma_stirling(z: C64) -> C64 {
    let zi = 1.0 / z;
    let zi2 = zi * zi;
    let mut tail = C64::new(0.0, 0.0);
    let mut p = zi;
    for c in STIRLING_COEFFS {
        tail += c * p;
        p *= zi2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + tail
}

/// Complex gamma function.
///
/// Returns [`SpecFunError::PoleOfGamma`] when `z` is within 1e-12 of a
/// non-positive integer.
pub fn complex_gamma(z: C64) -> Result<C64, SpecFunError> {
    if z.re <= 0.5 && z.im.abs() < 1e-12 {
        let nearest = z.re.round();
        if nearest <= 0.0 && (z.re - nearest).abs() < 1e-12 {
            return Err(SpecFunError::PoleOfGamma { at: z });
        }
    }
    if z.re >= SHIFT_THRESHOLD {
        return Ok(ln_gamma_stirling(z).exp());
    }
    let m = (SHIFT_THRESHOLD - z.re).ceil() as usize;
    let shifted = z + m as f64;
    let ln_g = ln_gamma_stirling(shifted);
    // Divide by the product (z)(z+1)...(z+m-1), in log form to dodge
    // overflow for strongly negative real parts.
    let mut ln_prod = C64::new(0.0, 0.0);
    for k in 0..m {
        ln_prod += (z + k as f64).ln();
    }
    Ok((ln_g - ln_prod).exp())
}

/// Gamma(1 - i lambda) / Gamma(1 + i lambda); unit modulus for real lambda.
pub fn gamma_ratio(lambda: f64) -> Result<C64, SpecFunError> {
    let g_minus = complex_gamma(C64::new(1.0, -lambda))?;
    let g_plus = complex_gamma(C64::new(1.0, lambda))?;
    Ok(g_minus / g_plus)
}
