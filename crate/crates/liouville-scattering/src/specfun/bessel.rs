//! Modified Bessel functions of purely imaginary order `i*lambda` with
//! complex argument restricted to the closed right half-plane.
//!
//! Three evaluation regimes:
//!  * `|z| <= 30`: power series, summed in double-double to absorb the
//!    cancellation that appears near the imaginary axis;
//!  * `|z| >= 25` (K) / `|z| > 30` (I): large-argument expansions with both
//!    exponential branches for I;
//!  * K with `Re z` in the cancellation band and `|z| < 25`: seeded from the
//!    expansion at radius 25 and integrated inward along the ray, which is
//!    the stable direction for the recessive solution.

use crate::dd::{Cdd, Dd};
use crate::ode::{integrate_to_checkpoints, State};
use crate::specfun::{complex_gamma, SpecFunError};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

/// Series/asymptotic switch radius for `I`.
pub const Z_SWITCH: f64 = 30.0;
/// Asymptotic radius for `K`.
const K_ASYMPTOTIC_RADIUS: f64 = 25.0;
/// Largest `Re z` at which the K-difference formula keeps ~12 digits.
const K_CANCELLATION_RE: f64 = 4.6;
const MAX_SERIES_TERMS: usize = 400;

/// Fixed order `nu = i*lambda`, `lambda > 0`.
#[derive(Clone, Copy, Debug)]
pub struct BesselOrder {
    lambda: f64,
}

impl BesselOrder {
    /// `lambda` must be strictly positive; a negative energy reduces to the
    /// positive one by conjugation and is rejected here.
    pub fn new(lambda: f64) -> Result<Self, SpecFunError> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(SpecFunError::InvalidOrder { lambda });
        }
        Ok(BesselOrder { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

/// Which of the two orders `+i*lambda` / `-i*lambda` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    PlusI,
    MinusI,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::PlusI => 1.0,
            Branch::MinusI => -1.0,
        }
    }
}

/// Evaluation point with `Re z >= 0` and `z` off the branch cut.
#[derive(Clone, Copy, Debug)]
pub struct EvalPoint {
    z: C64,
}

impl EvalPoint {
    pub fn new(z: C64) -> Result<Self, SpecFunError> {
        if z.re < 0.0 || !z.re.is_finite() || !z.im.is_finite() {
            return Err(SpecFunError::InvalidArgument { z });
        }
        Ok(EvalPoint { z })
    }

    pub fn z(&self) -> C64 {
        self.z
    }
}

fn validate_precision(precision: f64) -> Result<(), SpecFunError> {
    if precision > 0.0 && precision <= 1e-6 {
        Ok(())
    } else {
        Err(SpecFunError::InvalidPrecision { precision })
    }
}

/// Power series for `I_nu(z)` and its z-derivative, `nu = i*sign*lambda`
/// (`lambda = 0` gives the classical order-zero function).
///
/// Returns `(value, derivative, residual_estimate)`.
fn series_i(lambda: f64, sign: f64, z: C64) -> Result<(C64, C64, f64), SpecFunError> {
    let nu = C64::new(0.0, sign * lambda);
    // Common prefactor (z/2)^nu / Gamma(1+nu); factored out so the double-
    // double loop only sees the interior sum.
    let pref = ((nu * (z / 2.0).ln()).exp()) / complex_gamma(C64::new(1.0, 0.0) + nu)?;

    let q = Cdd::square_of(z.re, z.im).scale(0.25); // z^2/4, exact
    let use_dd = z.norm() - z.re > 4.0; // > ~2 digits of cancellation

    let mut term = Cdd::from_f64(1.0, 0.0);
    let mut sum = term;
    // Derivative sum accumulates (nu + 2k) * c_k.
    let mut dsum = Cdd::from_f64(0.0, sign * lambda);
    let mut max_term = 1.0f64;
    let mut converged = false;
    let mut residual = f64::INFINITY;
    for k in 1..=MAX_SERIES_TERMS {
        let kf = k as f64;
        // d_k = k (k + nu) = (k^2, k * sign * lambda); exact in DD.
        let d = Cdd::new(Dd::from_prod(kf, kf), Dd::from_prod(kf, sign * lambda));
        term = if use_dd {
            term.mul(q).div(d)
        } else {
            // Plain f64 path when no cancellation is possible.
            let t = C64::new(term.re.to_f64(), term.im.to_f64());
            let tq = t * C64::new(q.re.to_f64(), q.im.to_f64())
                / C64::new(kf * kf, kf * sign * lambda);
            Cdd::from_f64(tq.re, tq.im)
        };
        sum = sum.add(term);
        let factor = Cdd::from_f64(2.0 * kf, sign * lambda);
        dsum = dsum.add(term.mul(factor));
        let t_abs = term.abs_f64();
        max_term = max_term.max(t_abs);
        if kf > z.norm() && t_abs < 1e-34 * max_term {
            residual = t_abs * (2.0 * kf + lambda) / sum.abs_f64().max(1e-300);
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(SpecFunError::NonConvergence {
            what: "modified Bessel power series",
            z,
        });
    }
    let s0 = C64::new(sum.re.to_f64(), sum.im.to_f64());
    let s1 = C64::new(dsum.re.to_f64(), dsum.im.to_f64());
    let value = pref * s0;
    let deriv = pref * s1 / z;
    Ok((value, deriv, residual))
}

/// Coefficients a_k(nu) of the large-argument expansion; real for nu = i*lambda.
fn asymptotic_coeffs(lambda: f64) -> Vec<f64> {
    let mut a = Vec::with_capacity(18);
    a.push(1.0);
    for k in 1..18usize {
        let m = (2 * k - 1) as f64;
        let prev = a[k - 1];
        a.push(prev * (-(4.0 * lambda * lambda + m * m)) / (8.0 * k as f64));
    }
    a
}

/// Evaluate `sum a_k s_k z^-k`, its formal z-derivative, and the size of the
/// first omitted term, truncating at the smallest term.
fn asymptotic_sums(coeffs: &[f64], z: C64, alternate: bool) -> (C64, C64, f64) {
    let zi = 1.0 / z;
    let mut p = C64::new(1.0, 0.0);
    let mut sum = C64::new(1.0, 0.0);
    let mut dsum = C64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    let mut omitted = 0.0;
    for (k, &a) in coeffs.iter().enumerate().skip(1) {
        let s = if alternate && k % 2 == 1 { -a } else { a };
        let t = s * p * zi;
        let size = t.norm();
        if size >= last {
            omitted = size;
            break;
        }
        sum += t;
        dsum += -(k as f64) * t / z;
        p *= zi;
        last = size;
        omitted = size;
    }
    (sum, dsum, omitted)
}

/// Large-|z| evaluation of I and its derivative, both exponential branches.
fn asymptotic_i(lambda: f64, sign: f64, z: C64) -> (C64, C64, f64) {
    let coeffs = asymptotic_coeffs(lambda);
    let s = if z.im >= 0.0 { 1.0 } else { -1.0 };
    // e^{s (nu + 1/2) pi i} with nu = i*sign*lambda.
    let c2 = C64::new(0.0, s) * (-s * sign * lambda * PI).exp();
    let (p, dp, rp) = asymptotic_sums(&coeffs, z, true);
    let (q, dq, rq) = asymptotic_sums(&coeffs, z, false);
    let root = (2.0 * PI * z).sqrt();
    let ep = z.exp();
    let em = (-z).exp();
    let value = (ep * p + c2 * em * q) / root;
    let deriv = (ep * (p + dp - p / (2.0 * z)) + c2 * em * (-q + dq - q / (2.0 * z))) / root;
    let scale = (ep.norm() + (c2 * em).norm()) / root.norm();
    let residual = (rp + rq) * scale / value.norm().max(1e-300);
    (value, deriv, residual)
}

/// Large-|z| evaluation of K and its derivative (single recessive branch).
fn asymptotic_k(lambda: f64, z: C64) -> (C64, C64, f64) {
    let coeffs = asymptotic_coeffs(lambda);
    let (r, dr, omitted) = asymptotic_sums(&coeffs, z, false);
    let pref = (PI / (2.0 * z)).sqrt() * (-z).exp();
    let value = pref * r;
    let deriv = pref * (-r + dr - r / (2.0 * z));
    (value, deriv, omitted / r.norm().max(1e-300))
}

/// K via the difference of the two I-series; only safe while the
/// cancellation `e^{2 Re z}` stays below ~1e4.
fn k_from_i_difference(lambda: f64, z: C64) -> Result<(C64, C64, f64), SpecFunError> {
    let (ip, dip, r1) = series_i(lambda, 1.0, z)?;
    let (im, dim, r2) = series_i(lambda, -1.0, z)?;
    let sin_nu_pi = C64::new(0.0, (lambda * PI).sinh());
    let value = PI / 2.0 * (im - ip) / sin_nu_pi;
    let deriv = PI / 2.0 * (dim - dip) / sin_nu_pi;
    let cancel = (2.0 * z.re).exp();
    Ok((value, deriv, (r1 + r2 + 1e-16 * cancel).max(1e-16)))
}

/// K in the cancellation band: seed with the expansion at radius 25 on the
/// same ray and integrate the Bessel ODE inward (the direction in which K is
/// the growing solution, so the integration is stable).
fn k_by_inward_ray(lambda: f64, z: C64) -> Result<(C64, C64), SpecFunError> {
    let r = z.norm();
    let dir = z / r;
    let s0 = K_ASYMPTOTIC_RADIUS;
    let (k0, dk0, _) = asymptotic_k(lambda, dir * s0);
    let nu_sq = -lambda * lambda;
    let rhs = move |s: f64, y: &State| -> State {
        let zeta = dir * s;
        let k = y[0];
        let kp = y[1];
        [dir * kp, dir * (-kp / zeta + (1.0 + nu_sq / (zeta * zeta)) * k)]
    };
    let states = integrate_to_checkpoints(rhs, s0, [k0, dk0], &[r], 1e-13, 1e-300)
        .map_err(|e| SpecFunError::RayIntegration { z, detail: e.to_string() })?;
    Ok((states[0][0], states[0][1]))
}

/// `(K, K', used_fallback)` routing across the three regimes.
pub fn modified_k_with_derivative(
    lambda: f64,
    z: C64,
) -> Result<(C64, C64, bool), SpecFunError> {
    if z.norm() == 0.0 {
        return Err(SpecFunError::InvalidArgument { z });
    }
    if z.re <= K_CANCELLATION_RE && z.norm() <= Z_SWITCH {
        let (v, d, _) = k_from_i_difference(lambda, z)?;
        return Ok((v, d, false));
    }
    if z.norm() >= K_ASYMPTOTIC_RADIUS {
        let (v, d, _) = asymptotic_k(lambda, z);
        return Ok((v, d, false));
    }
    let (v, d) = k_by_inward_ray(lambda, z)?;
    Ok((v, d, true))
}

/// `(I, I')` for order `i*sign*lambda`.
pub fn modified_i_with_derivative(
    lambda: f64,
    sign: f64,
    z: C64,
) -> Result<(C64, C64), SpecFunError> {
    if z.norm() == 0.0 {
        return Err(SpecFunError::InvalidArgument { z });
    }
    if z.norm() <= Z_SWITCH {
        let (v, d, _) = series_i(lambda, sign, z)?;
        Ok((v, d))
    } else {
        let (v, d, _) = asymptotic_i(lambda, sign, z);
        Ok((v, d))
    }
}

/// Modified Bessel function `I_{±i lambda}(z)`.
pub fn bessel_i(
    order: BesselOrder,
    branch: Branch,
    p: EvalPoint,
    precision: f64,
) -> Result<C64, SpecFunError> {
    validate_precision(precision)?;
    let z = p.z();
    if z.norm() <= Z_SWITCH {
        let (v, _, res) = series_i(order.lambda(), branch.sign(), z)?;
        if res > precision {
            return Err(SpecFunError::NonConvergence {
                what: "modified Bessel power series",
                z,
            });
        }
        Ok(v)
    } else {
        let (v, _, res) = asymptotic_i(order.lambda(), branch.sign(), z);
        if res > precision {
            return Err(SpecFunError::NonConvergence {
                what: "modified Bessel large-argument expansion",
                z,
            });
        }
        Ok(v)
    }
}

/// Classical order-zero `I_0(z)`; the degenerate `lambda -> 0` path.
pub fn bessel_i_order_zero(z: C64) -> Result<C64, SpecFunError> {
    let (v, _, _) = series_i(0.0, 1.0, z)?;
    Ok(v)
}

/// Modified Bessel function `K_{i lambda}(z)`.
pub fn bessel_k(order: BesselOrder, p: EvalPoint, precision: f64) -> Result<C64, SpecFunError> {
    validate_precision(precision)?;
    let (v, _, _) = modified_k_with_derivative(order.lambda(), p.z())?;
    Ok(v)
}

/// K together with a flag marking that the cancellation fallback
/// (inward ray integration) was taken.
pub fn bessel_k_detailed(
    order: BesselOrder,
    p: EvalPoint,
) -> Result<(C64, C64, bool), SpecFunError> {
    modified_k_with_derivative(order.lambda(), p.z())
}

/// Wronskian of `sqrt(x) I_{i lambda}(x)` and `sqrt(x) K_{i lambda}(x)`
/// against x; identically -1 for every x > 0.
pub fn bessel_wronskian_check(order: BesselOrder, x: f64) -> Result<C64, SpecFunError> {
    let z = C64::new(x, 0.0);
    let (iv, id) = modified_i_with_derivative(order.lambda(), 1.0, z)?;
    let (kv, kd, _) = modified_k_with_derivative(order.lambda(), z)?;
    // W(sqrt(x) I, sqrt(x) K) = x (I K' - I' K).
    Ok(x * (iv * kd - id * kv))
}

/// Bessel data for a set of radial points along a common ray `z = mu * x`.
///
/// Layout matches what the radial fixed-point engine consumes: both I-orders
/// and K, with derivatives taken against z.
pub struct RayTables {
    pub i_plus: Vec<(C64, C64)>,
    pub i_minus: Vec<(C64, C64)>,
    pub k: Vec<(C64, C64)>,
}

/// Batch evaluation at `z_j = mu * x_j` for ascending positive `x`.
///
/// K-values falling in the cancellation band are obtained from a single
/// inward integration pass over the whole ray.
pub fn bessel_ray_tables(lambda: f64, mu: C64, xs: &[f64]) -> Result<RayTables, SpecFunError> {
    let n = xs.len();
    let mut i_plus = Vec::with_capacity(n);
    let mut i_minus = Vec::with_capacity(n);
    let mut k: Vec<Option<(C64, C64)>> = vec![None; n];
    let mu_abs = mu.norm();
    if mu_abs == 0.0 {
        return Err(SpecFunError::InvalidArgument { z: mu });
    }
    let dir = mu / mu_abs;

    let mut band = Vec::new(); // (index, radius) needing the inward sweep
    for (j, &x) in xs.iter().enumerate() {
        let z = mu * x;
        i_plus.push(modified_i_with_derivative(lambda, 1.0, z)?);
        i_minus.push(modified_i_with_derivative(lambda, -1.0, z)?);
        let r = z.norm();
        if z.re <= K_CANCELLATION_RE && r <= Z_SWITCH {
            let (v, d, _) = k_from_i_difference(lambda, z)?;
            k[j] = Some((v, d));
        } else if r >= K_ASYMPTOTIC_RADIUS {
            let (v, d, _) = asymptotic_k(lambda, z);
            k[j] = Some((v, d));
        } else {
            band.push((j, r));
        }
    }

    if !band.is_empty() {
        band.sort_by(|a, b| b.1.total_cmp(&a.1)); // descending radius
        let radii: Vec<f64> = band.iter().map(|&(_, r)| r).collect();
        let s0 = K_ASYMPTOTIC_RADIUS;
        let (k0, dk0, _) = asymptotic_k(lambda, dir * s0);
        let nu_sq = -lambda * lambda;
        let rhs = move |s: f64, y: &State| -> State {
            let zeta = dir * s;
            [
                dir * y[1],
                dir * (-y[1] / zeta + (1.0 + nu_sq / (zeta * zeta)) * y[0]),
            ]
        };
        let states = integrate_to_checkpoints(rhs, s0, [k0, dk0], &radii, 1e-13, 1e-300)
            .map_err(|e| SpecFunError::RayIntegration {
                z: mu,
                detail: e.to_string(),
            })?;
        for (&(j, _), st) in band.iter().zip(states.iter()) {
            k[j] = Some((st[0], st[1]));
        }
    }

    Ok(RayTables {
        i_plus,
        i_minus,
        k: k.into_iter().map(|v| v.unwrap()).collect(),
    })
}
