//! Adaptive Dormand-Prince 5(4) integration for two-component complex
//! systems, used for the radial equation and for propagating Bessel values
//! along rays where direct summation is ill-conditioned.

use num_complex::Complex64 as C64;
use thiserror::Error;

pub type State = [C64; 2];

#[derive(Debug, Error)]
pub enum OdeError {
    #[error("step size underflow at t = {at} (stiffness or a singular coefficient)")]
    StepUnderflow { at: f64 },
    #[error("step budget exhausted after {steps} steps at t = {at}")]
    StepBudget { steps: usize, at: f64 },
}

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// 5th-order minus embedded 4th-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

/// Integrate `y' = f(t, y)` from `t0` to `t1` (either direction), stopping
/// exactly on each checkpoint in `checkpoints` (must be sorted in the
/// direction of travel and lie within [t0, t1]). Returns the state at every
/// checkpoint.
pub fn integrate_to_checkpoints<F>(
    f: F,
    t0: f64,
    y0: State,
    checkpoints: &[f64],
    rel_tol: f64,
    abs_floor: f64,
) -> Result<Vec<State>, OdeError>
where
    F: Fn(f64, &State) -> State,
{
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut h_prev: Option<f64> = None;
    const MAX_STEPS: usize = 4_000_000;
    let mut steps = 0usize;

    for &target in checkpoints {
        let dir = (target - t).signum();
        if dir == 0.0 {
            out.push(y);
            continue;
        }
        let mut h = h_prev
            .map(|h| h.abs() * dir)
            .unwrap_or_else(|| 1e-4 * (target - t));
        while (target - t) * dir > 0.0 {
            steps += 1;
            if steps > MAX_STEPS {
                return Err(OdeError::StepBudget { steps, at: t });
            }
            if h.abs() < 1e-14 * t.abs().max(1e-3) {
                return Err(OdeError::StepUnderflow { at: t });
            }
            if (t + h - target) * dir > 0.0 {
                h = target - t;
            }
            let add = |y: &State, coeffs: &[(f64, &State)]| -> State {
                let mut r = *y;
                for &(c, k) in coeffs {
                    r[0] += h * c * k[0];
                    r[1] += h * c * k[1];
                }
                r
            };
            let k2 = f(t + C2 * h, &add(&y, &[(A21, &k1)]));
            let k3 = f(t + C3 * h, &add(&y, &[(A31, &k1), (A32, &k2)]));
            let k4 = f(t + C4 * h, &add(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
            let k5 = f(
                t + C5 * h,
                &add(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
            );
            let k6 = f(
                t + h,
                &add(
                    &y,
                    &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
                ),
            );
            let y_new = add(&y, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
            let k7 = f(t + h, &y_new);

            let mut err: f64 = 0.0;
            for i in 0..2 {
                let e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i]
                    + E7 * k7[i]);
                let scale = abs_floor + rel_tol * y[i].norm().max(y_new[i].norm());
                err = err.max(e.norm() / scale);
            }

            if err <= 1.0 {
                t += h;
                y = y_new;
                k1 = k7;
            }
            let factor = if err > 0.0 {
                0.9 * err.powf(-0.2)
            } else {
                5.0
            };
            h *= factor.clamp(0.2, 5.0);
        }
        h_prev = Some(h);
        out.push(y);
    }
    Ok(out)
}
