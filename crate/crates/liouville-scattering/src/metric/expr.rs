//! Small symbolic expression trees for the metric profile functions.
//!
//! The vocabulary (powers, trig, exp, compactly supported bump) covers the
//! shipped families; derivatives are formed symbolically so the end-bound
//! validation can probe mixed derivatives without finite-difference noise.
//! Tabulated profiles fall back to a cubic spline with centered differences.

#[derive(Clone, Debug)]
pub enum Expr {
    Const(f64),
    Var,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Scale(f64, Box<Expr>),
    /// Integer power of the operand (negative exponents allowed).
    Powi(Box<Expr>, i32),
    /// Real power of the operand; operand must stay positive.
    Powf(Box<Expr>, f64),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
    Exp(Box<Expr>),
    /// Natural log; operand must stay positive.
    Ln(Box<Expr>),
    /// `exp(-1/(1-t^2))` for `|t| < 1`, zero outside, `t = (x-center)/halfwidth`.
    /// `order` tracks how many times it has been differentiated against x.
    Bump {
        center: f64,
        halfwidth: f64,
        order: u8,
    },
}

/// d^order/dt^order of exp(-1/(1-t^2)) on |t| < 1, via Faa di Bruno with
/// g(t) = -1/(1-t^2).
fn bump_deriv_t(t: f64, order: u8) -> f64 {
    if t.abs() >= 1.0 {
        return 0.0;
    }
    let s = 1.0 - t * t;
    let f = (-1.0 / s).exp();
    let g1 = -2.0 * t / (s * s);
    match order {
        0 => f,
        1 => g1 * f,
        2 => {
            let g2 = -2.0 / (s * s) - 8.0 * t * t / (s * s * s);
            (g2 + g1 * g1) * f
        }
        3 => {
            let g2 = -2.0 / (s * s) - 8.0 * t * t / (s * s * s);
            let g3 = -24.0 * t / (s * s * s) - 48.0 * t * t * t / (s * s * s * s);
            (g3 + 3.0 * g1 * g2 + g1 * g1 * g1) * f
        }
        4 => {
            let s2 = s * s;
            let s3 = s2 * s;
            let s4 = s3 * s;
            let s5 = s4 * s;
            let g2 = -2.0 / s2 - 8.0 * t * t / s3;
            let g3 = -24.0 * t / s3 - 48.0 * t * t * t / s4;
            let g4 = -24.0 / s3 - 288.0 * t * t / s4 - 384.0 * t.powi(4) / s5;
            (g4 + 4.0 * g1 * g3 + 3.0 * g2 * g2 + 6.0 * g1 * g1 * g2 + g1.powi(4)) * f
        }
        _ => panic!("bump derivatives implemented up to order 4"),
    }
}

impl Expr {
    pub fn var() -> Expr {
        Expr::Var
    }

    pub fn c(v: f64) -> Expr {
        Expr::Const(v)
    }

    pub fn add(self, o: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(o))
    }

    pub fn sub(self, o: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(o))
    }

    pub fn mul(self, o: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(o))
    }

    pub fn scale(self, s: f64) -> Expr {
        Expr::Scale(s, Box::new(self))
    }

    pub fn powi(self, n: i32) -> Expr {
        Expr::Powi(Box::new(self), n)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Expr::Const(v) => *v,
            Expr::Var => x,
            Expr::Add(a, b) => a.eval(x) + b.eval(x),
            Expr::Sub(a, b) => a.eval(x) - b.eval(x),
            Expr::Mul(a, b) => a.eval(x) * b.eval(x),
            Expr::Scale(s, a) => s * a.eval(x),
            Expr::Powi(a, n) => a.eval(x).powi(*n),
            Expr::Powf(a, p) => a.eval(x).powf(*p),
            Expr::Sin(a) => a.eval(x).sin(),
            Expr::Cos(a) => a.eval(x).cos(),
            Expr::Exp(a) => a.eval(x).exp(),
            Expr::Ln(a) => a.eval(x).ln(),
            Expr::Bump {
                center,
                halfwidth,
                order,
            } => bump_deriv_t((x - center) / halfwidth, *order) / halfwidth.powi(*order as i32),
        }
    }

    pub fn diff(&self) -> Expr {
        match self {
            Expr::Const(_) => Expr::Const(0.0),
            Expr::Var => Expr::Const(1.0),
            Expr::Add(a, b) => a.diff().add(b.diff()),
            Expr::Sub(a, b) => a.diff().sub(b.diff()),
            Expr::Mul(a, b) => a
                .diff()
                .mul((**b).clone())
                .add((**a).clone().mul(b.diff())),
            Expr::Scale(s, a) => a.diff().scale(*s),
            Expr::Powi(a, n) => (**a)
                .clone()
                .powi(n - 1)
                .mul(a.diff())
                .scale(f64::from(*n)),
            Expr::Powf(a, p) => Expr::Powf(a.clone(), p - 1.0).mul(a.diff()).scale(*p),
            Expr::Sin(a) => Expr::Cos(a.clone()).mul(a.diff()),
            Expr::Cos(a) => Expr::Sin(a.clone()).mul(a.diff()).scale(-1.0),
            Expr::Exp(a) => Expr::Exp(a.clone()).mul(a.diff()),
            Expr::Ln(a) => (**a).clone().powi(-1).mul(a.diff()),
            Expr::Bump {
                center,
                halfwidth,
                order,
            } => Expr::Bump {
                center: *center,
                halfwidth: *halfwidth,
                order: order + 1,
            },
        }
    }
}

/// Natural cubic spline through strictly increasing sample points.
#[derive(Clone, Debug)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    second: Vec<f64>,
}

impl CubicSpline {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Option<CubicSpline> {
        let n = xs.len();
        if n < 3 || ys.len() != n || xs.windows(2).any(|w| w[1] <= w[0]) {
            return None;
        }
        // Tridiagonal solve for natural boundary conditions.
        let mut u = vec![0.0; n];
        let mut second = vec![0.0; n];
        for i in 1..n - 1 {
            let sig = (xs[i] - xs[i - 1]) / (xs[i + 1] - xs[i - 1]);
            let p = sig * second[i - 1] + 2.0;
            second[i] = (sig - 1.0) / p;
            let d = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
                - (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
            u[i] = (6.0 * d / (xs[i + 1] - xs[i - 1]) - sig * u[i - 1]) / p;
        }
        for i in (0..n - 1).rev() {
            second[i] = second[i] * second[i + 1] + u[i];
        }
        Some(CubicSpline { xs, ys, second })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let mut lo = 0;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (hi + lo) / 2;
            if self.xs[mid] > x {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let h = self.xs[hi] - self.xs[lo];
        let a = (self.xs[hi] - x) / h;
        let b = (x - self.xs[lo]) / h;
        a * self.ys[lo]
            + b * self.ys[hi]
            + ((a * a * a - a) * self.second[lo] + (b * b * b - b) * self.second[hi]) * h * h
                / 6.0
    }

    pub fn span(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }
}

/// A scalar profile: symbolic expression or tabulated spline.
#[derive(Clone, Debug)]
pub enum ScalarFn {
    Symbolic {
        /// value plus the first four derivatives
        chain: Box<[Expr; 5]>,
    },
    Tabulated(CubicSpline),
}

impl ScalarFn {
    pub fn from_expr(e: Expr) -> ScalarFn {
        let d1 = e.diff();
        let d2 = d1.diff();
        let d3 = d2.diff();
        let d4 = d3.diff();
        ScalarFn::Symbolic {
            chain: Box::new([e, d1, d2, d3, d4]),
        }
    }

    pub fn from_table(xs: Vec<f64>, ys: Vec<f64>) -> Option<ScalarFn> {
        CubicSpline::new(xs, ys).map(ScalarFn::Tabulated)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            ScalarFn::Symbolic { chain } => chain[0].eval(x),
            ScalarFn::Tabulated(s) => s.eval(x),
        }
    }

    /// n-th derivative, n <= 4. Splines use centered differences with
    /// step 1e-5 of the span.
    pub fn deriv(&self, x: f64, n: usize) -> f64 {
        assert!(n <= 4, "derivatives available up to order 4");
        match self {
            ScalarFn::Symbolic { chain } => chain[n].eval(x),
            ScalarFn::Tabulated(s) => {
                if n == 0 {
                    return s.eval(x);
                }
                let (lo, hi) = s.span();
                let h = 1e-5 * (hi - lo);
                match n {
                    1 => (s.eval(x + h) - s.eval(x - h)) / (2.0 * h),
                    2 => (s.eval(x + h) - 2.0 * s.eval(x) + s.eval(x - h)) / (h * h),
                    3 => {
                        (s.eval(x + 2.0 * h) - 2.0 * s.eval(x + h) + 2.0 * s.eval(x - h)
                            - s.eval(x - 2.0 * h))
                            / (2.0 * h * h * h)
                    }
                    _ => {
                        (s.eval(x + 2.0 * h) - 4.0 * s.eval(x + h) + 6.0 * s.eval(x)
                            - 4.0 * s.eval(x - h)
                            + s.eval(x - 2.0 * h))
                            / (h * h * h * h)
                    }
                }
            }
        }
    }

    /// Same profile shifted by an additive constant.
    pub fn plus_const(&self, c: f64) -> ScalarFn {
        match self {
            ScalarFn::Symbolic { chain } => {
                ScalarFn::from_expr(chain[0].clone().add(Expr::Const(c)))
            }
            ScalarFn::Tabulated(s) => {
                let ys = s.ys.iter().map(|y| y + c).collect();
                ScalarFn::Tabulated(CubicSpline::new(s.xs.clone(), ys).unwrap())
            }
        }
    }
}
