//! Cubic-spline interpolation on periodic and open grids.
//!
//! Periodic splines resample closed curves during the physical flow and
//! extract radial graphs; natural splines handle rotationally symmetric
//! profiles between the poles.

use crate::tridiag;

/// Cubic spline through `(x[i], y[i])` with periodic closure: the data is
/// treated as one period of a function with period `x[n-1] - x[0] + gap`,
/// where the final interval wraps from `x[n-1]` back to `x[0] + period`.
pub struct PeriodicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    m: Vec<f64>, // second derivatives at nodes
    period: f64,
}

impl PeriodicSpline {
    /// `xs` strictly increasing within one period; `period > xs[n-1] - xs[0]`.
    pub fn new(xs: Vec<f64>, ys: Vec<f64>, period: f64) -> Self {
        let n = xs.len();
        assert!(n >= 3 && ys.len() == n);
        assert!(period > xs[n - 1] - xs[0]);
        let h = |i: usize| -> f64 {
            if i + 1 < n {
                xs[i + 1] - xs[i]
            } else {
                period - (xs[n - 1] - xs[0])
            }
        };
        let mut a = vec![0.0; n];
        let mut b = vec![0.0; n];
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        for i in 0..n {
            let im = (i + n - 1) % n;
            let ip = (i + 1) % n;
            let hm = h(im);
            let hi = h(i);
            a[i] = hm / 6.0;
            b[i] = (hm + hi) / 3.0;
            c[i] = hi / 6.0;
            d[i] = (ys[ip] - ys[i]) / hi - (ys[i] - ys[im]) / hm;
        }
        tridiag::solve_cyclic(&a, &b, &c, &mut d);
        Self { xs, ys, m: d, period }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let x0 = self.xs[0];
        let mut t = (x - x0).rem_euclid(self.period) + x0;
        // guard against rem_euclid landing exactly on the period boundary
        if t >= x0 + self.period {
            t = x0;
        }
        // locate interval by binary search over xs (last interval wraps)
        let i = match self.xs.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
            Ok(k) => k,
            Err(0) => n - 1, // t < xs[0] cannot happen after wrap, but be safe
            Err(k) => k - 1,
        };
        let ip = (i + 1) % n;
        let h = if i + 1 < n {
            self.xs[i + 1] - self.xs[i]
        } else {
            self.period - (self.xs[n - 1] - self.xs[0])
        };
        let s = t - self.xs[i];
        let u = h - s;
        (self.m[i] * u * u * u + self.m[ip] * s * s * s) / (6.0 * h)
            + (self.ys[i] / h - self.m[i] * h / 6.0) * u
            + (self.ys[ip] / h - self.m[ip] * h / 6.0) * s
    }
}

/// Natural cubic spline on an open interval (zero second derivative at the
/// ends). Used for profile curves where the pole behavior is handled by the
/// caller via reflection.
pub struct NaturalSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    m: Vec<f64>,
}

impl NaturalSpline {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        let n = xs.len();
        assert!(n >= 3 && ys.len() == n);
        let mut a = vec![0.0; n];
        let mut b = vec![1.0; n];
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        for i in 1..n - 1 {
            let hm = xs[i] - xs[i - 1];
            let hi = xs[i + 1] - xs[i];
            a[i] = hm / 6.0;
            b[i] = (hm + hi) / 3.0;
            c[i] = hi / 6.0;
            d[i] = (ys[i + 1] - ys[i]) / hi - (ys[i] - ys[i - 1]) / hm;
        }
        tridiag::solve(&a, &b, &c, &mut d);
        Self { xs, ys, m: d }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let t = x.clamp(self.xs[0], self.xs[n - 1]);
        let i = match self.xs.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
            Ok(k) => k.min(n - 2),
            Err(0) => 0,
            Err(k) => (k - 1).min(n - 2),
        };
        let h = self.xs[i + 1] - self.xs[i];
        let s = t - self.xs[i];
        let u = h - s;
        (self.m[i] * u * u * u + self.m[i + 1] * s * s * s) / (6.0 * h)
            + (self.ys[i] / h - self.m[i] * h / 6.0) * u
            + (self.ys[i + 1] / h - self.m[i + 1] * h / 6.0) * s
    }
}
