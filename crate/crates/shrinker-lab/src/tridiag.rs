//! Tridiagonal and cyclic-tridiagonal solves (Thomas algorithm plus a
//! Sherman-Morrison corner correction). Used by the semi-implicit stepper
//! and the cubic-spline interpolators.

/// Solve `a[i] x[i-1] + b[i] x[i] + c[i] x[i+1] = d[i]` with `a[0]` and
/// `c[n-1]` ignored. Overwrites `d` with the solution.
pub fn solve(a: &[f64], b: &[f64], c: &[f64], d: &mut [f64]) {
    let n = d.len();
    debug_assert!(a.len() == n && b.len() == n && c.len() == n);
    let mut cp = vec![0.0; n];
    let mut bp = b[0];
    cp[0] = c[0] / bp;
    d[0] /= bp;
    for i in 1..n {
        bp = b[i] - a[i] * cp[i - 1];
        cp[i] = c[i] / bp;
        d[i] = (d[i] - a[i] * d[i - 1]) / bp;
    }
    for i in (0..n - 1).rev() {
        d[i] -= cp[i] * d[i + 1];
    }
}

/// Solve the cyclic system where row 0 also couples to `n-1` (coefficient
/// `a[0]`) and row `n-1` couples to 0 (coefficient `c[n-1]`).
pub fn solve_cyclic(a: &[f64], b: &[f64], c: &[f64], d: &mut [f64]) {
    let n = d.len();
    assert!(n >= 3, "cyclic solve needs at least 3 unknowns");
    let alpha = a[0];
    let beta = c[n - 1];
    // gamma is a free parameter of the rank-one split; -b[0] keeps pivots away
    // from zero for diagonally dominant systems.
    let gamma = -b[0];

    let mut bm = b.to_vec();
    bm[0] -= gamma;
    bm[n - 1] -= alpha * beta / gamma;

    solve(a, &bm, c, d);

    let mut u = vec![0.0; n];
    u[0] = gamma;
    u[n - 1] = beta;
    solve(a, &bm, c, &mut u);

    let frac = (d[0] + alpha * d[n - 1] / gamma) / (1.0 + u[0] + alpha * u[n - 1] / gamma);
    for i in 0..n {
        d[i] -= frac * u[i];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_solve_matches_dense() {
        let a = [0.0, -1.0, -1.0, -1.0];
        let b = [4.0, 4.0, 4.0, 4.0];
        let c = [-1.0, -1.0, -1.0, 0.0];
        let mut d = [1.0, 2.0, 3.0, 4.0];
        solve(&a, &b, &c, &mut d);
        // residual check
        let x = d;
        let r0 = 4.0 * x[0] - x[1] - 1.0;
        let r1 = -x[0] + 4.0 * x[1] - x[2] - 2.0;
        let r2 = -x[1] + 4.0 * x[2] - x[3] - 3.0;
        let r3 = -x[2] + 4.0 * x[3] - 4.0;
        for r in [r0, r1, r2, r3] {
            assert!(r.abs() < 1e-12, "residual {r}");
        }
    }

    #[test]
    fn cyclic_solve_matches_dense() {
        let n = 6;
        let a = vec![-1.0; n];
        let b = vec![4.5; n];
        let c = vec![-1.0; n];
        let rhs: Vec<f64> = (0..n).map(|i| (i as f64).sin() + 1.0).collect();
        let mut d = rhs.clone();
        solve_cyclic(&a, &b, &c, &mut d);
        for i in 0..n {
            let im = (i + n - 1) % n;
            let ip = (i + 1) % n;
            let r = a[i] * d[im] + b[i] * d[i] + c[i] * d[ip] - rhs[i];
            assert!(r.abs() < 1e-12, "row {i} residual {r}");
        }
    }
}
