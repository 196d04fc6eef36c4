//! Backward heat kernel weights and sphere-area constants.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Backward heat kernel centered at `(center, t0)` evaluated at `(x, t)`:
/// `(4 pi (t0 - t))^(-dim/2) exp(-|x - center|^2 / (4 (t0 - t)))`,
/// with `dim` the intrinsic dimension of the surfaces it is integrated over.
pub fn gaussian_weight(x: &[f64], dim: usize, center: &[f64], t0: f64, t: f64) -> Result<f64> {
    if t >= t0 {
        return Err(Error::TimeDomain { t, t0 });
    }
    assert_eq!(x.len(), center.len(), "point and center dimensions differ");
    let sq: f64 = x
        .iter()
        .zip(center)
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok(backward_kernel_sq(sq, dim, t0 - t))
}

/// Kernel as a function of squared distance and the time gap `t0 - t > 0`.
#[inline]
pub fn backward_kernel_sq(sq_dist: f64, dim: usize, time_gap: f64) -> f64 {
    (4.0 * PI * time_gap).powf(-0.5 * dim as f64) * (-sq_dist / (4.0 * time_gap)).exp()
}

/// Static weight `rho(x) = (4 pi)^(-dim/2) exp(-|x|^2/4)`, the kernel at
/// `(x0, t0, t) = (0, 0, -1)`.
#[inline]
pub fn static_weight_sq(sq_dist: f64, dim: usize) -> f64 {
    backward_kernel_sq(sq_dist, dim, 1.0)
}

/// Surface area of the unit m-sphere, `2 pi^((m+1)/2) / Gamma((m+1)/2)`.
pub fn unit_sphere_area(m: usize) -> f64 {
    2.0 * PI.powf(0.5 * (m + 1) as f64) / gamma_half((m + 1) as u32)
}

/// Gamma(k/2) for integer k >= 1 by the recursion from Gamma(1/2) = sqrt(pi)
/// and Gamma(1) = 1.
fn gamma_half(k: u32) -> f64 {
    match k {
        1 => PI.sqrt(),
        2 => 1.0,
        _ => (0.5 * (k - 2) as f64) * gamma_half(k - 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn static_weight_at_symmetric_point() {
        // (4 pi)^{-1/2}
        assert!((static_weight_sq(0.0, 1) - 0.282_094_791_773_878_14).abs() < 1e-15);
        // |x|^2 = 4 picks up a factor e^{-1}
        assert!((static_weight_sq(4.0, 1) - 0.103_776_874_355_148_68).abs() < 1e-15);
    }

    #[test]
    fn rejects_forward_times() {
        assert!(gaussian_weight(&[0.0, 0.0], 1, &[0.0, 0.0], 0.0, -0.5).is_ok());
        assert!(gaussian_weight(&[0.0, 0.0], 1, &[0.0, 0.0], -1.0, -1.0).is_err());
        assert!(gaussian_weight(&[0.0, 0.0], 1, &[0.0, 0.0], -1.0, 0.0).is_err());
    }

    #[test]
    fn parabolic_scaling_identity() {
        // rho_{0,0}(lambda x, lambda^2 t) * lambda^n = rho_{0,0}(x, t)
        let lambda: f64 = 2.0;
        for (x, t, n) in [([0.7, -0.2], -0.3, 1usize), ([1.3, 0.4], -1.7, 2)] {
            let lhs = gaussian_weight(
                &[lambda * x[0], lambda * x[1]],
                n,
                &[0.0, 0.0],
                0.0,
                lambda * lambda * t,
            )
            .unwrap()
                * lambda.powi(n as i32);
            let rhs = gaussian_weight(&x, n, &[0.0, 0.0], 0.0, t).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
        }
    }

    #[test]
    fn sphere_areas() {
        assert!((unit_sphere_area(1) - 2.0 * PI).abs() < 1e-14);
        assert!((unit_sphere_area(2) - 4.0 * PI).abs() < 1e-13);
        assert!((unit_sphere_area(3) - 2.0 * PI * PI).abs() < 1e-13);
    }
}
