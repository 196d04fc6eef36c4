//! Gaussian density ratios, the Gaussian energy functional, its L2 gradient,
//! and the dissipation integral of the rescaled monotonicity identity.
//!
//! For a normal graph `M = graph_Sigma(v)` the energy is
//! `E(v) = int_M rho(x) dH^n = int_Sigma rho(y + v nu) J dH^n`
//! with `rho(x) = (4 pi)^{-n/2} exp(-|x|^2/4)`. The model density is computed
//! by the same quadrature, so `E(0)` matches it exactly and energy gaps are
//! free of quadrature bias.

use crate::error::{Error, Result};
use crate::geometry::{
    area_jacobian, backward_kernel_sq, dot, embed_graph, static_weight_sq, DiscreteSurface,
    GridTopology, NormalSection, ShrinkerModel, Vec2,
};

/// One Gaussian density ratio sample.
#[derive(Clone, Copy, Debug)]
pub struct DensityRecord {
    pub center: Vec2,
    pub t0: f64,
    pub t: f64,
    pub value: f64,
}

/// Energy diagnostics of a single state.
#[derive(Clone, Copy, Debug)]
pub struct EnergyReport {
    pub energy: f64,
    pub grad_norm: f64,
    pub dissipation: f64,
    /// `E(0)`, the model density by the shared quadrature.
    pub floor: f64,
    /// Per-state weight-ratio constant relating dissipation and gradient
    /// norm: `D >= gamma^2 ||grad E||^2`.
    pub gamma: f64,
}

/// Gaussian density ratio of a surface: quadrature of the backward heat
/// kernel centered at `(center, t0)` over the time-`t` surface.
pub fn density_ratio(
    surface: &DiscreteSurface,
    center: Vec2,
    t0: f64,
    t: f64,
) -> Result<DensityRecord> {
    if t >= t0 {
        return Err(Error::TimeDomain { t, t0 });
    }
    if let GridTopology::Profile { .. } = surface.topology() {
        if center[0] != 0.0 {
            return Err(Error::InvalidModel(
                "density center must lie on the symmetry axis of a profile surface".into(),
            ));
        }
    }
    let dim = surface.dim();
    let gap = t0 - t;
    let value = (0..surface.len())
        .map(|j| backward_kernel_sq(surface.ambient_sq_dist(j, center), dim, gap) * surface.weights()[j])
        .sum();
    Ok(DensityRecord { center, t0, t, value })
}

/// Gaussian energy `E(v)` of a normal graph over the model.
pub fn energy(model: &ShrinkerModel, section: &NormalSection) -> Result<f64> {
    let m = embed_graph(model, section)?;
    let dim = model.dim();
    Ok(m.points()
        .iter()
        .zip(m.weights())
        .map(|(p, w)| static_weight_sq(dot(*p, *p), dim) * w)
        .sum())
}

/// L2 gradient of the energy: the scalar field
/// `grad E(v) = -<H + x_perp/2, nu_Sigma> rho(y + v) J` on the model grid.
///
/// It satisfies `d/ds E(v + s f)|_0 = <grad E(v), f>` in the discrete
/// `L2(Sigma)` inner product up to the spatial discretization order.
pub fn grad_energy(model: &ShrinkerModel, section: &NormalSection) -> Result<NormalSection> {
    let m = embed_graph(model, section)?;
    let jac = area_jacobian(model, section)?;
    let dim = model.dim();
    let values: Vec<f64> = (0..model.num_nodes())
        .map(|j| {
            let x = m.points()[j];
            let nu_m = m.normals()[j];
            let nu_s = model.directions()[j];
            // x_perp is the projection onto the normal space of the graph
            let shear = dot(x, nu_m);
            let drive = [
                m.curvature()[j][0] + 0.5 * shear * nu_m[0],
                m.curvature()[j][1] + 0.5 * shear * nu_m[1],
            ];
            let rho = static_weight_sq(dot(x, x), dim);
            -dot(drive, nu_s) * rho * jac[j]
        })
        .collect();
    NormalSection::new(model, values, section.tau())
}

/// Dissipation integral `int_M |H + x_perp/2|^2 rho dH^n`; non-negative and
/// zero (to grid tolerance) exactly on shrinkers.
pub fn dissipation(model: &ShrinkerModel, section: &NormalSection) -> Result<f64> {
    let m = embed_graph(model, section)?;
    let dim = model.dim();
    Ok((0..m.len())
        .map(|j| {
            let x = m.points()[j];
            let nu_m = m.normals()[j];
            let shear = dot(x, nu_m);
            let drive = [
                m.curvature()[j][0] + 0.5 * shear * nu_m[0],
                m.curvature()[j][1] + 0.5 * shear * nu_m[1],
            ];
            dot(drive, drive) * static_weight_sq(dot(x, x), dim) * m.weights()[j]
        })
        .sum())
}

/// Per-state constant `gamma = (max_j rho_j J_j)^{-1/2}` from the weight
/// comparison between the dissipation and the gradient norm; logged rather
/// than fixed because only its existence is guaranteed.
pub fn gamma_weight(model: &ShrinkerModel, section: &NormalSection) -> Result<f64> {
    let m = embed_graph(model, section)?;
    let jac = area_jacobian(model, section)?;
    let dim = model.dim();
    let max_w = (0..m.len())
        .map(|j| static_weight_sq(dot(m.points()[j], m.points()[j]), dim) * jac[j])
        .fold(0.0_f64, f64::max);
    Ok(max_w.powf(-0.5))
}

/// Full energy diagnostics for one state.
pub fn energy_report(model: &ShrinkerModel, section: &NormalSection) -> Result<EnergyReport> {
    let e = energy(model, section)?;
    let g = grad_energy(model, section)?;
    let d = dissipation(model, section)?;
    let gamma = gamma_weight(model, section)?;
    Ok(EnergyReport {
        energy: e,
        grad_norm: model.l2_norm(g.values()),
        dissipation: d,
        floor: model.density(),
        gamma,
    })
}

/// Residual series of the rescaled monotonicity identity
/// `dE/dtau = -D`, evaluated by centered differences along a trajectory.
#[derive(Clone, Debug)]
pub struct ResidualSeries {
    /// `r_i = (E_{i+1} - E_{i-1}) / (2 dtau) + D_i` for interior steps.
    pub residuals: Vec<f64>,
    pub max_abs: f64,
    pub rms: f64,
}

/// Compute the monotonicity residual from per-step diagnostics. The step
/// spacing must be uniform; resample non-uniform trajectories first.
pub fn monotonicity_residual(
    taus: &[f64],
    energies: &[f64],
    dissipations: &[f64],
) -> Result<ResidualSeries> {
    let n = taus.len();
    if n < 3 || energies.len() != n || dissipations.len() != n {
        return Err(Error::NonUniformSteps);
    }
    let dtau = taus[1] - taus[0];
    if dtau <= 0.0 {
        return Err(Error::NonUniformSteps);
    }
    for w in taus.windows(2) {
        if ((w[1] - w[0]) - dtau).abs() > 1e-9 * dtau.abs() {
            return Err(Error::NonUniformSteps);
        }
    }
    let residuals: Vec<f64> = (1..n - 1)
        .map(|i| (energies[i + 1] - energies[i - 1]) / (2.0 * dtau) + dissipations[i])
        .collect();
    let max_abs = residuals.iter().fold(0.0_f64, |m, r| m.max(r.abs()));
    let rms = (residuals.iter().map(|r| r * r).sum::<f64>() / residuals.len() as f64).sqrt();
    Ok(ResidualSeries { residuals, max_abs, rms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{make_shrinker, ShrinkerKind};

    const THETA_CIRCLE: f64 = 1.520_346_901_066_280_5; // sqrt(2 pi / e)
    const THETA_SPHERE: f64 = 1.471_517_764_685_769_3; // 4 / e

    #[test]
    fn circle_density_matches_closed_form() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 512).unwrap();
        let rec = density_ratio(m.base(), [0.0, 0.0], 0.0, -1.0).unwrap();
        assert!((rec.value - THETA_CIRCLE).abs() < 1e-8, "got {}", rec.value);
        assert!((m.density() - THETA_CIRCLE).abs() < 1e-8);
    }

    #[test]
    fn sphere_density_matches_closed_form() {
        let m = make_shrinker(ShrinkerKind::RoundSphere, 2, 512).unwrap();
        assert!(
            (m.density() - THETA_SPHERE).abs() < 1e-8,
            "got {} want {THETA_SPHERE}",
            m.density()
        );
    }

    #[test]
    fn energy_floor_is_exact() {
        for (kind, dim) in [(ShrinkerKind::Circle, 1), (ShrinkerKind::RoundSphere, 2)] {
            let m = make_shrinker(kind, dim, 128).unwrap();
            let e0 = energy(&m, &NormalSection::zero(&m, 0.0)).unwrap();
            assert_eq!(e0, m.density());
        }
    }

    #[test]
    fn constant_graph_energy_closed_form() {
        // round circle radius R: E = 2 pi R (4 pi)^{-1/2} exp(-R^2/4)
        let m = make_shrinker(ShrinkerKind::Circle, 1, 512).unwrap();
        for c in [0.1, -0.1] {
            let r = m.radius() + c;
            let expected =
                2.0 * std::f64::consts::PI * r * static_weight_sq(r * r, 1);
            let e = energy(&m, &NormalSection::constant(&m, c, 0.0)).unwrap();
            assert!((e - expected).abs() < 1e-8, "c={c}: {e} vs {expected}");
            // the shrinker is the local maximum along dilations
            assert!(e < m.density());
        }
    }

    #[test]
    fn gradient_vanishes_on_the_model() {
        for (kind, dim, n) in [(ShrinkerKind::Circle, 1, 512), (ShrinkerKind::RoundSphere, 2, 513)]
        {
            let m = make_shrinker(kind, dim, n).unwrap();
            let g = grad_energy(&m, &NormalSection::zero(&m, 0.0)).unwrap();
            let h = m.base().step();
            assert!(
                m.l2_norm(g.values()) < 2.0 * h * h,
                "criticality violated: {}",
                m.l2_norm(g.values())
            );
        }
    }

    #[test]
    fn constant_gradient_sign_opposes_dilation() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 256).unwrap();
        for c in [0.05, -0.05] {
            let g = grad_energy(&m, &NormalSection::constant(&m, c, 0.0)).unwrap();
            let spread = g
                .values()
                .iter()
                .fold((f64::MAX, f64::MIN), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
            assert!(spread.1 - spread.0 < 1e-10, "field should be constant");
            assert!(g.values()[0] * c < 0.0, "sign should oppose the dilation");
        }
    }

    #[test]
    fn dissipation_on_round_circles() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 512).unwrap();
        // shrinker: zero to grid tolerance
        let d0 = dissipation(&m, &NormalSection::zero(&m, 0.0)).unwrap();
        assert!(d0 >= 0.0 && d0 < 1e-6, "d0 = {d0}");
        // closed form at R = 1: 2 pi R (R/2 - 1/R)^2 (4 pi)^{-1/2} e^{-R^2/4}
        let r: f64 = 1.0;
        let expected = 2.0 * std::f64::consts::PI * r * (r / 2.0 - 1.0 / r).powi(2)
            * static_weight_sq(r * r, 1);
        assert!((expected - 0.345_097_111_760_785_7).abs() < 1e-15);
        let d1 = dissipation(&m, &NormalSection::constant(&m, r - m.radius(), 0.0)).unwrap();
        assert!((d1 - expected).abs() < 1e-6, "d1 = {d1} vs {expected}");
    }

    #[test]
    fn dissipation_dominates_gradient_norm() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 256).unwrap();
        for v in [
            NormalSection::constant(&m, -0.15, 0.0),
            NormalSection::from_fn(&m, 0.0, |t| 0.08 * (2.0 * t).cos() + 0.05 * (3.0 * t).sin()),
        ] {
            let rep = energy_report(&m, &v).unwrap();
            let lhs = rep.dissipation;
            let rhs = rep.gamma * rep.gamma * rep.grad_norm * rep.grad_norm;
            assert!(lhs >= rhs * (1.0 - 1e-12), "{lhs} < {rhs}");
        }
    }

    #[test]
    fn density_constant_along_the_shrinking_circle() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 512).unwrap();
        let mut values = Vec::new();
        for t in [-1.0_f64, -0.5, -0.1] {
            let r = (-2.0 * t).sqrt();
            let pts: Vec<Vec2> = m
                .directions()
                .iter()
                .map(|d| [r * d[0], r * d[1]])
                .collect();
            let s = DiscreteSurface::closed_curve(pts).unwrap();
            values.push(density_ratio(&s, [0.0, 0.0], 0.0, t).unwrap().value);
        }
        for v in &values {
            assert!((v - THETA_CIRCLE).abs() < 1e-8, "density {v}");
        }
    }

    #[test]
    fn residual_series_checks_uniformity() {
        let taus = [0.0, 0.1, 0.25];
        assert!(monotonicity_residual(&taus, &[1.0, 1.0, 1.0], &[0.0, 0.0, 0.0]).is_err());
        let taus = [0.0, 0.1, 0.2, 0.3];
        let e = [1.0, 0.9, 0.8, 0.7];
        let d = [1.0, 1.0, 1.0, 1.0];
        let r = monotonicity_residual(&taus, &e, &d).unwrap();
        assert_eq!(r.residuals.len(), 2);
        assert!(r.max_abs < 1e-12);
    }
}
