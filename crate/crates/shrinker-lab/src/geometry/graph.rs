//! Normal-graph embedding over a model shrinker and the area Jacobian.

use super::shrinker::{NormalSection, ShrinkerKind, ShrinkerModel};
use super::surface::DiscreteSurface;
use super::Vec2;
use crate::error::{Error, Result};
use crate::interp::PeriodicSpline;
use std::f64::consts::PI;

/// Embed a normal graph: `x_j = y_j + v_j nu_Sigma(y_j)`.
///
/// The model normals are radial, so the embedded surface is the radial graph
/// `r = R + v` sampled at the model grid; its geometry cache is rebuilt by
/// second-order finite differences.
pub fn embed_graph(model: &ShrinkerModel, section: &NormalSection) -> Result<DiscreteSurface> {
    section.check_admissible(model)?;
    let r0 = model.radius();
    let points: Vec<Vec2> = model
        .directions()
        .iter()
        .zip(section.values())
        .map(|(d, v)| {
            let r = r0 + v;
            [r * d[0], r * d[1]]
        })
        .collect();
    match model.kind() {
        ShrinkerKind::Circle => DiscreteSurface::closed_curve(points),
        ShrinkerKind::RoundSphere => DiscreteSurface::profile(points, model.dim()),
    }
}

/// Per-node area Jacobian `J` of the graph map: `int_M f dH^n` equals
/// `int_Sigma f(y + v nu) J dH^n` in the discrete quadrature, and `J = 1`
/// when `v = 0`.
pub fn area_jacobian(model: &ShrinkerModel, section: &NormalSection) -> Result<Vec<f64>> {
    let embedded = embed_graph(model, section)?;
    let base = model.base();
    let r0 = model.radius();
    let dim = model.dim();
    let jac: Vec<f64> = (0..model.num_nodes())
        .map(|j| {
            let speed_ratio = embedded.speeds()[j] / base.speeds()[j];
            // distance-from-axis ratio extends as r/R through the poles
            let ring_ratio = (r0 + section.values()[j]) / r0;
            speed_ratio * ring_ratio.powi(dim as i32 - 1)
        })
        .collect();
    for (j, v) in jac.iter().enumerate() {
        if !(*v > 0.0) {
            return Err(Error::DegenerateNode { node: j, speed: *v });
        }
    }
    Ok(jac)
}

/// Express a closed curve as a radial graph over a circle model: recovers
/// `v(theta_j) = r(theta_j) - R` by periodic cubic interpolation of the
/// curve's polar representation. Fails if the curve is not star-shaped about
/// the origin or leaves the admissible tube.
pub fn radial_graph(model: &ShrinkerModel, points: &[Vec2], tau: f64) -> Result<NormalSection> {
    if model.kind() != ShrinkerKind::Circle {
        return Err(Error::NotAGraph(
            "radial graph extraction is implemented for circle models".into(),
        ));
    }
    let n = points.len();
    if n < 8 {
        return Err(Error::NotAGraph(format!("need at least 8 points, got {n}")));
    }

    let mut angles = Vec::with_capacity(n);
    let mut radii = Vec::with_capacity(n);
    for p in points {
        let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
        if r < 1e-12 {
            return Err(Error::NotAGraph("curve passes through the origin".into()));
        }
        angles.push(p[1].atan2(p[0]));
        radii.push(r);
    }

    // unwrap the polar angle to a continuous branch
    let mut unwrapped = vec![angles[0]];
    for k in 1..n {
        let mut d = angles[k] - angles[k - 1];
        while d <= -PI {
            d += 2.0 * PI;
        }
        while d > PI {
            d -= 2.0 * PI;
        }
        unwrapped.push(unwrapped[k - 1] + d);
    }
    if unwrapped.windows(2).all(|w| w[1] < w[0]) {
        unwrapped.reverse();
        radii.reverse();
    }
    let total = unwrapped[n - 1] - unwrapped[0];
    let monotone = unwrapped.windows(2).all(|w| w[1] > w[0]);
    if !monotone || total <= 2.0 * PI * (1.0 - 20.0 / n as f64) || total >= 2.0 * PI {
        return Err(Error::NotAGraph(
            "curve is not star-shaped about the origin".into(),
        ));
    }

    let spline = PeriodicSpline::new(unwrapped, radii, 2.0 * PI);
    let r0 = model.radius();
    let values: Vec<f64> = model.angles().iter().map(|&th| spline.eval(th) - r0).collect();
    let section = NormalSection::new(model, values, tau)?;
    section.check_admissible(model)?;
    Ok(section)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::make_shrinker;

    #[test]
    fn zero_section_reproduces_model_bitwise() {
        for (kind, dim) in [(ShrinkerKind::Circle, 1), (ShrinkerKind::RoundSphere, 2)] {
            let m = make_shrinker(kind, dim, 64).unwrap();
            let v = NormalSection::zero(&m, 0.0);
            let s = embed_graph(&m, &v).unwrap();
            for (p, q) in s.points().iter().zip(m.base().points()) {
                assert_eq!(p, q);
            }
        }
    }

    #[test]
    fn constant_section_is_round() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 64).unwrap();
        let c = 0.2;
        let v = NormalSection::constant(&m, c, 0.0);
        let s = embed_graph(&m, &v).unwrap();
        for p in s.points() {
            let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
            assert!((r - (m.radius() + c)).abs() < 1e-14);
        }
    }

    #[test]
    fn jacobian_identity_and_ratio() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 128).unwrap();
        let j0 = area_jacobian(&m, &NormalSection::zero(&m, 0.0)).unwrap();
        for v in &j0 {
            assert_eq!(*v, 1.0);
        }
        let c = 0.1;
        let jc = area_jacobian(&m, &NormalSection::constant(&m, c, 0.0)).unwrap();
        let expected = (m.radius() + c) / m.radius();
        for v in &jc {
            assert!((v - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn overflow_names_the_node() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 64).unwrap();
        let mut vals = vec![0.0; 64];
        vals[17] = 0.9 * m.radius();
        let v = NormalSection::new(&m, vals, 0.0).unwrap();
        match embed_graph(&m, &v) {
            Err(Error::GraphOverflow { node, .. }) => assert_eq!(node, 17),
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn radial_graph_roundtrip() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 256).unwrap();
        let v = NormalSection::from_fn(&m, 0.0, |t| 0.05 * (2.0 * t).cos() + 0.02 * (3.0 * t).sin());
        let s = embed_graph(&m, &v).unwrap();
        let back = radial_graph(&m, s.points(), 0.0).unwrap();
        let err: f64 = v
            .values()
            .iter()
            .zip(back.values())
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()));
        assert!(err < 1e-9, "roundtrip error {err}");
    }
}
