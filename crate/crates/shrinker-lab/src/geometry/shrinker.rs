//! Compact model shrinkers and normal-graph height fields over them.

use super::surface::DiscreteSurface;
use super::weight::static_weight_sq;
use super::{dot, Vec2};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Built-in model shrinkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShrinkerKind {
    Circle,
    RoundSphere,
}

impl ShrinkerKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ShrinkerKind::Circle => "circle",
            ShrinkerKind::RoundSphere => "round-sphere",
        }
    }
}

/// Identity of a model grid, carried by sections so that mismatched
/// model/section pairs are rejected at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub kind: ShrinkerKind,
    pub dim: usize,
    pub num_nodes: usize,
}

/// A compact self-shrinker (`H = -x_perp/2`) of radius `sqrt(2n)`, sampled on
/// a uniform parameter grid, with its Gaussian density and the graph bound
/// used to police normal graphs over it.
#[derive(Clone, Debug)]
pub struct ShrinkerModel {
    kind: ShrinkerKind,
    dim: usize,
    radius: f64,
    graph_bound: f64,
    angles: Vec<f64>,
    directions: Vec<Vec2>,
    base: DiscreteSurface,
    density: f64,
    residual_normal: Vec<f64>,
}

/// Construct a model shrinker.
///
/// `kind = Circle` requires `dim = 1`; `kind = RoundSphere` requires
/// `dim >= 2` and samples the rotationally symmetric meridian. `num_nodes`
/// must be at least 16.
pub fn make_shrinker(kind: ShrinkerKind, dim: usize, num_nodes: usize) -> Result<ShrinkerModel> {
    if num_nodes < 16 {
        return Err(Error::InvalidModel(format!(
            "grid size {num_nodes} below the minimum of 16"
        )));
    }
    match kind {
        ShrinkerKind::Circle if dim != 1 => {
            return Err(Error::InvalidModel(format!(
                "a circle shrinker has intrinsic dimension 1, got {dim}"
            )))
        }
        ShrinkerKind::RoundSphere if dim < 2 => {
            return Err(Error::InvalidModel(format!(
                "a round sphere shrinker needs intrinsic dimension >= 2, got {dim}"
            )))
        }
        _ => {}
    }

    let radius = (2.0 * dim as f64).sqrt();
    let (angles, directions): (Vec<f64>, Vec<Vec2>) = match kind {
        ShrinkerKind::Circle => (0..num_nodes)
            .map(|j| {
                let th = 2.0 * PI * j as f64 / num_nodes as f64;
                (th, [th.cos(), th.sin()])
            })
            .unzip(),
        ShrinkerKind::RoundSphere => (0..num_nodes)
            .map(|j| {
                let phi = PI * j as f64 / (num_nodes - 1) as f64;
                (phi, [phi.sin(), phi.cos()])
            })
            .unzip(),
    };

    let points: Vec<Vec2> = directions.iter().map(|d| [radius * d[0], radius * d[1]]).collect();
    let base = match kind {
        ShrinkerKind::Circle => DiscreteSurface::closed_curve(points)?,
        ShrinkerKind::RoundSphere => DiscreteSurface::profile(points, dim)?,
    };

    let density = base
        .points()
        .iter()
        .zip(base.weights())
        .map(|(p, w)| static_weight_sq(dot(*p, *p), dim) * w)
        .sum();

    // Discrete shrinker residual <H + x_perp/2, nu> on the model's own
    // samples; the rescaled flow subtracts it so the sampled model is an
    // exact fixed point of the discrete dynamics.
    let residual_normal: Vec<f64> = (0..num_nodes)
        .map(|j| {
            let nu = base.normals()[j];
            let x = base.points()[j];
            dot(base.curvature()[j], nu) + 0.5 * dot(x, nu)
        })
        .collect();

    Ok(ShrinkerModel {
        kind,
        dim,
        radius,
        graph_bound: 0.3 * radius,
        angles,
        directions,
        base,
        density,
        residual_normal,
    })
}

impl ShrinkerModel {
    pub fn kind(&self) -> ShrinkerKind {
        self.kind
    }

    /// Intrinsic dimension n (ambient dimension is n + 1).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_nodes(&self) -> usize {
        self.angles.len()
    }

    /// Shrinker radius `sqrt(2n)`.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Gaussian density of the model, computed by the same quadrature used
    /// for the energy functional.
    pub fn density(&self) -> f64 {
        self.density
    }

    /// Maximum admissible |v| for normal graphs (default `0.3 sqrt(2n)`).
    pub fn graph_bound(&self) -> f64 {
        self.graph_bound
    }

    pub fn set_graph_bound(&mut self, sigma: f64) {
        assert!(sigma > 0.0 && sigma < self.radius);
        self.graph_bound = sigma;
    }

    /// Parameter angles of the grid nodes.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// Closed-form unit outward normals (radial directions) at the nodes.
    pub fn directions(&self) -> &[Vec2] {
        &self.directions
    }

    /// The sampled model surface with its discrete cache.
    pub fn base(&self) -> &DiscreteSurface {
        &self.base
    }

    /// Discrete shrinker residual on the model samples (normal component).
    pub fn residual_normal(&self) -> &[f64] {
        &self.residual_normal
    }

    pub fn grid(&self) -> GridSpec {
        GridSpec { kind: self.kind, dim: self.dim, num_nodes: self.num_nodes() }
    }

    /// Closed-form position on the shrinker at parameter angle `a`.
    pub fn position_at(&self, a: f64) -> Vec2 {
        match self.kind {
            ShrinkerKind::Circle => [self.radius * a.cos(), self.radius * a.sin()],
            ShrinkerKind::RoundSphere => [self.radius * a.sin(), self.radius * a.cos()],
        }
    }

    /// Closed-form outward unit normal at parameter angle `a`.
    pub fn normal_at(&self, a: f64) -> Vec2 {
        match self.kind {
            ShrinkerKind::Circle => [a.cos(), a.sin()],
            ShrinkerKind::RoundSphere => [a.sin(), a.cos()],
        }
    }

    /// Closed-form mean curvature magnitude `n / R` (the vector points inward).
    pub fn curvature_magnitude(&self) -> f64 {
        self.dim as f64 / self.radius
    }

    /// Quadrature weights of the model surface (the reference measure for
    /// all L2 inner products over Sigma).
    pub fn weights(&self) -> &[f64] {
        self.base.weights()
    }

    /// L2(Sigma) inner product of two node fields.
    pub fn inner(&self, a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .zip(self.base.weights())
            .map(|((x, y), w)| x * y * w)
            .sum()
    }

    /// L2(Sigma) norm of a node field.
    pub fn l2_norm(&self, a: &[f64]) -> f64 {
        self.inner(a, a).sqrt()
    }

    /// Node fields spanning the dilation and translation eigenmodes of the
    /// linearized rescaled flow; these are the unstable directions a tracked
    /// gauge projects away. They are mutually L2(Sigma)-orthogonal.
    pub fn unstable_modes(&self) -> Vec<Vec<f64>> {
        match self.kind {
            ShrinkerKind::Circle => vec![
                vec![1.0; self.num_nodes()],
                self.angles.iter().map(|a| a.cos()).collect(),
                self.angles.iter().map(|a| a.sin()).collect(),
            ],
            // rotational symmetry leaves dilation and axis translation
            ShrinkerKind::RoundSphere => vec![
                vec![1.0; self.num_nodes()],
                self.angles.iter().map(|a| a.cos()).collect(),
            ],
        }
    }
}

/// Scalar normal-graph height field over a model grid at rescaled time tau.
#[derive(Clone, Debug)]
pub struct NormalSection {
    grid: GridSpec,
    tau: f64,
    values: Vec<f64>,
}

impl NormalSection {
    pub fn new(model: &ShrinkerModel, values: Vec<f64>, tau: f64) -> Result<Self> {
        if values.len() != model.num_nodes() {
            return Err(Error::GridMismatch);
        }
        Ok(Self { grid: model.grid(), tau, values })
    }

    pub fn zero(model: &ShrinkerModel, tau: f64) -> Self {
        Self { grid: model.grid(), tau, values: vec![0.0; model.num_nodes()] }
    }

    pub fn constant(model: &ShrinkerModel, c: f64, tau: f64) -> Self {
        Self { grid: model.grid(), tau, values: vec![c; model.num_nodes()] }
    }

    /// Sample a closed-form height profile at the grid angles.
    pub fn from_fn(model: &ShrinkerModel, tau: f64, f: impl Fn(f64) -> f64) -> Self {
        Self {
            grid: model.grid(),
            tau,
            values: model.angles().iter().map(|&a| f(a)).collect(),
        }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn set_tau(&mut self, tau: f64) {
        self.tau = tau;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Check compatibility with a model and the graph bound; returns the
    /// offending node on overflow.
    pub fn check_admissible(&self, model: &ShrinkerModel) -> Result<()> {
        if self.grid != model.grid() {
            return Err(Error::GridMismatch);
        }
        let bound = model.graph_bound();
        for (j, v) in self.values.iter().enumerate() {
            if !v.is_finite() || v.abs() >= bound {
                return Err(Error::GraphOverflow { node: j, value: *v, bound });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_model_basics() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 256).unwrap();
        assert!((m.radius() - 2.0_f64.sqrt()).abs() < 1e-15);
        for p in m.base().points() {
            assert!((dot(*p, *p).sqrt() - m.radius()).abs() < 1e-13);
        }
        for nu in m.base().normals() {
            assert!((dot(*nu, *nu) - 1.0).abs() < 1e-13);
        }
        // compact shrinkers are denser than the plane
        assert!(m.density() > 1.0);
    }

    #[test]
    fn sphere_model_basics() {
        let m = make_shrinker(ShrinkerKind::RoundSphere, 2, 256).unwrap();
        assert!((m.radius() - 2.0).abs() < 1e-15);
        assert!((m.curvature_magnitude() - 1.0).abs() < 1e-15);
        for p in m.base().points() {
            assert!((dot(*p, *p).sqrt() - 2.0).abs() < 1e-13);
        }
        assert!(m.density() > 1.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_shrinker(ShrinkerKind::Circle, 2, 256).is_err());
        assert!(make_shrinker(ShrinkerKind::RoundSphere, 1, 256).is_err());
        assert!(make_shrinker(ShrinkerKind::Circle, 1, 8).is_err());
    }

    #[test]
    fn unstable_modes_are_orthogonal() {
        for m in [
            make_shrinker(ShrinkerKind::Circle, 1, 128).unwrap(),
            make_shrinker(ShrinkerKind::RoundSphere, 2, 129).unwrap(),
        ] {
            let modes = m.unstable_modes();
            for i in 0..modes.len() {
                for k in i + 1..modes.len() {
                    let ip = m.inner(&modes[i], &modes[k]);
                    let scale = m.l2_norm(&modes[i]) * m.l2_norm(&modes[k]);
                    assert!(ip.abs() < 1e-10 * scale, "modes {i},{k}: {ip}");
                }
            }
        }
    }

    #[test]
    fn graph_bound_enforced() {
        let m = make_shrinker(ShrinkerKind::Circle, 1, 64).unwrap();
        let v = NormalSection::constant(&m, 0.5, 0.0);
        match v.check_admissible(&m) {
            Err(Error::GraphOverflow { node, .. }) => assert_eq!(node, 0),
            other => panic!("expected graph overflow, got {other:?}"),
        }
    }
}
