//! Discrete hypersurfaces with a finite-difference geometry cache.

use super::{dot, norm, scale, sub, unit_sphere_area, Vec2};
use crate::error::{Error, Result};
use std::f64::consts::PI;

const SPEED_FLOOR: f64 = 1e-13;

/// Grid connectivity of a sampled hypersurface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridTopology {
    /// Closed curve in the plane on a periodic parameter grid.
    ClosedCurve,
    /// Rotationally symmetric hypersurface in `R^{dim+1}` sampled along its
    /// meridian; the parameter runs from the north pole to the south pole and
    /// the working plane is `(s, z)` with `s >= 0` the distance to the axis.
    Profile { dim: usize },
}

/// Point samples of a hypersurface together with tangents, outward unit
/// normals, mean curvature vectors and quadrature weights, all computed by
/// centered second-order finite differences on the parameter grid.
#[derive(Clone, Debug)]
pub struct DiscreteSurface {
    topology: GridTopology,
    step: f64,
    points: Vec<Vec2>,
    speeds: Vec<f64>,
    tangents: Vec<Vec2>,
    normals: Vec<Vec2>,
    curvature: Vec<Vec2>,
    weights: Vec<f64>,
}

impl DiscreteSurface {
    /// Closed curve through `points` in order; the parameter grid is uniform
    /// with period `2 pi`. Normals point outward regardless of orientation.
    pub fn closed_curve(points: Vec<Vec2>) -> Result<Self> {
        let n = points.len();
        if n < 8 {
            return Err(Error::InvalidModel(format!(
                "closed curve needs at least 8 nodes, got {n}"
            )));
        }
        let step = 2.0 * PI / n as f64;
        let orientation = if signed_area(&points) >= 0.0 { 1.0 } else { -1.0 };

        let mut s = Self {
            topology: GridTopology::ClosedCurve,
            step,
            points,
            speeds: Vec::new(),
            tangents: Vec::new(),
            normals: Vec::new(),
            curvature: Vec::new(),
            weights: Vec::new(),
        };
        s.build_cache(orientation)?;
        Ok(s)
    }

    /// Meridian profile of a rotationally symmetric hypersurface of intrinsic
    /// dimension `dim >= 2`. Endpoints must sit on the axis (`s = 0`) with the
    /// first node at the north pole (larger `z`).
    pub fn profile(mut points: Vec<Vec2>, dim: usize) -> Result<Self> {
        let n = points.len();
        if dim < 2 {
            return Err(Error::InvalidModel(
                "profile surfaces need intrinsic dimension >= 2".into(),
            ));
        }
        if n < 8 {
            return Err(Error::InvalidModel(format!(
                "profile needs at least 8 nodes, got {n}"
            )));
        }
        let span = points.iter().map(|p| norm(*p)).fold(0.0, f64::max);
        for j in [0, n - 1] {
            if points[j][0].abs() > 1e-9 * span.max(1.0) {
                return Err(Error::InvalidModel(format!(
                    "profile endpoint {j} is off the symmetry axis (s = {})",
                    points[j][0]
                )));
            }
            points[j][0] = 0.0;
        }
        if points[0][1] <= points[n - 1][1] {
            return Err(Error::InvalidModel(
                "profile must run from the north pole (larger z) to the south pole".into(),
            ));
        }
        for (j, p) in points.iter().enumerate().take(n - 1).skip(1) {
            if p[0] <= 0.0 {
                return Err(Error::DegenerateNode { node: j, speed: p[0] });
            }
        }
        let step = PI / (n - 1) as f64;
        let mut s = Self {
            topology: GridTopology::Profile { dim },
            step,
            points,
            speeds: Vec::new(),
            tangents: Vec::new(),
            normals: Vec::new(),
            curvature: Vec::new(),
            weights: Vec::new(),
        };
        s.build_cache(1.0)?;
        Ok(s)
    }

    /// Same topology, new points.
    pub fn with_points(&self, points: Vec<Vec2>) -> Result<Self> {
        match self.topology {
            GridTopology::ClosedCurve => Self::closed_curve(points),
            GridTopology::Profile { dim } => Self::profile(points, dim),
        }
    }

    fn build_cache(&mut self, orientation: f64) -> Result<()> {
        let n = self.points.len();
        let h = self.step;
        self.speeds = vec![0.0; n];
        self.tangents = vec![[0.0; 2]; n];
        self.normals = vec![[0.0; 2]; n];
        self.curvature = vec![[0.0; 2]; n];
        self.weights = vec![0.0; n];

        for j in 0..n {
            let (pm, pp) = self.neighbors(j);
            let p = self.points[j];
            let xu = scale(sub(pp, pm), 1.0 / (2.0 * h));
            let xuu = [
                (pp[0] - 2.0 * p[0] + pm[0]) / (h * h),
                (pp[1] - 2.0 * p[1] + pm[1]) / (h * h),
            ];
            let speed = norm(xu);
            if speed < SPEED_FLOOR {
                return Err(Error::DegenerateNode { node: j, speed });
            }
            let t = scale(xu, 1.0 / speed);

            // quadrature weights use a fourth-order speed so the measure,
            // not the second-order stencils, limits quadrature accuracy
            let pm2 = self.wrapped(j as isize - 2);
            let pp2 = self.wrapped(j as isize + 2);
            let xu4 = [
                (8.0 * (pp[0] - pm[0]) - (pp2[0] - pm2[0])) / (12.0 * h),
                (8.0 * (pp[1] - pm[1]) - (pp2[1] - pm2[1])) / (12.0 * h),
            ];
            let wspeed = norm(xu4);
            // normal component of the parameter acceleration gives the
            // curvature vector of the profile/curve
            let a_n = sub(xuu, scale(t, dot(xuu, t)));
            let kappa_prof = scale(a_n, 1.0 / (speed * speed));

            self.speeds[j] = speed;
            self.tangents[j] = t;

            match self.topology {
                GridTopology::ClosedCurve => {
                    self.normals[j] = scale([t[1], -t[0]], orientation);
                    self.curvature[j] = kappa_prof;
                    self.weights[j] = h * wspeed;
                }
                GridTopology::Profile { dim } => {
                    let nu = [-t[1], t[0]];
                    self.normals[j] = nu;
                    let pole = j == 0 || j == n - 1;
                    self.curvature[j] = if pole {
                        // all principal curvatures coincide on the axis
                        scale(kappa_prof, dim as f64)
                    } else {
                        let rot = nu[0] / p[0];
                        sub(kappa_prof, scale(nu, (dim - 1) as f64 * rot))
                    };
                    let c = gregory_weight(j, n);
                    let ring = unit_sphere_area(dim - 1) * p[0].powi(dim as i32 - 1);
                    self.weights[j] = c * h * wspeed * ring;
                }
            }
        }
        Ok(())
    }

    fn neighbors(&self, j: usize) -> (Vec2, Vec2) {
        (self.wrapped(j as isize - 1), self.wrapped(j as isize + 1))
    }

    /// Point at a signed grid index: periodic wrap for curves, even
    /// reflection across the poles (mirror in s) for profiles.
    fn wrapped(&self, i: isize) -> Vec2 {
        let n = self.points.len() as isize;
        match self.topology {
            GridTopology::ClosedCurve => self.points[i.rem_euclid(n) as usize],
            GridTopology::Profile { .. } => {
                let mirror = |p: Vec2| [-p[0], p[1]];
                if i < 0 {
                    mirror(self.points[(-i) as usize])
                } else if i >= n {
                    mirror(self.points[(2 * (n - 1) - i) as usize])
                } else {
                    self.points[i as usize]
                }
            }
        }
    }

    pub fn topology(&self) -> GridTopology {
        self.topology
    }

    /// Intrinsic dimension of the hypersurface.
    pub fn dim(&self) -> usize {
        match self.topology {
            GridTopology::ClosedCurve => 1,
            GridTopology::Profile { dim } => dim,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Parameter grid spacing.
    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn points(&self) -> &[Vec2] {
        &self.points
    }

    pub fn speeds(&self) -> &[f64] {
        &self.speeds
    }

    pub fn tangents(&self) -> &[Vec2] {
        &self.tangents
    }

    /// Outward unit normals in the working plane.
    pub fn normals(&self) -> &[Vec2] {
        &self.normals
    }

    /// Mean curvature vectors; for a round hypersurface of radius R this is
    /// `-(dim/R)` times the outward normal.
    pub fn curvature(&self) -> &[Vec2] {
        &self.curvature
    }

    /// Quadrature weights for the surface measure: `sum f_j w_j` approximates
    /// the integral of `f` over the hypersurface.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Total surface measure (length of a curve, area of a surface).
    pub fn measure(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Squared ambient distance from node `j` to a center in the working
    /// plane. Profile surfaces require the center on the axis (`s = 0`).
    pub fn ambient_sq_dist(&self, j: usize, center: Vec2) -> f64 {
        let p = self.points[j];
        let d = sub(p, center);
        dot(d, d)
    }

    /// Enclosed region measure: area inside a closed curve, volume inside a
    /// surface of revolution.
    pub fn enclosed(&self) -> f64 {
        match self.topology {
            GridTopology::ClosedCurve => signed_area(&self.points).abs(),
            GridTopology::Profile { dim } => {
                // slice by n-balls of radius s(z): V = (omega_{n-1}/n) int s^n (-z') du
                let n = self.points.len();
                let h = self.step;
                let mut v = 0.0;
                for j in 0..n {
                    let (pm, pp) = self.neighbors(j);
                    let zu = (pp[1] - pm[1]) / (2.0 * h);
                    let s = self.points[j][0];
                    v += gregory_weight(j, n) * h * s.powi(dim as i32) * (-zu);
                }
                unit_sphere_area(dim - 1) / dim as f64 * v
            }
        }
    }

    /// Centroid of the enclosed region (curves) or its on-axis point
    /// `(0, z)` (profiles).
    pub fn region_centroid(&self) -> Vec2 {
        match self.topology {
            GridTopology::ClosedCurve => {
                let pts = &self.points;
                let n = pts.len();
                let mut a = 0.0;
                let mut cx = 0.0;
                let mut cy = 0.0;
                for j in 0..n {
                    let p = pts[j];
                    let q = pts[(j + 1) % n];
                    let cross = p[0] * q[1] - q[0] * p[1];
                    a += cross;
                    cx += (p[0] + q[0]) * cross;
                    cy += (p[1] + q[1]) * cross;
                }
                a *= 0.5;
                [cx / (6.0 * a), cy / (6.0 * a)]
            }
            GridTopology::Profile { dim } => {
                let n = self.points.len();
                let h = self.step;
                let mut v = 0.0;
                let mut zm = 0.0;
                for j in 0..n {
                    let (pm, pp) = self.neighbors(j);
                    let zu = (pp[1] - pm[1]) / (2.0 * h);
                    let s = self.points[j][0];
                    let contrib = gregory_weight(j, n) * h * s.powi(dim as i32) * (-zu);
                    v += contrib;
                    zm += contrib * self.points[j][1];
                }
                [0.0, zm / v]
            }
        }
    }

    /// First self-intersecting segment pair of a closed curve, if any.
    pub fn self_intersection(&self) -> Option<(usize, usize)> {
        if self.topology != GridTopology::ClosedCurve {
            return None;
        }
        let pts = &self.points;
        let n = pts.len();
        for i in 0..n {
            let a0 = pts[i];
            let a1 = pts[(i + 1) % n];
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue; // adjacent through the wrap
                }
                let b0 = pts[j];
                let b1 = pts[(j + 1) % n];
                if segments_cross(a0, a1, b0, b1) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Mean curvature vector field of a discrete surface.
///
/// Degenerate parameterizations are rejected when the surface is built, so
/// this accessor cannot fail; it exists to mirror the operation vocabulary.
pub fn mean_curvature(surface: &DiscreteSurface) -> &[Vec2] {
    surface.curvature()
}

fn signed_area(points: &[Vec2]) -> f64 {
    let n = points.len();
    let mut a = 0.0;
    for j in 0..n {
        let p = points[j];
        let q = points[(j + 1) % n];
        a += p[0] * q[1] - q[0] * p[1];
    }
    0.5 * a
}

fn segments_cross(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2) -> bool {
    let d = |p: Vec2, q: Vec2, r: Vec2| (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    let d1 = d(a0, a1, b0);
    let d2 = d(a0, a1, b1);
    let d3 = d(b0, b1, a0);
    let d4 = d(b0, b1, a1);
    (d1 * d2 < 0.0) && (d3 * d4 < 0.0)
}

/// Fourth-order end-corrected trapezoid coefficient (Gregory rule) for node
/// `j` of `n`. Interior weights are 1; the profile integrands vanish at the
/// poles, so the end weights only matter through the near-pole nodes.
fn gregory_weight(j: usize, n: usize) -> f64 {
    let k = j.min(n - 1 - j);
    match k {
        0 => 3.0 / 8.0,
        1 => 7.0 / 6.0,
        2 => 23.0 / 24.0,
        _ => 1.0,
    }
}
