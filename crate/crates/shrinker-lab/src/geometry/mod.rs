//! Model shrinkers, discrete surfaces, normal graphs, and Gaussian weights.
//!
//! Everything here is codimension one: closed curves in the plane and
//! rotationally symmetric hypersurfaces of revolution, both represented by
//! point samples in a two-dimensional working plane. For a curve the working
//! plane is the ambient plane itself; for a surface of revolution it is the
//! meridian half-plane `(s, z)` with `s` the distance from the symmetry axis.

mod graph;
mod shrinker;
mod surface;
mod weight;

pub use graph::{area_jacobian, embed_graph, radial_graph};
pub use shrinker::{make_shrinker, GridSpec, NormalSection, ShrinkerKind, ShrinkerModel};
pub use surface::{mean_curvature, DiscreteSurface, GridTopology};
pub use weight::{backward_kernel_sq, gaussian_weight, static_weight_sq, unit_sphere_area};

pub type Vec2 = [f64; 2];

#[inline]
pub(crate) fn dot(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

#[inline]
pub(crate) fn norm(a: Vec2) -> f64 {
    dot(a, a).sqrt()
}

#[inline]
pub(crate) fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
pub(crate) fn scale(a: Vec2, c: f64) -> Vec2 {
    [a[0] * c, a[1] * c]
}
