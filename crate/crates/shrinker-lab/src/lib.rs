//! shrinker-lab: a numerical laboratory for mean curvature flow near compact
//! self-shrinkers.
//!
//! The library evolves hypersurfaces as normal graphs over model shrinkers
//! under the rescaled flow, monitors the Gaussian density/energy and its
//! dissipation, locates extinction points of physical flows, runs parabolic
//! rescaling experiments, and fits Lojasiewicz exponents and convergence-rate
//! bounds along trajectories.

pub mod energy;
pub mod error;
pub mod geometry;
pub mod interp;
pub(crate) mod tridiag;

pub use error::{Error, Result};
