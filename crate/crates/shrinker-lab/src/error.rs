//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("grid mismatch: section was built for a different model grid")]
    GridMismatch,

    #[error("graph overflow at node {node}: |v| = {value:.6e} exceeds bound {bound:.6e}")]
    GraphOverflow { node: usize, value: f64, bound: f64 },

    #[error("excessive tilt at node {node}: <nu_Sigma, nu_M> = {tilt:.6e} <= 0.1")]
    ExcessiveTilt { node: usize, tilt: f64 },

    #[error("degenerate parameterization at node {node}: speed = {speed:.6e}")]
    DegenerateNode { node: usize, speed: f64 },

    #[error("time domain error: sample time t = {t} must precede center time t0 = {t0}")]
    TimeDomain { t: f64, t0: f64 },

    #[error("trajectory steps are not uniform: resample before computing residuals")]
    NonUniformSteps,

    #[error("enclosed area is not strictly decreasing (step {step})")]
    NonMonotoneArea { step: usize },

    #[error("self-intersection detected at t = {t:.6} (segments {a} and {b})")]
    SelfIntersection { t: f64, a: usize, b: usize },

    #[error("fit rejected: {0}")]
    FitRejected(String),

    #[error("experiment refused: {0}")]
    ExperimentRefused(String),

    #[error("not a graph over the model: {0}")]
    NotAGraph(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
