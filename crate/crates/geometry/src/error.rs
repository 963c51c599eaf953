use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("at least {min} points required, got {n}")]
    TooFewPoints { n: usize, min: usize },

    #[error("points {i} and {j} coincide")]
    CoincidentPoints { i: usize, j: usize },

    #[error("coordinates must be finite")]
    NonFinite,

    #[error("point {index} is off the unit sphere (|length - 1| = {deviation:e})")]
    OffSphere { index: usize, deviation: f64 },

    #[error("direction vector is not unit length")]
    NonUnitDirection,

    #[error("direction is not tangent to the sphere at the chosen point")]
    NotTangent,

    #[error("point index {index} is out of range for {n} points")]
    PointOutOfRange { index: usize, n: usize },

    #[error("the flow time is irrational for this configuration, so the exact type cannot hold the new point; use the double-precision type")]
    IrrationalFlowTime,
}

pub type Result<T> = std::result::Result<T, Error>;
