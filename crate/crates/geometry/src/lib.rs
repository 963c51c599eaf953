//! Point-addition constructions on configurations in the plane and on the
//! unit sphere: safety radii, straight-line and great-circle flows, and the
//! stereographic construction that adds a point near infinity.
//!
//! Every construction prepends its new point and never touches the input
//! points, so forgetting the first point of the output is an exact
//! retraction in both the rational and the double-precision types.

pub mod error;
pub mod figure;
pub mod planar;
pub mod sphere;

pub use error::Error;
pub use figure::{planar_svg, sphere_svg};
pub use planar::{ExactPlanarConfig, PlanarConfig};
pub use sphere::{spherical_distance, SphereConfig};

/// Tolerance for unit-length checks on double-precision vectors.
pub const UNIT_TOLERANCE: f64 = 1e-12;
