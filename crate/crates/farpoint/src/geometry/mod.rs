//! Dimension-generic vectors and validated point sets on the unit sphere,
//! plus planar polar-coordinate helpers.

mod pointset;
mod polar;
mod vector;

pub use pointset::{PointSet, ValidationReport};
pub use polar::{from_polar, reduce_angle, to_polar, PolarPoint};
pub use vector::Vector;
