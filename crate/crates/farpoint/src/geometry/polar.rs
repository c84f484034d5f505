use crate::error::{Error, Result};
use crate::geometry::Vector;

use std::f64::consts::TAU;

/// A planar point in standard polar coordinates, angle reduced to [0, 2π).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub phi: f64,
}

/// Reduce an angle to [0, 2π).
pub fn reduce_angle(a: f64) -> f64 {
    let mut r = a % TAU;
    if r < 0.0 {
        r += TAU;
    }
    // `-1e-300 % TAU + TAU` rounds to TAU itself; fold that back to 0.
    if r >= TAU {
        r = 0.0;
    }
    r
}

/// Polar form of a planar vector. The angle of the zero vector is undefined.
pub fn to_polar(v: &Vector<f64>) -> Result<PolarPoint> {
    if v.dim() != 2 {
        return Err(Error::DimMismatch(v.dim(), 2));
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(PolarPoint {
        r: v.norm(),
        phi: reduce_angle(v[1].atan2(v[0])),
    })
}

pub fn from_polar(p: &PolarPoint) -> Vector<f64> {
    Vector::from_slice(&[p.r * p.phi.cos(), p.r * p.phi.sin()])
}
