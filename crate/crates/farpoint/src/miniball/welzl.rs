//! Smallest enclosing ball by move-to-front Welzl recursion with random
//! restarts and a final enclosure/witness verification pass.

use crate::error::{Error, Result};
use crate::geometry::Vector;
use crate::linalg;
use crate::tol;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A ball with the (at most d+1) input indices that pin it.
#[derive(Clone, Debug)]
pub struct Ball {
    pub center: Vector<f64>,
    pub radius: f64,
    /// Boundary subset whose circumball equals this ball (minimality witness).
    pub support: Vec<usize>,
}

impl Ball {
    pub fn contains(&self, p: &Vector<f64>) -> bool {
        p.dist(&self.center) <= self.radius + tol::BALL_ENCLOSURE
    }
}

/// Smallest enclosing ball of at least two non-coincident points.
/// Deterministic for a fixed permutation seed.
pub fn seb(points: &[Vector<f64>], seed: u64) -> Result<Ball> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints(points.len()));
    }
    let first = &points[0];
    if points.iter().all(|p| p.dist(first) <= 1e-15) {
        return Err(Error::Degenerate(
            "all points coincide; the enclosing ball would have radius 0".into(),
        ));
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    for attempt in 0..8u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        order.shuffle(&mut rng);
        let mut boundary = Vec::new();
        if let Some(ball) = welzl(points, &order, points.len(), &mut boundary) {
            if verify(points, &ball) {
                return Ok(ball);
            }
        }
    }
    Err(Error::Degenerate(
        "enclosing-ball recursion failed verification on all restarts".into(),
    ))
}

fn verify(points: &[Vector<f64>], ball: &Ball) -> bool {
    ball.radius > 0.0 && points.iter().all(|p| ball.contains(p))
}

fn welzl(
    points: &[Vector<f64>],
    order: &[usize],
    n: usize,
    boundary: &mut Vec<usize>,
) -> Option<Ball> {
    let d = points[0].dim();
    if n == 0 || boundary.len() == d + 1 {
        return circumball(points, boundary);
    }
    let idx = order[n - 1];
    let ball = welzl(points, order, n - 1, boundary);
    if let Some(b) = &ball {
        if b.contains(&points[idx]) {
            return ball;
        }
    }
    boundary.push(idx);
    let forced = welzl(points, order, n - 1, boundary);
    boundary.pop();
    forced.or(ball)
}

/// Smallest ball with all the given points on its boundary: circumcenter
/// within their affine hull. None for empty or affinely degenerate subsets.
fn circumball(points: &[Vector<f64>], subset: &[usize]) -> Option<Ball> {
    match subset.len() {
        0 => None,
        1 => Some(Ball {
            center: points[subset[0]].clone(),
            radius: 0.0,
            support: subset.to_vec(),
        }),
        _ => {
            let base = &points[subset[0]];
            let dirs: Vec<Vector<f64>> = subset[1..]
                .iter()
                .map(|&i| points[i].sub(base))
                .collect();
            let k = dirs.len();
            let mut gram = vec![vec![0.0; k]; k];
            let mut rhs = vec![0.0; k];
            for i in 0..k {
                for j in 0..k {
                    gram[i][j] = 2.0 * dirs[i].dot(&dirs[j]);
                }
                rhs[i] = dirs[i].norm_sq();
            }
            let alpha = linalg::solve(gram, rhs)?;
            let mut center = base.clone();
            for (a, dir) in alpha.iter().zip(dirs.iter()) {
                center = center.add(&dir.scale(a));
            }
            let radius = center.dist(base);
            Some(Ball {
                center,
                radius,
                support: subset.to_vec(),
            })
        }
    }
}

/// Circumball of an explicit support subset; exposed for oracle tests.
pub fn circumball_of(points: &[Vector<f64>], subset: &[usize]) -> Option<Ball> {
    circumball(points, subset)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diameter_pair() {
        let pts = [
            Vector::from_slice(&[0.0, 0.0]),
            Vector::from_slice(&[2.0, 0.0]),
        ];
        let b = seb(&pts, 0).unwrap();
        assert!((b.center[0] - 1.0).abs() < 1e-12);
        assert!(b.center[1].abs() < 1e-12);
        assert!((b.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn right_triangle() {
        let pts = [
            Vector::from_slice(&[0.0, 0.0]),
            Vector::from_slice(&[1.0, 0.0]),
            Vector::from_slice(&[0.0, 1.0]),
        ];
        let b = seb(&pts, 1).unwrap();
        assert!((b.center[0] - 0.5).abs() < 1e-9);
        assert!((b.center[1] - 0.5).abs() < 1e-9);
        assert!((b.radius - 0.5f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn too_few_or_degenerate() {
        assert!(seb(&[Vector::from_slice(&[1.0, 0.0])], 0).is_err());
        let same = [
            Vector::from_slice(&[1.0, 1.0]),
            Vector::from_slice(&[1.0, 1.0]),
        ];
        assert!(seb(&same, 0).is_err());
    }

    #[test]
    fn support_is_witness() {
        let pts = [
            Vector::from_slice(&[0.0, 0.0]),
            Vector::from_slice(&[1.0, 0.0]),
            Vector::from_slice(&[0.0, 1.0]),
            Vector::from_slice(&[0.3, 0.3]),
        ];
        let b = seb(&pts, 7).unwrap();
        assert!(b.support.len() <= 3);
        let again = circumball_of(&pts, &b.support).unwrap();
        assert!(again.center.dist(&b.center) < 1e-9);
        assert!((again.radius - b.radius).abs() < 1e-9);
    }
}
