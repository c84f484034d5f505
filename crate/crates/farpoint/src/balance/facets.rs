//! Brute-force facet enumeration for the interior-origin case: every
//! d-subset whose affine hull supports the hull on one side contributes its
//! hyperplane distance. O(n^d * n) is accepted at desk scale.

use crate::geometry::Vector;
use crate::linalg;
use crate::tol;

/// Minimum distance from the origin to a facet hyperplane of `conv(points)`.
/// Returns `None` when no supporting d-subset exists (degenerate input).
pub fn min_facet_distance(points: &[Vector<f64>]) -> Option<f64> {
    let d = points[0].dim();
    let n = points.len();
    if n < d {
        return None;
    }
    let mut best: Option<f64> = None;
    let mut subset = (0..d).collect::<Vec<usize>>();
    loop {
        if let Some(dist) = facet_distance(points, &subset) {
            best = Some(best.map_or(dist, |b: f64| b.min(dist)));
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    best
}

fn facet_distance(points: &[Vector<f64>], subset: &[usize]) -> Option<f64> {
    let base = &points[subset[0]];
    let dirs: Vec<Vec<f64>> = subset[1..]
        .iter()
        .map(|&i| points[i].sub(base).into_coords())
        .collect();
    let normal = linalg::hyperplane_normal(&dirs)?;
    let nvec = Vector::from_slice(&normal);
    let mut beta = nvec.dot(base);
    let mut nvec = nvec;
    if beta < 0.0 {
        nvec = nvec.neg();
        beta = -beta;
    }
    // Supporting check: every point on the non-positive side of the plane.
    for p in points {
        if nvec.dot(p) > beta + tol::DELTA_ACC {
            return None;
        }
    }
    Some(beta)
}

/// Advance `subset` to the next lexicographic d-combination of 0..n.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_polytope_distance() {
        // Facets of conv{±e1, ±e2} lie at distance sqrt(2)/2.
        let pts = [
            Vector::from_slice(&[1.0, 0.0]),
            Vector::from_slice(&[-1.0, 0.0]),
            Vector::from_slice(&[0.0, 1.0]),
            Vector::from_slice(&[0.0, -1.0]),
        ];
        let d = min_facet_distance(&pts).unwrap();
        assert!((d - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn triangle_distance() {
        // Regular triangle: edge midpoints at distance 1/2.
        let pts: Vec<Vector<f64>> = (0..3)
            .map(|k| {
                let a = std::f64::consts::TAU * k as f64 / 3.0;
                Vector::from_slice(&[a.cos(), a.sin()])
            })
            .collect();
        let d = min_facet_distance(&pts).unwrap();
        assert!((d - 0.5).abs() < 1e-12);
    }

    #[test]
    fn combinations_cover_all() {
        let mut c = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut c, 4) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
