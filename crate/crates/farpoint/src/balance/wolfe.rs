//! Min-norm point in a convex hull via Wolfe's active-set method.
//!
//! Maintains a corral of affinely independent points, alternating between
//! adding the most violating vertex and restricting to the affine min-norm
//! point, until the optimality certificate
//! `<w, x_j - w> >= -tol` holds for every input point.

use crate::geometry::Vector;
use crate::linalg;

const STOP_TOL: f64 = 1e-12;
const WEIGHT_TOL: f64 = 1e-12;

/// The point of `conv(points)` closest to the origin.
///
/// Inputs are expected to be nonempty and of equal dimension.
pub fn min_norm_point(points: &[Vector<f64>]) -> Vector<f64> {
    assert!(!points.is_empty());
    let n = points.len();

    // Start from the shortest input point.
    let start = (0..n)
        .min_by(|&a, &b| {
            points[a]
                .norm_sq()
                .partial_cmp(&points[b].norm_sq())
                .unwrap()
        })
        .unwrap();
    let mut active: Vec<usize> = vec![start];
    let mut weights: Vec<f64> = vec![1.0];
    let mut w = points[start].clone();

    let max_major = 16 * n + 128;
    for _ in 0..max_major {
        let wsq = w.norm_sq();
        // Most violating vertex.
        let j_star = (0..n)
            .min_by(|&a, &b| {
                w.dot(&points[a])
                    .partial_cmp(&w.dot(&points[b]))
                    .unwrap()
            })
            .unwrap();
        if w.dot(&points[j_star]) >= wsq - STOP_TOL {
            break;
        }
        if !active.contains(&j_star) {
            active.push(j_star);
            weights.push(0.0);
        }

        // Minor cycles: move to the affine min-norm point of the corral,
        // dropping vertices whose weight hits zero on the way.
        let max_minor = 4 * n + 16;
        for _ in 0..max_minor {
            match affine_min_norm(points, &active) {
                Some(mu) => {
                    if mu.iter().all(|&m| m > WEIGHT_TOL) {
                        weights = mu;
                        w = combine(points, &active, &weights);
                        break;
                    }
                    // Largest step toward mu that keeps all weights >= 0.
                    let mut theta = 1.0f64;
                    for (&l, &m) in weights.iter().zip(mu.iter()) {
                        if m <= WEIGHT_TOL && l > m {
                            theta = theta.min(l / (l - m));
                        }
                    }
                    for (l, &m) in weights.iter_mut().zip(mu.iter()) {
                        *l = (1.0 - theta) * *l + theta * m;
                    }
                    drop_zero_weights(&mut active, &mut weights);
                    w = combine(points, &active, &weights);
                    if theta >= 1.0 {
                        break;
                    }
                }
                None => {
                    // Affinely dependent corral (degenerate floats): drop the
                    // lightest vertex and retry.
                    let lightest = (0..weights.len())
                        .min_by(|&a, &b| weights[a].partial_cmp(&weights[b]).unwrap())
                        .unwrap();
                    active.remove(lightest);
                    weights.remove(lightest);
                    if active.is_empty() {
                        active.push(start);
                        weights.push(1.0);
                    }
                    renormalize(&mut weights);
                    w = combine(points, &active, &weights);
                }
            }
        }
    }
    w
}

fn combine(points: &[Vector<f64>], active: &[usize], weights: &[f64]) -> Vector<f64> {
    let mut acc = Vector::zeros(points[0].dim());
    for (&idx, &w) in active.iter().zip(weights.iter()) {
        acc = acc.add(&points[idx].scale(&w));
    }
    acc
}

fn renormalize(weights: &mut [f64]) {
    let s: f64 = weights.iter().sum();
    if s > 0.0 {
        for w in weights.iter_mut() {
            *w /= s;
        }
    }
}

fn drop_zero_weights(active: &mut Vec<usize>, weights: &mut Vec<f64>) {
    let mut i = 0;
    while i < active.len() {
        if weights[i] <= WEIGHT_TOL && active.len() > 1 {
            active.remove(i);
            weights.remove(i);
        } else {
            i += 1;
        }
    }
    renormalize(weights);
}

/// Barycentric coordinates of the min-norm point of the affine hull of the
/// selected points: solve the KKT system
///
/// ```text
///   [ G  1 ] [mu]   [0]
///   [ 1' 0 ] [nu] = [1]
/// ```
fn affine_min_norm(points: &[Vector<f64>], active: &[usize]) -> Option<Vec<f64>> {
    let k = active.len();
    let mut a = vec![vec![0.0; k + 1]; k + 1];
    let mut b = vec![0.0; k + 1];
    for i in 0..k {
        for j in 0..k {
            a[i][j] = points[active[i]].dot(&points[active[j]]);
        }
        a[i][k] = 1.0;
        a[k][i] = 1.0;
    }
    b[k] = 1.0;
    let sol = linalg::solve(a, b)?;
    Some(sol[..k].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol;

    fn certify(points: &[Vector<f64>], w: &Vector<f64>) {
        for x in points {
            assert!(
                w.dot(&x.sub(w)) >= -tol::MIN_NORM_CERT,
                "certificate violated: {:?}",
                w
            );
        }
    }

    #[test]
    fn segment_midpoint() {
        let pts = [
            Vector::from_slice(&[1.0, 0.0]),
            Vector::from_slice(&[0.0, 1.0]),
        ];
        let w = min_norm_point(&pts);
        assert!((w[0] - 0.5).abs() < 1e-10 && (w[1] - 0.5).abs() < 1e-10);
        certify(&pts, &w);
    }

    #[test]
    fn origin_inside_cross() {
        let pts = [
            Vector::from_slice(&[1.0, 0.0]),
            Vector::from_slice(&[-1.0, 0.0]),
            Vector::from_slice(&[0.0, 1.0]),
            Vector::from_slice(&[0.0, -1.0]),
        ];
        let w = min_norm_point(&pts);
        assert!(w.norm() < 1e-10);
        certify(&pts, &w);
    }

    #[test]
    fn vertex_optimum() {
        let pts = [
            Vector::from_slice(&[2.0, 1.0]),
            Vector::from_slice(&[3.0, 4.0]),
        ];
        let w = min_norm_point(&pts);
        certify(&pts, &w);
        assert!(w.sub(&pts[0]).norm() < 1e-9);
    }
}
