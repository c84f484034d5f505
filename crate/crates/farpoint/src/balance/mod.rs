//! Balance classification: the dimension of the minimal face of `conv X`
//! containing the origin, the separation measure delta(X), and the min-norm
//! point of the hull.
//!
//! Balance b means: b = 0 when the origin is outside the hull; b = d when it
//! is interior ("balanced"); otherwise the origin lies in the relative
//! interior of a b-dimensional face. The three cases are mirrored by the
//! sign of delta.

mod facets;
mod simplex;
mod wolfe;

pub use simplex::{solve_lp_max, LpOutcome};
/// Min-norm point over a raw point list (no sphere/span requirements).
pub use wolfe::min_norm_point as min_norm_of;

use crate::geometry::{PointSet, Vector};
use crate::miniball;
use crate::tol;
use serde::{Deserialize, Serialize};

/// Classification of a point set by where the origin sits in its hull.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BalanceReport {
    /// Face dimension b in {0, ..., d}.
    pub b: usize,
    /// delta(X): negative / zero / positive for b = 0 / boundary / interior.
    pub delta: f64,
    /// Point of conv X closest to the origin.
    pub min_norm_point: Vec<f64>,
    /// Indices (into the input) carrying positive weight in some convex
    /// representation of the origin; empty when b = 0.
    pub support: Vec<usize>,
}

/// The point of `conv X` closest to the origin, certified by the optimality
/// condition `<p, x_j - p> >= -tol` for all j.
pub fn min_norm_point(ps: &PointSet<f64>) -> Vector<f64> {
    wolfe::min_norm_point(ps.points())
}

/// Classify a point set by balance and compute delta and the support set.
pub fn classify_balance(ps: &PointSet<f64>) -> BalanceReport {
    let (points, back_map) = dedup(ps.points());
    let d = ps.d();
    let n = points.len();
    let p_star = wolfe::min_norm_point(&points);

    // Base program: lambda >= 0, sum lambda = 1, sum lambda_j x_j = 0.
    let mut a: Vec<Vec<f64>> = Vec::with_capacity(d + 1);
    for row in 0..d {
        a.push(points.iter().map(|p| p[row]).collect());
    }
    a.push(vec![1.0; n]);
    let mut b_rhs = vec![0.0; d];
    b_rhs.push(1.0);

    // Support set: index i participates iff max lambda_i > 0 over the
    // feasible region.
    let mut support = Vec::new();
    let mut feasible = true;
    for i in 0..n {
        let mut c = vec![0.0; n];
        c[i] = 1.0;
        match simplex::solve_lp_max(&c, &a, &b_rhs) {
            LpOutcome::Optimal { objective, .. } => {
                if objective > tol::SUPPORT_WEIGHT {
                    support.push(i);
                }
            }
            LpOutcome::Infeasible => {
                feasible = false;
                break;
            }
            LpOutcome::Unbounded => unreachable!("simplex over a bounded polytope"),
        }
    }

    if !feasible || support.is_empty() {
        return BalanceReport {
            b: 0,
            delta: -p_star.norm(),
            min_norm_point: p_star.coords().to_vec(),
            support: Vec::new(),
        };
    }

    let support_points: Vec<Vec<f64>> = support
        .iter()
        .map(|&i| points[i].coords().to_vec())
        .collect();
    let b = rank(&support_points);
    let delta = if b == d {
        facets::min_facet_distance(&points).unwrap_or(0.0)
    } else {
        0.0
    };
    BalanceReport {
        b,
        delta,
        min_norm_point: p_star.coords().to_vec(),
        support: support.iter().map(|&i| back_map[i]).collect(),
    }
}

/// delta(X) alone; see [`classify_balance`] for the case split.
pub fn delta(ps: &PointSet<f64>) -> f64 {
    classify_balance(ps).delta
}

/// Cross-module consistency: the smallest enclosing ball of X is the unit
/// ball around the origin exactly when delta(X) >= 0.
pub fn seb_equivalence_check(ps: &PointSet<f64>) -> bool {
    let ball = match miniball::seb(ps.points(), 0) {
        Ok(b) => b,
        Err(_) => return false,
    };
    let is_unit_ball =
        ball.center.norm() <= 1e-7 && (ball.radius - 1.0).abs() <= 1e-7;
    let delta_nonneg = classify_balance(ps).delta >= 0.0;
    is_unit_ball == delta_nonneg
}

/// Duplicate points do not change the hull; classification runs on the
/// deduplicated list and reports support in original indices.
fn dedup(points: &[Vector<f64>]) -> (Vec<Vector<f64>>, Vec<usize>) {
    let mut out: Vec<Vector<f64>> = Vec::new();
    let mut back = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !out.iter().any(|q| q == p) {
            out.push(p.clone());
            back.push(i);
        }
    }
    (out, back)
}

fn rank(rows: &[Vec<f64>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m[0].len();
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |a, &b| a.max(b.abs()))
        .max(1.0);
    let thresh = scale * tol::RANK_REL;
    let mut rank = 0;
    for col in 0..cols {
        if rank >= m.len() {
            break;
        }
        let mut best = rank;
        for r in rank..m.len() {
            if m[r][col].abs() > m[best][col].abs() {
                best = r;
            }
        }
        if m[best][col].abs() <= thresh {
            continue;
        }
        m.swap(rank, best);
        for r in rank + 1..m.len() {
            let f = m[r][col] / m[rank][col];
            for c in col..cols {
                m[r][c] -= f * m[rank][c];
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(points: &[&[f64]]) -> PointSet<f64> {
        PointSet::new(
            points[0].len(),
            points.iter().map(|p| Vector::from_slice(p)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn zero_balanced_pair() {
        let report = classify_balance(&ps(&[&[1.0, 0.0], &[0.0, 1.0]]));
        assert_eq!(report.b, 0);
        assert!((report.delta + 0.5f64.sqrt()).abs() < 1e-9);
        assert!(report.support.is_empty());
        let mnp = Vector::from_slice(&report.min_norm_point);
        assert!((mnp[0] - 0.5).abs() < 1e-9 && (mnp[1] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn one_balanced_a21() {
        let report = classify_balance(&ps(&[&[1.0, 0.0], &[0.0, 1.0], &[-1.0, 0.0]]));
        assert_eq!(report.b, 1);
        assert_eq!(report.delta, 0.0);
        assert_eq!(report.support, vec![0, 2]);
    }

    #[test]
    fn balanced_cross() {
        let report = classify_balance(&ps(&[
            &[1.0, 0.0],
            &[-1.0, 0.0],
            &[0.0, 1.0],
            &[0.0, -1.0],
        ]));
        assert_eq!(report.b, 2);
        assert!((report.delta - 0.5f64.sqrt()).abs() < 1e-9);
        assert_eq!(report.support.len(), 4);
    }

    #[test]
    fn duplicates_ignored() {
        let report = classify_balance(&ps(&[
            &[1.0, 0.0],
            &[1.0, 0.0],
            &[0.0, 1.0],
            &[-1.0, 0.0],
        ]));
        assert_eq!(report.b, 1);
    }

    #[test]
    fn trichotomy_on_examples() {
        for (pts, expect_b) in [
            (vec![vec![1.0, 0.0], vec![0.0, 1.0]], 0usize),
            (vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![-1.0, 0.0]], 1),
            (
                vec![
                    vec![1.0, 0.0],
                    vec![-1.0, 0.0],
                    vec![0.0, 1.0],
                    vec![0.0, -1.0],
                ],
                2,
            ),
        ] {
            let set = PointSet::new(
                2,
                pts.iter().map(|p| Vector::from_slice(p)).collect(),
            )
            .unwrap();
            let rep = classify_balance(&set);
            assert_eq!(rep.b, expect_b);
            let case = (rep.delta < 0.0, rep.delta == 0.0, rep.delta > 0.0);
            match rep.b {
                0 => assert_eq!(case, (true, false, false)),
                b if b == set.d() => assert_eq!(case, (false, false, true)),
                _ => assert_eq!(case, (false, true, false)),
            }
        }
    }
}
