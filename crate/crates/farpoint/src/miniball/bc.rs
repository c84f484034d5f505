//! The incremental center approximation `c_{i+1} = c_i + (xi_i - c_i)/(i+1)`
//! with farthest-point selection, its error trace against the true ball, and
//! the coupling `R u_i = i (c_i - c)` to the unit-sphere iteration.

use crate::error::Result;
use crate::geometry::Vector;
use crate::iteration::{Chooser, TiePolicy};
use crate::miniball::{normalize, seb, Ball};
use crate::tol;

/// One step of the center approximation.
#[derive(Clone, Debug)]
pub struct ApproxStep {
    pub center: Vector<f64>,
    /// Farthest-point index chosen to leave this center (none on the final row).
    pub chosen: Option<usize>,
    /// `|c - c_i| / R` against the true ball.
    pub err: f64,
}

#[derive(Clone, Debug)]
pub struct ApproxTrace {
    pub steps: Vec<ApproxStep>,
    pub ball: Ball,
    /// Indices of input points on the ball surface.
    pub boundary: Vec<usize>,
}

impl ApproxTrace {
    /// Largest `err_i * sqrt(i)`; at most 1 when the 1/sqrt(i) bound holds.
    pub fn max_err_sqrt_scaled(&self) -> f64 {
        self.steps
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, s)| s.err * (i as f64).sqrt())
            .fold(0.0, f64::max)
    }
}

/// Run `steps` iterations of the center approximation on `points`.
/// Farthest-point ties are resolved by the same policy vocabulary as the
/// unit-sphere iteration; `Greedy` moves the next center as far from the
/// true center as the tie allows.
pub fn bc_approximate(
    points: &[Vector<f64>],
    steps: usize,
    policy: TiePolicy,
    seed: u64,
) -> Result<ApproxTrace> {
    let ball = seb(points, seed)?;
    let boundary = boundary_of(points, &ball);
    let mut chooser = Chooser::new(policy, seed);
    let d = points[0].dim();
    let mut c = Vector::zeros(d);
    let mut trace = Vec::with_capacity(steps + 1);
    for i in 0..steps {
        let ties = farthest_ties(points, &c);
        let chosen = chooser.choose_by(&ties, |&idx| {
            // Candidate next center, scored by distance from the true center.
            let next = bc_step(&c, &points[idx], i);
            next.dist(&ball.center)
        });
        trace.push(ApproxStep {
            center: c.clone(),
            chosen: Some(chosen),
            err: c.dist(&ball.center) / ball.radius,
        });
        c = bc_step(&c, &points[chosen], i);
    }
    trace.push(ApproxStep {
        center: c.clone(),
        chosen: None,
        err: c.dist(&ball.center) / ball.radius,
    });
    Ok(ApproxTrace {
        steps: trace,
        ball,
        boundary,
    })
}

fn bc_step(c: &Vector<f64>, xi: &Vector<f64>, i: usize) -> Vector<f64> {
    let step = xi.sub(c).scale(&(1.0 / (i as f64 + 1.0)));
    c.add(&step)
}

fn farthest_ties(points: &[Vector<f64>], c: &Vector<f64>) -> Vec<usize> {
    let dists: Vec<f64> = points.iter().map(|p| p.dist(c)).collect();
    let max = dists.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (0..points.len())
        .filter(|&i| dists[i] >= max - tol::TIE_FLOAT)
        .collect()
}

fn boundary_of(points: &[Vector<f64>], ball: &Ball) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| points[i].dist(&ball.center) >= ball.radius - tol::BALL_BOUNDARY)
        .collect()
}

/// Smallest index from which every later farthest choice lies on the ball
/// surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbsorptionIndex {
    /// All choices from this step onward touched only boundary points.
    Settled(usize),
    /// Interior points were still being chosen at the end of the trace.
    NotYet,
}

pub fn interior_absorption_index(trace: &ApproxTrace) -> AbsorptionIndex {
    let mut last_interior: Option<usize> = None;
    for (i, s) in trace.steps.iter().enumerate() {
        if let Some(chosen) = s.chosen {
            if !trace.boundary.contains(&chosen) {
                last_interior = Some(i);
            }
        }
    }
    match last_interior {
        None => AbsorptionIndex::Settled(0),
        Some(i) if i + 2 < trace.steps.len() => AbsorptionIndex::Settled(i + 1),
        Some(_) => AbsorptionIndex::NotYet,
    }
}

/// Report from running the two recurrences side by side.
#[derive(Clone, Debug)]
pub struct RelationReport {
    /// Max over i of `|R u_i - i (c_i - c)|`.
    pub max_residual: f64,
    /// First step where the tie sets of the two recurrences became disjoint.
    pub diverged_at: Option<usize>,
    pub steps_run: usize,
}

/// Drive the center approximation on `points` and the farthest-point
/// iteration on the normalized set with one shared tie policy, choosing from
/// the intersection of the two tie sets so the choices stay matched.
pub fn relation_check(
    points: &[Vector<f64>],
    steps: usize,
    policy: TiePolicy,
    seed: u64,
) -> Result<RelationReport> {
    let normalized = normalize(points)?;
    let ball = &normalized.ball;
    let x = &normalized.points;
    let d = points[0].dim();
    let mut chooser = Chooser::new(policy, seed);
    let mut c = Vector::zeros(d);
    let mut u = Vector::zeros(d);
    let mut max_residual = 0.0f64;
    for i in 0..steps {
        // Residual of R u_i = i (c_i - c).
        let lhs = u.scale(&ball.radius);
        let rhs = c.sub(&ball.center).scale(&(i as f64));
        max_residual = max_residual.max(lhs.sub(&rhs).norm());

        let bc_ties = farthest_ties(points, &c);
        let u_ties = min_dot_ties(x, &u);
        let joint: Vec<usize> = bc_ties
            .iter()
            .cloned()
            .filter(|i| u_ties.contains(i))
            .collect();
        if joint.is_empty() {
            return Ok(RelationReport {
                max_residual,
                diverged_at: Some(i),
                steps_run: i,
            });
        }
        let chosen = chooser.choose_by(&joint, |&idx| {
            bc_step(&c, &points[idx], i).dist(&ball.center)
        });
        c = bc_step(&c, &points[chosen], i);
        u = u.add(&x[chosen]);
    }
    let lhs = u.scale(&ball.radius);
    let rhs = c.sub(&ball.center).scale(&(steps as f64));
    max_residual = max_residual.max(lhs.sub(&rhs).norm());
    Ok(RelationReport {
        max_residual,
        diverged_at: None,
        steps_run: steps,
    })
}

fn min_dot_ties(x: &[Vector<f64>], u: &Vector<f64>) -> Vec<usize> {
    let dots: Vec<f64> = x.iter().map(|p| p.dot(u)).collect();
    let min = dots.iter().cloned().fold(f64::INFINITY, f64::min);
    (0..x.len())
        .filter(|&i| dots[i] <= min + tol::TIE_FLOAT)
        .collect()
}

/// Convergence-bound check against `1/sqrt(i)` and, when available, `u*/i`.
pub fn check_convergence_bounds(
    trace: &ApproxTrace,
    ustar_upper: Option<f64>,
) -> std::result::Result<(), String> {
    for (i, s) in trace.steps.iter().enumerate().skip(1) {
        let fi = i as f64;
        if s.err > 1.0 / fi.sqrt() + 1e-12 {
            return Err(format!(
                "1/sqrt(i) bound violated at i={i}: err={} > {}",
                s.err,
                1.0 / fi.sqrt()
            ));
        }
        if let Some(ustar) = ustar_upper {
            if s.err > ustar / fi + 1e-12 {
                return Err(format!(
                    "u*/i bound violated at i={i}: err={} > {}",
                    s.err,
                    ustar / fi
                ));
            }
        }
    }
    Ok(())
}

#[allow(unused_imports)]
use Error as _ErrorAlias;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_center_is_first_choice() {
        let pts = [
            Vector::from_slice(&[0.0, 1.0]),
            Vector::from_slice(&[1.0, 0.0]),
            Vector::from_slice(&[-1.0, 0.0]),
        ];
        let t = bc_approximate(&pts, 5, TiePolicy::Lowest, 0).unwrap();
        let first = t.steps[0].chosen.unwrap();
        assert!(t.steps[1].center.dist(&pts[first]) < 1e-15);
    }

    #[test]
    fn sqrt_bound_on_small_example() {
        let pts = [
            Vector::from_slice(&[0.0, 1.0]),
            Vector::from_slice(&[1.0, 0.0]),
            Vector::from_slice(&[-1.0, 0.0]),
            Vector::from_slice(&[0.0, -1.0]),
        ];
        let t = bc_approximate(&pts, 2000, TiePolicy::Lowest, 3).unwrap();
        check_convergence_bounds(&t, None).unwrap();
    }

    #[test]
    fn absorption_immediate_when_all_on_boundary() {
        let pts = [
            Vector::from_slice(&[0.0, 0.0]),
            Vector::from_slice(&[2.0, 0.0]),
        ];
        let t = bc_approximate(&pts, 100, TiePolicy::Lowest, 0).unwrap();
        match interior_absorption_index(&t) {
            AbsorptionIndex::Settled(i) => assert!(i <= 2),
            AbsorptionIndex::NotYet => panic!("expected absorption"),
        }
    }

    #[test]
    fn relation_residual_small_on_boundary_inputs() {
        let pts = [
            Vector::from_slice(&[0.0, 1.0]),
            Vector::from_slice(&[1.0, 0.0]),
        ];
        let r = relation_check(&pts, 10, TiePolicy::Lowest, 0).unwrap();
        assert!(r.diverged_at.is_none());
        assert!(r.max_residual <= 1e-10, "residual {}", r.max_residual);
    }
}
