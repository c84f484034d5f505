//! Centralized numeric tolerances.
//!
//! Every comparison threshold used by the library lives here so that the
//! contracts stay auditable in one place. Exact-rational code paths never
//! consult these; they compare with zero tolerance.

/// Unit-norm acceptance band in float mode. Generators build points from
/// trigonometric functions, so exact norms are unattainable; 1e-12 leaves
/// three orders of magnitude above f64 rounding for recursive constructions.
pub const UNIT_NORM: f64 = 1e-12;

/// Default tie band for float-mode farthest-point selection. Exact mode
/// uses zero instead.
pub const TIE_FLOAT: f64 = 1e-9;

/// Rank decisions (row reduction pivots) relative to the largest entry.
pub const RANK_REL: f64 = 1e-9;

/// Positive-weight threshold when extracting the support set of a convex
/// representation of the origin from an LP optimum.
pub const SUPPORT_WEIGHT: f64 = 1e-10;

/// Optimality certificate for the min-norm point: `<p, x_j - p> >= -CERT`
/// must hold for every input point.
pub const MIN_NORM_CERT: f64 = 1e-9;

/// Accuracy target for the min-norm point itself.
pub const MIN_NORM_DIST: f64 = 1e-10;

/// Accuracy target for delta computations (facet distances).
pub const DELTA_ACC: f64 = 1e-9;

/// Ball enclosure slack: every input point must satisfy
/// `|y - c| <= R + BALL_ENCLOSURE`.
pub const BALL_ENCLOSURE: f64 = 1e-9;

/// Points within this of the ball surface count as boundary points.
pub const BALL_BOUNDARY: f64 = 1e-9;

/// Max residual allowed when checking `R*u_i = i*(c_i - c)` on
/// synchronized traces.
pub const RELATION_RESIDUAL: f64 = 1e-8;

/// Slack for the law-of-cosines trace consistency check.
pub const LAW_OF_COSINES: f64 = 1e-9;

/// Geometric slack used by region audits. Trace points accumulate float
/// error along thousands of additions and region boundaries are reached
/// exactly in symmetric configurations, so audits treat all region
/// inequalities as closed and expanded by this much.
pub const AUDIT_SLACK: f64 = 1e-7;

/// Frame construction accuracy (angles of x_1 and x_n after rotation).
pub const FRAME_ANGLE: f64 = 1e-9;

/// Slack on the sqrt(2) bound audit.
pub const SQRT2_SLACK: f64 = 1e-9;

/// LP pivot threshold and feasibility band for the dense simplex solver.
pub const LP_PIVOT: f64 = 1e-11;
pub const LP_FEAS: f64 = 1e-9;

/// Default state budget before an exact closure is declared non-terminating.
pub const STATE_BUDGET: usize = 10_000_000;
