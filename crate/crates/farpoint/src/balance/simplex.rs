//! Two-phase dense simplex for the small equality-form programs used by the
//! balance classifier:
//!
//!     maximize c^T x   subject to   A x = b,  x >= 0.
//!
//! Problem sizes are tiny (rows = d+1, columns = n <= ~64), so a plain
//! tableau with Bland's anti-cycling rule is the right tool.

use crate::tol;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { objective: f64, solution: Vec<f64> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    // rows x (cols + 1); last column is the right-hand side.
    rows: usize,
    cols: usize,
    t: Vec<Vec<f64>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[row][col];
        for c in 0..=self.cols {
            self.t[row][c] /= p;
        }
        for r in 0..self.rows {
            if r == row {
                continue;
            }
            let f = self.t[r][col];
            if f == 0.0 {
                continue;
            }
            for c in 0..=self.cols {
                self.t[r][c] -= f * self.t[row][c];
            }
        }
        self.basis[row] = col;
    }

    /// One phase of simplex on the given objective row (reduced costs for a
    /// maximization). Bland's rule: smallest improving column, smallest-index
    /// tie break on the ratio test. Columns at or beyond `enter_limit` never
    /// enter the basis.
    fn run(&mut self, obj: &mut Vec<f64>, enter_limit: usize) -> bool {
        loop {
            // Reduce the objective over the current basis.
            for (r, &bc) in self.basis.iter().enumerate() {
                let f = obj[bc];
                if f != 0.0 {
                    for c in 0..=self.cols {
                        obj[c] -= f * self.t[r][c];
                    }
                }
            }
            let enter = (0..enter_limit).find(|&c| obj[c] > tol::LP_PIVOT);
            let Some(enter) = enter else { return true };
            let mut leave: Option<usize> = None;
            let mut best = f64::INFINITY;
            for r in 0..self.rows {
                if self.t[r][enter] > tol::LP_PIVOT {
                    let ratio = self.t[r][self.cols] / self.t[r][enter];
                    if ratio < best - 1e-15
                        || (ratio < best + 1e-15
                            && leave.map_or(true, |l| self.basis[r] < self.basis[l]))
                    {
                        best = ratio;
                        leave = Some(r);
                    }
                }
            }
            let Some(leave) = leave else { return false };
            self.pivot(leave, enter);
        }
    }
}

/// Maximize `c^T x` subject to `A x = b`, `x >= 0`.
pub fn solve_lp_max(c: &[f64], a: &[Vec<f64>], b: &[f64]) -> LpOutcome {
    let rows = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), rows);

    // Phase 1 with one artificial variable per row; flip rows to make b >= 0.
    let cols = n + rows;
    let mut t = vec![vec![0.0; cols + 1]; rows];
    for r in 0..rows {
        let flip = if b[r] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t[r][j] = flip * a[r][j];
        }
        t[r][n + r] = 1.0;
        t[r][cols] = flip * b[r];
    }
    let mut tab = Tableau {
        rows,
        cols,
        t,
        basis: (n..n + rows).collect(),
    };
    // Maximize the negative sum of artificials.
    let mut obj = vec![0.0; cols + 1];
    for j in n..cols {
        obj[j] = -1.0;
    }
    if !tab.run(&mut obj, cols) {
        return LpOutcome::Unbounded; // cannot happen for a bounded phase-1
    }
    let infeas = -obj[cols];
    if infeas > tol::LP_FEAS {
        return LpOutcome::Infeasible;
    }
    // Drive leftover artificials out of the basis where possible; rows where
    // no original column is available are redundant (all-zero) constraints.
    for r in 0..rows {
        if tab.basis[r] >= n {
            if let Some(col) = (0..n).find(|&c| tab.t[r][c].abs() > tol::LP_PIVOT) {
                tab.pivot(r, col);
            }
        }
    }

    // Phase 2 on the original objective; artificial columns never re-enter.
    let mut obj2 = vec![0.0; cols + 1];
    obj2[..n].copy_from_slice(c);
    if !tab.run(&mut obj2, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![0.0; n];
    for (r, &bc) in tab.basis.iter().enumerate() {
        if bc < n {
            x[bc] = tab.t[r][tab.cols];
        }
    }
    let objective = c.iter().zip(x.iter()).map(|(ci, xi)| ci * xi).sum();
    LpOutcome::Optimal {
        objective,
        solution: x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_max() {
        // max x1 s.t. x1 + x2 = 1
        let out = solve_lp_max(&[1.0, 0.0], &[vec![1.0, 1.0]], &[1.0]);
        match out {
            LpOutcome::Optimal { objective, .. } => assert!((objective - 1.0).abs() < 1e-9),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        // x1 + x2 = -1 with x >= 0
        let out = solve_lp_max(&[1.0, 0.0], &[vec![1.0, 1.0]], &[-1.0]);
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn origin_in_hull_program() {
        // lambda_1 * e1 + lambda_2 * (-e1) = 0, sum lambda = 1: max lambda_1 = 1/2.
        let a = vec![vec![1.0, -1.0], vec![0.0, 0.0], vec![1.0, 1.0]];
        let b = vec![0.0, 0.0, 1.0];
        match solve_lp_max(&[1.0, 0.0], &a, &b) {
            LpOutcome::Optimal { objective, .. } => assert!((objective - 0.5).abs() < 1e-9),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn origin_outside_hull_is_infeasible() {
        // e1 and e2 only: no convex combination reaches the origin.
        let a = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]];
        let b = vec![0.0, 0.0, 1.0];
        assert_eq!(solve_lp_max(&[1.0, 0.0], &a, &b), LpOutcome::Infeasible);
    }
}
