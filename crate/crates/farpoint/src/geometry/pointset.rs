use crate::error::{Error, Result};
use crate::geometry::Vector;
use crate::scalar::{Rat, Scalar};
use crate::tol;

/// A finite set of points intended to lie on the unit hypersphere and to
/// span the ambient space.
#[derive(Clone, Debug)]
pub struct PointSet<S> {
    d: usize,
    points: Vec<Vector<S>>,
}

/// Outcome of validating a point set against both invariants.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    /// `| |x| - 1 |` per point (computed in float; zero in exact mode when
    /// the squared norm is exactly one).
    pub norm_deviation: Vec<f64>,
    pub rank: usize,
    pub d: usize,
    pub unit_norms_ok: bool,
    pub spans_space: bool,
}

impl ValidationReport {
    pub fn usable(&self) -> bool {
        self.unit_norms_ok && self.spans_space
    }
}

impl<S: Scalar> PointSet<S> {
    /// Shape-level construction checks; the sphere and spanning invariants
    /// are checked by [`PointSet::validate`].
    pub fn new(d: usize, points: Vec<Vector<S>>) -> Result<Self> {
        if d < 2 {
            return Err(Error::DimTooSmall(d));
        }
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        for p in &points {
            if p.dim() != d {
                return Err(Error::DimMismatch(p.dim(), d));
            }
        }
        Ok(PointSet { d, points })
    }

    /// Construction that also enforces both invariants.
    pub fn validated(d: usize, points: Vec<Vector<S>>) -> Result<Self> {
        let ps = Self::new(d, points)?;
        let report = ps.validate();
        if !report.unit_norms_ok {
            return Err(Error::InvalidPointSet(format!(
                "point off the unit sphere (max |norm - 1| = {:.3e})",
                report
                    .norm_deviation
                    .iter()
                    .cloned()
                    .fold(0.0f64, f64::max)
            )));
        }
        if !report.spans_space {
            return Err(Error::InvalidPointSet(format!(
                "points span a {}-dimensional subspace of R^{}",
                report.rank, d
            )));
        }
        Ok(ps)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Vector<S>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Vector<S> {
        &self.points[i]
    }

    pub fn to_f64(&self) -> PointSet<f64> {
        PointSet {
            d: self.d,
            points: self.points.iter().map(|p| p.to_f64()).collect(),
        }
    }

    /// Check the unit-norm invariant (exactly in rational mode, within
    /// [`tol::UNIT_NORM`] in float mode) and the spanning invariant.
    pub fn validate(&self) -> ValidationReport {
        let mut norm_deviation = Vec::with_capacity(self.n());
        let mut unit_norms_ok = true;
        let one = S::one();
        for p in &self.points {
            let nsq = p.norm_sq();
            if S::EXACT {
                let dev = if nsq == one { 0.0 } else { (p.norm() - 1.0).abs() };
                if nsq != one {
                    unit_norms_ok = false;
                }
                norm_deviation.push(dev);
            } else {
                let dev = (nsq.to_f64().sqrt() - 1.0).abs();
                if dev > tol::UNIT_NORM {
                    unit_norms_ok = false;
                }
                norm_deviation.push(dev);
            }
        }
        let rank = rank_f64(
            &self
                .points
                .iter()
                .map(|p| p.coords().iter().map(|c| c.to_f64()).collect())
                .collect::<Vec<Vec<f64>>>(),
        );
        ValidationReport {
            norm_deviation,
            rank,
            d: self.d,
            unit_norms_ok,
            spans_space: rank == self.d,
        }
    }
}

impl PointSet<Rat> {
    /// Exact spanning rank over the rationals.
    pub fn exact_rank(&self) -> usize {
        let mut rows: Vec<Vec<Rat>> = self
            .points
            .iter()
            .map(|p| p.coords().to_vec())
            .collect();
        let cols = self.d;
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero_val());
            let Some(pivot) = pivot else { continue };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for r in rank + 1..rows.len() {
                if rows[r][col].is_zero_val() {
                    continue;
                }
                let factor = rows[r][col].mul_ref(&invert(&pivot_row[col]));
                for c in col..cols {
                    let delta = pivot_row[c].mul_ref(&factor);
                    rows[r][c] = rows[r][c].sub_ref(&delta);
                }
            }
            rank += 1;
            if rank == cols {
                break;
            }
        }
        rank
    }
}

fn invert(r: &Rat) -> Rat {
    Rat::new(r.denom().clone(), r.numer().clone())
}

/// Rank of the row space with pivots judged relative to the largest entry.
fn rank_f64(rows: &[Vec<f64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<f64>> = rows.to_vec();
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
        // Partial pivoting.
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
        if rank == m.len() || rank == cols {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(d: usize, i: usize) -> Vector<f64> {
        let mut c = vec![0.0; d];
        c[i] = 1.0;
        Vector::new(c)
    }

    #[test]
    fn basis_pair_is_valid() {
        let ps = PointSet::new(2, vec![e(2, 0), e(2, 1)]).unwrap();
        let rep = ps.validate();
        assert!(rep.usable());
        assert_eq!(rep.rank, 2);
    }

    #[test]
    fn antipodal_pair_fails_spanning() {
        let ps = PointSet::new(2, vec![e(2, 0), e(2, 0).neg()]).unwrap();
        let rep = ps.validate();
        assert!(rep.unit_norms_ok);
        assert!(!rep.spans_space);
        assert_eq!(rep.rank, 1);
    }

    #[test]
    fn off_sphere_point_fails() {
        let ps = PointSet::new(
            2,
            vec![Vector::from_slice(&[0.9, 0.0]), e(2, 1)],
        )
        .unwrap();
        assert!(!ps.validate().unit_norms_ok);
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            PointSet::<f64>::new(2, vec![]),
            Err(Error::EmptySet)
        ));
        assert!(matches!(
            PointSet::new(1, vec![Vector::from_slice(&[1.0])]),
            Err(Error::DimTooSmall(1))
        ));
    }

    #[test]
    fn exact_validation() {
        use crate::scalar::Scalar;
        let one = <Rat as Scalar>::one();
        let zero = <Rat as Scalar>::zero();
        let ps = PointSet::new(
            2,
            vec![
                Vector::new(vec![one.clone(), zero.clone()]),
                Vector::new(vec![zero.clone(), one.clone()]),
            ],
        )
        .unwrap();
        assert!(ps.validate().usable());
        assert_eq!(ps.exact_rank(), 2);
    }
}
