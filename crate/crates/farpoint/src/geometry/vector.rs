use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of Euclidean d-space, generic over the numeric mode.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<S>(Vec<S>);

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Vector(coords)
    }

    pub fn zeros(d: usize) -> Self {
        Vector(vec![S::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<S> {
        self.0
    }

    /// Standard scalar product. Errors on dimension mismatch.
    pub fn dot_checked(&self, other: &Self) -> Result<S> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch(self.dim(), other.dim()));
        }
        Ok(self.dot(other))
    }

    /// Standard scalar product; panics on dimension mismatch.
    pub fn dot(&self, other: &Self) -> S {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        let mut acc = S::zero();
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            acc = acc.add_ref(&a.mul_ref(b));
        }
        acc
    }

    /// Squared Euclidean norm, exact in rational mode.
    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    /// Euclidean norm as a float (the square root generally leaves the
    /// rational field; exact comparisons go through `norm_sq`).
    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        )
    }

    pub fn scale(&self, factor: &S) -> Self {
        Vector(self.0.iter().map(|a| a.mul_ref(factor)).collect())
    }

    pub fn neg(&self) -> Self {
        Vector(self.0.iter().map(|a| a.neg_ref()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero_val())
    }

    pub fn to_f64(&self) -> Vector<f64> {
        Vector(self.0.iter().map(|a| a.to_f64()).collect())
    }
}

impl Vector<f64> {
    pub fn from_slice(coords: &[f64]) -> Self {
        Vector(coords.to_vec())
    }

    /// Distance between two points.
    pub fn dist(&self, other: &Self) -> f64 {
        self.sub(other).norm()
    }
}

impl<S: Scalar> std::ops::Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn dot_orthogonal_and_unit() {
        let e1 = Vector::from_slice(&[1.0, 0.0]);
        let e2 = Vector::from_slice(&[0.0, 1.0]);
        assert_eq!(e1.dot(&e2), 0.0);
        assert_eq!(e1.dot(&e1), 1.0);
    }

    #[test]
    fn dot_dimension_mismatch() {
        let a = Vector::from_slice(&[1.0, 0.0]);
        let b = Vector::from_slice(&[1.0, 0.0, 0.0]);
        assert!(a.dot_checked(&b).is_err());
    }

    #[test]
    fn norms() {
        assert_eq!(Vector::from_slice(&[0.0, 0.0]).norm(), 0.0);
        assert!((Vector::from_slice(&[1.0, 1.0]).norm() - 2f64.sqrt()).abs() < 1e-15);
        assert!((Vector::from_slice(&[0.6, 0.8]).norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rational_dot_is_exact() {
        let half = <Rat as Scalar>::from_ratio(1, 2);
        let v = Vector::new(vec![half.clone(), half.clone()]);
        assert_eq!(v.norm_sq(), <Rat as Scalar>::from_ratio(1, 2));
        // norm(a)^2 == dot(a, a) exactly
        assert_eq!(v.norm_sq(), v.dot(&v));
    }
}
