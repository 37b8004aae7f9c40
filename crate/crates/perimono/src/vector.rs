//! Dense n-dimensional points and directions.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Index;
use num_traits::Float;

use crate::math;

/// A point or direction in `R^n`. Coordinates are finite `f64`s; the
/// dimension is fixed per computation context.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    pub fn new(coords: Vec<f64>) -> Self {
        debug_assert!(coords.iter().all(|c| c.is_finite()));
        Vector { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector { coords: vec![0.0; dim] }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[i] = 1.0;
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.coords
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        math::dot(&self.coords, &other.coords)
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist(&self, other: &Vector) -> f64 {
        self.sub(other).norm()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, t: f64) -> Vector {
        Vector::new(self.coords.iter().map(|a| a * t).collect())
    }

    /// `self + t * other`, the workhorse of the hull and solver loops.
    pub fn axpy(&self, t: f64, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + t * b)
                .collect(),
        )
    }

    /// Unit vector in the same direction; `None` for (near-)zero input.
    pub fn normalized(&self) -> Option<Vector> {
        let n = self.norm();
        if n < f64::MIN_POSITIVE.sqrt() {
            None
        } else {
            Some(self.scale(1.0 / n))
        }
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Total lexicographic order, used for deterministic tie-breaking.
    pub fn lex_cmp(&self, other: &Vector) -> Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.total_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.coords.len().cmp(&other.coords.len())
    }

    /// Centroid of a point collection (all the same dimension).
    pub fn centroid(points: &[Vector]) -> Vector {
        debug_assert!(!points.is_empty());
        let dim = points[0].dim();
        let mut acc = Self::zeros(dim);
        for p in points {
            acc = acc.add(p);
        }
        acc.scale(1.0 / points.len() as f64)
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

impl From<Vec<f64>> for Vector {
    fn from(coords: Vec<f64>) -> Self {
        Vector::new(coords)
    }
}

impl<const N: usize> From<[f64; N]> for Vector {
    fn from(coords: [f64; N]) -> Self {
        Vector::new(coords.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_345() {
        let v = Vector::from([3.0, 4.0]);
        assert_eq!(v.norm(), 5.0);
    }

    #[test]
    fn lex_order_is_total() {
        let a = Vector::from([0.0, 1.0]);
        let b = Vector::from([0.0, 2.0]);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&a), Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
    }
}
