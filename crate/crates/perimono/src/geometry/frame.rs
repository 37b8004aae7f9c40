//! Orthonormal frames of hyperplanes `nu^perp`.

use alloc::vec::Vec;
use num_traits::Float;

use crate::vector::Vector;

/// Deterministic orthonormal frame of the hyperplane through `origin` with
/// unit normal `normal`.
///
/// The basis is the image of `e_1..e_{n-1}` under the Householder
/// reflection mapping `e_n` to `normal`, so identical inputs always
/// produce identical frames and every embedded computation is
/// reproducible.
#[derive(Clone, Debug)]
pub struct Frame {
    normal: Vector,
    origin: Vector,
    basis: Vec<Vector>,
}

impl Frame {
    pub fn new(normal: Vector, origin: Vector) -> Self {
        let n = normal.dim();
        debug_assert!(normal.is_unit(1e-9));
        debug_assert_eq!(origin.dim(), n);
        let e_last = Vector::unit(n, n - 1);
        let u = e_last.sub(&normal);
        let basis = match u.normalized() {
            // reflection I - 2 u u^T maps e_n to normal and e_i into
            // normal^perp
            Some(u) => (0..n - 1)
                .map(|i| Vector::unit(n, i).axpy(-2.0 * u[i], &u))
                .collect(),
            // normal is e_n itself
            None => (0..n - 1).map(|i| Vector::unit(n, i)).collect(),
        };
        Frame {
            normal,
            origin,
            basis,
        }
    }

    /// Frame of `normal^perp` through the point `offset * normal`.
    pub fn for_hyperplane(normal: Vector, offset: f64) -> Self {
        let origin = normal.scale(offset);
        Frame::new(normal, origin)
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn origin(&self) -> &Vector {
        &self.origin
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Ambient dimension n.
    pub fn ambient_dim(&self) -> usize {
        self.normal.dim()
    }

    /// Frame coordinates of an ambient point (its normal component is
    /// dropped).
    pub fn to_frame(&self, ambient: &Vector) -> Vector {
        let d = ambient.sub(&self.origin);
        Vector::new(self.basis.iter().map(|b| b.dot(&d)).collect())
    }

    /// Ambient point of frame coordinates.
    pub fn to_ambient(&self, coords: &Vector) -> Vector {
        let mut p = self.origin.clone();
        for (i, b) in self.basis.iter().enumerate() {
            p = p.axpy(coords[i], b);
        }
        p
    }

    /// Lifts a direction in the frame to an ambient direction (no origin
    /// shift).
    pub fn direction_to_ambient(&self, coords: &Vector) -> Vector {
        let mut p = Vector::zeros(self.ambient_dim());
        for (i, b) in self.basis.iter().enumerate() {
            p = p.axpy(coords[i], b);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_is_orthonormal_and_tangent() {
        let nu = Vector::from([0.6, 0.0, 0.8]);
        let f = Frame::new(nu.clone(), Vector::zeros(3));
        for (i, b) in f.basis().iter().enumerate() {
            assert!((b.norm() - 1.0).abs() < 1e-12);
            assert!(b.dot(&nu).abs() < 1e-12);
            for b2 in &f.basis()[i + 1..] {
                assert!(b.dot(b2).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn round_trip_on_the_carrier() {
        let nu = Vector::from([1.0 / 3.0f64.sqrt(); 3]);
        let f = Frame::for_hyperplane(nu, 0.5);
        let z = Vector::from([0.3, -1.2]);
        let back = f.to_frame(&f.to_ambient(&z));
        assert!(back.dist(&z) < 1e-12);
    }

    #[test]
    fn axis_normal_uses_identity_basis() {
        let f = Frame::new(Vector::unit(3, 2), Vector::zeros(3));
        assert_eq!(f.basis()[0], Vector::unit(3, 0));
        assert_eq!(f.basis()[1], Vector::unit(3, 1));
    }
}
