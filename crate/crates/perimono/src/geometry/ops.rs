//! Hyperplane slices and half-space cuts.

use alloc::vec::Vec;
use num_traits::Float;

use super::polytope::{ConvexPolytope, EmbeddedPolytope};
use super::{Frame, Hyperplane};
use crate::error::Error;
use crate::vector::Vector;
use crate::Result;

/// Which side of a hyperplane to keep when cutting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfspaceSide {
    /// Keep `{x : <normal, x> >= offset}`.
    NonNegative,
    /// Keep `{x : <normal, x> <= offset}`.
    NonPositive,
}

/// Outcome of slicing a polytope with a hyperplane that meets it.
#[derive(Clone, Debug)]
pub enum SliceResult {
    /// The slice is a full (n-1)-dimensional body in the carrier frame.
    Full(EmbeddedPolytope),
    /// The hyperplane only touches the polytope along a face of dimension
    /// < n-1; carries the touching points (ambient coordinates) and has
    /// zero measure.
    Degenerate { frame: Frame, points: Vec<Vector> },
}

impl SliceResult {
    pub fn measure(&self) -> f64 {
        match self {
            SliceResult::Full(e) => e.measure(),
            SliceResult::Degenerate { .. } => 0.0,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, SliceResult::Degenerate { .. })
    }

    pub fn frame(&self) -> &Frame {
        match self {
            SliceResult::Full(e) => &e.frame,
            SliceResult::Degenerate { frame, .. } => frame,
        }
    }
}

impl ConvexPolytope {
    /// Intersection with a hyperplane as an (n-1)-body in the hyperplane's
    /// deterministic frame.
    ///
    /// The candidate points are the vertices lying on the hyperplane plus
    /// every chord crossing; chords that are not edges produce interior
    /// points that the hull construction discards, so the edge graph is
    /// never needed.
    pub fn slice(&self, plane: &Hyperplane) -> Result<SliceResult> {
        if plane.normal.dim() != self.dim() {
            return Err(Error::DimensionMismatch);
        }
        let eps = self.geo_tol();
        let dists: Vec<f64> = self
            .vertices()
            .iter()
            .map(|v| plane.signed_dist(v))
            .collect();

        let mut candidates: Vec<Vector> = Vec::new();
        for (v, &d) in self.vertices().iter().zip(&dists) {
            if d.abs() <= eps {
                candidates.push(v.clone());
            }
        }
        for i in 0..self.vertices().len() {
            for j in (i + 1)..self.vertices().len() {
                let (da, db) = (dists[i], dists[j]);
                if (da > eps && db < -eps) || (da < -eps && db > eps) {
                    let t = da / (da - db);
                    let p = self.vertices()[i].axpy(t, &self.vertices()[j].sub(&self.vertices()[i]));
                    candidates.push(p);
                }
            }
        }
        if candidates.is_empty() {
            return Err(Error::EmptySlice);
        }
        let frame = plane.frame();
        let projected: Vec<Vector> = candidates.iter().map(|p| frame.to_frame(p)).collect();
        match ConvexPolytope::hull(&projected, self.dim() - 1) {
            Ok(body) => Ok(SliceResult::Full(EmbeddedPolytope::new(frame, body))),
            Err(Error::DegenerateInput) => Ok(SliceResult::Degenerate {
                frame,
                points: candidates,
            }),
            Err(e) => Err(e),
        }
    }

    /// Cuts the polytope with a half-space, keeping the requested side.
    ///
    /// Errors: [`Error::EmptyIntersection`] when nothing is kept,
    /// [`Error::DegenerateIntersection`] when the kept part is not
    /// full-dimensional.
    pub fn intersect_halfspace(
        &self,
        plane: &Hyperplane,
        side: HalfspaceSide,
    ) -> Result<ConvexPolytope> {
        if plane.normal.dim() != self.dim() {
            return Err(Error::DimensionMismatch);
        }
        let sign = match side {
            HalfspaceSide::NonNegative => 1.0,
            HalfspaceSide::NonPositive => -1.0,
        };
        let eps = self.geo_tol();
        let dists: Vec<f64> = self
            .vertices()
            .iter()
            .map(|v| sign * plane.signed_dist(v))
            .collect();

        let mut kept: Vec<Vector> = Vec::new();
        for (v, &d) in self.vertices().iter().zip(&dists) {
            if d >= -eps {
                kept.push(v.clone());
            }
        }
        if kept.is_empty() {
            return Err(Error::EmptyIntersection);
        }
        if kept.len() == self.vertices().len() {
            return Ok(self.clone());
        }
        for i in 0..self.vertices().len() {
            for j in (i + 1)..self.vertices().len() {
                let (da, db) = (dists[i], dists[j]);
                if (da > eps && db < -eps) || (da < -eps && db > eps) {
                    let t = da / (da - db);
                    let p = self.vertices()[i].axpy(t, &self.vertices()[j].sub(&self.vertices()[i]));
                    kept.push(p);
                }
            }
        }
        match ConvexPolytope::hull(&kept, self.dim()) {
            Ok(p) => Ok(p),
            Err(Error::DegenerateInput) => Err(Error::DegenerateIntersection),
            Err(e) => Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec())
    }

    fn unit_cube() -> ConvexPolytope {
        let mut corners = Vec::new();
        for i in 0..8u32 {
            corners.push(v(&[
                (i & 1) as f64,
                ((i >> 1) & 1) as f64,
                ((i >> 2) & 1) as f64,
            ]));
        }
        ConvexPolytope::hull(&corners, 3).unwrap()
    }

    #[test]
    fn cube_midplane_slice_is_unit_square() {
        let cube = unit_cube();
        let plane = Hyperplane::new(v(&[0.0, 0.0, 1.0]), 0.5).unwrap();
        let slice = cube.slice(&plane).unwrap();
        assert!(!slice.is_degenerate());
        assert!((slice.measure() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cube_diagonal_slice_is_regular_hexagon() {
        // plane x + y + z = 1.5 crosses the six edge midpoints; the
        // triangulation oracle for the regular hexagon with side
        // sqrt(2)/2 gives 3*sqrt(3)/4
        let cube = unit_cube();
        let n = 1.0 / 3.0f64.sqrt();
        let plane = Hyperplane::new(v(&[n, n, n]), 1.5 * n).unwrap();
        let slice = cube.slice(&plane).unwrap();
        let expected = 3.0 * 3.0f64.sqrt() / 4.0;
        assert!((slice.measure() - expected).abs() < 1e-12);
        match slice {
            SliceResult::Full(e) => assert_eq!(e.body.vertices().len(), 6),
            _ => panic!("expected full slice"),
        }
    }

    #[test]
    fn plane_outside_cube_is_empty() {
        let cube = unit_cube();
        let plane = Hyperplane::new(v(&[0.0, 0.0, 1.0]), 2.0).unwrap();
        assert_eq!(cube.slice(&plane).unwrap_err(), Error::EmptySlice);
    }

    #[test]
    fn tangent_plane_is_degenerate() {
        let cube = unit_cube();
        let plane = Hyperplane::new(v(&[0.0, 0.0, 1.0]), 0.0).unwrap();
        // touches a whole face: still (n-1)-dimensional, so full
        let slice = cube.slice(&plane).unwrap();
        assert!((slice.measure() - 1.0).abs() < 1e-12);
        // touches a single vertex: degenerate
        let n = 1.0 / 3.0f64.sqrt();
        let corner_plane = Hyperplane::new(v(&[n, n, n]), 0.0).unwrap();
        let slice = cube.slice(&corner_plane).unwrap();
        assert!(slice.is_degenerate());
        assert_eq!(slice.measure(), 0.0);
    }

    #[test]
    fn halfspace_cut_of_cube_is_box() {
        let cube = unit_cube();
        let plane = Hyperplane::new(v(&[0.0, 0.0, 1.0]), 0.5).unwrap();
        let cut = cube
            .intersect_halfspace(&plane, HalfspaceSide::NonPositive)
            .unwrap();
        assert!((cut.volume() - 0.5).abs() < 1e-12);
        assert_eq!(cut.vertices().len(), 8);
        cut.validate().unwrap();
    }

    #[test]
    fn halfspace_containing_polytope_returns_it() {
        let cube = unit_cube();
        let plane = Hyperplane::new(v(&[0.0, 0.0, 1.0]), 5.0).unwrap();
        let cut = cube
            .intersect_halfspace(&plane, HalfspaceSide::NonPositive)
            .unwrap();
        assert_eq!(cut.vertices().len(), cube.vertices().len());
    }

    #[test]
    fn halfspace_missing_polytope_is_empty() {
        let cube = unit_cube();
        let plane = Hyperplane::new(v(&[0.0, 0.0, 1.0]), 5.0).unwrap();
        let r = cube.intersect_halfspace(&plane, HalfspaceSide::NonNegative);
        assert_eq!(r.unwrap_err(), Error::EmptyIntersection);
    }
}
