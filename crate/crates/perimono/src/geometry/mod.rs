//! n-dimensional convex polytope kernel.
//!
//! V-representation is primary: a polytope is its extreme points, with
//! facet data (inner unit normals, offsets, (n-1)-measures, centroids,
//! corner ids) derived once at construction and cached. Everything the
//! rest of the crate computes (perimeters, slices, cones, bounds) is a
//! facet sum, which is why facets carry their measures and centroids.

mod frame;
mod hull;
mod minnorm;
mod ops;
mod polytope;

pub use frame::Frame;
pub use minnorm::{min_norm_point, Projection};
pub use ops::{HalfspaceSide, SliceResult};
pub use polytope::{ConvexPolytope, EmbeddedPolytope, Facet};

use crate::vector::Vector;

/// The hyperplane `{x : <normal, x> = offset}` with unit normal.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub normal: Vector,
    pub offset: f64,
}

impl Hyperplane {
    /// Builds a hyperplane, normalizing the normal. `None` for a zero
    /// normal.
    pub fn new(normal: Vector, offset: f64) -> Option<Self> {
        let n = normal.norm();
        let normal = normal.normalized()?;
        Some(Hyperplane {
            normal,
            offset: offset / n,
        })
    }

    /// Signed distance of a point, positive on the side the normal points
    /// into.
    pub fn signed_dist(&self, p: &Vector) -> f64 {
        self.normal.dot(p) - self.offset
    }

    /// Deterministic orthonormal frame of this hyperplane.
    pub fn frame(&self) -> Frame {
        Frame::for_hyperplane(self.normal.clone(), self.offset)
    }
}
