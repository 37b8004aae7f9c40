//! Convex polytope kernel for anisotropic perimeters of nested convex bodies.
//!
//! The crate computes, on exact V-represented polytopes:
//!
//! - convex hulls, facet data, volumes, hyperplane slices, projections
//!   ([`geometry`]);
//! - positively 1-homogeneous convex gauges and their admissible
//!   per-direction decompositions ([`gauge`]);
//! - Wulff shapes by polar duality and anisotropic boundary measures
//!   ([`wulff`]);
//! - the anisotropic perimeter as a facet sum ([`perimeter`]);
//! - Hausdorff distances between nested bodies with witness points and the
//!   induced supporting half-space ([`hausdorff`]);
//! - cones over embedded bases and their lateral integrals ([`cones`]);
//! - quantitative lower bounds for the perimeter deficit of nested convex
//!   bodies ([`bounds`]);
//! - grid-cube polytope approximations of a convex body with convergence
//!   certificates ([`approx`]).
//!
//! Everything is `f64` with tolerance-aware comparisons; the tolerance
//! ledger lives in [`tol`]. The crate is `no_std` (with `alloc`); IO, JSON
//! schemas, the fuzzing harness, and the CLI live in the companion
//! `perimono-cli` crate.
//!
//! Sign convention: facet normals are **inner** unit normals everywhere.
//! Gauges are evaluated on inner normals; most geometry libraries use outer
//! normals, so mind the sign when porting data.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod approx;
pub mod bounds;
pub mod cones;
pub mod error;
pub mod gauge;
pub mod geometry;
pub mod hausdorff;
pub(crate) mod math;
pub mod perimeter;
pub mod sample;
pub mod tol;
pub mod vector;
pub mod wulff;

pub use error::Error;
pub use geometry::{ConvexPolytope, EmbeddedPolytope, Frame, Hyperplane};
pub use vector::Vector;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
