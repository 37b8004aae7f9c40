//! Error type shared by all kernel operations.

use core::fmt;

/// Failure modes of the geometric and analytic operations.
///
/// Degeneracies that the callers are expected to handle (zero Hausdorff
/// distance, degenerate slices) have dedicated variants so the bound
/// pipeline can map them to explicit zero-bound reports instead of
/// propagating opaque failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input points span an affine subspace of dimension < n.
    DegenerateInput,
    /// Operands live in different ambient dimensions.
    DimensionMismatch,
    /// Polytope and hyperplane do not intersect.
    EmptySlice,
    /// Polytope and half-space do not intersect.
    EmptyIntersection,
    /// Half-space intersection is not full-dimensional.
    DegenerateIntersection,
    /// Iterative projection solver exceeded its iteration cap.
    NoConvergence,
    /// Cone apex lies on the carrier hyperplane of the base.
    ApexOnCarrier,
    /// Cone-lemma base does not contain the frame origin.
    OriginNotInBase,
    /// The inner body is not contained in the outer body.
    NotNested,
    /// Hausdorff distance is zero; no cut half-space exists.
    ZeroDistance,
    /// Gauge vanishes somewhere on the unit sphere; no default decomposition.
    NotCoercive,
    /// A sampled admissibility check failed; bound refused.
    AdmissibilityViolated,
    /// Grid approximation would exceed the cube-count resource guard.
    GridTooFine,
    /// Random generator failed to produce a valid instance after retries.
    GenerationFailed,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::DegenerateInput => "input points are affinely dependent",
            Error::DimensionMismatch => "ambient dimensions do not match",
            Error::EmptySlice => "polytope does not meet the hyperplane",
            Error::EmptyIntersection => "polytope does not meet the half-space",
            Error::DegenerateIntersection => "half-space intersection is not full-dimensional",
            Error::NoConvergence => "projection solver exceeded its iteration cap",
            Error::ApexOnCarrier => "cone apex lies on the base carrier hyperplane",
            Error::OriginNotInBase => "cone-lemma base does not contain the origin",
            Error::NotNested => "inner body is not contained in the outer body",
            Error::ZeroDistance => "Hausdorff distance is zero",
            Error::NotCoercive => "gauge is not coercive on the unit sphere",
            Error::AdmissibilityViolated => "sampled admissibility check failed",
            Error::GridTooFine => "grid approximation exceeds the cube-count guard",
            Error::GenerationFailed => "random generation failed after retries",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for Error {}
