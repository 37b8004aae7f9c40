//! Tolerance ledger.
//!
//! The underlying mathematics is exact; floating point forces every
//! comparison through this ledger. All geometric tolerances are relative
//! to a length scale (usually the polytope diameter) so bodies of any size
//! behave identically.

/// Unit-vector check: |(|v| - 1)| must stay below this.
pub const UNIT: f64 = 1e-12;

/// Geometric tolerance, relative to the diameter of the body involved.
/// Facet inequalities, containment, coplanarity, and vertex dedup all use
/// `GEO_REL * diameter`.
pub const GEO_REL: f64 = 1e-9;

/// Projection optimality, relative to the diameter: the minimum-norm
/// solver stops once `<y - x*, v - x*> <= PROJ_REL * scale^2` holds for
/// every vertex `v`.
pub const PROJ_REL: f64 = 1e-8;

/// Iteration cap for the minimum-norm projection solver.
pub const PROJ_MAX_ITER: usize = 10_000;

/// Coercivity floor: a sphere minimum below this is treated as zero.
pub const COERCIVITY_FLOOR: f64 = 1e-9;

/// Absolute accuracy of the sphere-minimum computation.
pub const SPHERE_MIN_ACC: f64 = 1e-6;

/// Cube-count resource guard for grid approximations.
pub const GRID_CUBE_GUARD: u64 = 100_000_000;

/// Default sample count for admissibility pre-checks.
pub const ADMISSIBILITY_SAMPLES: usize = 10_000;

/// Violation tolerance for inequality checks in fuzz campaigns:
/// a margin is a violation only below `-max(VIOLATION_TOL, VIOLATION_TOL * scale)`.
/// The paper's inequalities are exact, so anything beyond floating-point
/// slack is a genuine bug.
pub const VIOLATION_TOL: f64 = 1e-7;

/// Relative slack allowed for a discretized (curved) Wulff shape at the
/// default resolution of 512 boundary samples.
pub const WULFF_DISCRETIZATION_REL: f64 = 5e-3;

/// Default boundary-sample resolution for discretized Wulff shapes.
pub const WULFF_RESOLUTION: usize = 512;
