//! Incremental convex hull in dimension n >= 2.
//!
//! Beneath-beyond insertion with facet adjacency and conflict lists: every
//! candidate point is parked on some facet it is strictly outside of; each
//! round inserts the farthest parked point of some facet, replaces the
//! facets visible from it by new facets over the horizon ridges, and
//! redistributes the orphaned candidates. Points within `eps` of the hull
//! boundary are treated as inside, so near-coplanar inputs never become
//! vertices; exactly coplanar simplicial facets are merged downstream.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use crate::error::Error;
use crate::vector::Vector;
use crate::Result;

pub(crate) struct HullFacet {
    /// The n vertices of this simplicial facet (point indices).
    pub verts: Vec<usize>,
    /// Inner unit normal: every hull point satisfies `<normal, p> >= offset`.
    pub normal: Vector,
    pub offset: f64,
    /// `neighbors[i]` is the facet across the ridge `verts` minus `verts[i]`.
    pub neighbors: Vec<usize>,
    /// Candidate points strictly outside this facet.
    pub outside: Vec<usize>,
    pub alive: bool,
}

impl HullFacet {
    /// Signed distance with the inner-normal sign: negative means outside.
    pub fn signed_dist(&self, p: &Vector) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

pub(crate) struct SimplicialHull {
    pub points: Vec<Vector>,
    pub facets: Vec<HullFacet>,
    pub interior: Vector,
    pub eps: f64,
    pub scale: f64,
}

impl SimplicialHull {
    pub fn alive_facets(&self) -> impl Iterator<Item = &HullFacet> {
        self.facets.iter().filter(|f| f.alive)
    }
}

/// Builds the simplicial hull of `points` (already deduplicated) in
/// dimension `dim >= 2`. Fails with `DegenerateInput` when the points span
/// an affine subspace thinner than the geometric tolerance.
pub(crate) fn build(points: Vec<Vector>, dim: usize) -> Result<SimplicialHull> {
    debug_assert!(dim >= 2);
    if points.len() < dim + 1 {
        return Err(Error::DegenerateInput);
    }
    let scale = bbox_diagonal(&points).max(f64::MIN_POSITIVE);
    let eps = 1e-9 * scale;

    let initial = initial_simplex(&points, dim, eps)?;
    let interior = Vector::centroid(
        &initial
            .iter()
            .map(|&i| points[i].clone())
            .collect::<Vec<_>>(),
    );

    let mut hull = SimplicialHull {
        points,
        facets: Vec::new(),
        interior,
        eps,
        scale,
    };

    // simplex facets: facet i omits initial[i]; its neighbor across the
    // ridge omitting vertex j is facet j
    for i in 0..=dim {
        let verts: Vec<usize> = initial
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, &p)| p)
            .collect();
        let (normal, offset) = facet_plane(&hull.points, &verts, &hull.points[initial[i]])?;
        let mut neighbors = Vec::with_capacity(dim);
        for (k, _) in initial.iter().enumerate() {
            if k == i {
                continue;
            }
            neighbors.push(k);
        }
        hull.facets.push(HullFacet {
            verts,
            normal,
            offset,
            neighbors,
            outside: Vec::new(),
            alive: true,
        });
    }

    // park the remaining candidates
    let in_simplex: alloc::collections::BTreeSet<usize> = initial.iter().copied().collect();
    for p in 0..hull.points.len() {
        if in_simplex.contains(&p) {
            continue;
        }
        park_point(&mut hull, p, 0);
    }

    // insertion rounds: each point is inserted at most once, so this
    // terminates
    loop {
        let Some(fid) = hull
            .facets
            .iter()
            .position(|f| f.alive && !f.outside.is_empty())
        else {
            break;
        };
        let apex = {
            let f = &hull.facets[fid];
            *f.outside
                .iter()
                .max_by(|&&a, &&b| {
                    let da = -f.signed_dist(&hull.points[a]);
                    let db = -f.signed_dist(&hull.points[b]);
                    da.total_cmp(&db)
                })
                .expect("nonempty outside list")
        };
        insert_point(&mut hull, apex)?;
    }
    Ok(hull)
}

fn bbox_diagonal(points: &[Vector]) -> f64 {
    let dim = points[0].dim();
    let mut diag_sq = 0.0;
    for c in 0..dim {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in points {
            lo = lo.min(p[c]);
            hi = hi.max(p[c]);
        }
        diag_sq += (hi - lo) * (hi - lo);
    }
    diag_sq.sqrt()
}

/// Greedy affinely independent seed: start from the lexicographic minimum
/// and repeatedly take the point farthest from the current affine span.
///
/// Near-ties are broken toward the lexicographically largest candidate:
/// the lex-max of the maximizing set is an extreme point of the input, so
/// the seed simplex never uses a point in the middle of a face.
fn initial_simplex(points: &[Vector], dim: usize, eps: f64) -> Result<Vec<usize>> {
    let p0 = (0..points.len())
        .min_by(|&a, &b| points[a].lex_cmp(&points[b]))
        .expect("nonempty input");
    let mut chosen = vec![p0];
    let mut basis: Vec<Vector> = Vec::new();
    for _ in 0..dim {
        let mut best_norm = 0.0f64;
        for (i, p) in points.iter().enumerate() {
            if chosen.contains(&i) {
                continue;
            }
            best_norm = best_norm.max(residual(&p.sub(&points[p0]), &basis).norm());
        }
        if best_norm <= eps {
            return Err(Error::DegenerateInput);
        }
        let tie = best_norm - 1e-3 * eps;
        let mut best = usize::MAX;
        for (i, p) in points.iter().enumerate() {
            if chosen.contains(&i) {
                continue;
            }
            if residual(&p.sub(&points[p0]), &basis).norm() < tie {
                continue;
            }
            if best == usize::MAX || points[best].lex_cmp(p) == core::cmp::Ordering::Less {
                best = i;
            }
        }
        let r = residual(&points[best].sub(&points[p0]), &basis);
        let n = r.norm();
        chosen.push(best);
        basis.push(r.scale(1.0 / n));
    }
    Ok(chosen)
}

/// Component of `v` orthogonal to the given orthonormal basis, with one
/// re-orthogonalization pass.
fn residual(v: &Vector, basis: &[Vector]) -> Vector {
    let mut r = v.clone();
    for _ in 0..2 {
        for b in basis {
            let c = r.dot(b);
            r = r.axpy(-c, b);
        }
    }
    r
}

/// Hyperplane through the `verts` points, oriented so that `toward` is on
/// the inner (`>= offset`) side.
fn facet_plane(points: &[Vector], verts: &[usize], toward: &Vector) -> Result<(Vector, f64)> {
    let v0 = &points[verts[0]];
    let mut basis: Vec<Vector> = Vec::with_capacity(verts.len() - 1);
    for &vi in &verts[1..] {
        let r = residual(&points[vi].sub(v0), &basis);
        let n = r.norm();
        if n < f64::MIN_POSITIVE.sqrt() {
            return Err(Error::DegenerateInput);
        }
        basis.push(r.scale(1.0 / n));
    }
    let r = residual(&toward.sub(v0), &basis);
    let Some(normal) = r.normalized() else {
        return Err(Error::DegenerateInput);
    };
    let mut offset = 0.0;
    for &vi in verts {
        offset += normal.dot(&points[vi]);
    }
    offset /= verts.len() as f64;
    Ok((normal, offset))
}

/// Parks point `p` on the first alive facet in `[from..)` it is strictly
/// outside of, falling back to a full scan when `from > 0`; drops it
/// silently when inside the hull. The fallback matters: a point orphaned
/// by a dead facet can still be outside a surviving facet even when it is
/// beneath every newly created one.
fn park_point(hull: &mut SimplicialHull, p: usize, from: usize) {
    let eps = hull.eps;
    let mut found = None;
    {
        let pt = &hull.points[p];
        for fid in (from..hull.facets.len()).chain(0..from) {
            let f = &hull.facets[fid];
            if f.alive && f.signed_dist(pt) < -eps {
                found = Some(fid);
                break;
            }
        }
    }
    if let Some(fid) = found {
        hull.facets[fid].outside.push(p);
    }
}

fn insert_point(hull: &mut SimplicialHull, apex: usize) -> Result<()> {
    let eps = hull.eps;
    let apex_pt = hull.points[apex].clone();

    // visible set by full scan: immune to non-connected fp artifacts
    let visible: Vec<usize> = hull
        .facets
        .iter()
        .enumerate()
        .filter(|(_, f)| f.alive && f.signed_dist(&apex_pt) < -eps)
        .map(|(i, _)| i)
        .collect();
    debug_assert!(!visible.is_empty(), "apex must see its own facet");
    let is_visible = |fid: usize, hull: &SimplicialHull| {
        hull.facets[fid].alive && hull.facets[fid].signed_dist(&apex_pt) < -eps
    };

    // horizon ridges: (ridge vertices, surviving neighbor, its ridge slot)
    let mut horizon: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for &fv in &visible {
        for slot in 0..hull.facets[fv].verts.len() {
            let nb = hull.facets[fv].neighbors[slot];
            if is_visible(nb, hull) {
                continue;
            }
            let ridge: Vec<usize> = hull.facets[fv]
                .verts
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != slot)
                .map(|(_, &v)| v)
                .collect();
            // slot of this ridge on the neighbor's side
            let nb_slot = hull.facets[nb]
                .verts
                .iter()
                .position(|v| !ridge.contains(v))
                .expect("neighbor shares the ridge");
            horizon.push((ridge, nb, nb_slot));
        }
    }

    // orphaned candidates to redistribute
    let mut orphans: Vec<usize> = Vec::new();
    for &fv in &visible {
        orphans.extend(hull.facets[fv].outside.drain(..));
        hull.facets[fv].alive = false;
    }

    // build the new facets and wire adjacency
    let interior = hull.interior.clone();
    let mut ridge_map: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
    let mut new_ids: Vec<usize> = Vec::with_capacity(horizon.len());
    for (ridge, nb, nb_slot) in horizon {
        let mut verts = ridge.clone();
        verts.push(apex);
        let (normal, offset) = facet_plane(&hull.points, &verts, &interior)?;
        let fid = hull.facets.len();
        let mut neighbors = vec![usize::MAX; verts.len()];
        // ridge omitting the apex (the last vertex) leads back to `nb`
        neighbors[verts.len() - 1] = nb;
        hull.facets[nb].neighbors[nb_slot] = fid;
        // ridges omitting a ridge vertex pair up among the new facets
        for slot in 0..verts.len() - 1 {
            let mut key: Vec<usize> = verts
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != slot)
                .map(|(_, &v)| v)
                .collect();
            key.sort_unstable();
            match ridge_map.remove(&key) {
                Some((other_fid, other_slot)) => {
                    neighbors[slot] = other_fid;
                    hull.facets[other_fid].neighbors[other_slot] = fid;
                }
                None => {
                    ridge_map.insert(key, (fid, slot));
                }
            }
        }
        hull.facets.push(HullFacet {
            verts,
            normal,
            offset,
            neighbors,
            outside: Vec::new(),
            alive: true,
        });
        new_ids.push(fid);
    }
    if !ridge_map.is_empty() {
        // the horizon failed to close into a ridge cycle; the floating
        // point state is inconsistent and the hull cannot be trusted
        return Err(Error::DegenerateInput);
    }

    // repark orphans on the new facets only: anything inside those is
    // inside the grown hull
    let first_new = new_ids[0];
    for p in orphans {
        if p == apex {
            continue;
        }
        park_point(hull, p, first_new);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[f64]]) -> Vec<Vector> {
        raw.iter().map(|c| Vector::new(c.to_vec())).collect()
    }

    #[test]
    fn triangle_hull_has_three_edges() {
        let hull = build(
            pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], &[0.25, 0.25]]),
            2,
        )
        .unwrap();
        assert_eq!(hull.alive_facets().count(), 3);
    }

    #[test]
    fn cube_hull_is_twelve_triangles() {
        let mut corners = Vec::new();
        for i in 0..8u32 {
            corners.push(Vector::new(vec![
                (i & 1) as f64,
                ((i >> 1) & 1) as f64,
                ((i >> 2) & 1) as f64,
            ]));
        }
        let hull = build(corners, 3).unwrap();
        assert_eq!(hull.alive_facets().count(), 12);
        // every corner satisfies every facet inequality
        for f in hull.alive_facets() {
            for p in &hull.points {
                assert!(f.signed_dist(p) >= -hull.eps);
            }
        }
    }

    #[test]
    fn collinear_points_are_degenerate() {
        let r = build(pts(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 2.0]]), 2);
        assert_eq!(r.unwrap_err(), Error::DegenerateInput);
    }
}
