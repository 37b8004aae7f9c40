//! The `ConvexPolytope` type and its construction pipeline.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use super::frame::Frame;
use super::hull;
use super::minnorm::{min_norm_point, Projection};
use crate::error::Error;
use crate::math;
use crate::tol;
use crate::vector::Vector;
use crate::Result;

/// One facet of a polytope: the face supported by
/// `{x : <normal, x> = offset}` with the inner-normal convention
/// (`<normal, x> >= offset` on the body).
#[derive(Clone, Debug)]
pub struct Facet {
    /// Inner unit normal.
    pub normal: Vector,
    pub offset: f64,
    /// (n-1)-dimensional Hausdorff measure of the facet
    /// (counting measure for the endpoints of a segment).
    pub measure: f64,
    /// Measure-weighted centroid of the facet.
    pub centroid: Vector,
    /// Indices of the polytope vertices that are corners of this facet.
    pub vertex_ids: Vec<usize>,
}

/// A full-dimensional convex polytope in V-representation with cached
/// facet data. Construction goes through [`ConvexPolytope::hull`], so the
/// vertex list always holds extreme points only.
#[derive(Clone, Debug)]
pub struct ConvexPolytope {
    dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Facet>,
    diameter: f64,
}

impl ConvexPolytope {
    /// Convex hull of `points` in ambient dimension `dim >= 1`.
    ///
    /// Fails with [`Error::DegenerateInput`] when the points span an affine
    /// subspace of dimension `< dim` (within the geometric tolerance) and
    /// with [`Error::DimensionMismatch`] when a point has the wrong length.
    pub fn hull(points: &[Vector], dim: usize) -> Result<Self> {
        if points.is_empty() || dim == 0 {
            return Err(Error::DegenerateInput);
        }
        if points.iter().any(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch);
        }
        if dim == 1 {
            return Self::hull_dim1(points);
        }
        let deduped = dedup_points(points);
        let h = hull::build(deduped, dim)?;
        Self::from_simplicial(h, dim)
    }

    fn hull_dim1(points: &[Vector]) -> Result<Self> {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in points {
            lo = lo.min(p[0]);
            hi = hi.max(p[0]);
        }
        let span = hi - lo;
        if !(span > tol::GEO_REL * span.abs().max(lo.abs()).max(hi.abs()).max(1e-300))
            || span <= 0.0
        {
            return Err(Error::DegenerateInput);
        }
        let a = Vector::new(vec![lo]);
        let b = Vector::new(vec![hi]);
        let facets = vec![
            Facet {
                normal: Vector::new(vec![1.0]),
                offset: lo,
                measure: 1.0,
                centroid: a.clone(),
                vertex_ids: vec![0],
            },
            Facet {
                normal: Vector::new(vec![-1.0]),
                offset: -hi,
                measure: 1.0,
                centroid: b.clone(),
                vertex_ids: vec![1],
            },
        ];
        Ok(ConvexPolytope {
            dim: 1,
            vertices: vec![a, b],
            facets,
            diameter: span,
        })
    }

    /// Merges coplanar simplicial facets, extracts facet corners, and
    /// compacts the vertex list down to extreme points.
    fn from_simplicial(h: hull::SimplicialHull, dim: usize) -> Result<Self> {
        let eps = 2.0 * h.eps;
        let alive: Vec<&hull::HullFacet> = h.alive_facets().collect();

        // union-find over facets lying in the same supporting hyperplane
        let mut parent: Vec<usize> = (0..alive.len()).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..alive.len() {
            for j in (i + 1)..alive.len() {
                if alive[i].normal.dot(&alive[j].normal) < 1.0 - 1e-6 {
                    continue;
                }
                let same_plane = alive[j].verts.iter().all(|&v| {
                    (alive[i].normal.dot(&h.points[v]) - alive[i].offset).abs() <= eps
                }) && alive[i].verts.iter().all(|&v| {
                    (alive[j].normal.dot(&h.points[v]) - alive[j].offset).abs() <= eps
                });
                if same_plane {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[rj] = ri;
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..alive.len() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }

        struct MergedFacet {
            normal: Vector,
            offset: f64,
            measure: f64,
            centroid: Vector,
            corner_pids: Vec<usize>, // indices into h.points
        }

        let mut merged: Vec<MergedFacet> = Vec::with_capacity(groups.len());
        for (_, members) in groups {
            // area-weighted plane fit over the member simplices
            let mut normal = Vector::zeros(dim);
            let mut measure = 0.0;
            let mut centroid = Vector::zeros(dim);
            let mut member_pids: Vec<usize> = Vec::new();
            for &m in &members {
                let f = alive[m];
                let simplex: Vec<&Vector> = f.verts.iter().map(|&v| &h.points[v]).collect();
                let edges: Vec<Vec<f64>> = simplex[1..]
                    .iter()
                    .map(|v| v.sub(simplex[0]).into_vec())
                    .collect();
                let edge_refs: Vec<&[f64]> = edges.iter().map(|e| e.as_slice()).collect();
                let m_area = math::simplex_measure(&edge_refs);
                let m_centroid = Vector::centroid(
                    &simplex.iter().map(|&v| v.clone()).collect::<Vec<_>>(),
                );
                normal = normal.axpy(m_area, &f.normal);
                centroid = centroid.axpy(m_area, &m_centroid);
                measure += m_area;
                member_pids.extend(f.verts.iter().copied());
            }
            member_pids.sort_unstable();
            member_pids.dedup();
            let normal = match normal.normalized() {
                Some(n) => n,
                // group of zero-measure slivers: keep the first normal
                None => alive[members[0]].normal.clone(),
            };
            let centroid = if measure > 0.0 {
                centroid.scale(1.0 / measure)
            } else {
                Vector::centroid(
                    &member_pids
                        .iter()
                        .map(|&p| h.points[p].clone())
                        .collect::<Vec<_>>(),
                )
            };
            let offset = normal.dot(&centroid);
            let corner_pids = facet_corners(&h.points, &member_pids, &normal, &centroid, dim);
            merged.push(MergedFacet {
                normal,
                offset,
                measure,
                centroid,
                corner_pids,
            });
        }

        // a point is an extreme point of the polytope iff it is a corner
        // of some facet
        let mut keep: Vec<usize> = merged
            .iter()
            .flat_map(|f| f.corner_pids.iter().copied())
            .collect();
        keep.sort_unstable();
        keep.dedup();
        if keep.len() < dim + 1 {
            return Err(Error::DegenerateInput);
        }
        let remap: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let vertices: Vec<Vector> = keep.iter().map(|&p| h.points[p].clone()).collect();

        let facets: Vec<Facet> = merged
            .into_iter()
            .map(|f| Facet {
                normal: f.normal,
                offset: f.offset,
                measure: f.measure,
                centroid: f.centroid,
                vertex_ids: f.corner_pids.iter().map(|p| remap[p]).collect(),
            })
            .collect();

        let diameter = diameter_of(&vertices);
        Ok(ConvexPolytope {
            dim,
            vertices,
            facets,
            diameter,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Largest pairwise vertex distance; the length scale of every
    /// tolerance involving this body.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Absolute geometric tolerance for this body.
    pub fn geo_tol(&self) -> f64 {
        tol::GEO_REL * self.diameter.max(f64::MIN_POSITIVE)
    }

    /// Mean of the vertices; interior by convexity.
    pub fn centroid(&self) -> Vector {
        Vector::centroid(&self.vertices)
    }

    /// n-volume via the facet cone decomposition from the centroid:
    /// `sum_F measure(F) * dist(centroid, plane_F) / n`.
    pub fn volume(&self) -> f64 {
        let c = self.centroid();
        let terms = self
            .facets
            .iter()
            .map(|f| f.measure * (f.normal.dot(&c) - f.offset).max(0.0));
        math::neumaier_sum(terms) / self.dim as f64
    }

    /// Point membership within an absolute tolerance.
    pub fn contains_point(&self, p: &Vector, eps: f64) -> bool {
        self.facets
            .iter()
            .all(|f| f.normal.dot(p) - f.offset >= -eps)
    }

    /// `true` iff every vertex of `other` satisfies every facet inequality
    /// of `self` within the geometric tolerance.
    pub fn contains(&self, other: &ConvexPolytope) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch);
        }
        let eps = self.geo_tol().max(other.geo_tol());
        Ok(other
            .vertices
            .iter()
            .all(|v| self.contains_point(v, eps)))
    }

    /// Nearest point of the polytope with its distance and an optimality
    /// certificate from the minimum-norm solver.
    pub fn project_point(&self, y: &Vector) -> Result<Projection> {
        if y.dim() != self.dim {
            return Err(Error::DimensionMismatch);
        }
        min_norm_point(&self.vertices, y)
    }

    /// Exact translate: vertex and offset shift, measures unchanged.
    pub fn translate(&self, t: &Vector) -> ConvexPolytope {
        ConvexPolytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.add(t)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: f.offset + f.normal.dot(t),
                    measure: f.measure,
                    centroid: f.centroid.add(t),
                    vertex_ids: f.vertex_ids.clone(),
                })
                .collect(),
            diameter: self.diameter,
        }
    }

    /// Exact dilation by `lambda > 0` about the origin: measures scale by
    /// `lambda^(n-1)`.
    pub fn scaled(&self, lambda: f64) -> ConvexPolytope {
        debug_assert!(lambda > 0.0);
        let k = lambda.powi(self.dim as i32 - 1);
        ConvexPolytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scale(lambda)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: f.offset * lambda,
                    measure: f.measure * k,
                    centroid: f.centroid.scale(lambda),
                    vertex_ids: f.vertex_ids.clone(),
                })
                .collect(),
            diameter: self.diameter * lambda,
        }
    }

    /// Checks the construction invariants: unit normals, facet
    /// inequalities on all vertices, Minkowski closure, positive volume.
    pub fn validate(&self) -> Result<()> {
        let eps = self.geo_tol();
        for f in &self.facets {
            if !f.normal.is_unit(tol::UNIT.max(1e-12)) {
                return Err(Error::DegenerateInput);
            }
            for v in &self.vertices {
                if f.normal.dot(v) - f.offset < -eps {
                    return Err(Error::DegenerateInput);
                }
            }
        }
        let total: f64 = self.facets.iter().map(|f| f.measure).sum();
        let mut closure = Vector::zeros(self.dim);
        for f in &self.facets {
            closure = closure.axpy(f.measure, &f.normal);
        }
        if closure.norm() > tol::GEO_REL * total.max(f64::MIN_POSITIVE) {
            return Err(Error::DegenerateInput);
        }
        if !(self.volume() > 0.0) {
            return Err(Error::DegenerateInput);
        }
        Ok(())
    }
}

/// Corners of a merged facet: the vertices of the lower-dimensional hull
/// of the facet's points inside its own carrier frame. Recurses down to
/// segments, where the corners are exact.
fn facet_corners(
    points: &[Vector],
    member_pids: &[usize],
    normal: &Vector,
    centroid: &Vector,
    dim: usize,
) -> Vec<usize> {
    if dim == 2 {
        // facet is a segment: extremes along its direction
        let frame = Frame::new(normal.clone(), centroid.clone());
        let coord = |p: usize| frame.to_frame(&points[p])[0];
        let lo = member_pids
            .iter()
            .copied()
            .min_by(|&a, &b| coord(a).total_cmp(&coord(b)));
        let hi = member_pids
            .iter()
            .copied()
            .max_by(|&a, &b| coord(a).total_cmp(&coord(b)));
        let mut out: Vec<usize> = lo.into_iter().chain(hi).collect();
        out.sort_unstable();
        out.dedup();
        return out;
    }
    let frame = Frame::new(normal.clone(), centroid.clone());
    let projected: Vec<Vector> = member_pids
        .iter()
        .map(|&p| frame.to_frame(&points[p]))
        .collect();
    match ConvexPolytope::hull(&projected, dim - 1) {
        Ok(local) => {
            // match local hull vertices back to point ids bit-exactly
            let mut by_bits: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
            for (i, proj) in projected.iter().enumerate() {
                by_bits
                    .entry(proj.as_slice().iter().map(|c| c.to_bits()).collect())
                    .or_insert(member_pids[i]);
            }
            let mut out = Vec::with_capacity(local.vertices().len());
            for v in local.vertices() {
                let key: Vec<u64> = v.as_slice().iter().map(|c| c.to_bits()).collect();
                match by_bits.get(&key) {
                    Some(&pid) => out.push(pid),
                    // dedup snapped the coordinates: keep everything
                    None => return member_pids.to_vec(),
                }
            }
            out.sort_unstable();
            out.dedup();
            out
        }
        // sliver facet without full-dimensional spread: keep everything
        Err(_) => member_pids.to_vec(),
    }
}

fn diameter_of(vertices: &[Vector]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            d = d.max(vertices[i].dist(&vertices[j]));
        }
    }
    d
}

fn dedup_points(points: &[Vector]) -> Vec<Vector> {
    // exact-bit dedup always; tolerance dedup only at small sizes where
    // the quadratic pass is cheap
    let mut seen: BTreeMap<Vec<u64>, ()> = BTreeMap::new();
    let mut out: Vec<Vector> = Vec::with_capacity(points.len());
    for p in points {
        let key: Vec<u64> = p.as_slice().iter().map(|c| c.to_bits()).collect();
        if seen.insert(key, ()).is_none() {
            out.push(p.clone());
        }
    }
    if out.len() <= 4096 {
        let mut lo = vec![f64::INFINITY; points[0].dim()];
        let mut hi = vec![f64::NEG_INFINITY; points[0].dim()];
        for p in &out {
            for c in 0..p.dim() {
                lo[c] = lo[c].min(p[c]);
                hi[c] = hi[c].max(p[c]);
            }
        }
        let diag: f64 = lo
            .iter()
            .zip(&hi)
            .map(|(a, b)| (b - a) * (b - a))
            .sum::<f64>()
            .sqrt();
        let eps = 1e-9 * diag.max(f64::MIN_POSITIVE);
        let mut filtered: Vec<Vector> = Vec::with_capacity(out.len());
        for p in out {
            if filtered.iter().all(|q| q.dist(&p) > eps) {
                filtered.push(p);
            }
        }
        return filtered;
    }
    out
}

/// A convex body of dimension `n-1` embedded in an ambient hyperplane:
/// the body lives in the frame coordinates of its carrier.
#[derive(Clone, Debug)]
pub struct EmbeddedPolytope {
    pub frame: Frame,
    pub body: ConvexPolytope,
}

impl EmbeddedPolytope {
    pub fn new(frame: Frame, body: ConvexPolytope) -> Self {
        debug_assert_eq!(frame.ambient_dim(), body.dim() + 1);
        EmbeddedPolytope { frame, body }
    }

    /// (n-1)-measure of the body.
    pub fn measure(&self) -> f64 {
        self.body.volume()
    }

    /// The body's vertices lifted back to ambient coordinates.
    pub fn ambient_vertices(&self) -> Vec<Vector> {
        self.body
            .vertices()
            .iter()
            .map(|v| self.frame.to_ambient(v))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec())
    }

    fn unit_square() -> ConvexPolytope {
        ConvexPolytope::hull(
            &[
                v(&[0.0, 0.0]),
                v(&[1.0, 0.0]),
                v(&[1.0, 1.0]),
                v(&[0.0, 1.0]),
            ],
            2,
        )
        .unwrap()
    }

    pub(crate) fn unit_cube() -> ConvexPolytope {
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
    fn square_discards_interior_point() {
        let p = ConvexPolytope::hull(
            &[
                v(&[0.0, 0.0]),
                v(&[1.0, 0.0]),
                v(&[1.0, 1.0]),
                v(&[0.0, 1.0]),
                v(&[0.5, 0.5]),
            ],
            2,
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        for f in p.facets() {
            assert!((f.measure - 1.0).abs() < 1e-12);
        }
        p.validate().unwrap();
    }

    #[test]
    fn cube_has_six_square_facets() {
        let c = unit_cube();
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
        let total: f64 = c.facets().iter().map(|f| f.measure).sum();
        assert!((total - 6.0).abs() < 1e-12);
        for f in c.facets() {
            assert_eq!(f.vertex_ids.len(), 4);
        }
        c.validate().unwrap();
    }

    #[test]
    fn cube_volume_is_one() {
        assert!((unit_cube().volume() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn simplex_volume_is_sixth() {
        let p = ConvexPolytope::hull(
            &[
                v(&[0.0, 0.0, 0.0]),
                v(&[1.0, 0.0, 0.0]),
                v(&[0.0, 1.0, 0.0]),
                v(&[0.0, 0.0, 1.0]),
            ],
            3,
        )
        .unwrap();
        assert!((p.volume() - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn square_contains_smaller_square() {
        let small = unit_square();
        let big = small.scaled(2.0);
        assert!(big.contains(&small).unwrap());
        assert!(!small.contains(&big).unwrap());
        assert!(small.contains(&small).unwrap());
    }

    #[test]
    fn projection_is_idempotent() {
        let p = unit_square();
        let proj = p.project_point(&v(&[2.0, 0.5])).unwrap();
        assert!((proj.dist - 1.0).abs() < 1e-9);
        let again = p.project_point(&proj.point).unwrap();
        assert!(again.dist < 1e-9);
        assert!(again.point.dist(&proj.point) < 1e-9);
    }

    #[test]
    fn interior_projection_is_identity() {
        let p = unit_square();
        let y = v(&[0.5, 0.25]);
        let proj = p.project_point(&y).unwrap();
        assert!(proj.dist < 1e-12);
        assert!(proj.point.dist(&y) < 1e-12);
    }

    #[test]
    fn dim1_segment() {
        let p = ConvexPolytope::hull(&[v(&[2.0]), v(&[-1.0]), v(&[0.5])], 1).unwrap();
        assert_eq!(p.vertices().len(), 2);
        assert!((p.volume() - 3.0).abs() < 1e-12);
        assert!((p.diameter() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn coplanar_cube_face_points_are_not_vertices() {
        // corners of the cube plus points in the middle of faces and edges
        let mut pts = unit_cube().vertices().to_vec();
        pts.push(v(&[0.5, 0.5, 0.0]));
        pts.push(v(&[0.5, 0.0, 0.0]));
        pts.push(v(&[1.0, 0.5, 0.5]));
        let p = ConvexPolytope::hull(&pts, 3).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.facets().len(), 6);
        p.validate().unwrap();
    }

    #[test]
    fn minkowski_closure_holds() {
        let c = unit_cube();
        let mut sum = Vector::zeros(3);
        for f in c.facets() {
            sum = sum.axpy(f.measure, &f.normal);
        }
        assert!(sum.norm() < 1e-12);
    }
}
