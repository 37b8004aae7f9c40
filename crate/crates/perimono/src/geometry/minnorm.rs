//! Minimum-norm-point projection onto the convex hull of a finite point set.
//!
//! Wolfe's active-set scheme over the vertex set: keep a small affinely
//! independent "corral", jump to the affine minimizer over the corral, and
//! add the most violating vertex until the optimality certificate
//! `<y - x*, v - x*> <= eps` holds for every vertex `v`. On polytopes the
//! scheme terminates in finitely many steps, which is what the projection
//! certificates downstream (Hausdorff witnesses, cube-meets-body tests)
//! rely on.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use crate::error::Error;
use crate::tol;
use crate::vector::Vector;
use crate::{math, Result};

/// Result of projecting a point onto a convex set.
#[derive(Clone, Debug)]
pub struct Projection {
    /// The closest point of the set.
    pub point: Vector,
    /// Euclidean distance from the query to `point`.
    pub dist: f64,
}

/// Projects `target` onto `conv(points)`.
///
/// Errors with [`Error::NoConvergence`] if the iteration cap is exceeded
/// before the optimality certificate holds.
pub fn min_norm_point(points: &[Vector], target: &Vector) -> Result<Projection> {
    debug_assert!(!points.is_empty());
    let shifted: Vec<Vector> = points.iter().map(|p| p.sub(target)).collect();

    // squared length scale of the instance, for the stopping certificate
    let scale_sq = shifted
        .iter()
        .map(|q| q.norm_sq())
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let eps = tol::PROJ_REL * scale_sq;

    // start from the single closest vertex
    let mut best = 0;
    let mut best_sq = shifted[0].norm_sq();
    for (i, q) in shifted.iter().enumerate().skip(1) {
        let d = q.norm_sq();
        if d < best_sq {
            best = i;
            best_sq = d;
        }
    }

    let mut corral: Vec<usize> = vec![best];
    let mut weights: Vec<f64> = vec![1.0];
    let mut x = shifted[best].clone();

    for _ in 0..tol::PROJ_MAX_ITER {
        // linear minimization oracle over all vertices
        let mut j_star = 0;
        let mut min_dot = f64::INFINITY;
        for (j, q) in shifted.iter().enumerate() {
            let d = x.dot(q);
            if d < min_dot {
                min_dot = d;
                j_star = j;
            }
        }
        if x.norm_sq() - min_dot <= eps {
            return Ok(finish(x, target));
        }
        if corral.contains(&j_star) {
            // numerical stall: the certificate is as good as it will get
            return Ok(finish(x, target));
        }
        corral.push(j_star);
        weights.push(0.0);

        // minor cycle: move to the affine minimizer, trimming the corral
        // until the minimizer is a convex combination
        let mut guard = 0;
        loop {
            guard += 1;
            if guard > 4 * (corral.len() + 4) {
                return Ok(finish(x, target));
            }
            match affine_minimizer(&shifted, &corral) {
                Some(beta) => {
                    if beta.iter().all(|&b| b > -1e-14) {
                        weights = beta.iter().map(|&b| b.max(0.0)).collect();
                        renormalize(&mut weights);
                        x = combine(&shifted, &corral, &weights);
                        break;
                    }
                    // step as far toward beta as the simplex allows
                    let mut theta = 1.0f64;
                    for (i, (&w, &b)) in weights.iter().zip(&beta).enumerate() {
                        let _ = i;
                        if b < w {
                            theta = theta.min(w / (w - b));
                        }
                    }
                    for (w, &b) in weights.iter_mut().zip(&beta) {
                        *w = (1.0 - theta) * *w + theta * b;
                    }
                    // drop points that hit zero weight
                    let mut i = 0;
                    while i < corral.len() {
                        if weights[i] <= 1e-13 {
                            corral.swap_remove(i);
                            weights.swap_remove(i);
                        } else {
                            i += 1;
                        }
                    }
                    renormalize(&mut weights);
                    x = combine(&shifted, &corral, &weights);
                }
                None => {
                    // affinely dependent corral: drop the lightest member
                    if corral.len() <= 1 {
                        return Ok(finish(x, target));
                    }
                    let mut drop = 0;
                    let mut w_min = f64::INFINITY;
                    for (i, &w) in weights.iter().enumerate() {
                        if w < w_min {
                            w_min = w;
                            drop = i;
                        }
                    }
                    corral.swap_remove(drop);
                    weights.swap_remove(drop);
                    renormalize(&mut weights);
                    x = combine(&shifted, &corral, &weights);
                }
            }
        }
    }
    Err(Error::NoConvergence)
}

fn finish(x: Vector, target: &Vector) -> Projection {
    let dist = x.norm();
    Projection {
        point: x.add(target),
        dist,
    }
}

fn renormalize(weights: &mut [f64]) {
    let s: f64 = weights.iter().sum();
    if s > 0.0 {
        for w in weights.iter_mut() {
            *w /= s;
        }
    }
}

fn combine(points: &[Vector], corral: &[usize], weights: &[f64]) -> Vector {
    let mut x = Vector::zeros(points[corral[0]].dim());
    for (&i, &w) in corral.iter().zip(weights) {
        x = x.axpy(w, &points[i]);
    }
    x
}

/// Barycentric weights (summing to 1, possibly negative) of the point of
/// minimal norm in the affine hull of `points[corral]`. `None` when the
/// corral is affinely dependent.
fn affine_minimizer(points: &[Vector], corral: &[usize]) -> Option<Vec<f64>> {
    let k = corral.len();
    if k == 1 {
        return Some(vec![1.0]);
    }
    // Lagrangian system [G 1; 1^T 0] [beta; mu] = [0; 1]
    let m = k + 1;
    let mut a = vec![0.0; m * m];
    let mut b = vec![0.0; m];
    for i in 0..k {
        for j in i..k {
            let g = points[corral[i]].dot(&points[corral[j]]);
            a[i * m + j] = g;
            a[j * m + i] = g;
        }
        a[i * m + k] = 1.0;
        a[k * m + i] = 1.0;
    }
    b[k] = 1.0;
    let sol = math::solve_dense(&mut a, &mut b, m)?;
    Some(sol[..k].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec())
    }

    #[test]
    fn projects_onto_square_face() {
        let pts = [
            v(&[0.0, 0.0]),
            v(&[1.0, 0.0]),
            v(&[1.0, 1.0]),
            v(&[0.0, 1.0]),
        ];
        let proj = min_norm_point(&pts, &v(&[2.0, 0.5])).unwrap();
        assert!((proj.dist - 1.0).abs() < 1e-10);
        assert!((proj.point[0] - 1.0).abs() < 1e-10);
        assert!((proj.point[1] - 0.5).abs() < 1e-10);
    }

    #[test]
    fn interior_point_projects_to_itself() {
        let pts = [
            v(&[0.0, 0.0]),
            v(&[1.0, 0.0]),
            v(&[1.0, 1.0]),
            v(&[0.0, 1.0]),
        ];
        let y = v(&[0.25, 0.75]);
        let proj = min_norm_point(&pts, &y).unwrap();
        assert!(proj.dist < 1e-9);
    }

    #[test]
    fn certificate_holds_on_simplex_corner() {
        let pts = [v(&[1.0, 1.0, 1.0]), v(&[2.0, 1.0, 1.0]), v(&[1.0, 2.0, 1.0])];
        let y = v(&[0.0, 0.0, 0.0]);
        let proj = min_norm_point(&pts, &y).unwrap();
        let gap = y.sub(&proj.point);
        for p in &pts {
            assert!(gap.dot(&p.sub(&proj.point)) <= 1e-8 * 4.0);
        }
    }
}
