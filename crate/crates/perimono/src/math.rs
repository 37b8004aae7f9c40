//! Small numeric helpers: compensated summation and tiny dense solves.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

/// Neumaier-compensated sum; order-independent to ~1 ulp for our sizes.
pub fn neumaier_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Solve the dense system `a x = b` in place (partial pivoting).
/// `a` is row-major k x k. Returns `None` when the pivot collapses,
/// i.e. the system is numerically singular.
pub fn solve_dense(a: &mut [f64], b: &mut [f64], k: usize) -> Option<Vec<f64>> {
    debug_assert_eq!(a.len(), k * k);
    debug_assert_eq!(b.len(), k);
    if k == 0 {
        return Some(Vec::new());
    }
    let mut perm: Vec<usize> = (0..k).collect();
    for col in 0..k {
        let mut best = col;
        let mut best_abs = a[perm[col] * k + col].abs();
        for (row, &p) in perm.iter().enumerate().skip(col + 1) {
            let v = a[p * k + col].abs();
            if v > best_abs {
                best = row;
                best_abs = v;
            }
        }
        if best_abs < f64::MIN_POSITIVE.sqrt() {
            return None;
        }
        perm.swap(col, best);
        let prow = perm[col];
        let pivot = a[prow * k + col];
        for &row in perm.iter().skip(col + 1) {
            let factor = a[row * k + col] / pivot;
            if factor == 0.0 {
                continue;
            }
            a[row * k + col] = 0.0;
            for j in (col + 1)..k {
                a[row * k + j] -= factor * a[prow * k + j];
            }
            b[row] -= factor * b[prow];
        }
    }
    let mut x = vec![0.0; k];
    for col in (0..k).rev() {
        let row = perm[col];
        let mut acc = b[row];
        for j in (col + 1)..k {
            acc -= a[row * k + j] * x[j];
        }
        x[col] = acc / a[row * k + col];
    }
    Some(x)
}

/// Determinant of a k x k row-major matrix via LU (destroys `a`).
pub fn det_dense(a: &mut [f64], k: usize) -> f64 {
    debug_assert_eq!(a.len(), k * k);
    let mut det = 1.0;
    for col in 0..k {
        let mut best = col;
        let mut best_abs = a[col * k + col].abs();
        for row in (col + 1)..k {
            let v = a[row * k + col].abs();
            if v > best_abs {
                best = row;
                best_abs = v;
            }
        }
        if best_abs == 0.0 {
            return 0.0;
        }
        if best != col {
            for j in 0..k {
                a.swap(col * k + j, best * k + j);
            }
            det = -det;
        }
        let pivot = a[col * k + col];
        det *= pivot;
        for row in (col + 1)..k {
            let factor = a[row * k + col] / pivot;
            for j in col..k {
                a[row * k + j] -= factor * a[col * k + j];
            }
        }
    }
    det
}

/// Measure of the simplex spanned by `edges` (each an edge vector from a
/// common apex) in any ambient dimension: sqrt(det Gram) / k!.
pub fn simplex_measure(edges: &[&[f64]]) -> f64 {
    let k = edges.len();
    if k == 0 {
        return 1.0; // 0-simplex: counting measure
    }
    let mut gram = vec![0.0; k * k];
    for i in 0..k {
        for j in i..k {
            let d = dot(edges[i], edges[j]);
            gram[i * k + j] = d;
            gram[j * k + i] = d;
        }
    }
    let det = det_dense(&mut gram, k);
    let mut fact = 1.0;
    for i in 2..=k {
        fact *= i as f64;
    }
    det.max(0.0).sqrt() / fact
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_2x2() {
        let mut a = [2.0, 1.0, 1.0, 3.0];
        let mut b = [5.0, 10.0];
        let x = solve_dense(&mut a, &mut b, 2).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn singular_is_none() {
        let mut a = [1.0, 2.0, 2.0, 4.0];
        let mut b = [1.0, 2.0];
        assert!(solve_dense(&mut a, &mut b, 2).is_none());
    }

    #[test]
    fn unit_triangle_measure() {
        let e1 = [1.0, 0.0];
        let e2 = [0.0, 1.0];
        assert!((simplex_measure(&[&e1, &e2]) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn embedded_segment_measure() {
        let e = [3.0, 4.0];
        assert!((simplex_measure(&[&e]) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn neumaier_cancels() {
        let s = neumaier_sum([1e16, 1.0, -1e16]);
        assert_eq!(s, 1.0);
    }
}
