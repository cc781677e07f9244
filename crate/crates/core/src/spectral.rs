//! Dense symmetric eigenvalues by cyclic Jacobi rotations.

use alloc::vec::Vec;
use libm::{fabs, sqrt};

/// Sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-10;

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[p * n + q] * a[p * n + q];
            }
        }
    }
    sqrt(s)
}

/// Eigenvalues of the symmetric `n x n` row-major matrix `a`, ascending.
///
/// The matrix is consumed as scratch space. At most `10 n^2` sweeps are
/// performed; every sweep visits each pair `(p, q)` with `p < q` once.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let max_sweeps = 10 * n * n;

    for _ in 0..max_sweeps {
        if off_diagonal_norm(&a, n) < OFF_DIAGONAL_TOLERANCE {
            break;
        }
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                if fabs(t) == 0.0 {
                    continue;
                }
                rotated = true;
                // Rotate rows/columns p and q: A' = J^T A J.
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        if !rotated {
            break;
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_by_two() {
        let e = symmetric_eigenvalues(vec![1.0, -1.0, -1.0, 1.0], 2);
        assert!(fabs(e[0]) < 1e-12);
        assert!(fabs(e[1] - 2.0) < 1e-12);
    }

    #[test]
    fn diagonal_passthrough() {
        let e = symmetric_eigenvalues(vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0], 3);
        assert_eq!(e, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn trace_preserved() {
        // tridiagonal 2,-1 matrix: eigenvalues 2 - 2cos(k pi / (n+1))
        let n = 6;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = 2.0;
            if i + 1 < n {
                a[i * n + i + 1] = -1.0;
                a[(i + 1) * n + i] = -1.0;
            }
        }
        let e = symmetric_eigenvalues(a, n);
        for (k, ev) in e.iter().enumerate() {
            let expected = 2.0 - 2.0 * libm::cos((k + 1) as f64 * core::f64::consts::PI / 7.0);
            assert!(fabs(ev - expected) < 1e-10, "{ev} vs {expected}");
        }
    }
}
