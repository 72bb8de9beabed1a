//! Cyclic Jacobi eigensolver for small dense real symmetric matrices.
//!
//! Used for the 8x8 Hermitian Bell operators of the general see-saw via the
//! standard real embedding; matrices never exceed 16x16, where Jacobi is
//! simple, robust and dependency-free.

/// Eigendecomposition `A = V diag(w) V^T` of a symmetric matrix given in
/// row-major order. Returns `(eigenvalues, eigenvectors)` with eigenvector
/// `i` stored in column `i` of the returned matrix.
pub fn symmetric_eigen(n: usize, a: &[f64]) -> (Vec<f64>, Vec<f64>) {
    debug_assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let tol = 1e-12 * off_diagonal_norm(&m, n).max(1.0);
    for _sweep in 0..100 {
        if off_diagonal_norm(&m, n) < tol.min(1e-12) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
    }
    let w = (0..n).map(|i| m[i * n + i]).collect();
    (w, v)
}

fn off_diagonal_norm(m: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += m[p * n + q] * m[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}

fn rotate(m: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    if apq.abs() < 1e-300 {
        return;
    }
    let app = m[p * n + p];
    let aqq = m[q * n + q];
    // stable rotation angle (Numerical Recipes convention)
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        1.0 / (theta - (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    for k in 0..n {
        let mkp = m[k * n + p];
        let mkq = m[k * n + q];
        m[k * n + p] = c * mkp - s * mkq;
        m[k * n + q] = s * mkp + c * mkq;
    }
    for k in 0..n {
        let mpk = m[p * n + k];
        let mqk = m[q * n + k];
        m[p * n + k] = c * mpk - s * mqk;
        m[q * n + k] = s * mpk + c * mqk;
    }
    m[p * n + q] = 0.0;
    m[q * n + p] = 0.0;
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}

/// Index of the largest eigenvalue and the corresponding eigenvector.
pub fn principal_eigenvector(n: usize, a: &[f64]) -> (f64, Vec<f64>) {
    let (w, v) = symmetric_eigen(n, a);
    let mut best = 0;
    for i in 1..n {
        if w[i] > w[best] {
            best = i;
        }
    }
    let vec = (0..n).map(|k| v[k * n + best]).collect();
    (w[best], vec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizes_known_matrix() {
        // eigenvalues of [[2,1],[1,2]] are 1 and 3
        let (mut w, _) = symmetric_eigen(2, &[2.0, 1.0, 1.0, 2.0]);
        w.sort_by(f64::total_cmp);
        assert!((w[0] - 1.0).abs() < 1e-12);
        assert!((w[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn reconstructs_random_symmetric_matrix() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let n = 9;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let x: f64 = rng.random_range(-1.0..1.0);
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        let (w, v) = symmetric_eigen(n, &a);
        // check A v_i = w_i v_i columnwise
        for i in 0..n {
            for r in 0..n {
                let mut av = 0.0;
                for k in 0..n {
                    av += a[r * n + k] * v[k * n + i];
                }
                assert!((av - w[i] * v[r * n + i]).abs() < 1e-9);
            }
        }
        // orthonormality
        for i in 0..n {
            for j in 0..n {
                let mut dot = 0.0;
                for k in 0..n {
                    dot += v[k * n + i] * v[k * n + j];
                }
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn principal_pair_is_the_top_one() {
        let (w, v) = principal_eigenvector(2, &[0.0, 2.0, 2.0, 3.0]);
        assert!((w - 4.0).abs() < 1e-12);
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}
