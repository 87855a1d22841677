//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation is a 2x2 unitary `U = diag(1, e^{-i phi}) * R(c, s)` acting on
//! rows/columns `p, q`: the phase factor makes `a_pq` real and positive, and the
//! real rotation then annihilates it. Sweeps visit every pair `p < q` in order
//! and stop once the off-diagonal Frobenius mass falls to
//! `JACOBI_TOL * ||A||_F`.

use num_complex::Complex64;

use super::{Matrix, Spectrum, SpectrumKind, JACOBI_TOL, MAX_SWEEPS};
use crate::error::{Error, Result};

/// Eigen-decomposition `A = V diag(values) V*` with values non-increasing.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Spectrum,
    /// Eigenvectors as columns, ordered like `values`.
    pub vectors: Matrix,
}

pub fn hermitian_eigvals(a: &Matrix) -> Result<Spectrum> {
    let (values, _) = jacobi(a, false)?;
    Ok(Spectrum::new_sorted(
        values,
        SpectrumKind::EigenvaluesHermitian,
    ))
}

pub fn hermitian_eigen(a: &Matrix) -> Result<HermitianEigen> {
    let (values, vectors) = jacobi(a, true)?;
    let vectors = vectors.expect("vectors requested");
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let sorted: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let vectors = Matrix::from_fn(n, n, |r, c| vectors[(r, order[c])]);
    Ok(HermitianEigen {
        values: Spectrum::new_sorted(sorted, SpectrumKind::EigenvaluesHermitian),
        vectors,
    })
}

fn off_diagonal_norm(h: &[Complex64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += h[i * n + j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn jacobi(a: &Matrix, want_vectors: bool) -> Result<(Vec<f64>, Option<Matrix>)> {
    a.require_hermitian()?;
    let n = a.rows();
    // Symmetrize so the rotations see an exactly Hermitian input.
    let mut work = Matrix::from_fn(n, n, |i, j| 0.5 * (a[(i, j)] + a[(j, i)].conj()));
    let target = JACOBI_TOL * work.frobenius_norm();
    let mut vectors = want_vectors.then(|| Matrix::identity(n));

    let h = work.as_mut_slice();
    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_norm(h, n) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = h[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let w = phase.conj();
                let app = h[p * n + p].re;
                let aqq = h[q * n + q].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta.is_infinite() {
                    0.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let sw = w * s;
                let cw = w * c;

                // Columns: X = A U.
                for k in 0..n {
                    let akp = h[k * n + p];
                    let akq = h[k * n + q];
                    h[k * n + p] = akp * c - akq * sw;
                    h[k * n + q] = akp * s + akq * cw;
                }
                // Rows: U* X.
                let sp = phase * s;
                let cp = phase * c;
                for k in 0..n {
                    let xpk = h[p * n + k];
                    let xqk = h[q * n + k];
                    h[p * n + k] = xpk * c - xqk * sp;
                    h[q * n + k] = xpk * s + xqk * cp;
                }
                h[p * n + q] = Complex64::new(0.0, 0.0);
                h[q * n + p] = Complex64::new(0.0, 0.0);
                h[p * n + p] = Complex64::new(app - t * r, 0.0);
                h[q * n + q] = Complex64::new(aqq + t * r, 0.0);

                if let Some(v) = vectors.as_mut() {
                    let v = v.as_mut_slice();
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = vkp * c - vkq * sw;
                        v[k * n + q] = vkp * s + vkq * cw;
                    }
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }
    let values = (0..n).map(|i| h[i * n + i].re).collect();
    Ok((values, vectors))
}

/// Singular values as the `min(rows, cols)` largest eigenvalues of the
/// Hermitian dilation `[[0, A], [A*, 0]]`, whose spectrum is `±s_j` padded
/// with zeros. Unlike square roots of Gram eigenvalues this keeps absolute
/// accuracy `O(eps ||A||)` for small singular values.
pub fn singular_values(a: &Matrix) -> Result<Spectrum> {
    let (p, q) = a.dims();
    let eig = hermitian_eigvals(&dilation(a))?;
    let values = eig
        .values()
        .iter()
        .take(p.min(q))
        .map(|&s| s.max(0.0))
        .collect();
    Ok(Spectrum::new_sorted(values, SpectrumKind::SingularValues))
}

fn dilation(a: &Matrix) -> Matrix {
    let (p, q) = a.dims();
    Matrix::from_fn(p + q, p + q, |i, j| match (i < p, j < p) {
        (true, false) => a[(i, j - p)],
        (false, true) => a[(j, i - p)].conj(),
        _ => Complex64::new(0.0, 0.0),
    })
}

/// `|X| = (X* X)^{1/2}`, assembled from the positive eigenpairs of the
/// dilation: an eigenvector `(u, v) / sqrt(2)` for `+s` contributes
/// `s v v*`.
pub fn matrix_abs(x: &Matrix) -> Result<Matrix> {
    x.require_square("matrix_abs")?;
    let n = x.rows();
    let eig = hermitian_eigen(&dilation(x))?;
    let w = &eig.vectors;
    let positive: Vec<(usize, f64)> = eig
        .values
        .values()
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, l)| l > 0.0)
        .collect();
    let mut out = Matrix::from_fn(n, n, |i, j| {
        positive
            .iter()
            .map(|&(k, l)| w[(n + i, k)] * w[(n + j, k)].conj() * (2.0 * l))
            .sum()
    });
    out.hermitize_upper();
    Ok(out)
}
