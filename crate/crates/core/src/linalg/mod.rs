//! Dense complex linear algebra: the matrix type, Kronecker and Hadamard
//! products, and the Hermitian spectral kernels everything else builds on.

mod eigen;
mod matrix;

pub use eigen::{hermitian_eigen, hermitian_eigvals, matrix_abs, singular_values, HermitianEigen};
pub use matrix::Matrix;
pub use num_complex::Complex64;

use serde::Serialize;

use crate::error::{Error, Result};

/// Hermitian-check tolerance, relative to `max(1, ||M||_F)`.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Agreement tolerance for spectral identities.
pub const SPECTRAL_TOL: f64 = 1e-9;
/// Jacobi stops when the off-diagonal mass is below this fraction of `||M||_F`.
pub const JACOBI_TOL: f64 = 1e-13;
pub const MAX_SWEEPS: usize = 60;

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumKind {
    EigenvaluesHermitian,
    SingularValues,
}

/// A real spectrum in non-increasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    kind: SpectrumKind,
}

impl Spectrum {
    pub(crate) fn new_sorted(mut values: Vec<f64>, kind: SpectrumKind) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, kind }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Kronecker product; block `(i, j)` of the result is `a[i, j] * b`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (br, bc) = b.dims();
    Matrix::from_fn(a.rows() * br, a.cols() * bc, |i, j| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    })
}

pub fn hadamard(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch {
            op: "hadamard",
            left: a.dims(),
            right: b.dims(),
        });
    }
    Ok(Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        a[(i, j)] * b[(i, j)]
    }))
}

pub fn conj_transpose(a: &Matrix) -> Matrix {
    a.conj_transpose()
}

pub fn trace(a: &Matrix) -> Result<Complex64> {
    a.trace()
}

/// Row-major flattening into an `(rows * cols) x 1` column:
/// `[x11, ..., x1n, x21, ..., xmn]`.
pub fn vec(x: &Matrix) -> Matrix {
    Matrix::from_vec(x.rows() * x.cols(), 1, x.as_slice().to_vec())
        .expect("length matches by construction")
}

/// Sum of the `k` largest singular values.
pub fn kyfan_norm(a: &Matrix, k: usize) -> Result<f64> {
    let max = a.rows().min(a.cols());
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    Ok(singular_values(a)?.values()[..k].iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: usize, cols: usize, v: &[f64]) -> Matrix {
        Matrix::from_real(rows, cols, v).unwrap()
    }

    #[test]
    fn kron_examples() {
        let b = real(2, 2, &[2.0, 0.0, 0.0, 3.0]);
        assert_eq!(kron(&real(1, 1, &[1.0]), &b), b);
        assert_eq!(
            kron(&Matrix::identity(2), &Matrix::identity(2)),
            Matrix::identity(4)
        );
        let swap = real(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let expected = real(
            4,
            4,
            &[
                0.0, 0.0, 2.0, 0.0, //
                0.0, 0.0, 0.0, 3.0, //
                2.0, 0.0, 0.0, 0.0, //
                0.0, 3.0, 0.0, 0.0,
            ],
        );
        assert_eq!(kron(&swap, &b), expected);
    }

    #[test]
    fn kron_of_rectangular_factors() {
        let a = real(1, 2, &[1.0, 2.0]);
        let b = real(2, 1, &[3.0, 4.0]);
        assert_eq!(kron(&a, &b), real(2, 2, &[3.0, 6.0, 4.0, 8.0]));
    }

    #[test]
    fn hadamard_examples() {
        let a = real(2, 2, &[1.0, -2.0, 3.5, 4.0]);
        assert_eq!(hadamard(&a, &real(2, 2, &[1.0; 4])).unwrap(), a);
        assert_eq!(
            hadamard(&a, &Matrix::zeros(2, 2)).unwrap(),
            Matrix::zeros(2, 2)
        );
        assert_eq!(
            hadamard(&Matrix::diag(&[1.0, 2.0]), &Matrix::diag(&[3.0, 4.0])).unwrap(),
            Matrix::diag(&[3.0, 8.0])
        );
        assert!(matches!(
            hadamard(&a, &Matrix::zeros(2, 3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn conj_transpose_examples() {
        assert_eq!(conj_transpose(&Matrix::identity(3)), Matrix::identity(3));
        let a = Matrix::from_vec(
            2,
            2,
            vec![c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let expected = Matrix::from_vec(
            2,
            2,
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0), c(0.0, 0.0)],
        )
        .unwrap();
        assert_eq!(conj_transpose(&a), expected);
        assert_eq!(conj_transpose(&conj_transpose(&a)), a);
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(&Matrix::identity(5)).unwrap(), c(5.0, 0.0));
        assert_eq!(trace(&Matrix::zeros(3, 3)).unwrap(), c(0.0, 0.0));
        assert_eq!(
            trace(&real(2, 2, &[1.0, 9.0, 9.0, 2.0])).unwrap(),
            c(3.0, 0.0)
        );
        assert!(matches!(
            trace(&Matrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn vec_is_row_major() {
        assert_eq!(vec(&real(1, 1, &[7.0])), real(1, 1, &[7.0]));
        assert_eq!(vec(&Matrix::identity(2)), real(4, 1, &[1.0, 0.0, 0.0, 1.0]));
        assert_eq!(
            vec(&real(2, 2, &[1.0, 2.0, 3.0, 4.0])),
            real(4, 1, &[1.0, 2.0, 3.0, 4.0])
        );
    }

    #[test]
    fn kyfan_examples() {
        for k in 1..=4 {
            assert!((kyfan_norm(&Matrix::identity(4), k).unwrap() - k as f64).abs() < 1e-14);
            assert_eq!(kyfan_norm(&Matrix::zeros(4, 4), k).unwrap(), 0.0);
        }
        assert!((kyfan_norm(&Matrix::diag(&[3.0, 1.0]), 2).unwrap() - 4.0).abs() < 1e-14);
        assert!(matches!(
            kyfan_norm(&Matrix::identity(2), 3),
            Err(Error::KOutOfRange { k: 3, max: 2 })
        ));
        assert!(kyfan_norm(&Matrix::identity(2), 0).is_err());
    }
}
