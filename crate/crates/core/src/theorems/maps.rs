use num_complex::Complex64;
use serde::Serialize;

use crate::block::BlockMatrix;
use crate::linalg::Matrix;

/// `Phi(X) = (tr X) I + X` and `Psi(X) = (tr X) I - X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Phi,
    Psi,
}

pub fn apply_map(kind: MapKind, x: &Matrix) -> Matrix {
    let n = x.rows();
    let t: Complex64 = (0..n).map(|i| x[(i, i)]).sum();
    let sign = match kind {
        MapKind::Phi => 1.0,
        MapKind::Psi => -1.0,
    };
    Matrix::from_fn(n, n, |i, j| {
        let diag = if i == j { t } else { Complex64::new(0.0, 0.0) };
        diag + x[(i, j)] * sign
    })
}

/// `[map(A_{i,j})]`, or `[map(A_{j,i})]` when `transpose_blocks` is set.
pub fn apply_map_blockwise(kind: MapKind, a: &BlockMatrix, transpose_blocks: bool) -> BlockMatrix {
    BlockMatrix::from_blocks(a.m(), a.n(), |i, j| {
        let src = if transpose_blocks {
            a.block(j, i)
        } else {
            a.block(i, j)
        };
        apply_map(kind, &src)
    })
    .expect("blocks keep their size")
}
