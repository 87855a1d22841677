//! Block-structured operators on `m x m` block matrices with `n x n` blocks.
//!
//! Index conventions: entry `(r, s)` of block `(i, j)` lives at dense position
//! `(i*n + r, j*n + s)`. The partial transpose swaps block positions without
//! transposing block contents; the reshuffle exchanges the roles of block and
//! intra-block indices. Both are pure entry permutations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, Matrix};

#[derive(Clone, Debug, PartialEq)]
pub struct BlockMatrix {
    m: usize,
    n: usize,
    dense: Matrix,
}

impl BlockMatrix {
    pub fn new(m: usize, n: usize, dense: Matrix) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidSpec(format!(
                "block structure {m}x{n} must be positive"
            )));
        }
        if dense.dims() != (m * n, m * n) {
            return Err(Error::DimensionMismatch {
                op: "block matrix",
                left: dense.dims(),
                right: (m * n, m * n),
            });
        }
        Ok(BlockMatrix { m, n, dense })
    }

    pub fn zeros(m: usize, n: usize) -> Self {
        BlockMatrix {
            m,
            n,
            dense: Matrix::zeros(m * n, m * n),
        }
    }

    /// Number of blocks per side.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Size of each block.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dense(&self) -> &Matrix {
        &self.dense
    }

    pub fn into_dense(self) -> Matrix {
        self.dense
    }

    /// Entry `(r, s)` of block `(i, j)`.
    #[inline]
    pub fn entry(&self, i: usize, j: usize, r: usize, s: usize) -> Complex64 {
        self.dense[(i * self.n + r, j * self.n + s)]
    }

    pub fn block(&self, i: usize, j: usize) -> Matrix {
        self.dense.submatrix(i * self.n, j * self.n, self.n, self.n)
    }

    pub fn from_blocks(
        m: usize,
        n: usize,
        mut f: impl FnMut(usize, usize) -> Matrix,
    ) -> Result<Self> {
        let mut out = BlockMatrix::zeros(m, n);
        for i in 0..m {
            for j in 0..m {
                let b = f(i, j);
                if b.dims() != (n, n) {
                    return Err(Error::DimensionMismatch {
                        op: "from_blocks",
                        left: b.dims(),
                        right: (n, n),
                    });
                }
                for r in 0..n {
                    for s in 0..n {
                        out.dense[(i * n + r, j * n + s)] = b[(r, s)];
                    }
                }
            }
        }
        Ok(out)
    }

    fn permuted(&self, m: usize, n: usize, f: impl Fn(usize, usize) -> Complex64) -> BlockMatrix {
        BlockMatrix {
            m,
            n,
            dense: Matrix::from_fn(m * n, m * n, f),
        }
    }
}

/// `A^tau = [A_{j,i}]`.
pub fn partial_transpose(a: &BlockMatrix) -> BlockMatrix {
    let n = a.n;
    a.permuted(a.m, n, |row, col| {
        let (i, r) = (row / n, row % n);
        let (j, s) = (col / n, col % n);
        a.entry(j, i, r, s)
    })
}

/// The usual transpose `[A_{j,i}^T]`.
pub fn full_transpose(a: &BlockMatrix) -> BlockMatrix {
    BlockMatrix {
        m: a.m,
        n: a.n,
        dense: a.dense.transpose(),
    }
}

/// `tr_1 A = sum_i A_{i,i}`, an `n x n` matrix.
pub fn partial_trace_1(a: &BlockMatrix) -> Matrix {
    let n = a.n;
    let mut out = Matrix::zeros(n, n);
    for i in 0..a.m {
        for r in 0..n {
            for s in 0..n {
                out[(r, s)] += a.entry(i, i, r, s);
            }
        }
    }
    out
}

/// `tr_2 A = [tr A_{i,j}]`, an `m x m` matrix.
pub fn partial_trace_2(a: &BlockMatrix) -> Matrix {
    Matrix::from_fn(a.m, a.m, |i, j| (0..a.n).map(|r| a.entry(i, j, r, r)).sum())
}

/// `D_A`: the diagonal blocks of `A` with off-diagonal blocks zeroed.
pub fn block_diag(a: &BlockMatrix) -> BlockMatrix {
    let n = a.n;
    a.permuted(a.m, n, |row, col| {
        if row / n == col / n {
            a.dense[(row, col)]
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// The `m x m` block matrix with every block `I_n`, i.e. `J_m (x) I_n`.
pub fn j_block(m: usize, n: usize) -> BlockMatrix {
    BlockMatrix {
        m,
        n,
        dense: Matrix::from_fn(m * n, m * n, |row, col| {
            if row % n == col % n {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }),
    }
}

/// The reshuffle: an `(n, m)` block matrix whose block `(r, s)` is
/// `B_{r,s} = [a^{i,j}_{r,s}]_{i,j}`. Dense position `(r*m + i, s*m + j)`
/// receives source position `(i*n + r, j*n + s)`.
pub fn reshuffle(a: &BlockMatrix) -> BlockMatrix {
    let (m, n) = (a.m, a.n);
    BlockMatrix {
        m: n,
        n: m,
        dense: Matrix::from_fn(m * n, m * n, |row, col| {
            let (r, i) = (row / m, row % m);
            let (s, j) = (col / m, col % m);
            a.entry(i, j, r, s)
        }),
    }
}

/// `I_m (x) x` with block structure `(m, x.rows())`.
pub fn embed_left(x: &Matrix, m: usize) -> Result<BlockMatrix> {
    x.require_square("embed_left")?;
    BlockMatrix::new(m, x.rows(), kron(&Matrix::identity(m), x))
}

/// `x (x) I_n` with block structure `(x.rows(), n)`.
pub fn embed_right(x: &Matrix, n: usize) -> Result<BlockMatrix> {
    x.require_square("embed_right")?;
    BlockMatrix::new(x.rows(), n, kron(x, &Matrix::identity(n)))
}
