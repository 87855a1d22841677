//! Instance values produced by the generators and consumed by the theorem
//! checks.

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A small integer matrix for the exact scalar checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Parse(format!(
                "integer matrix {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        IntMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Block(BlockMatrix),
    Matrix(Matrix),
    /// Two matrices of equal shape, `(M, N)`.
    Pair {
        left: Matrix,
        right: Matrix,
    },
    Int(IntMatrix),
    /// Only a block structure; used by checks on fixed matrices.
    Dims {
        m: usize,
        n: usize,
    },
}

impl Instance {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Instance::Block(_) => "block matrix",
            Instance::Matrix(_) => "matrix",
            Instance::Pair { .. } => "matrix pair",
            Instance::Int(_) => "integer matrix",
            Instance::Dims { .. } => "dimensions",
        }
    }

    pub fn as_block(&self) -> Option<&BlockMatrix> {
        match self {
            Instance::Block(b) => Some(b),
            _ => None,
        }
    }
}
