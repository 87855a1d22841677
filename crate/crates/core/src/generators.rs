//! Seeded construction of the input classes the theorem checks quantify over.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::instance::{Instance, IntMatrix};
use crate::linalg::{hermitian_eigen, kron, Matrix};
use crate::rng::{rng_stream, RngStream};

pub const DEFAULT_INT_BOUND: i64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// `G G*` with `G` an `mn x rank` complex Ginibre matrix.
    Psd,
    /// Positive mixture of products `P (x) Q` of rank-one PSD factors.
    Ppt,
    /// `(G + G*) / 2`.
    Hermitian,
    /// Two complex Ginibre matrices of shape `n x m`.
    GramPair,
    /// `m x n` integers in `[-int_bound, int_bound]`.
    RealInt,
    /// `[E_ij]_{i,j=1,2}` with `E_ij` the `n x n` matrix units.
    MatrixUnitE,
    /// `J_m (x) J_n`.
    OnesKron,
    /// A square `n x n` complex Ginibre matrix.
    Ginibre,
}

impl GenKind {
    pub const ALL: [GenKind; 8] = [
        GenKind::Psd,
        GenKind::Ppt,
        GenKind::Hermitian,
        GenKind::GramPair,
        GenKind::RealInt,
        GenKind::MatrixUnitE,
        GenKind::OnesKron,
        GenKind::Ginibre,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GenKind::Psd => "psd",
            GenKind::Ppt => "ppt",
            GenKind::Hermitian => "hermitian",
            GenKind::GramPair => "gram-pair",
            GenKind::RealInt => "real-int",
            GenKind::MatrixUnitE => "matrix-unit-E",
            GenKind::OnesKron => "ones-kron",
            GenKind::Ginibre => "ginibre",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown generator kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub m: usize,
    pub n: usize,
    /// Ginibre width for `psd`, number of product terms for `ppt`.
    pub rank: Option<usize>,
    pub seed: u64,
    pub int_bound: Option<i64>,
}

impl GenSpec {
    pub fn new(kind: GenKind, m: usize, n: usize, seed: u64) -> Self {
        GenSpec {
            kind,
            m,
            n,
            rank: None,
            seed,
            int_bound: None,
        }
    }

    pub fn with_rank(mut self, rank: usize) -> Self {
        self.rank = Some(rank);
        self
    }

    pub fn with_int_bound(mut self, bound: i64) -> Self {
        self.int_bound = Some(bound);
        self
    }

    fn validate(&self) -> Result<()> {
        let (m, n) = (self.m, self.n);
        if m == 0 || n == 0 {
            return Err(Error::InvalidSpec(format!(
                "dimensions {m}x{n} must be positive"
            )));
        }
        if let Some(r) = self.rank {
            if r == 0 {
                return Err(Error::InvalidSpec("rank must be at least 1".into()));
            }
            if self.kind == GenKind::Psd && r > m * n {
                return Err(Error::InvalidSpec(format!(
                    "rank {r} exceeds m*n = {}",
                    m * n
                )));
            }
        }
        if let Some(b) = self.int_bound {
            if b < 0 {
                return Err(Error::InvalidSpec(format!(
                    "int_bound {b} must be non-negative"
                )));
            }
        }
        if self.kind == GenKind::MatrixUnitE {
            if m != 2 {
                return Err(Error::InvalidSpec(format!(
                    "matrix-unit-E is a 2x2 block matrix; got m = {m}"
                )));
            }
            if n < 2 {
                return Err(Error::InvalidSpec(
                    "matrix-unit-E needs n >= 2 (E_12 and E_21 do not exist in 1x1 matrices)"
                        .into(),
                ));
            }
        }
        Ok(())
    }
}

fn ginibre(rng: &mut RngStream, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        let (re, im) = rng.next_gaussian_pair();
        Complex64::new(re, im)
    })
}

fn gram(g: &Matrix) -> Matrix {
    let mut out = g * &g.conj_transpose();
    out.hermitize_upper();
    out
}

fn rank_one(rng: &mut RngStream, dim: usize) -> Matrix {
    gram(&ginibre(rng, dim, 1))
}

pub fn gen(spec: &GenSpec) -> Result<Instance> {
    spec.validate()?;
    let (m, n) = (spec.m, spec.n);
    let mut rng = rng_stream(spec.seed);
    let inst = match spec.kind {
        GenKind::Psd => {
            let rank = spec.rank.unwrap_or(m * n);
            Instance::Block(BlockMatrix::new(
                m,
                n,
                gram(&ginibre(&mut rng, m * n, rank)),
            )?)
        }
        GenKind::Ppt => {
            let terms = spec.rank.unwrap_or(m * n);
            let mut acc = Matrix::zeros(m * n, m * n);
            for _ in 0..terms {
                let w = rng.next_f64_open_low();
                let p = rank_one(&mut rng, m);
                let q = rank_one(&mut rng, n);
                acc += &kron(&p, &q).scaled(w);
            }
            acc.hermitize_upper();
            Instance::Block(BlockMatrix::new(m, n, acc)?)
        }
        GenKind::Hermitian => {
            let g = ginibre(&mut rng, m * n, m * n);
            let d = m * n;
            let mut h = Matrix::zeros(d, d);
            for i in 0..d {
                for j in i..d {
                    h[(i, j)] = (g[(i, j)] + g[(j, i)].conj()) * 0.5;
                }
            }
            h.hermitize_upper();
            Instance::Block(BlockMatrix::new(m, n, h)?)
        }
        GenKind::GramPair => {
            let left = ginibre(&mut rng, n, m);
            let right = ginibre(&mut rng, n, m);
            Instance::Pair { left, right }
        }
        GenKind::RealInt => {
            let b = spec.int_bound.unwrap_or(DEFAULT_INT_BOUND);
            let entries = (0..m * n).map(|_| rng.next_int_inclusive(-b, b)).collect();
            Instance::Int(IntMatrix::new(m, n, entries)?)
        }
        GenKind::MatrixUnitE => Instance::Block(matrix_unit_e(n)?),
        GenKind::OnesKron => Instance::Block(BlockMatrix::new(
            m,
            n,
            kron(&Matrix::ones(m), &Matrix::ones(n)),
        )?),
        GenKind::Ginibre => Instance::Matrix(ginibre(&mut rng, n, n)),
    };
    Ok(inst)
}

/// The 2x2 block matrix `[E_ij]` whose blocks are the `n x n` matrix units.
pub fn matrix_unit_e(n: usize) -> Result<BlockMatrix> {
    if n < 2 {
        return Err(Error::InvalidSpec(
            "matrix-unit-E needs n >= 2 (E_12 and E_21 do not exist in 1x1 matrices)".into(),
        ));
    }
    let mut e = Matrix::zeros(2 * n, 2 * n);
    for i in 0..2 {
        for j in 0..2 {
            e[(i * n + i, j * n + j)] = Complex64::new(1.0, 0.0);
        }
    }
    BlockMatrix::new(2, n, e)
}

/// Which symmetry class the off-diagonal block `K` of a 2x2 block matrix has.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OffDiagClass {
    Hermitian,
    SkewHermitian,
}

/// A PSD block matrix `[[M, K], [K*, N]]` with `K` (skew-)Hermitian.
///
/// `K` is drawn from the class, `N = Z Z* + I` is positive definite and
/// `M = K N^{-1} K* + W W*`, so the Schur complement of `N` is `W W*` and the
/// result is PSD with `K` exactly in its class.
pub fn offdiag_block(n: usize, seed: u64, class: OffDiagClass) -> Result<BlockMatrix> {
    if n == 0 {
        return Err(Error::InvalidSpec("block size must be positive".into()));
    }
    let mut rng = rng_stream(seed);
    let g = ginibre(&mut rng, n, n);
    let mut k = Matrix::from_fn(n, n, |i, j| (g[(i, j)] + g[(j, i)].conj()) * 0.5);
    k.hermitize_upper();
    if class == OffDiagClass::SkewHermitian {
        k = k.scaled_complex(Complex64::new(0.0, 1.0));
    }
    let mut nn = gram(&ginibre(&mut rng, n, n)) + Matrix::identity(n);
    nn.hermitize_upper();
    let w = ginibre(&mut rng, n, n);

    let eig = hermitian_eigen(&nn)?;
    let v = &eig.vectors;
    let inv_vals = eig.values.values();
    let n_inv = Matrix::from_fn(n, n, |i, j| {
        (0..n)
            .map(|t| v[(i, t)] * (1.0 / inv_vals[t]) * v[(j, t)].conj())
            .sum()
    });
    let mut mm = &(&k * &n_inv) * &k.conj_transpose() + gram(&w);
    mm.hermitize_upper();

    let kh = k.conj_transpose();
    BlockMatrix::from_blocks(2, n, |i, j| match (i, j) {
        (0, 0) => mm.clone(),
        (0, 1) => k.clone(),
        (1, 0) => kh.clone(),
        _ => nn.clone(),
    })
}
