use num_complex::Complex64;
use serde::Serialize;

use super::maps::{apply_map_blockwise, MapKind};
use super::registry::{lookup, InputClass, TheoremCase};
use crate::block::{
    block_diag, embed_left, embed_right, j_block, partial_trace_1, partial_trace_2,
    partial_transpose, BlockMatrix,
};
use crate::error::{Error, Result};
use crate::instance::{Instance, IntMatrix};
use crate::linalg::{hadamard, hermitian_eigvals, kron, matrix_abs, Matrix, HERMITIAN_TOL};
use crate::order::{is_ppt, is_psd, kyfan_dominates, majorizes, require_psd, sv_dominates};

/// One sub-check of a case, before evaluation.
#[derive(Clone, Debug)]
pub enum PartCheck {
    /// The slack must be PSD.
    Psd(Matrix),
    /// The derived block matrix must be PPT.
    Ppt(BlockMatrix),
    /// `x ≺ y`.
    Majorization { x: Vec<f64>, y: Vec<f64> },
    /// `factor * s_j(lhs) <= s_j(rhs)` for every `j`.
    SvDominance {
        lhs: Matrix,
        rhs: Matrix,
        factor: f64,
    },
    /// `lhs_factor * ||lhs||_(k) <= rhs_factor * ||rhs||_(k)` for every `k`.
    KyFan {
        lhs: Matrix,
        lhs_factor: f64,
        rhs: Matrix,
        rhs_factor: f64,
    },
    /// `lhs >= rhs`.
    Scalar { lhs: f64, rhs: f64 },
    /// `lhs >= rhs` in exact integer arithmetic.
    Exact { lhs: i64, rhs: i64 },
    /// The matrix must fail to be PSD.
    Violation(Matrix),
    /// `conclusion` is checked only when `premise` holds.
    Conditional {
        premise: Box<PartCheck>,
        conclusion: Box<PartCheck>,
    },
}

#[derive(Clone, Debug)]
pub struct Part {
    pub label: String,
    pub check: PartCheck,
}

impl Part {
    fn new(label: impl Into<String>, check: PartCheck) -> Self {
        Part {
            label: label.into(),
            check,
        }
    }

    fn main(check: PartCheck) -> Self {
        Part::new("main", check)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartReport {
    pub label: String,
    pub holds: bool,
    /// `None` when a conditional part was skipped.
    pub witness: Option<f64>,
    pub tolerance_used: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub premise_met: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlackReport {
    pub case_id: &'static str,
    pub trial_seed: Option<u64>,
    pub m: usize,
    pub n: usize,
    pub holds: bool,
    /// Minimum witness over the evaluated parts; `None` if every part was skipped.
    pub witness: Option<f64>,
    /// For conditional cases: whether any premise held.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub premise_met: Option<bool>,
    pub parts: Vec<PartReport>,
}

fn scaled_identity(d: usize, x: f64) -> Matrix {
    Matrix::identity(d).scaled(x)
}

fn eigvals(a: &Matrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigvals(a)?.into_values())
}

fn sum_descending(vectors: &[Vec<f64>]) -> Vec<f64> {
    let len = vectors.iter().map(Vec::len).max().unwrap_or(0);
    (0..len)
        .map(|k| {
            vectors
                .iter()
                .map(|v| v.get(k).copied().unwrap_or(0.0))
                .sum()
        })
        .collect()
}

fn expect_block<'a>(case: &TheoremCase, inst: &'a Instance) -> Result<&'a BlockMatrix> {
    inst.as_block().ok_or_else(|| wrong_class(case))
}

fn wrong_class(case: &TheoremCase) -> Error {
    Error::WrongInputClass {
        case: case.id.to_string(),
        expected: case.input_class.as_str().to_string(),
    }
}

/// Quantities shared by the cases on a single block matrix `A`.
struct BlockCtx<'a> {
    a: &'a Matrix,
    m: usize,
    n: usize,
    dim: usize,
    trace: f64,
    /// `A^τ`.
    at: Matrix,
    /// `D_A`.
    d: Matrix,
    /// `I_m ⊗ tr1 A`.
    l1: Matrix,
    /// `(tr2 A) ⊗ I_n`.
    l2: Matrix,
    /// `(tr2 A^τ) ⊗ I_n`.
    l2t: Matrix,
    /// `J_m ⊗ I_n`.
    j: Matrix,
}

impl<'a> BlockCtx<'a> {
    fn new(a: &'a BlockMatrix) -> Result<Self> {
        let (m, n) = (a.m(), a.n());
        let at = partial_transpose(a);
        let l1 = embed_left(&partial_trace_1(&at), m)?.into_dense();
        let l2 = embed_right(&partial_trace_2(a), n)?.into_dense();
        let l2t = embed_right(&partial_trace_2(&at), n)?.into_dense();
        Ok(BlockCtx {
            a: a.dense(),
            m,
            n,
            dim: m * n,
            trace: a.dense().trace()?.re,
            d: block_diag(a).into_dense(),
            at: at.into_dense(),
            l1,
            l2,
            l2t,
            j: j_block(m, n).into_dense(),
        })
    }

    fn id(&self, x: f64) -> Matrix {
        scaled_identity(self.dim, x)
    }

    fn t_i(&self) -> Matrix {
        self.id(self.trace)
    }

    /// `(tr2 D_A) ⊗ I_n`.
    fn t2d(&self) -> Matrix {
        let diag: Vec<f64> = (0..self.m)
            .map(|i| {
                (0..self.n)
                    .map(|r| self.a[(i * self.n + r, i * self.n + r)].re)
                    .sum()
            })
            .collect();
        kron(&Matrix::diag(&diag), &Matrix::identity(self.n))
    }

    fn masked(&self, x: &Matrix) -> Result<Matrix> {
        hadamard(x, &self.j)
    }
}

fn psd(label: &str, slack: Matrix) -> Part {
    Part::new(label, PartCheck::Psd(slack))
}

fn build_block_case(case: &TheoremCase, a: &BlockMatrix) -> Result<Vec<Part>> {
    let cx = BlockCtx::new(a)?;
    let (m, n) = (cx.m as f64, cx.n as f64);
    let (a_d, at, d, l1, l2, l2t) = (cx.a, &cx.at, &cx.d, &cx.l1, &cx.l2, &cx.l2t);
    let spectrum = || -> Result<(f64, f64)> {
        let ev = hermitian_eigvals(a_d)?;
        Ok((ev.min(), ev.max()))
    };
    let parts = match case.number {
        1 => vec![Part::main(PartCheck::Psd(l1 - at))],
        2 => vec![Part::main(PartCheck::Psd(l1 + at - d.scaled(2.0)))],
        3 => {
            let (lmin, lmax) = spectrum()?;
            let middle = l1 + at;
            vec![
                psd("upper", cx.id((m - 1.0) * lmax) + d.scaled(2.0) - &middle),
                psd("lower", middle - cx.id((m - 1.0) * lmin) - d.scaled(2.0)),
            ]
        }
        4 => {
            let (lmin, _) = spectrum()?;
            vec![Part::main(PartCheck::Psd(
                l1 + at - cx.id((m - 1.0) * lmin),
            ))]
        }
        5 => {
            let atj = cx.masked(at)?;
            vec![Part::main(PartCheck::Psd(l2t + at - atj.scaled(2.0)))]
        }
        6 => {
            let (lmin, lmax) = spectrum()?;
            let atj2 = cx.masked(at)?.scaled(2.0);
            let middle = l2t + at;
            vec![
                psd("upper", cx.id((n - 1.0) * lmax) + &atj2 - &middle),
                psd("lower", middle - cx.id((n - 1.0) * lmin) - &atj2),
            ]
        }
        7 => {
            let (lmin, _) = spectrum()?;
            vec![Part::main(PartCheck::Psd(
                l2t + at - cx.id((n - 1.0) * lmin),
            ))]
        }
        8 => vec![psd("plus", l2t - at), psd("minus", l2t + at)],
        9 => vec![psd("tr1", l1 - a_d), psd("tr2", l2 - a_d)],
        10 => vec![Part::main(PartCheck::Ppt(apply_map_blockwise(
            MapKind::Phi,
            a,
            false,
        )))],
        11 => vec![Part::main(PartCheck::Psd(
            apply_map_blockwise(MapKind::Psi, a, true).into_dense(),
        ))],
        16 => vec![Part::main(PartCheck::Psd(cx.t_i() - l2 - (l1 - a_d)))],
        17 => {
            let base = cx.t_i() - l2;
            let s = l1 - a_d;
            vec![psd("plus", &base - &s), psd("minus", base + s)]
        }
        18 => vec![
            psd("plus", cx.t_i() + l2 - (a_d + l1)),
            psd("minus", cx.t_i() - l2 - (a_d - l1)),
        ],
        19 => vec![Part::main(PartCheck::Psd(
            cx.t_i() + l2 - a_d - l1 - cx.t2d().scaled(2.0) + d.scaled(2.0),
        ))],
        20 => {
            let corr = cx.masked(&(l1 - a_d))?.scaled(2.0);
            vec![Part::main(PartCheck::Psd(cx.t_i() - l2 - a_d + l1 - corr))]
        }
        21 => vec![Part::main(PartCheck::Psd(
            cx.t_i() + l2 + l1 + a_d - cx.t2d().scaled(2.0) - d.scaled(2.0),
        ))],
        22 => {
            let (lmin, lmax) = spectrum()?;
            let k = (m - 1.0) * (n - 1.0);
            vec![
                psd("upper", l1 + l2 - a_d - cx.t_i() + cx.id(k * lmax)),
                psd("lower", a_d + &cx.t_i() - cx.id(k * lmin) - l1 - l2),
            ]
        }
        23 => {
            let (lmin, lmax) = spectrum()?;
            let base = cx.t_i() - l2;
            let s = l1 - a_d;
            let k_minus = (m - 1.0) * (n - 1.0);
            let k_plus = (m - 1.0) * (n + 1.0);
            vec![
                psd("plus-lower", &base - &s - cx.id(k_minus * lmin)),
                psd("minus-lower", &base + &s - cx.id(k_plus * lmin)),
                psd("plus-upper", &s + &cx.id(k_minus * lmax) - &base),
                psd("minus-upper", cx.id(k_plus * lmax) - &s - &base),
            ]
        }
        24 => {
            let (lmin, lmax) = spectrum()?;
            let k = (m + 1.0) * (n - 1.0);
            let lhs = cx.t_i() + l2;
            let rhs = l1 + a_d;
            vec![
                psd("lower", &lhs - &rhs - cx.id(k * lmin)),
                psd("upper", rhs + cx.id(k * lmax) - lhs),
            ]
        }
        29 => {
            let x: Vec<f64> = (0..cx.dim).map(|i| a_d[(i, i)].re).collect();
            vec![Part::main(PartCheck::Majorization {
                x,
                y: eigvals(a_d)?,
            })]
        }
        30 | 31 => {
            let blocks: Vec<Vec<f64>> = (0..a.m())
                .map(|i| eigvals(&a.block(i, i)))
                .collect::<Result<_>>()?;
            let ld: Vec<f64> = blocks.iter().flatten().copied().collect();
            let sum = sum_descending(&blocks);
            let mid = if case.number == 30 {
                eigvals(a_d)?
            } else {
                eigvals(&partial_trace_1(a))?
            };
            vec![
                Part::new(
                    "lower",
                    PartCheck::Majorization {
                        x: ld,
                        y: mid.clone(),
                    },
                ),
                Part::new("upper", PartCheck::Majorization { x: mid, y: sum }),
            ]
        }
        32 => {
            let la = eigvals(a_d)?;
            let cond = |premise: Matrix, target: Vec<f64>| PartCheck::Conditional {
                premise: Box::new(PartCheck::Psd(premise)),
                conclusion: Box::new(PartCheck::Majorization {
                    x: la.clone(),
                    y: target,
                }),
            };
            vec![
                Part::new("tr1", cond(l1 - a_d, eigvals(&partial_trace_1(a))?)),
                Part::new("tr2", cond(l2 - a_d, eigvals(&partial_trace_2(a))?)),
            ]
        }
        33 => {
            let la = eigvals(a_d)?;
            let lat = eigvals(at)?;
            let l_tr1 = eigvals(&partial_trace_1(a))?;
            let l_tr2 = eigvals(&partial_trace_2(a))?;
            let maj = |x: &Vec<f64>, y: &Vec<f64>| PartCheck::Majorization {
                x: x.clone(),
                y: y.clone(),
            };
            vec![
                Part::new("A-tr1", maj(&la, &l_tr1)),
                Part::new("A-tr2", maj(&la, &l_tr2)),
                Part::new("Atau-tr1", maj(&lat, &l_tr1)),
                Part::new("Atau-tr2", maj(&lat, &l_tr2)),
            ]
        }
        44 => vec![Part::main(PartCheck::Psd(residual(a)?))],
        _ => return Err(wrong_class(case)),
    };
    Ok(parts)
}

/// `R(A) = (tr A) I + A - I_m ⊗ tr1 A - (tr2 A) ⊗ I_n`.
pub fn residual(a: &BlockMatrix) -> Result<Matrix> {
    let (m, n) = (a.m(), a.n());
    let t = a.dense().trace()?.re;
    let l1 = embed_left(&partial_trace_1(a), m)?.into_dense();
    let l2 = embed_right(&partial_trace_2(a), n)?.into_dense();
    Ok(scaled_identity(m * n, t) + a.dense() - l1 - l2)
}

fn build_two_by_two(case: &TheoremCase, p: &BlockMatrix) -> Result<Vec<Part>> {
    if p.m() != 2 {
        return Err(wrong_class(case));
    }
    let n = p.n();
    let (a, b, c) = (p.block(0, 0), p.block(0, 1), p.block(1, 1));
    let (ta, tb, tc) = (a.trace()?, b.trace()?, c.trace()?);
    let eye = Matrix::identity(n);
    let ti = |t: Complex64| eye.scaled_complex(t);
    let bh = b.conj_transpose();
    let tr_ac = (&a * &c).trace()?.re;
    let tr_bb = (&bh * &b).trace()?.re;
    let tatc = (ta * tc).re;
    let tb2 = tb.norm_sqr();
    let r = ti(ta + tc) + &a + &c;
    let parts = match case.number {
        13 => vec![Part::main(PartCheck::Scalar {
            lhs: tatc - tb2,
            rhs: tr_ac - tr_bb,
        })],
        14 => vec![Part::main(PartCheck::Scalar {
            lhs: tatc - tb2,
            rhs: tr_bb - tr_ac,
        })],
        15 => vec![Part::main(PartCheck::Scalar {
            lhs: tatc + tb2,
            rhs: tr_ac + tr_bb,
        })],
        36 | 37 => {
            let sign = if case.number == 36 { 1.0 } else { -1.0 };
            let (top, bottom) = if case.number == 36 {
                (&a, &c)
            } else {
                (&c, &a)
            };
            let derived = BlockMatrix::from_blocks(2, n, |i, j| match (i, j) {
                (0, 0) => ti(ta) + top,
                (0, 1) => ti(tb) + b.scaled(sign),
                (1, 0) => ti(tb.conj()) + bh.scaled(sign),
                _ => ti(tc) + bottom,
            })?;
            vec![Part::main(PartCheck::Ppt(derived))]
        }
        38 => [("plus", 1.0), ("minus", -1.0)]
            .into_iter()
            .map(|(label, s)| {
                Part::new(
                    label,
                    PartCheck::KyFan {
                        lhs: ti(tb) + b.scaled(s),
                        lhs_factor: 2.0,
                        rhs: r.clone(),
                        rhs_factor: 1.0,
                    },
                )
            })
            .collect(),
        39 => {
            let t2 = Matrix::from_vec(2, 2, vec![ta, tb, tb.conj(), tc])?;
            vec![Part::main(PartCheck::KyFan {
                lhs: ti(tb) + &b,
                lhs_factor: 1.0,
                rhs: t2,
                rhs_factor: (n as f64 + 1.0) / 2.0,
            })]
        }
        40 => [("plus", 1.0), ("minus", -1.0)]
            .into_iter()
            .map(|(label, s)| {
                Part::new(
                    label,
                    PartCheck::SvDominance {
                        lhs: ti(tb) + b.scaled(s),
                        rhs: r.clone(),
                        factor: 2.0,
                    },
                )
            })
            .collect(),
        _ => return Err(wrong_class(case)),
    };
    Ok(parts)
}

fn build_gram_pair(case: &TheoremCase, mm: &Matrix, nn: &Matrix) -> Result<Vec<Part>> {
    if mm.dims() != nn.dims() {
        return Err(Error::DimensionMismatch {
            op: "gram pair",
            left: mm.dims(),
            right: nn.dims(),
        });
    }
    let (mh, nh) = (mm.conj_transpose(), nn.conj_transpose());
    let g = &mh * mm + &nh * nn;
    match case.number {
        41 => Ok(vec![Part::main(PartCheck::SvDominance {
            lhs: mm * &nh,
            rhs: g,
            factor: 2.0,
        })]),
        42 => {
            let h = mm * &mh + nn * &nh;
            let shift = 0.5 * (&g - &(&mh * nn) - &nh * mm).trace()?.re;
            let lg = eigvals(&g)?;
            let lh = eigvals(&h)?;
            let len = lg.len().max(lh.len());
            Ok((0..len)
                .map(|j| {
                    let at = |v: &[f64]| v.get(j).copied().unwrap_or(0.0);
                    Part::new(
                        format!("j={}", j + 1),
                        PartCheck::Scalar {
                            lhs: at(&lh) + shift,
                            rhs: at(&lg),
                        },
                    )
                })
                .collect())
        }
        _ => Err(wrong_class(case)),
    }
}

fn build_square(case: &TheoremCase, x: &Matrix) -> Result<Vec<Part>> {
    if case.number != 43 {
        return Err(wrong_class(case));
    }
    x.require_square("abs-block corollary")?;
    let n = x.rows();
    let s = matrix_abs(x)? + matrix_abs(&x.conj_transpose())?;
    let rhs = scaled_identity(n, s.trace()?.re) + &s;
    let tx = Matrix::identity(n).scaled_complex(x.trace()?);
    Ok([("plus", 1.0), ("minus", -1.0)]
        .into_iter()
        .map(|(label, sign)| {
            Part::new(
                label,
                PartCheck::SvDominance {
                    lhs: &tx + &x.scaled(sign),
                    rhs: rhs.clone(),
                    factor: 2.0,
                },
            )
        })
        .collect())
}

/// Row-sum, column-sum and entry statistics `(S, Q, R, C)` of an integer matrix.
fn ck_sums(x: &IntMatrix) -> Result<(i64, i64, i64, i64)> {
    let (m, n) = (x.rows(), x.cols());
    let mul = |a: i64, b: i64| a.checked_mul(b).ok_or(Error::Overflow);
    let add = |a: i64, b: i64| a.checked_add(b).ok_or(Error::Overflow);
    let (mut s, mut q, mut r, mut c) = (0i64, 0i64, 0i64, 0i64);
    for i in 0..m {
        let mut row = 0i64;
        for j in 0..n {
            let v = x.get(i, j);
            row = add(row, v)?;
            q = add(q, mul(v, v)?)?;
        }
        s = add(s, row)?;
        r = add(r, mul(row, row)?)?;
    }
    for j in 0..n {
        let mut col = 0i64;
        for i in 0..m {
            col = add(col, x.get(i, j))?;
        }
        c = add(c, mul(col, col)?)?;
    }
    Ok((s, q, r, c))
}

fn build_int(case: &TheoremCase, x: &IntMatrix) -> Result<Vec<Part>> {
    let (s, q, r, c) = ck_sums(x)?;
    let m = i64::try_from(x.rows()).map_err(|_| Error::Overflow)?;
    let n = i64::try_from(x.cols()).map_err(|_| Error::Overflow)?;
    let mul = |a: i64, b: i64| a.checked_mul(b).ok_or(Error::Overflow);
    let add = |a: i64, b: i64| a.checked_add(b).ok_or(Error::Overflow);
    let sub = |a: i64, b: i64| a.checked_sub(b).ok_or(Error::Overflow);
    let s2 = mul(s, s)?;
    let mnq = mul(mul(m, n)?, q)?;
    let nc = mul(n, c)?;
    let mr = mul(m, r)?;
    let exact = |label: &str, lhs: i64, rhs: i64| Part::new(label, PartCheck::Exact { lhs, rhs });
    let parts = match case.number {
        25 => vec![exact("main", add(s2, mnq)?, add(mr, nc)?)],
        26 => vec![
            exact(
                "abs",
                sub(mnq, nc)?,
                sub(mr, s2)?.checked_abs().ok_or(Error::Overflow)?,
            ),
            exact("plus", add(mnq, nc)?, add(s2, mr)?),
            exact("minus", sub(mnq, nc)?, sub(s2, mr)?),
        ],
        27 => vec![
            exact(
                "rows",
                add(mul(mul(m - 2, n)?, q)?, nc)?,
                add(s2, mul(m - 2, r)?)?,
            ),
            exact(
                "cols",
                add(mul(mul(m, n - 2)?, q)?, mr)?,
                add(s2, mul(n - 2, c)?)?,
            ),
        ],
        _ => return Err(wrong_class(case)),
    };
    Ok(parts)
}

/// `(m-2) n I + n J_m ⊗ I_n - J_m ⊗ J_n - (m-2) I_m ⊗ J_n`.
pub fn eq18_slack(m: usize, n: usize) -> Matrix {
    let (mf, nf) = (m as f64, n as f64);
    let jm = Matrix::ones(m);
    let jn = Matrix::ones(n);
    scaled_identity(m * n, (mf - 2.0) * nf) + kron(&jm, &Matrix::identity(n)).scaled(nf)
        - kron(&jm, &jn)
        - kron(&Matrix::identity(m), &jn).scaled(mf - 2.0)
}

/// The `(m, n)` block structure an instance is checked at.
pub fn instance_dims(inst: &Instance) -> (usize, usize) {
    match inst {
        Instance::Block(b) => (b.m(), b.n()),
        Instance::Matrix(x) => (1, x.rows()),
        Instance::Pair { left, .. } => (left.cols(), left.rows()),
        Instance::Int(x) => (x.rows(), x.cols()),
        Instance::Dims { m, n } => (*m, *n),
    }
}

/// The objects whose checks decide `case` on `inst`. Only the shape of the
/// instance is validated here; see [`check_case`] for class preconditions.
pub fn build_slack(case_id: &str, inst: &Instance) -> Result<Vec<Part>> {
    let case = lookup(case_id).ok_or_else(|| Error::UnknownCase(case_id.to_string()))?;
    build_parts(case, inst)
}

pub(crate) fn build_parts(case: &TheoremCase, inst: &Instance) -> Result<Vec<Part>> {
    use InputClass::*;
    match case.input_class {
        Psd | Ppt | Hermitian => build_block_case(case, expect_block(case, inst)?),
        PsdTwoByTwo => build_two_by_two(case, expect_block(case, inst)?),
        MatrixUnitE => {
            let e = expect_block(case, inst)?;
            Ok(vec![Part::main(PartCheck::Violation(
                apply_map_blockwise(MapKind::Psi, e, false).into_dense(),
            ))])
        }
        OffDiagHermitian | OffDiagSkewHermitian => {
            let h = expect_block(case, inst)?;
            if h.m() != 2 {
                return Err(wrong_class(case));
            }
            let sum = h.block(0, 0) + h.block(1, 1);
            Ok(vec![Part::main(PartCheck::Majorization {
                x: eigvals(h.dense())?,
                y: eigvals(&sum)?,
            })])
        }
        GramPair => match inst {
            Instance::Pair { left, right } => build_gram_pair(case, left, right),
            _ => Err(wrong_class(case)),
        },
        RealInt => match inst {
            Instance::Int(x) => build_int(case, x),
            _ => Err(wrong_class(case)),
        },
        SquareComplex => match inst {
            Instance::Matrix(x) => build_square(case, x),
            _ => Err(wrong_class(case)),
        },
        DimsOnly => {
            let (m, n) = match inst {
                Instance::Dims { m, n } => (*m, *n),
                Instance::Block(b) => (b.m(), b.n()),
                _ => return Err(wrong_class(case)),
            };
            if m == 0 || n == 0 {
                return Err(Error::InvalidSpec(format!(
                    "dimensions {m}x{n} must be positive"
                )));
            }
            Ok(vec![Part::main(PartCheck::Psd(eq18_slack(m, n)))])
        }
    }
}

/// Verifies that `inst` belongs to the case's input class.
pub fn require_input_class(case: &TheoremCase, inst: &Instance, tol: f64) -> Result<()> {
    use InputClass::*;
    let block = || expect_block(case, inst);
    let two_blocks = |b: &BlockMatrix| {
        if b.m() == 2 {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "case {} needs a 2x2 block matrix; got m = {}",
                case.id,
                b.m()
            )))
        }
    };
    match case.input_class {
        Psd => require_psd(block()?.dense(), tol, "input")?,
        PsdTwoByTwo => {
            let b = block()?;
            two_blocks(b)?;
            require_psd(b.dense(), tol, "input")?;
        }
        Ppt => {
            let b = block()?;
            let v = is_ppt(b, tol)?;
            if !v.holds {
                return Err(Error::Precondition(format!(
                    "input is not PPT (min eigenvalue {:e})",
                    v.witness
                )));
            }
        }
        Hermitian => block()?.dense().require_hermitian()?,
        MatrixUnitE => two_blocks(block()?)?,
        OffDiagHermitian | OffDiagSkewHermitian => {
            let b = block()?;
            two_blocks(b)?;
            require_psd(b.dense(), tol, "input")?;
            let k = b.block(0, 1);
            let kh = k.conj_transpose();
            let defect = if case.input_class == OffDiagHermitian {
                k.max_abs_diff(&kh)
            } else {
                k.max_abs_diff(&(-&kh))
            };
            let bound = HERMITIAN_TOL * b.dense().scale();
            if defect > bound {
                return Err(Error::Precondition(format!(
                    "off-diagonal block is not {} (defect {defect:e})",
                    if case.input_class == OffDiagHermitian {
                        "Hermitian"
                    } else {
                        "skew-Hermitian"
                    }
                )));
            }
        }
        GramPair | RealInt | SquareComplex | DimsOnly => {}
    }
    Ok(())
}

fn scalar_tol(tol: f64, lhs: f64, rhs: f64) -> f64 {
    tol * 1f64.max(lhs.abs()).max(rhs.abs())
}

/// `(holds, witness, tolerance_used, premise_met)` for one part.
type Evaluation = (bool, Option<f64>, Option<f64>, Option<bool>);

fn evaluate(check: &PartCheck, tol: f64) -> Result<Evaluation> {
    Ok(match check {
        PartCheck::Psd(s) => {
            let v = is_psd(s, tol)?;
            (v.holds, Some(v.witness), Some(v.tolerance_used), None)
        }
        PartCheck::Ppt(b) => {
            let v = is_ppt(b, tol)?;
            (v.holds, Some(v.witness), Some(v.tolerance_used), None)
        }
        PartCheck::Majorization { x, y } => {
            let v = majorizes(y, x, tol);
            (v.holds(), Some(v.witness()), Some(v.tolerance_used), None)
        }
        PartCheck::SvDominance { lhs, rhs, factor } => {
            let v = sv_dominates(lhs, rhs, *factor, tol)?;
            (v.holds, Some(v.witness), Some(v.tolerance_used), None)
        }
        PartCheck::KyFan {
            lhs,
            lhs_factor,
            rhs,
            rhs_factor,
        } => {
            let v = kyfan_dominates(lhs, *lhs_factor, rhs, *rhs_factor, tol)?;
            (v.holds, Some(v.witness), Some(v.tolerance_used), None)
        }
        PartCheck::Scalar { lhs, rhs } => {
            let t = scalar_tol(tol, *lhs, *rhs);
            let w = lhs - rhs;
            (w >= -t, Some(w), Some(t), None)
        }
        PartCheck::Exact { lhs, rhs } => {
            let w = i128::from(*lhs) - i128::from(*rhs);
            (w >= 0, Some(w as f64), Some(0.0), None)
        }
        PartCheck::Violation(x) => {
            let v = is_psd(x, tol)?;
            (!v.holds, Some(v.witness), Some(v.tolerance_used), None)
        }
        PartCheck::Conditional {
            premise,
            conclusion,
        } => {
            let (met, _, _, _) = evaluate(premise, tol)?;
            if met {
                let (holds, w, t, _) = evaluate(conclusion, tol)?;
                (holds, w, t, Some(true))
            } else {
                (true, None, None, Some(false))
            }
        }
    })
}

pub(crate) fn evaluate_parts(
    case: &TheoremCase,
    dims: (usize, usize),
    parts: &[Part],
    tol: f64,
    trial_seed: Option<u64>,
) -> Result<SlackReport> {
    let mut reports = Vec::with_capacity(parts.len());
    for part in parts {
        let (holds, witness, tolerance_used, premise_met) = evaluate(&part.check, tol)?;
        reports.push(PartReport {
            label: part.label.clone(),
            holds,
            witness,
            tolerance_used,
            premise_met,
        });
    }
    let witness = reports.iter().filter_map(|p| p.witness).reduce(f64::min);
    let premise_met = if reports.iter().any(|p| p.premise_met.is_some()) {
        Some(reports.iter().any(|p| p.premise_met == Some(true)))
    } else {
        None
    };
    Ok(SlackReport {
        case_id: case.id,
        trial_seed,
        m: dims.0,
        n: dims.1,
        holds: reports.iter().all(|p| p.holds),
        witness,
        premise_met,
        parts: reports,
    })
}

/// Checks one case on one instance, first verifying the input class.
pub fn check_case(case_id: &str, inst: &Instance, tol: f64) -> Result<SlackReport> {
    let case = lookup(case_id).ok_or_else(|| Error::UnknownCase(case_id.to_string()))?;
    require_input_class(case, inst, tol)?;
    let parts = build_parts(case, inst)?;
    evaluate_parts(case, instance_dims(inst), &parts, tol, None)
}
