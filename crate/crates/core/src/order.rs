//! Decision procedures for the order relations: PSD membership, Loewner
//! comparison, PPT, (weak) majorization and singular-value domination.
//!
//! Every verdict carries the decisive quantity as its witness and the
//! absolute tolerance it was judged against; `holds` is exactly
//! `witness >= -tolerance_used`.

use serde::Serialize;

use crate::block::{partial_transpose, BlockMatrix};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigvals, singular_values, Matrix};

/// Default relative tolerance for PSD and domination checks.
pub const PSD_TOL: f64 = 1e-8;
/// Default relative tolerance for majorization prefix sums.
pub const MAJORIZATION_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OrderVerdict {
    pub holds: bool,
    pub witness: f64,
    pub tolerance_used: f64,
}

impl OrderVerdict {
    pub fn new(witness: f64, tolerance_used: f64) -> Self {
        OrderVerdict {
            holds: witness >= -tolerance_used,
            witness,
            tolerance_used,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MajorizationVerdict {
    pub weak_holds: bool,
    /// `sum(y) - sum(x)`.
    pub sum_gap: f64,
    /// `min_k (prefix_k(y) - prefix_k(x))` over descending rearrangements.
    pub worst_prefix_gap: f64,
    pub tolerance_used: f64,
}

impl MajorizationVerdict {
    /// Standard majorization: weak majorization plus equal totals.
    pub fn holds(&self) -> bool {
        self.weak_holds && self.sum_gap.abs() <= self.tolerance_used
    }

    /// Single decisive number for standard majorization: the worse of the
    /// prefix gap and the (negated) total mismatch.
    pub fn witness(&self) -> f64 {
        self.worst_prefix_gap.min(-self.sum_gap.abs())
    }
}

/// Holds iff `lambda_min(a) >= -tol * max(1, ||a||_F)`.
pub fn is_psd(a: &Matrix, tol: f64) -> Result<OrderVerdict> {
    let spectrum = hermitian_eigvals(a)?;
    Ok(OrderVerdict::new(spectrum.min(), tol * a.scale()))
}

/// `a >= b` in the Loewner order.
pub fn loewner_ge(a: &Matrix, b: &Matrix, tol: f64) -> Result<OrderVerdict> {
    is_psd(&a.try_sub(b)?, tol)
}

/// Both `a` and its partial transpose are PSD; the witness is the smaller of
/// the two minimum eigenvalues.
pub fn is_ppt(a: &BlockMatrix, tol: f64) -> Result<OrderVerdict> {
    let direct = is_psd(a.dense(), tol)?;
    let swapped = is_psd(partial_transpose(a).dense(), tol)?;
    Ok(OrderVerdict::new(
        direct.witness.min(swapped.witness),
        direct.tolerance_used,
    ))
}

fn descending_padded(v: &[f64], len: usize) -> Vec<f64> {
    let mut out = v.to_vec();
    out.resize(len, 0.0);
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// Tests `x ≺ y` (and `x ≺_w y`). Shorter vectors are padded with zeros;
/// both inputs are sorted internally. The prefix tolerance is
/// `tol * max(1, sum |y|)`.
pub fn majorizes(y: &[f64], x: &[f64], tol: f64) -> MajorizationVerdict {
    let len = x.len().max(y.len());
    let xs = descending_padded(x, len);
    let ys = descending_padded(y, len);
    let mut px = 0.0;
    let mut py = 0.0;
    let mut worst = f64::INFINITY;
    for (a, b) in xs.iter().zip(&ys) {
        px += a;
        py += b;
        worst = worst.min(py - px);
    }
    if len == 0 {
        worst = 0.0;
    }
    let tolerance_used = tol * y.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
    MajorizationVerdict {
        weak_holds: worst >= -tolerance_used,
        sum_gap: py - px,
        worst_prefix_gap: worst,
        tolerance_used,
    }
}

/// Holds iff `factor * s_j(lhs) <= s_j(rhs) + tol * max(1, ||rhs||_F)` for
/// every `j`, with spectra zero-padded to equal length.
pub fn sv_dominates(lhs: &Matrix, rhs: &Matrix, factor: f64, tol: f64) -> Result<OrderVerdict> {
    let sl = singular_values(lhs)?;
    let sr = singular_values(rhs)?;
    let len = sl.len().max(sr.len());
    let witness = (0..len)
        .map(|j| {
            let r = sr.values().get(j).copied().unwrap_or(0.0);
            let l = sl.values().get(j).copied().unwrap_or(0.0);
            r - factor * l
        })
        .fold(f64::INFINITY, f64::min);
    Ok(OrderVerdict::new(witness, tol * rhs.scale()))
}

/// Ky Fan domination `lhs_factor * ||lhs||_(k) <= rhs_factor * ||rhs||_(k)`
/// for every `k` up to the larger dimension (spectra zero-padded).
pub fn kyfan_dominates(
    lhs: &Matrix,
    lhs_factor: f64,
    rhs: &Matrix,
    rhs_factor: f64,
    tol: f64,
) -> Result<OrderVerdict> {
    let sl = singular_values(lhs)?;
    let sr = singular_values(rhs)?;
    let len = sl.len().max(sr.len());
    let mut kl = 0.0;
    let mut kr = 0.0;
    let mut witness = f64::INFINITY;
    for j in 0..len {
        kl += sl.values().get(j).copied().unwrap_or(0.0);
        kr += sr.values().get(j).copied().unwrap_or(0.0);
        witness = witness.min(rhs_factor * kr - lhs_factor * kl);
    }
    let scale = (rhs_factor * kr).abs().max(1.0);
    Ok(OrderVerdict::new(witness, tol * scale))
}

/// Requires `a` to be PSD, reporting a precondition error otherwise.
pub fn require_psd(a: &Matrix, tol: f64, what: &str) -> Result<()> {
    let v = is_psd(a, tol)?;
    if !v.holds {
        return Err(Error::Precondition(format!(
            "{what} is not positive semidefinite (lambda_min = {:e})",
            v.witness
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kron;

    #[test]
    fn psd_examples() {
        let v = is_psd(&Matrix::identity(3), PSD_TOL).unwrap();
        assert!(v.holds);
        assert!((v.witness - 1.0).abs() < 1e-14);
        let v = is_psd(
            &Matrix::from_real(2, 2, &[0.0, -1.0, -1.0, 0.0]).unwrap(),
            PSD_TOL,
        )
        .unwrap();
        assert!(!v.holds);
        assert!((v.witness + 1.0).abs() < 1e-14);
        let v = is_psd(&Matrix::zeros(2, 2), PSD_TOL).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, 0.0);
        assert!(is_psd(
            &Matrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap(),
            PSD_TOL
        )
        .is_err());
    }

    #[test]
    fn loewner_examples() {
        let a = Matrix::from_real(2, 2, &[2.0, 1.0, 1.0, 3.0]).unwrap();
        let v = loewner_ge(&a, &a, PSD_TOL).unwrap();
        assert!(v.holds && v.witness == 0.0);
        let i = Matrix::identity(2);
        let v = loewner_ge(&i.scaled(2.0), &i, PSD_TOL).unwrap();
        assert!(v.holds && (v.witness - 1.0).abs() < 1e-14);
        let v = loewner_ge(&i, &i.scaled(2.0), PSD_TOL).unwrap();
        assert!(!v.holds && (v.witness + 1.0).abs() < 1e-14);
        assert!(loewner_ge(&i, &Matrix::identity(3), PSD_TOL).is_err());
    }

    #[test]
    fn ppt_examples() {
        let p = Matrix::from_real(2, 2, &[2.0, 1.0, 1.0, 1.0]).unwrap();
        let q = Matrix::from_real(3, 3, &[1.0, 0.5, 0.0, 0.5, 1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(
            is_ppt(&BlockMatrix::new(2, 3, kron(&p, &q)).unwrap(), PSD_TOL)
                .unwrap()
                .holds
        );
        let ones = BlockMatrix::new(2, 2, kron(&Matrix::ones(2), &Matrix::ones(2))).unwrap();
        assert!(is_ppt(&ones, PSD_TOL).unwrap().holds);

        // E = [E_ij] is PSD but its partial transpose is the swap operator.
        let mut e = Matrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                e[(i * 2 + i, j * 2 + j)] = crate::linalg::c(1.0, 0.0);
            }
        }
        let e = BlockMatrix::new(2, 2, e).unwrap();
        assert!(is_psd(e.dense(), PSD_TOL).unwrap().holds);
        let v = is_ppt(&e, PSD_TOL).unwrap();
        assert!(!v.holds);
        assert!((v.witness + 1.0).abs() < 1e-14);
    }

    #[test]
    fn majorization_examples() {
        let v = majorizes(&[3.0, 1.0, 2.0], &[1.0, 2.0, 3.0], MAJORIZATION_TOL);
        assert!(v.holds() && v.sum_gap == 0.0 && v.worst_prefix_gap == 0.0);
        assert!(majorizes(&[2.0, 0.0], &[1.0, 1.0], MAJORIZATION_TOL).holds());
        let v = majorizes(&[1.0, 1.0], &[2.0, 0.0], MAJORIZATION_TOL);
        assert!(!v.weak_holds && !v.holds());
        assert_eq!(v.worst_prefix_gap, -1.0);
    }

    #[test]
    fn weak_but_not_standard() {
        let v = majorizes(&[3.0, 1.0], &[1.0, 1.0], MAJORIZATION_TOL);
        assert!(v.weak_holds && !v.holds());
        assert_eq!(v.sum_gap, 2.0);
    }

    #[test]
    fn majorization_pads_shorter_vector() {
        // (1, 1) padded to (1, 1, 0, 0) is majorized by (2, 0, 0, 0).
        assert!(majorizes(&[2.0], &[1.0, 1.0, 0.0, 0.0], MAJORIZATION_TOL).holds());
        assert!(!majorizes(&[1.0, 1.0], &[2.0], MAJORIZATION_TOL).weak_holds);
    }

    #[test]
    fn sv_domination_examples() {
        let a = Matrix::from_real(2, 2, &[1.0, 2.0, 0.0, 3.0]).unwrap();
        let v = sv_dominates(&a, &a, 1.0, PSD_TOL).unwrap();
        assert!(v.holds && v.witness.abs() < 1e-12);
        let i = Matrix::identity(2);
        let v = sv_dominates(&i, &i.scaled(2.0), 2.0, PSD_TOL).unwrap();
        assert!(v.holds && v.witness.abs() < 1e-14);
        let v = sv_dominates(
            &Matrix::diag(&[2.0, 1.0]),
            &Matrix::diag(&[3.0, 1.0]),
            2.0,
            PSD_TOL,
        )
        .unwrap();
        assert!(!v.holds);
        assert!((v.witness + 1.0).abs() < 1e-14);
    }

    #[test]
    fn kyfan_domination_pads() {
        // ||diag(1,1,1)||_(k) = k vs 2 * ||diag(1)||_(k) = 2 for k >= 1.
        let v = kyfan_dominates(
            &Matrix::identity(1),
            2.0,
            &Matrix::identity(3),
            1.0,
            PSD_TOL,
        )
        .unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, -1.0);
        let v = kyfan_dominates(
            &Matrix::identity(1),
            1.0,
            &Matrix::identity(3),
            1.0,
            PSD_TOL,
        )
        .unwrap();
        assert!(v.holds);
    }
}
