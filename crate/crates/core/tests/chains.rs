//! Improved inequalities imply their baselines: each correction term between
//! an improved slack and its baseline slack is itself PSD (or non-negative).

use blocktrace::block::{
    block_diag, embed_left, embed_right, j_block, partial_trace_1, partial_trace_2,
    partial_transpose,
};
use blocktrace::generators::{gen, GenKind, GenSpec};
use blocktrace::instance::Instance;
use blocktrace::linalg::{hadamard, hermitian_eigvals, kron, Matrix};
use blocktrace::order::{is_psd, PSD_TOL};
use blocktrace::theorems::{build_slack, check_case, PartCheck};
use blocktrace::BlockMatrix;

const IDENTITY_TOL: f64 = 1e-10;

fn instances() -> impl Iterator<Item = BlockMatrix> {
    (0..60u64).map(|seed| {
        let m = 1 + (seed % 4) as usize;
        let n = 1 + ((seed / 4) % 4) as usize;
        let spec = GenSpec::new(GenKind::Psd, m, n, 1000 + seed);
        let spec = if seed % 3 == 0 {
            spec.with_rank(1 + (seed as usize % (m * n)))
        } else {
            spec
        };
        match gen(&spec).unwrap() {
            Instance::Block(b) => b,
            _ => unreachable!(),
        }
    })
}

fn slack(id: &str, a: &BlockMatrix, part: usize) -> Matrix {
    match &build_slack(id, &Instance::Block(a.clone())).unwrap()[part].check {
        PartCheck::Psd(s) => s.clone(),
        other => panic!("{id}: not a PSD slack: {other:?}"),
    }
}

fn assert_psd(x: &Matrix, what: &str) {
    let v = is_psd(x, PSD_TOL).unwrap();
    assert!(v.holds, "{what}: lambda_min = {}", v.witness);
}

fn assert_close(a: &Matrix, b: &Matrix, what: &str) {
    let d = a.max_abs_diff(b);
    assert!(d <= IDENTITY_TOL * a.scale(), "{what}: differ by {d}");
}

fn pieces(a: &BlockMatrix) -> (Matrix, Matrix, Matrix, Matrix, Matrix) {
    let (m, n) = (a.m(), a.n());
    let at = partial_transpose(a);
    let l1 = embed_left(&partial_trace_1(a), m).unwrap().into_dense();
    let l2 = embed_right(&partial_trace_2(a), n).unwrap().into_dense();
    let l2t = embed_right(&partial_trace_2(&at), n).unwrap().into_dense();
    (at.into_dense(), block_diag(a).into_dense(), l1, l2, l2t)
}

fn t2d(a: &BlockMatrix) -> Matrix {
    let diag: Vec<f64> = (0..a.m())
        .map(|i| a.block(i, i).trace().unwrap().re)
        .collect();
    kron(&Matrix::diag(&diag), &Matrix::identity(a.n()))
}

#[test]
fn case2_differs_from_choi_minus_by_2da() {
    for a in instances() {
        let (at, d, l1, _, _) = pieces(&a);
        let baseline = &l1 + &at;
        let improved = slack("li-tr1-improved", &a, 0);
        let correction = d.scaled(2.0);
        assert_close(&(&improved + &correction), &baseline, "case 2 + 2D_A");
        assert_psd(&correction, "2D_A");
        // The case-1 slack plus 2D_A dominates the case-2 slack minus 2A^τ.
        assert_close(
            &(slack("choi-tr1", &a, 0) + &at.scaled(2.0) - &correction),
            &improved,
            "case 1 vs 2",
        );
    }
}

#[test]
fn case5_implies_case8_minus() {
    for a in instances() {
        let (at, _, _, _, _) = pieces(&a);
        let correction = hadamard(&at, &j_block(a.m(), a.n()).into_dense())
            .unwrap()
            .scaled(2.0);
        let baseline = slack("choi-tr2-pm", &a, 1);
        assert_close(
            &(slack("tr2-hadamard", &a, 0) + &correction),
            &baseline,
            "case 5 + 2A^τ∘J",
        );
        assert_psd(&correction, "2A^τ∘J");
    }
}

#[test]
fn case19_implies_case18_plus() {
    for a in instances() {
        let (_, d, _, _, _) = pieces(&a);
        let correction = t2d(&a).scaled(2.0) - d.scaled(2.0);
        let baseline = slack("li-liu-huang-pm", &a, 0);
        assert_close(
            &(slack("thm42-improved", &a, 0) + &correction),
            &baseline,
            "case 19",
        );
        assert_psd(&correction, "2(tr2 D_A)⊗I - 2D_A");
    }
}

#[test]
fn case20_implies_case17_minus() {
    for a in instances() {
        let (_, _, l1, _, _) = pieces(&a);
        let s = l1 - a.dense();
        let correction = hadamard(&s, &j_block(a.m(), a.n()).into_dense())
            .unwrap()
            .scaled(2.0);
        let baseline = slack("li-liu-huang-minus", &a, 1);
        assert_close(
            &(slack("thm44-improved", &a, 0) + &correction),
            &baseline,
            "case 20",
        );
        assert_psd(&correction, "2(I⊗tr1 A - A)∘J");
    }
}

#[test]
fn case21_correction_is_psd() {
    for a in instances() {
        let (_, d, l1, l2, _) = pieces(&a);
        let t = a.dense().trace().unwrap().re;
        let baseline = Matrix::identity(a.m() * a.n()).scaled(t) + &l2 + &l1 + a.dense();
        let correction = t2d(&a).scaled(2.0) + d.scaled(2.0);
        assert_close(
            &(slack("thm4p4-analogue", &a, 0) + &correction),
            &baseline,
            "case 21",
        );
        assert_psd(&correction, "2(tr2 D_A)⊗I + 2D_A");
        assert_psd(&baseline, "baseline sum");
    }
}

#[test]
fn case27_implies_case26_plus() {
    for seed in 0..500u64 {
        let m = 1 + (seed % 6) as usize;
        let n = 1 + ((seed / 6) % 6) as usize;
        let inst = gen(&GenSpec::new(GenKind::RealInt, m, n, seed)).unwrap();
        let exact = |id: &str, part: usize| match build_slack(id, &inst).unwrap()[part].check {
            PartCheck::Exact { lhs, rhs } => lhs - rhs,
            _ => unreachable!(),
        };
        let improved = exact("ck-improved", 0);
        let baseline = exact("ck-lih", 1);
        assert!(
            improved >= 0 && baseline >= improved,
            "seed {seed}: {improved} vs {baseline}"
        );
    }
}

#[test]
fn case40_entails_case38() {
    for seed in 0..100u64 {
        let n = 1 + (seed % 4) as usize;
        let inst = gen(&GenSpec::new(GenKind::Psd, 2, n, seed)).unwrap();
        let sv = check_case("thm37-singular", &inst, PSD_TOL).unwrap();
        let kf = check_case("coro55-norms", &inst, PSD_TOL).unwrap();
        assert!(sv.holds);
        assert!(kf.holds);
        // Summing per-j gaps over k <= n terms bounds every Ky Fan gap below.
        for (p_sv, p_kf) in sv.parts.iter().zip(&kf.parts) {
            let w_sv = p_sv.witness.unwrap();
            let w_kf = p_kf.witness.unwrap();
            assert!(
                w_kf >= w_sv.min(0.0) * n as f64 - 1e-12,
                "seed {seed}: {w_kf} < {w_sv}"
            );
        }
    }
}

#[test]
fn partial_traces_of_psd_are_psd() {
    for a in instances() {
        for x in [
            partial_trace_1(&a),
            partial_trace_2(&a),
            block_diag(&a).into_dense(),
        ] {
            assert!(hermitian_eigvals(&x).unwrap().min() >= -PSD_TOL * x.scale());
        }
    }
}
