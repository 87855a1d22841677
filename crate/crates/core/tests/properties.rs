use proptest::prelude::*;

use blocktrace::block::{
    full_transpose, partial_trace_1, partial_trace_2, partial_transpose, reshuffle, BlockMatrix,
};
use blocktrace::generators::{gen, GenKind, GenSpec};
use blocktrace::instance::Instance;
use blocktrace::io::{instance_from_json, instance_to_json};
use blocktrace::linalg::{hermitian_eigvals, kron, singular_values, Matrix, SPECTRAL_TOL};
use blocktrace::order::{majorizes, MAJORIZATION_TOL, PSD_TOL};
use blocktrace::rng::rng_stream;
use blocktrace::theorems::{run_suite, SuiteConfig};

fn block(kind: GenKind, m: usize, n: usize, seed: u64) -> BlockMatrix {
    match gen(&GenSpec::new(kind, m, n, seed)).unwrap() {
        Instance::Block(b) => b,
        _ => unreachable!(),
    }
}

fn ginibre(n: usize, seed: u64) -> Matrix {
    match gen(&GenSpec::new(GenKind::Ginibre, 1, n, seed)).unwrap() {
        Instance::Matrix(x) => x,
        _ => unreachable!(),
    }
}

fn sorted_entries(x: &Matrix) -> Vec<(u64, u64)> {
    let mut v: Vec<(u64, u64)> = x
        .as_slice()
        .iter()
        .map(|z| (z.re.to_bits(), z.im.to_bits()))
        .collect();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involutions_are_exact_permutations(m in 1usize..=4, n in 1usize..=4, seed in any::<u64>()) {
        let a = block(GenKind::Hermitian, m, n, seed);
        let at = partial_transpose(&a);
        let r = reshuffle(&a);
        prop_assert_eq!(&partial_transpose(&at), &a);
        prop_assert_eq!(&reshuffle(&r), &a);
        prop_assert_eq!(sorted_entries(at.dense()), sorted_entries(a.dense()));
        prop_assert_eq!(sorted_entries(r.dense()), sorted_entries(a.dense()));
        prop_assert_eq!(&full_transpose(&full_transpose(&a)), &a);
    }

    #[test]
    fn reshuffle_identities_hold_exactly(m in 1usize..=4, n in 1usize..=4, seed in any::<u64>()) {
        let a = block(GenKind::Psd, m, n, seed);
        prop_assert_eq!(partial_trace_2(&a), partial_trace_1(&reshuffle(&a)));
        prop_assert_eq!(
            partial_transpose(&reshuffle(&a)),
            full_transpose(&reshuffle(&partial_transpose(&a)))
        );
        let x = ginibre(m, seed);
        let y = ginibre(n, seed ^ 1);
        let xy = BlockMatrix::new(m, n, kron(&x, &y)).unwrap();
        prop_assert_eq!(reshuffle(&xy).into_dense(), kron(&y, &x));
    }

    #[test]
    fn partial_traces_preserve_trace_and_are_linear(
        m in 1usize..=4, n in 1usize..=4, seed in any::<u64>(), alpha in -3.0f64..3.0, beta in -3.0f64..3.0,
    ) {
        let a = block(GenKind::Hermitian, m, n, seed);
        let b = block(GenKind::Psd, m, n, seed.wrapping_add(1));
        let t = a.dense().trace().unwrap();
        let tol = 1e-12 * a.dense().scale();
        prop_assert!((partial_trace_1(&a).trace().unwrap() - t).norm() <= tol);
        prop_assert!((partial_trace_2(&a).trace().unwrap() - t).norm() <= tol);
        let combo = BlockMatrix::new(m, n, a.dense().scaled(alpha) + b.dense().scaled(beta)).unwrap();
        for (lhs, ra, rb) in [
            (partial_trace_1(&combo), partial_trace_1(&a), partial_trace_1(&b)),
            (partial_trace_2(&combo), partial_trace_2(&a), partial_trace_2(&b)),
        ] {
            let rhs = ra.scaled(alpha) + rb.scaled(beta);
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * (1.0 + rhs.frobenius_norm()));
        }
    }

    #[test]
    fn spectra_are_consistent(n in 1usize..=8, seed in any::<u64>()) {
        let h = block(GenKind::Hermitian, 1, n, seed).into_dense();
        let ev = hermitian_eigvals(&h).unwrap();
        prop_assert!(ev.values().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!((ev.sum() - h.trace().unwrap().re).abs() <= SPECTRAL_TOL * h.scale());

        let x = ginibre(n, seed);
        let sv = singular_values(&x).unwrap();
        let gram = hermitian_eigvals(&(&x.conj_transpose() * &x)).unwrap();
        for (s, l) in sv.values().iter().zip(gram.values()) {
            prop_assert!(*s >= 0.0);
            prop_assert!((s * s - l).abs() <= SPECTRAL_TOL * x.scale().powi(2));
        }
    }

    #[test]
    fn majorization_basics(v in prop::collection::vec(-10.0f64..10.0, 1..8), rot in 0usize..8) {
        let mut p = v.clone();
        let k = rot % p.len();
        p.rotate_left(k);
        prop_assert!(majorizes(&v, &p, MAJORIZATION_TOL).holds());
        let mean = v.iter().sum::<f64>() / v.len() as f64;
        let flat = vec![mean; v.len()];
        prop_assert!(majorizes(&v, &flat, MAJORIZATION_TOL).holds());
    }

    #[test]
    fn rng_doubles_are_in_unit_interval_and_reproducible(seed in any::<u64>()) {
        let mut a = rng_stream(seed);
        let mut b = rng_stream(seed);
        for _ in 0..32 {
            let x = a.next_f64();
            prop_assert!((0.0..1.0).contains(&x));
            prop_assert_eq!(x.to_bits(), b.next_f64().to_bits());
        }
    }

    #[test]
    fn json_round_trip_is_exact(m in 1usize..=3, n in 2usize..=3, seed in any::<u64>(), k in 0usize..8) {
        let kind = GenKind::ALL[k];
        let m = if kind == GenKind::MatrixUnitE { 2 } else { m };
        let inst = gen(&GenSpec::new(kind, m, n, seed)).unwrap();
        prop_assert_eq!(instance_from_json(&instance_to_json(&inst)).unwrap(), inst);
    }
}

#[test]
fn rng_matches_reference_golden() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/golden/rng_seed0.json"
    ))
    .unwrap();
    let golden: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut ints = rng_stream(0);
    let mut doubles = rng_stream(0);
    for k in 0..4 {
        let expected: u64 = golden["u64"][k].as_str().unwrap().parse().unwrap();
        assert_eq!(ints.next_u64(), expected);
        assert_eq!(doubles.next_f64(), golden["f64"][k].as_f64().unwrap());
    }
}

#[test]
fn suite_is_deterministic() {
    let config = SuiteConfig {
        cases: Vec::new(),
        dims: vec![(2, 2), (3, 2)],
        trials: 4,
        seed: 99,
        tol: PSD_TOL,
    };
    let a = serde_json::to_string(&run_suite(&config).unwrap()).unwrap();
    let b = serde_json::to_string(&run_suite(&config).unwrap()).unwrap();
    assert_eq!(a, b);
}
