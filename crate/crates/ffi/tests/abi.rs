use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use blocktrace_ffi::*;

fn new_matrix(rows: usize, cols: usize, data: &[f64]) -> *mut BtMatrix {
    let mut out = ptr::null_mut();
    let status = unsafe { bt_matrix_new(rows, cols, data.as_ptr(), &mut out) };
    assert_eq!(status, BtStatus::Ok);
    out
}

fn real(values: &[f64]) -> Vec<f64> {
    values.iter().flat_map(|&v| [v, 0.0]).collect()
}

fn data(m: *const BtMatrix) -> Vec<f64> {
    let len = unsafe { 2 * bt_matrix_rows(m) * bt_matrix_cols(m) };
    let mut buf = vec![0.0; len];
    assert_eq!(
        unsafe { bt_matrix_data(m, buf.as_mut_ptr(), len) },
        BtStatus::Ok
    );
    buf
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bt_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { bt_string_free(s) };
    out
}

#[test]
fn partial_operations_on_kron_of_ones() {
    let a = new_matrix(4, 4, &real(&[1.0; 16]));
    let mut t1 = ptr::null_mut();
    let mut t2 = ptr::null_mut();
    let mut tau = ptr::null_mut();
    let mut re = ptr::null_mut();
    unsafe {
        assert_eq!(bt_partial_trace_1(a, 2, 2, &mut t1), BtStatus::Ok);
        assert_eq!(bt_partial_trace_2(a, 2, 2, &mut t2), BtStatus::Ok);
        assert_eq!(bt_partial_transpose(a, 2, 2, &mut tau), BtStatus::Ok);
        assert_eq!(bt_reshuffle(a, 2, 2, &mut re), BtStatus::Ok);
    }
    assert_eq!(data(t1), real(&[2.0; 4]));
    assert_eq!(data(t2), real(&[2.0; 4]));
    assert_eq!(data(tau), data(a));
    assert_eq!(data(re), data(a));
    unsafe {
        for h in [a, t1, t2, tau, re] {
            bt_matrix_free(h);
        }
    }
}

#[test]
fn spectra_and_verdicts() {
    let swap = new_matrix(2, 2, &real(&[0.0, -1.0, -1.0, 0.0]));
    let mut ev = [0.0; 2];
    let mut sv = [0.0; 2];
    let mut v = BtVerdict {
        holds: true,
        witness: 0.0,
        tolerance_used: 0.0,
    };
    unsafe {
        assert_eq!(bt_hermitian_eigvals(swap, ev.as_mut_ptr(), 2), BtStatus::Ok);
        assert_eq!(bt_singular_values(swap, sv.as_mut_ptr(), 2), BtStatus::Ok);
        assert_eq!(bt_is_psd(swap, 1e-8, &mut v), BtStatus::Ok);
    }
    assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] + 1.0).abs() < 1e-14);
    assert!((sv[0] - 1.0).abs() < 1e-14 && (sv[1] - 1.0).abs() < 1e-14);
    assert!(!v.holds);
    assert!((v.witness + 1.0).abs() < 1e-14);
    unsafe { bt_matrix_free(swap) };
}

#[test]
fn errors_set_status_and_message() {
    let mut out = ptr::null_mut();
    let a = new_matrix(2, 3, &real(&[0.0; 6]));
    unsafe {
        assert_eq!(
            bt_partial_trace_1(a, 2, 2, &mut out),
            BtStatus::DimensionMismatch
        );
        assert!(!last_error().is_empty());
        let mut ev = [0.0; 2];
        assert_eq!(
            bt_hermitian_eigvals(a, ev.as_mut_ptr(), 2),
            BtStatus::NotSquare
        );
        assert_eq!(
            bt_hermitian_eigvals(ptr::null(), ev.as_mut_ptr(), 2),
            BtStatus::NullPointer
        );
        assert_eq!(bt_matrix_rows(ptr::null()), 0);
        bt_matrix_free(a);
        bt_matrix_free(ptr::null_mut());
        bt_string_free(ptr::null_mut());
    }
    let nonherm = new_matrix(2, 2, &real(&[0.0, 1.0, 0.0, 0.0]));
    let mut v = BtVerdict {
        holds: false,
        witness: 0.0,
        tolerance_used: 0.0,
    };
    assert_eq!(
        unsafe { bt_is_psd(nonherm, 1e-8, &mut v) },
        BtStatus::NotHermitian
    );
    let mut ev = [0.0; 3];
    assert_eq!(
        unsafe { bt_hermitian_eigvals(nonherm, ev.as_mut_ptr(), 3) },
        BtStatus::NotHermitian
    );
    unsafe { bt_matrix_free(nonherm) };
}

#[test]
fn gen_then_check_case() {
    let kind = CString::new("psd").unwrap();
    let mut inst = ptr::null_mut();
    assert_eq!(
        unsafe { bt_gen(kind.as_ptr(), 2, 3, 5, &mut inst) },
        BtStatus::Ok
    );
    let inst_json = CString::new(take_string(inst)).unwrap();

    let id = CString::new("choi-tr1").unwrap();
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { bt_check_case(id.as_ptr(), inst_json.as_ptr(), 1e-8, &mut report) },
        BtStatus::Ok
    );
    let parsed: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(parsed["case_id"], "choi-tr1");
    assert_eq!(parsed["holds"], true);

    let id = CString::new("ck-classical").unwrap();
    assert_eq!(
        unsafe { bt_check_case(id.as_ptr(), inst_json.as_ptr(), 1e-8, &mut report) },
        BtStatus::WrongInputClass
    );
    let bad_kind = CString::new("nope").unwrap();
    assert_eq!(
        unsafe { bt_gen(bad_kind.as_ptr(), 2, 2, 0, &mut inst) },
        BtStatus::InvalidArgument
    );
}

#[test]
fn suite_through_json() {
    let cfg = CString::new(
        r#"{"cases":["ando","psi-not-2-positive"],"dims":[[2,2]],"trials":3,"seed":1}"#,
    )
    .unwrap();
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { bt_run_suite(cfg.as_ptr(), &mut report) },
        BtStatus::Ok
    );
    let parsed: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(parsed["failures"], 0);
    assert_eq!(parsed["cases"].as_array().unwrap().len(), 2);

    let bad = CString::new("{").unwrap();
    assert_eq!(
        unsafe { bt_run_suite(bad.as_ptr(), &mut report) },
        BtStatus::Parse
    );
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(bt_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
