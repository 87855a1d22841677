//! C ABI over `blocktrace`.
//!
//! Matrices cross the boundary as opaque `BtMatrix` handles created by
//! `bt_matrix_new` and released with `bt_matrix_free`. Complex data is
//! exchanged as interleaved `(re, im)` doubles in row-major order. Every
//! fallible function returns a `BtStatus`; on failure a message is available
//! from `bt_last_error` on the calling thread. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! `bt_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use blocktrace::block::{partial_trace_1, partial_trace_2, partial_transpose, reshuffle};
use blocktrace::generators::{gen, GenKind, GenSpec};
use blocktrace::io::{instance_from_json, instance_to_json};
use blocktrace::linalg::{hermitian_eigvals, singular_values};
use blocktrace::order::{is_ppt, is_psd, OrderVerdict};
use blocktrace::theorems::{check_case, run_suite, SuiteConfig};
use blocktrace::{BlockMatrix, Error, Matrix};
use num_complex::Complex64;

/// Opaque dense complex matrix.
pub struct BtMatrix(Matrix);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BtStatus {
    Ok = 0,
    NullPointer = 1,
    DimensionMismatch = 2,
    NotSquare = 3,
    NotHermitian = 4,
    NoConvergence = 5,
    InvalidArgument = 6,
    UnknownCase = 7,
    WrongInputClass = 8,
    Precondition = 9,
    Overflow = 10,
    Parse = 11,
    Io = 12,
    Panic = 13,
}

/// Outcome of an order check: `holds` iff `witness >= -tolerance_used`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BtVerdict {
    pub holds: bool,
    pub witness: f64,
    pub tolerance_used: f64,
}

impl From<OrderVerdict> for BtVerdict {
    fn from(v: OrderVerdict) -> Self {
        BtVerdict {
            holds: v.holds,
            witness: v.witness,
            tolerance_used: v.tolerance_used,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> BtStatus {
    match err {
        Error::DimensionMismatch { .. } => BtStatus::DimensionMismatch,
        Error::NotSquare { .. } => BtStatus::NotSquare,
        Error::NotHermitian { .. } => BtStatus::NotHermitian,
        Error::NoConvergence { .. } => BtStatus::NoConvergence,
        Error::KOutOfRange { .. } | Error::InvalidSpec(_) => BtStatus::InvalidArgument,
        Error::UnknownCase(_) => BtStatus::UnknownCase,
        Error::WrongInputClass { .. } => BtStatus::WrongInputClass,
        Error::Precondition(_) => BtStatus::Precondition,
        Error::Overflow => BtStatus::Overflow,
        Error::Parse(_) | Error::Json(_) => BtStatus::Parse,
        Error::Io(_) => BtStatus::Io,
    }
}

/// Runs `f`, converting errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), (BtStatus, String)>) -> BtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            BtStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            BtStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (BtStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(what: &str) -> (BtStatus, String) {
    (BtStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> (BtStatus, String) {
    (BtStatus::InvalidArgument, msg.into())
}

unsafe fn matrix_ref<'a>(m: *const BtMatrix, what: &str) -> Result<&'a Matrix, (BtStatus, String)> {
    m.as_ref().map(|h| &h.0).ok_or_else(|| null_err(what))
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (BtStatus, String)> {
    if s.is_null() {
        return Err(null_err(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (BtStatus, String)> {
    if out.is_null() {
        return Err(null_err(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (BtStatus, String)> {
    let c = CString::new(s).map_err(|_| invalid("output contains a NUL byte"))?;
    write_out(out, c.into_raw(), "output string pointer")
}

unsafe fn write_matrix(out: *mut *mut BtMatrix, m: Matrix) -> Result<(), (BtStatus, String)> {
    write_out(
        out,
        Box::into_raw(Box::new(BtMatrix(m))),
        "output matrix pointer",
    )
}

fn as_block(a: &Matrix, m: usize, n: usize) -> Result<BlockMatrix, (BtStatus, String)> {
    BlockMatrix::new(m, n, a.clone()).map_err(lib_err)
}

unsafe fn write_reals(values: &[f64], out: *mut f64, len: usize) -> Result<(), (BtStatus, String)> {
    if out.is_null() {
        return Err(null_err("output buffer"));
    }
    if len != values.len() {
        return Err((
            BtStatus::DimensionMismatch,
            format!(
                "output buffer holds {len} values, {} required",
                values.len()
            ),
        ));
    }
    ptr::copy_nonoverlapping(values.as_ptr(), out, len);
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn bt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a `rows x cols` matrix from `2 * rows * cols` interleaved doubles,
/// or a zero matrix when `data` is null.
///
/// # Safety
/// `data` must be null or point to `2 * rows * cols` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn bt_matrix_new(
    rows: usize,
    cols: usize,
    data: *const f64,
    out: *mut *mut BtMatrix,
) -> BtStatus {
    guard(|| {
        let len = rows
            .checked_mul(cols)
            .and_then(|l| l.checked_mul(2))
            .ok_or_else(|| invalid("matrix size overflows"))?;
        let m = if data.is_null() {
            Matrix::zeros(rows, cols)
        } else {
            let raw = std::slice::from_raw_parts(data, len);
            let entries = raw
                .chunks_exact(2)
                .map(|p| Complex64::new(p[0], p[1]))
                .collect();
            Matrix::from_vec(rows, cols, entries).map_err(lib_err)?
        };
        write_matrix(out, m)
    })
}

/// Releases a matrix; null is ignored.
///
/// # Safety
/// `m` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bt_matrix_free(m: *mut BtMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Row count, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bt_matrix_rows(m: *const BtMatrix) -> usize {
    m.as_ref().map_or(0, |h| h.0.rows())
}

/// Column count, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bt_matrix_cols(m: *const BtMatrix) -> usize {
    m.as_ref().map_or(0, |h| h.0.cols())
}

/// Copies the entries as interleaved `(re, im)` pairs; `len` counts doubles.
///
/// # Safety
/// `m` must be a live handle and `out` must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn bt_matrix_data(m: *const BtMatrix, out: *mut f64, len: usize) -> BtStatus {
    guard(|| {
        let a = matrix_ref(m, "matrix")?;
        let flat: Vec<f64> = a.as_slice().iter().flat_map(|z| [z.re, z.im]).collect();
        write_reals(&flat, out, len)
    })
}

unsafe fn block_op(
    a: *const BtMatrix,
    m: usize,
    n: usize,
    out: *mut *mut BtMatrix,
    op: impl FnOnce(&BlockMatrix) -> Matrix,
) -> BtStatus {
    guard(|| {
        let b = as_block(matrix_ref(a, "matrix")?, m, n)?;
        write_matrix(out, op(&b))
    })
}

/// `A^τ` of `a` viewed as an `m x m` block matrix with `n x n` blocks.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bt_partial_transpose(
    a: *const BtMatrix,
    m: usize,
    n: usize,
    out: *mut *mut BtMatrix,
) -> BtStatus {
    block_op(a, m, n, out, |b| partial_transpose(b).into_dense())
}

/// `tr1 A`, the `n x n` sum of diagonal blocks.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bt_partial_trace_1(
    a: *const BtMatrix,
    m: usize,
    n: usize,
    out: *mut *mut BtMatrix,
) -> BtStatus {
    block_op(a, m, n, out, partial_trace_1)
}

/// `tr2 A`, the `m x m` matrix of block traces.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bt_partial_trace_2(
    a: *const BtMatrix,
    m: usize,
    n: usize,
    out: *mut *mut BtMatrix,
) -> BtStatus {
    block_op(a, m, n, out, partial_trace_2)
}

/// The reshuffled matrix, an `n x n` block matrix with `m x m` blocks.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bt_reshuffle(
    a: *const BtMatrix,
    m: usize,
    n: usize,
    out: *mut *mut BtMatrix,
) -> BtStatus {
    block_op(a, m, n, out, |b| reshuffle(b).into_dense())
}

/// Eigenvalues of a Hermitian matrix in non-increasing order; `len` must equal
/// the dimension.
///
/// # Safety
/// `a` must be a live handle and `out` must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn bt_hermitian_eigvals(
    a: *const BtMatrix,
    out: *mut f64,
    len: usize,
) -> BtStatus {
    guard(|| {
        let s = hermitian_eigvals(matrix_ref(a, "matrix")?).map_err(lib_err)?;
        write_reals(s.values(), out, len)
    })
}

/// Singular values in non-increasing order; `len` must equal
/// `min(rows, cols)`.
///
/// # Safety
/// `a` must be a live handle and `out` must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn bt_singular_values(
    a: *const BtMatrix,
    out: *mut f64,
    len: usize,
) -> BtStatus {
    guard(|| {
        let s = singular_values(matrix_ref(a, "matrix")?).map_err(lib_err)?;
        write_reals(s.values(), out, len)
    })
}

/// PSD test with relative tolerance `tol`.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bt_is_psd(a: *const BtMatrix, tol: f64, out: *mut BtVerdict) -> BtStatus {
    guard(|| {
        let v = is_psd(matrix_ref(a, "matrix")?, tol).map_err(lib_err)?;
        write_out(out, v.into(), "verdict pointer")
    })
}

/// PPT test of `a` as an `m x m` block matrix with `n x n` blocks.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bt_is_ppt(
    a: *const BtMatrix,
    m: usize,
    n: usize,
    tol: f64,
    out: *mut BtVerdict,
) -> BtStatus {
    guard(|| {
        let b = as_block(matrix_ref(a, "matrix")?, m, n)?;
        let v = is_ppt(&b, tol).map_err(lib_err)?;
        write_out(out, v.into(), "verdict pointer")
    })
}

/// Generates an instance of `kind` and writes its JSON encoding.
///
/// # Safety
/// `kind` must be a NUL-terminated string and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn bt_gen(
    kind: *const c_char,
    m: usize,
    n: usize,
    seed: u64,
    out_json: *mut *mut c_char,
) -> BtStatus {
    guard(|| {
        let kind: GenKind = c_str(kind, "kind")?.parse().map_err(lib_err)?;
        let inst = gen(&GenSpec::new(kind, m, n, seed)).map_err(lib_err)?;
        write_string(out_json, instance_to_json(&inst))
    })
}

/// Checks one registry case on a JSON-encoded instance and writes the JSON
/// slack report. `Ok` means the check ran; the verdict is in the report.
///
/// # Safety
/// String arguments must be NUL-terminated and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn bt_check_case(
    case_id: *const c_char,
    instance_json: *const c_char,
    tol: f64,
    out_json: *mut *mut c_char,
) -> BtStatus {
    guard(|| {
        let id = c_str(case_id, "case id")?;
        let inst = instance_from_json(c_str(instance_json, "instance")?).map_err(lib_err)?;
        let report = check_case(id, &inst, tol).map_err(lib_err)?;
        write_string(
            out_json,
            serde_json::to_string(&report).map_err(|e| lib_err(e.into()))?,
        )
    })
}

/// Runs a suite from a JSON config
/// `{"cases": [...], "dims": [[m, n], ...], "trials": T, "seed": S, "tol": t}`
/// (`cases`, `seed` and `tol` optional) and writes the JSON report.
///
/// # Safety
/// `config_json` must be NUL-terminated and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn bt_run_suite(
    config_json: *const c_char,
    out_json: *mut *mut c_char,
) -> BtStatus {
    guard(|| {
        let config: SuiteConfig = serde_json::from_str(c_str(config_json, "config")?)
            .map_err(|e| (BtStatus::Parse, format!("bad suite config: {e}")))?;
        let report = run_suite(&config).map_err(lib_err)?;
        write_string(
            out_json,
            serde_json::to_string(&report).map_err(|e| lib_err(e.into()))?,
        )
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
