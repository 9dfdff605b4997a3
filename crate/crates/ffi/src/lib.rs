//! C ABI over `dtuple`.
//!
//! Correspondences are opaque handles created by `dt_correspondence_*` and
//! released with `dt_correspondence_free`. Every fallible call returns a
//! [`DtStatus`]; on failure `dt_last_error_message` describes the error.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with `dt_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dtuple::correspondence::{
    classify, compose, factorize, symmetry_report, Correspondence, CorrespondenceError, Variable,
};
use dtuple::io::{
    load_matrix, parse_fractional_map, parse_polynomial, save_matrix, ClassificationJson, InputError, MatrixDocument,
    Report, SymmetryJson,
};
use dtuple::oracle::verify_map_of_tuples;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DtStatus {
    Ok = 0,
    /// The call succeeded and the answer is negative (not a map of tuples,
    /// not rank 2, oracle check failed).
    Negative = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    ParseError = 4,
    InvalidCorrespondence = 5,
    OracleError = 6,
    Panic = 7,
}

/// Opaque validated correspondence.
pub struct DtCorrespondence {
    inner: Correspondence,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: DtStatus, msg: impl Into<String>) -> DtStatus {
    set_error(msg);
    status
}

fn input_status(e: &InputError) -> DtStatus {
    match e {
        InputError::Invalid(_) => DtStatus::InvalidCorrespondence,
        _ => DtStatus::ParseError,
    }
}

fn guard(body: impl FnOnce() -> DtStatus) -> DtStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(DtStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, DtStatus> {
    if s.is_null() {
        return Err(fail(DtStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(DtStatus::InvalidUtf8, "string argument is not valid UTF-8"))
}

unsafe fn handle<'a>(h: *const DtCorrespondence) -> Result<&'a Correspondence, DtStatus> {
    h.as_ref().map(|h| &h.inner).ok_or_else(|| fail(DtStatus::NullPointer, "null correspondence handle"))
}

unsafe fn emit_handle(out: *mut *mut DtCorrespondence, f: Correspondence) -> DtStatus {
    *out = Box::into_raw(Box::new(DtCorrespondence { inner: f }));
    DtStatus::Ok
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("JSON output has no nul bytes").into_raw();
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(DtStatus::NullPointer, concat!("null argument: ", stringify!($p)));
        })+
    };
}

/// Parses a polynomial such as `"(x*y+x+y+2)^3"` into a new handle.
///
/// # Safety
/// `expr` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dt_correspondence_parse(expr: *const c_char, out: *mut *mut DtCorrespondence) -> DtStatus {
    guard(|| {
        non_null!(out);
        let src = tri!(read_str(expr));
        match parse_polynomial(src) {
            Ok(f) => emit_handle(out, f),
            Err(e) => fail(input_status(&e), e.to_string()),
        }
    })
}

/// Loads a matrix document (JSON) into a new handle.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dt_correspondence_from_json(json: *const c_char, out: *mut *mut DtCorrespondence) -> DtStatus {
    guard(|| {
        non_null!(out);
        let src = tri!(read_str(json));
        match MatrixDocument::from_json(src).and_then(|doc| load_matrix(&doc)) {
            Ok(f) => emit_handle(out, f),
            Err(e) => fail(input_status(&e), e.to_string()),
        }
    })
}

/// Builds the correspondence `phi(x) = psi(y)` from two `"num / den"` maps.
///
/// # Safety
/// `phi` and `psi` must be nul-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dt_compose(
    phi: *const c_char,
    psi: *const c_char,
    out: *mut *mut DtCorrespondence,
) -> DtStatus {
    guard(|| {
        non_null!(out);
        let (phi, psi) = (tri!(read_str(phi)), tri!(read_str(psi)));
        let maps = parse_fractional_map(phi, Variable::X, None)
            .and_then(|phi| parse_fractional_map(psi, Variable::Y, None).map(|psi| (phi, psi)));
        let (phi, psi) = match maps {
            Ok(m) => m,
            Err(e) => return fail(input_status(&e), e.to_string()),
        };
        match compose(&phi, &psi) {
            Ok(f) => emit_handle(out, f),
            Err(e) => fail(DtStatus::InvalidCorrespondence, e.to_string()),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dt_correspondence_free(h: *mut DtCorrespondence) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Degree `d` of the correspondence; 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dt_correspondence_degree(h: *const DtCorrespondence) -> usize {
    h.as_ref().map_or(0, |h| h.inner.degree())
}

/// Exact rank of the coefficient matrix; 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dt_correspondence_rank(h: *const DtCorrespondence) -> usize {
    h.as_ref().map_or(0, |h| h.inner.rank())
}

/// Writes the matrix document of `h` to `*out`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dt_correspondence_to_json(h: *const DtCorrespondence, out: *mut *mut c_char) -> DtStatus {
    guard(|| {
        non_null!(out);
        let f = tri!(handle(h));
        emit_string(out, save_matrix(f).to_json());
        DtStatus::Ok
    })
}

/// Classification report as JSON. Returns `Negative` when `h` is not a map
/// of tuples; the report is written either way.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dt_classify_json(h: *const DtCorrespondence, out: *mut *mut c_char) -> DtStatus {
    guard(|| {
        non_null!(out);
        let f = tri!(handle(h));
        let class = match classify(f) {
            Ok(c) => c,
            Err(e) => return fail(DtStatus::InvalidCorrespondence, e.to_string()),
        };
        let positive = class.is_map_of_tuples();
        let mut report = Report::new(if positive { "map_of_tuples" } else { "not_map_of_tuples" });
        report.classification = Some(ClassificationJson::new(&class, f.degree()));
        emit_string(out, report.to_json());
        if positive {
            DtStatus::Ok
        } else {
            DtStatus::Negative
        }
    })
}

/// Separated form as JSON. Returns `Negative` (and leaves `*out` untouched)
/// when the matrix does not have rank 2.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dt_factorize_json(h: *const DtCorrespondence, out: *mut *mut c_char) -> DtStatus {
    guard(|| {
        non_null!(out);
        let f = tri!(handle(h));
        match factorize(f) {
            Ok(fact) => {
                let mut report = Report::new("rank2");
                report.scalar = fact.round_trip_scalar(f).map(|c| c.to_string());
                report.factorization = Some((&fact).into());
                emit_string(out, report.to_json());
                DtStatus::Ok
            }
            Err(e @ CorrespondenceError::RankNotTwo { .. }) => fail(DtStatus::Negative, e.to_string()),
            Err(e) => fail(DtStatus::InvalidCorrespondence, e.to_string()),
        }
    })
}

/// Symmetry report as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dt_symmetry_json(h: *const DtCorrespondence, out: *mut *mut c_char) -> DtStatus {
    guard(|| {
        non_null!(out);
        let f = tri!(handle(h));
        let mut report = Report::new("ok");
        report.symmetry = Some(SymmetryJson::from(&symmetry_report(f)));
        emit_string(out, report.to_json());
        DtStatus::Ok
    })
}

/// Numeric check of the tuple property. `Ok` means every sampled witness
/// passed, `Negative` that one failed; both fill the out-parameters.
///
/// # Safety
/// `h` must be a live handle; `out_passed` and `out_mismatch` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dt_verify(
    h: *const DtCorrespondence,
    samples: usize,
    tol: f64,
    seed: u64,
    out_passed: *mut bool,
    out_mismatch: *mut f64,
) -> DtStatus {
    guard(|| {
        non_null!(out_passed, out_mismatch);
        let f = tri!(handle(h));
        match verify_map_of_tuples(f, samples, tol, seed) {
            Ok(v) => {
                *out_passed = v.passed;
                *out_mismatch = v.worst.max_mismatch;
                if v.passed {
                    DtStatus::Ok
                } else {
                    DtStatus::Negative
                }
            }
            Err(e) => fail(DtStatus::OracleError, e.to_string()),
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn dt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
