//! C ABI over the braidsig report pipeline. All functions are
//! panic-safe; reports are opaque handles owned by the caller and
//! released with `braidsig_report_free`.

use braidsig::{build_report, parse_braid, InvariantReport};
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum BraidsigStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ComputeError = 4,
}

/// Opaque invariant report.
pub struct BraidsigReport {
    inner: InvariantReport,
}

/// Compute the full report for a word in the grammar
/// `INDEX("^"EXP)? (WS INDEX("^"EXP)?)*`. `strands` of 0 infers the
/// count from the word. On success `*out` owns a new report.
///
/// # Safety
/// `word` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_new(
    word: *const c_char,
    strands: usize,
    exhaustive_twist: bool,
    out: *mut *mut BraidsigReport,
) -> BraidsigStatus {
    if word.is_null() || out.is_null() {
        return BraidsigStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let Ok(text) = CStr::from_ptr(word).to_str() else {
        return BraidsigStatus::InvalidUtf8;
    };
    let strands = if strands == 0 { None } else { Some(strands) };
    let result = catch_unwind(AssertUnwindSafe(|| {
        let w = parse_braid(text, strands).map_err(|_| BraidsigStatus::ParseError)?;
        build_report(&w, exhaustive_twist).map_err(|_| BraidsigStatus::ComputeError)
    }));
    match result {
        Ok(Ok(inner)) => {
            *out = Box::into_raw(Box::new(BraidsigReport { inner }));
            BraidsigStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => BraidsigStatus::ComputeError,
    }
}

/// Release a report handle. Null is a no-op.
///
/// # Safety
/// `report` must come from `braidsig_report_new` and not be used after.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_free(report: *mut BraidsigReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

unsafe fn get(report: *const BraidsigReport, f: fn(&InvariantReport) -> i64) -> i64 {
    if report.is_null() {
        0
    } else {
        f(&(*report).inner)
    }
}

/// First Betti number of the fiber surface. Returns 0 on a null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_b1(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.b1)
}

/// Link signature (positive for positive braid closures). Returns 0 on
/// a null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_sigma(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.sigma)
}

/// Signature defect b1 - sigma. Returns 0 on a null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_delta_sigma(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.delta_sigma)
}

/// Twist number. Returns 0 on a null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_twist(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.twist)
}

/// Number of link components of the closure. Returns 0 on a null
/// handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_components(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.components as i64)
}

/// Letter count of the word. Returns 0 on a null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_letters(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.letters as i64)
}

/// Strand count. Returns 0 on a null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_strands(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.strands as i64)
}

/// Disjoint alternating subwords found by the certificate. Returns 0 on
/// a null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_subword_count(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.subword_count as i64)
}

/// 1 when (1/2) delta sigma <= t <= (21/2) delta sigma. Returns 0 on a
/// null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_thm3_ok(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.thm3_ok as i64)
}

/// 1 when every twist region has exponent >= 3. Returns 0 on a null
/// handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_sufficiently_complicated(
    report: *const BraidsigReport,
) -> i64 {
    get(report, |r| r.flags.sufficiently_complicated as i64)
}

/// 1 when the hyperbolicity criterion holds. Returns 0 on a null
/// handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_hyperbolic(report: *const BraidsigReport) -> i64 {
    get(report, |r| r.flags.hyperbolicity_criterion as i64)
}

/// Serialize the report as JSON. The returned string is owned by the
/// caller and must be released with `braidsig_string_free`; returns
/// null on a null handle.
///
/// # Safety
/// `report` must be a live handle from `braidsig_report_new`.
#[no_mangle]
pub unsafe extern "C" fn braidsig_report_json(report: *const BraidsigReport) -> *mut c_char {
    if report.is_null() {
        return ptr::null_mut();
    }
    let json = serde_json::to_string(&(*report).inner).unwrap_or_default();
    CString::new(json).map_or(ptr::null_mut(), CString::into_raw)
}

/// Release a string returned by `braidsig_report_json`.
///
/// # Safety
/// `s` must come from this library and not be used after.
#[no_mangle]
pub unsafe extern "C" fn braidsig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
