//! C ABI for the hmds library.
//!
//! Codes live behind an opaque `HmdsCode` handle. Every fallible call returns
//! an `HmdsStatus` and writes its result through an out-pointer; on failure
//! `hmds_last_error` describes the error for the calling thread. Strings
//! handed out by the library must be released with `hmds_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hmds::codes::{CodeJson, LinearCode};
use hmds::fields::FieldCtx;
use hmds::{bounds, construct, cosets, hmds as hm, repro, Error};

/// Opaque handle to a linear code.
pub struct HmdsCode(LinearCode);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HmdsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    BudgetExceeded = 4,
    NotMds = 5,
    Precondition = 6,
    UnknownCase = 7,
    Internal = 8,
}

/// Method for `hmds_is_2mds`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HmdsMethod {
    /// Determinant test on the code itself; decides lightly-2-MDS.
    Det = 0,
    /// Determinant test on every relevant puncturing.
    Puncture = 1,
    /// Exhaustive coset enumeration.
    Brute = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> HmdsStatus {
    match e {
        Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded { .. } => HmdsStatus::BudgetExceeded,
        Error::NotMds => HmdsStatus::NotMds,
        Error::PreconditionRate { .. } | Error::EvenH | Error::ParameterTooSmall(_) | Error::FieldTooSmall { .. } => HmdsStatus::Precondition,
        Error::Parse(_) => HmdsStatus::Parse,
        Error::UnknownCase(_) => HmdsStatus::UnknownCase,
        _ => HmdsStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard<F: FnOnce() -> Result<(), (HmdsStatus, String)>>(f: F) -> HmdsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HmdsStatus::Ok,
        Ok(Err((s, m))) => {
            set_error(&m);
            s
        }
        Err(_) => {
            set_error("internal panic");
            HmdsStatus::Internal
        }
    }
}

fn lib<T>(r: hmds::Result<T>) -> Result<T, (HmdsStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (HmdsStatus, String) {
    (HmdsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HmdsStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (HmdsStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn code_arg<'a>(p: *const HmdsCode) -> Result<&'a LinearCode, (HmdsStatus, String)> {
    p.as_ref().map(|c| &c.0).ok_or_else(|| null("code"))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), (HmdsStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn put_code(out: *mut *mut HmdsCode, c: LinearCode) -> Result<(), (HmdsStatus, String)> {
    put(out, Box::into_raw(Box::new(HmdsCode(c))))
}

unsafe fn put_json(out: *mut *mut c_char, v: &impl serde::Serialize) -> Result<(), (HmdsStatus, String)> {
    let s = serde_json::to_string(v).map_err(|e| (HmdsStatus::Internal, e.to_string()))?;
    put(out, to_c(s))
}

/// Message for the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hmds_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hmds_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hmds_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Sets the enumeration budget for all threads; 0 restores the default.
#[no_mangle]
pub extern "C" fn hmds_set_budget(budget: u64) {
    hmds::set_budget(budget);
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_code_from_json(json: *const c_char, out: *mut *mut HmdsCode) -> HmdsStatus {
    guard(|| {
        let s = str_arg(json, "json")?;
        let j: CodeJson = serde_json::from_str(s).map_err(|e| (HmdsStatus::Parse, e.to_string()))?;
        put_code(out, lib(LinearCode::from_json(&j))?)
    })
}

/// Loads an embedded example code by name (see `hmds repro --dump`).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_code_fixture(name: *const c_char, out: *mut *mut HmdsCode) -> HmdsStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let j = repro::fixtures()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, j)| j)
            .ok_or_else(|| (HmdsStatus::UnknownCase, format!("no fixture named {name:?}")))?;
        put_code(out, lib(LinearCode::from_json(&j))?)
    })
}

/// Code with parity-check rows (v_j a_j^i), i < n - k, over GF(p).
///
/// # Safety
/// `locators` must point to `n` readable values; `multipliers` is null or
/// points to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_code_grs_prime(
    p: u64,
    locators: *const u64,
    multipliers: *const u64,
    n: usize,
    k: usize,
    out: *mut *mut HmdsCode,
) -> HmdsStatus {
    guard(|| {
        if locators.is_null() {
            return Err(null("locators"));
        }
        let f = lib(FieldCtx::prime(p))?;
        let locs: Vec<_> = std::slice::from_raw_parts(locators, n).iter().map(|&a| f.from_u64(a)).collect();
        let mult: Option<Vec<_>> =
            (!multipliers.is_null()).then(|| std::slice::from_raw_parts(multipliers, n).iter().map(|&a| f.from_u64(a)).collect());
        put_code(out, lib(LinearCode::grs(&f, &locs, k, mult.as_deref()))?)
    })
}

/// # Safety
/// `code` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hmds_code_free(code: *mut HmdsCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// # Safety
/// `code` must be a live handle; `n` and `k` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_code_dimensions(code: *const HmdsCode, n: *mut usize, k: *mut usize) -> HmdsStatus {
    guard(|| {
        let c = code_arg(code)?;
        put(n, c.n())?;
        put(k, c.k())
    })
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_code_to_json(code: *const HmdsCode, out: *mut *mut c_char) -> HmdsStatus {
    guard(|| put_json(out, &code_arg(code)?.to_json()))
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_code_dual(code: *const HmdsCode, out: *mut *mut HmdsCode) -> HmdsStatus {
    guard(|| put_code(out, code_arg(code)?.dual()))
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_is_mds(code: *const HmdsCode, out: *mut bool) -> HmdsStatus {
    guard(|| put(out, code_arg(code)?.is_mds()))
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_min_distance(code: *const HmdsCode, out: *mut usize) -> HmdsStatus {
    guard(|| put(out, lib(code_arg(code)?.min_distance())?))
}

/// Writes the verdict to `out` and, when it is false and `witness` is not
/// null, a JSON witness to `*witness` (null otherwise).
unsafe fn verdict(r: (bool, Option<cosets::Witness>), out: *mut bool, witness: *mut *mut c_char) -> Result<(), (HmdsStatus, String)> {
    put(out, r.0)?;
    if !witness.is_null() {
        match r.1 {
            Some(w) => put_json(witness, &w)?,
            None => witness.write(ptr::null_mut()),
        }
    }
    Ok(())
}

/// # Safety
/// `code` must be a live handle; `out` writable; `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_is_list_decodable(
    code: *const HmdsCode,
    tau: usize,
    list: u64,
    out: *mut bool,
    witness: *mut *mut c_char,
) -> HmdsStatus {
    guard(|| verdict(lib(cosets::is_list_decodable(code_arg(code)?, tau, list))?, out, witness))
}

/// Strong list decodability with weight-sum bound `total` = (L+1) tau.
///
/// # Safety
/// `code` must be a live handle; `out` writable; `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_is_strongly_list_decodable(
    code: *const HmdsCode,
    total: u64,
    list: u64,
    out: *mut bool,
    witness: *mut *mut c_char,
) -> HmdsStatus {
    guard(|| verdict(lib(cosets::is_strongly_list_decodable(code_arg(code)?, total, list))?, out, witness))
}

/// # Safety
/// `code` must be a live handle; `out` writable; `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_is_2mds(code: *const HmdsCode, method: HmdsMethod, out: *mut bool, witness: *mut *mut c_char) -> HmdsStatus {
    guard(|| {
        let c = code_arg(code)?;
        let r = match method {
            HmdsMethod::Det => lib(hm::lightly_2mds_det(c))?,
            HmdsMethod::Puncture => lib(hm::is_2mds(c))?,
            HmdsMethod::Brute => lib(cosets::is_strongly_list_decodable(c, 2 * c.redundancy() as u64, 2))?,
        };
        verdict(r, out, witness)
    })
}

/// L-MDS sweep for L in [1, l_max], as JSON.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_l_mds_profile(code: *const HmdsCode, l_max: u64, out: *mut *mut c_char) -> HmdsStatus {
    guard(|| put_json(out, &lib(cosets::l_mds_profile(code_arg(code)?, l_max))?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_construct_rho3(h: usize, out: *mut *mut HmdsCode) -> HmdsStatus {
    guard(|| put_code(out, lib(construct::rho3_construction(h))?.0))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_construct_general(rho: usize, h: usize, out: *mut *mut HmdsCode) -> HmdsStatus {
    guard(|| put_code(out, lib(construct::general_construction(rho, h))?.0))
}

/// Greedy redundancy-3 code of length `n` over GF(2^m).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_construct_greedy(m: usize, n: usize, out: *mut *mut HmdsCode) -> HmdsStatus {
    guard(|| {
        let f = lib(FieldCtx::binary(m))?;
        put_code(out, lib(construct::greedy_rho3(&f, n))?)
    })
}

/// Bound report for (n, k, q, L) at the improved Singleton radius, as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_bounds_report(n: u64, k: u64, q: u64, list: u64, out: *mut *mut c_char) -> HmdsStatus {
    guard(|| put_json(out, &lib(bounds::report(n, k, q, list, None, None))?))
}

/// Runs one reproduction case; `pass` gets the verdict and `out` the JSON record.
///
/// # Safety
/// `id` must be a NUL-terminated string; `pass` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hmds_repro_case(id: *const c_char, pass: *mut bool, out: *mut *mut c_char) -> HmdsStatus {
    guard(|| {
        let r = lib(repro::run_case_budgeted(str_arg(id, "id")?))?;
        put(pass, r.pass)?;
        put_json(out, &r)
    })
}
