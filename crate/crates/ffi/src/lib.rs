//! C interface to `ffeis`.
//!
//! Conventions: every fallible function returns an [`FfeisStatus`] and writes
//! results through out-pointers. On failure the message is available from
//! [`ffeis_last_error_message`] on the same thread. Strings returned through
//! `char **` are owned by the caller and released with [`ffeis_string_free`];
//! handles are released with their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ffeis::cli::{verify_all, Bundle, VerifyOptions};
use ffeis::curves::{analyze_model, SplitCoverModel, DEFAULT_ENUMERATION_BUDGET};
use ffeis::cyclestats::{f_poly_recursive, DEFAULT_PERM_BOUND};
use ffeis::degrees::{degree_constant_analytic, degree_constant_combinatorial};
use ffeis::eisenstein::{check_constant_term_symmetry, ConstantTermProfile};
use ffeis::lfunctions::LEtaFunction;
use ffeis::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FfeisStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    FunctionalEquation = 3,
    SingularAtOne = 4,
    EnumerationBudget = 5,
    InvalidModel = 6,
    Inconsistent = 7,
    IdentityFailed = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FfeisRoute {
    Analytic = 0,
    Combinatorial = 1,
}

/// Opaque handle to a validated `L(s, eta)`.
pub struct FfeisLFunction {
    inner: LEtaFunction,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> FfeisStatus {
    match e {
        Error::ZetaFeViolation(_) | Error::LFunctionFeViolation(_) => {
            FfeisStatus::FunctionalEquation
        }
        Error::SingularAtOne => FfeisStatus::SingularAtOne,
        Error::EnumerationBudget { .. } => FfeisStatus::EnumerationBudget,
        Error::ModelInvariantViolation(_)
        | Error::FieldInvariantViolation(_)
        | Error::NotADoubleCoverPair(_) => FfeisStatus::InvalidModel,
        Error::CountInconsistency(_)
        | Error::DegreeMismatch { .. }
        | Error::QMismatch(..)
        | Error::FamilyInconsistency(_) => FfeisStatus::Inconsistent,
        _ => FfeisStatus::InvalidInput,
    }
}

fn guard(body: impl FnOnce() -> Result<(), FfeisStatus>) -> FfeisStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FfeisStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_last_error("internal panic".into());
            FfeisStatus::Panic
        }
    }
}

fn fail(e: Error) -> FfeisStatus {
    let s = status_of(&e);
    set_last_error(e.to_string());
    s
}

fn null() -> FfeisStatus {
    set_last_error("null pointer argument".into());
    FfeisStatus::NullPointer
}

unsafe fn slice<'a>(p: *const i64, len: usize) -> Result<&'a [i64], FfeisStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), FfeisStatus> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), FfeisStatus> {
    write(out, CString::new(s).expect("no interior nul").into_raw())
}

unsafe fn handle<'a>(h: *const FfeisLFunction) -> Result<&'a LEtaFunction, FfeisStatus> {
    h.as_ref().map(|h| &h.inner).ok_or_else(null)
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ffeis_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ffeis_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Validates `L(T) = sum coeffs[k] T^k` over `F_q` and returns a handle.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_lfunction_new(
    q: u64,
    coeffs: *const i64,
    len: usize,
    out: *mut *mut FfeisLFunction,
) -> FfeisStatus {
    guard(|| {
        let c = slice(coeffs, len)?;
        let l = LEtaFunction::from_i64s(q, c).map_err(fail)?;
        write(out, Box::into_raw(Box::new(FfeisLFunction { inner: l })))
    })
}

/// Recovers `L(s, eta)` of the cover `u^2 = f1, v^2 = f2` over `y^2 = f1 f2`
/// from point counts over `F_{p^1} .. F_{p^m}` (`m = 0` picks the minimum).
///
/// # Safety
/// Coefficient pointers must cover their lengths; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_lfunction_from_curve(
    p: u64,
    f1: *const i64,
    len1: usize,
    f2: *const i64,
    len2: usize,
    m: u32,
    out: *mut *mut FfeisLFunction,
) -> FfeisStatus {
    guard(|| {
        let model = SplitCoverModel::new(p, slice(f1, len1)?, slice(f2, len2)?).map_err(fail)?;
        let m = (m > 0).then_some(m);
        let a = analyze_model(&model, m, DEFAULT_ENUMERATION_BUDGET).map_err(fail)?;
        let l = LEtaFunction::new(p, a.l_poly).map_err(fail)?;
        write(out, Box::into_raw(Box::new(FfeisLFunction { inner: l })))
    })
}

/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ffeis_lfunction_free(h: *mut FfeisLFunction) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Degree `w` of the polynomial, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ffeis_lfunction_degree(h: *const FfeisLFunction) -> usize {
    h.as_ref().map_or(0, |h| h.inner.w())
}

/// Coefficient `c_k` as a decimal string.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_lfunction_coefficient(
    h: *const FfeisLFunction,
    k: usize,
    out: *mut *mut c_char,
) -> FfeisStatus {
    guard(|| {
        let l = handle(h)?;
        write_string(out, l.coeffs().coeff(k).to_string())
    })
}

/// `L(T = 1)` as a decimal string.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_lfunction_value_at_one(
    h: *const FfeisLFunction,
    out: *mut *mut c_char,
) -> FfeisStatus {
    guard(|| {
        let l = handle(h)?;
        write_string(out, l.value_at_one().to_string())
    })
}

/// Degree of the constant-term cycle class along the chosen route, as an
/// exact `p/q` string.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_degree_constant(
    h: *const FfeisLFunction,
    d: i64,
    r: u32,
    route: FfeisRoute,
    out: *mut *mut c_char,
) -> FfeisStatus {
    guard(|| {
        let l = handle(h)?;
        let v = match route {
            FfeisRoute::Analytic => degree_constant_analytic(l, d, r),
            FfeisRoute::Combinatorial => {
                degree_constant_combinatorial(l, d, r, DEFAULT_PERM_BOUND).map_err(fail)?
            }
        };
        write_string(out, v.to_string())
    })
}

/// Whether the constant term is fixed by `s -> -s` up to `eta`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_constant_term_symmetric(
    h: *const FfeisLFunction,
    d: i64,
    eta: i64,
    out: *mut bool,
) -> FfeisStatus {
    guard(|| {
        let l = handle(h)?;
        let p = ConstantTermProfile::with_d(l.clone(), d, eta).map_err(fail)?;
        write(out, check_constant_term_symmetry(&p))
    })
}

/// The cycle polynomial `f_n`, e.g. `"x + x^2"` for `n = 3`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_fpoly(n: u32, out: *mut *mut c_char) -> FfeisStatus {
    guard(|| {
        let f = f_poly_recursive(n).map_err(fail)?;
        write_string(out, f.to_string())
    })
}

/// Point counts of the base and cover curves over `F_{p^i}`.
///
/// # Safety
/// Coefficient pointers must cover their lengths; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_count_points(
    p: u64,
    f1: *const i64,
    len1: usize,
    f2: *const i64,
    len2: usize,
    i: u32,
    budget: u64,
    out_base: *mut u64,
    out_cover: *mut u64,
) -> FfeisStatus {
    guard(|| {
        let model = SplitCoverModel::new(p, slice(f1, len1)?, slice(f2, len2)?).map_err(fail)?;
        let (b, c) = model.count_both(i, budget).map_err(fail)?;
        write(out_base, b)?;
        write(out_cover, c)
    })
}

/// Runs the identity suite on a JSON bundle (null for the built-in one) and
/// writes the text report. Returns `IDENTITY_FAILED` if any check fails; the
/// report is written in that case too.
///
/// # Safety
/// `bundle_json` must be null or a nul-terminated string; `out_report` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ffeis_verify(
    bundle_json: *const c_char,
    r_max: u32,
    out_report: *mut *mut c_char,
) -> FfeisStatus {
    guard(|| {
        let bundle = if bundle_json.is_null() {
            Bundle::default_bundle()
        } else {
            let text = CStr::from_ptr(bundle_json).to_str().map_err(|_| {
                set_last_error("bundle is not valid UTF-8".into());
                FfeisStatus::InvalidInput
            })?;
            Bundle::from_json(text).map_err(fail)?
        };
        let opts = VerifyOptions {
            order: ffeis::exactalg::DEFAULT_SERIES_ORDER,
            r_max,
            budget: DEFAULT_ENUMERATION_BUDGET,
        };
        let report = verify_all(&bundle, &opts).map_err(fail)?;
        write_string(out_report, report.to_text())?;
        match report.first_failure() {
            None => Ok(()),
            Some(c) => {
                set_last_error(format!("identity failed: {}", c.name));
                Err(FfeisStatus::IdentityFailed)
            }
        }
    })
}
