//! C ABI over `battery-syt`.
//!
//! Counts live behind an opaque `BsytCount` handle. Strings returned to the
//! caller are owned by the caller and released with `bsyt_string_free`.
//! Every call that fails records a message retrievable with
//! `bsyt_last_error` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use battery_syt::cli::ShapeExpr;
use battery_syt::{factorize, BatteryShape, Error, Method, Natural};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsytStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    Inapplicable = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsytMethod {
    Auto = 0,
    Hyper = 1,
    General = 2,
    Closed = 3,
    Dp = 4,
}

impl BsytMethod {
    fn resolve(self) -> Option<Method> {
        match self {
            BsytMethod::Auto => None,
            BsytMethod::Hyper => Some(Method::Hyper),
            BsytMethod::General => Some(Method::General),
            BsytMethod::Closed => Some(Method::Closed),
            BsytMethod::Dp => Some(Method::Dp),
        }
    }
}

impl From<Method> for BsytMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Hyper => BsytMethod::Hyper,
            Method::General => BsytMethod::General,
            Method::Closed => BsytMethod::Closed,
            Method::Dp => BsytMethod::Dp,
        }
    }
}

/// An exact count together with the method that produced it.
pub struct BsytCount {
    count: Natural,
    method: Method,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = CString::new(message.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> BsytStatus {
    match e {
        Error::Inapplicable { .. } | Error::SizeCap { .. } => BsytStatus::Inapplicable,
        Error::InvalidShape(_) | Error::InvalidPartition(_) => BsytStatus::ParseError,
        _ => BsytStatus::Internal,
    }
}

/// Runs `body`, converting panics into `Internal`.
fn guarded(body: impl FnOnce() -> Result<(), (BsytStatus, String)>) -> BsytStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BsytStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BsytStatus::Internal
        }
    }
}

fn store(
    out: *mut *mut BsytCount,
    shape: &ShapeExpr,
    method: BsytMethod,
    size_cap: usize,
) -> Result<(), (BsytStatus, String)> {
    let method = method.resolve().unwrap_or_else(|| shape.auto_method());
    let count = shape.count(method, size_cap).map_err(|e| (status_of(&e), e.to_string()))?;
    // SAFETY: the caller checked `out` for null and promises it is writable.
    unsafe { *out = Box::into_raw(Box::new(BsytCount { count, method })) };
    Ok(())
}

/// Counts the tableaux of a shape given in the command-line shape syntax,
/// e.g. `"battery:rect:11x7,a=1,k=6"`. On success `*out` receives a handle
/// to release with `bsyt_count_free`.
///
/// # Safety
/// `expr` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bsyt_count_shape(
    expr: *const c_char,
    method: BsytMethod,
    size_cap: usize,
    out: *mut *mut BsytCount,
) -> BsytStatus {
    guarded(|| {
        if expr.is_null() || out.is_null() {
            return Err((BsytStatus::NullArgument, "null argument".into()));
        }
        // SAFETY: non-null and nul-terminated per the contract.
        let text = unsafe { CStr::from_ptr(expr) }
            .to_str()
            .map_err(|_| (BsytStatus::InvalidUtf8, "shape is not valid UTF-8".into()))?;
        let shape: ShapeExpr = text.parse().map_err(|e| (BsytStatus::ParseError, format!("{e}")))?;
        store(out, &shape, method, size_cap)
    })
}

/// Counts `[(m^n), a, k]`: a rectangle of width `m` and `n` rows with `a`
/// cells stacked above column `k`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bsyt_count_battery_rect(
    m: usize,
    n: usize,
    a: usize,
    k: usize,
    method: BsytMethod,
    size_cap: usize,
    out: *mut *mut BsytCount,
) -> BsytStatus {
    guarded(|| {
        if out.is_null() {
            return Err((BsytStatus::NullArgument, "null argument".into()));
        }
        let battery = BatteryShape::over_rectangle(m, n, a, k).map_err(|e| (status_of(&e), e.to_string()))?;
        store(out, &ShapeExpr::Battery(battery), method, size_cap)
    })
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Decimal digits of the count, or null if `count` is null.
///
/// # Safety
/// `count` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bsyt_count_decimal(count: *const BsytCount) -> *mut c_char {
    clear_error();
    // SAFETY: null or live per the contract.
    match unsafe { count.as_ref() } {
        Some(c) => to_c_string(c.count.to_string()),
        None => {
            set_error("null handle");
            ptr::null_mut()
        }
    }
}

/// Prime factorization rendered as `2^5*3^2*11`, or null on failure.
///
/// # Safety
/// `count` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bsyt_count_factored(count: *const BsytCount) -> *mut c_char {
    clear_error();
    // SAFETY: null or live per the contract.
    let Some(c) = (unsafe { count.as_ref() }) else {
        set_error("null handle");
        return ptr::null_mut();
    };
    match factorize(&c.count) {
        Ok(f) => to_c_string(f.to_string()),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Method that produced the count; `Auto` only for a null handle.
///
/// # Safety
/// `count` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bsyt_count_method(count: *const BsytCount) -> BsytMethod {
    // SAFETY: null or live per the contract.
    unsafe { count.as_ref() }.map_or(BsytMethod::Auto, |c| c.method.into())
}

/// # Safety
/// `count` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bsyt_count_free(count: *mut BsytCount) {
    if !count.is_null() {
        // SAFETY: allocated by `Box::into_raw` in `store`.
        drop(unsafe { Box::from_raw(count) });
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bsyt_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message from the last failed call on this thread, or null. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn bsyt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn bsyt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
