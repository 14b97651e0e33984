//! C ABI for the `monodromic` workbench.
//!
//! Every fallible entry point returns a [`MonoStatus`]. On failure the message
//! is kept per thread and read with [`mono_last_error`]. Strings handed out by
//! this library are owned by the caller and released with [`mono_string_free`].
//! Handles are released with their own `_free` function; passing null to any
//! `_free` is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use monodromic::cli::{run_check, CheckId, Params};
use monodromic::mellin::normalize_weyl;
use monodromic::ore::{fourier_auto, mellin_op, Algebra, OreOperator};
use monodromic::Error;

/// Result codes. `Ok` is zero; everything else is an error.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    UnknownAtom = 4,
    InvalidParameter = 5,
    UnknownCheck = 6,
    WrongAlgebra = 7,
    ComputationFailed = 8,
    Panic = 9,
}

/// Algebra tags for [`mono_operator_parse`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoAlgebra {
    /// `s`, `T`, `Ti`.
    Shift = 0,
    /// Polynomial Weyl algebra; the rank argument gives the number of variables.
    Weyl = 1,
    /// `x` invertible, rank 1.
    Laurent = 2,
}

/// Verdict of a check, matching the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoVerdict {
    Pass = 0,
    Fail = 1,
    Diagnostic = 2,
}

/// Opaque operator handle.
pub struct MonoOperator(OreOperator);

/// Opaque parameter set for [`mono_check_run`]. Unset fields take each check's defaults.
pub struct MonoParams(Params);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MonoStatus {
    match e {
        Error::Syntax { .. } => MonoStatus::Syntax,
        Error::UnknownAtom { .. } => MonoStatus::UnknownAtom,
        Error::UnknownCheck(_) => MonoStatus::UnknownCheck,
        Error::InvalidParameter(_) | Error::ParameterMismatch(_) | Error::Precondition(_) => {
            MonoStatus::InvalidParameter
        }
        _ => MonoStatus::ComputationFailed,
    }
}

fn fail(status: MonoStatus, message: impl Into<String>) -> MonoStatus {
    set_error(message.into());
    status
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (MonoStatus, String)>) -> MonoStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MonoStatus::Ok,
        Ok(Err((status, message))) => fail(status, message),
        Err(_) => fail(MonoStatus::Panic, "internal panic"),
    }
}

fn lift(e: Error) -> (MonoStatus, String) {
    (status_of(&e), e.to_string())
}

/// # Safety
/// `p` is null or a valid nul-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (MonoStatus, String)> {
    if p.is_null() {
        return Err((MonoStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (MonoStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn give_handle(out: *mut *mut MonoOperator, op: OreOperator) -> Result<(), (MonoStatus, String)> {
    if out.is_null() {
        return Err((MonoStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(Box::into_raw(Box::new(MonoOperator(op))));
    Ok(())
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no nul bytes").into_raw()
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (MonoStatus, String)> {
    if out.is_null() {
        return Err((MonoStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failing call on this thread, or null. Valid until the
/// next call into this library on the same thread; do not free.
#[no_mangle]
pub extern "C" fn mono_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mono_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and reduces `text` in the given algebra. `rank` is read only for `Weyl`.
///
/// # Safety
/// `text` is a nul-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mono_operator_parse(
    text: *const c_char,
    algebra: MonoAlgebra,
    rank: usize,
    out: *mut *mut MonoOperator,
) -> MonoStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let algebra = match algebra {
            MonoAlgebra::Shift => Algebra::Shift,
            MonoAlgebra::Laurent => Algebra::LaurentWeyl,
            MonoAlgebra::Weyl if rank >= 1 => Algebra::Weyl(rank),
            MonoAlgebra::Weyl => return Err((MonoStatus::InvalidParameter, "Weyl rank must be at least 1".into())),
        };
        let op = monodromic::cli::parse_operator(text, algebra).map_err(lift)?;
        give_handle(out, op)
    })
}

/// Releases an operator handle.
///
/// # Safety
/// `op` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mono_operator_free(op: *mut MonoOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// Normal form as text; free with [`mono_string_free`]. Null if `op` is null.
///
/// # Safety
/// `op` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mono_operator_to_string(op: *const MonoOperator) -> *mut c_char {
    match op.as_ref() {
        Some(op) => give_string(op.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Structural equality of normal forms. False if either handle is null.
///
/// # Safety
/// Each argument is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mono_operator_equal(a: *const MonoOperator, b: *const MonoOperator) -> bool {
    matches!((a.as_ref(), b.as_ref()), (Some(a), Some(b)) if a.0 == b.0)
}

/// Mellin image of a Laurent-Weyl operator, as a new shift-algebra handle.
///
/// # Safety
/// `op` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mono_operator_mellin(op: *const MonoOperator, out: *mut *mut MonoOperator) -> MonoStatus {
    guard(|| match op.as_ref().map(|o| &o.0) {
        None => Err((MonoStatus::NullPointer, "operator is null".into())),
        Some(OreOperator::Laurent(l)) => {
            give_handle(out, OreOperator::Shift(mellin_op(l)))
        }
        Some(other) => Err((MonoStatus::WrongAlgebra, format!("Mellin transform needs a Laurent operator, got {}", other.algebra()))),
    })
}

/// Fourier image `x_i -> -d_i`, `d_i -> x_i` of a Weyl operator. With
/// `normalize` the leading coefficient is scaled to 1.
///
/// # Safety
/// `op` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mono_operator_fourier(
    op: *const MonoOperator,
    normalize: bool,
    out: *mut *mut MonoOperator,
) -> MonoStatus {
    guard(|| match op.as_ref().map(|o| &o.0) {
        None => Err((MonoStatus::NullPointer, "operator is null".into())),
        Some(OreOperator::Weyl(w)) => {
            let image = fourier_auto(w);
            let image = if normalize { normalize_weyl(&image) } else { image };
            give_handle(out, OreOperator::Weyl(image))
        }
        Some(other) => Err((MonoStatus::WrongAlgebra, format!("Fourier transform needs a Weyl operator, got {}", other.algebra()))),
    })
}

/// A parameter set with every field unset.
#[no_mangle]
pub extern "C" fn mono_params_new() -> *mut MonoParams {
    Box::into_raw(Box::new(MonoParams(Params::default())))
}

/// Releases a parameter set.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mono_params_free(p: *mut MonoParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Integer fields of [`MonoParams`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoParam {
    Q = 0,
    D = 1,
    N = 2,
    Window = 3,
    Ell = 4,
    R = 5,
    Nprime = 6,
    Seed = 7,
    Samples = 8,
    Degree = 9,
}

/// Sets one integer field. Values outside the field's range are refused.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mono_params_set(p: *mut MonoParams, field: MonoParam, value: i64) -> MonoStatus {
    guard(|| {
        let p = &mut p.as_mut().ok_or((MonoStatus::NullPointer, "params is null".to_string()))?.0;
        let range = |_| (MonoStatus::InvalidParameter, format!("{field:?} = {value} is out of range"));
        match field {
            MonoParam::Q => p.q = Some(value.try_into().map_err(range)?),
            MonoParam::D => p.d = Some(value.try_into().map_err(range)?),
            MonoParam::N => p.n = Some(value.try_into().map_err(range)?),
            MonoParam::Window => p.window = Some(value),
            MonoParam::Ell => p.ell = Some(value.try_into().map_err(range)?),
            MonoParam::R => p.r = Some(value.try_into().map_err(range)?),
            MonoParam::Nprime => p.nprime = Some(value.try_into().map_err(range)?),
            MonoParam::Seed => p.seed = Some(value.try_into().map_err(range)?),
            MonoParam::Samples => p.samples = Some(value.try_into().map_err(range)?),
            MonoParam::Degree => p.degree = Some(value.try_into().map_err(range)?),
        }
        Ok(())
    })
}

/// Sets the exponent `chi` from a rational literal such as `"1/2"`.
///
/// # Safety
/// `p` is a live handle; `chi` is a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn mono_params_set_chi(p: *mut MonoParams, chi: *const c_char) -> MonoStatus {
    guard(|| {
        let p = p.as_mut().ok_or((MonoStatus::NullPointer, "params is null".to_string()))?;
        p.0.chi = Some(Params::parse_chi(read_str(chi, "chi")?).map_err(lift)?);
        Ok(())
    })
}

/// Runs the named check. On success `*verdict` is set and `*report_json`
/// receives the JSON report (free with [`mono_string_free`]). `params` may be
/// null for all defaults; `report_json` may be null when only the verdict is wanted.
///
/// # Safety
/// `name` is a nul-terminated string; `params` is null or a live handle;
/// `verdict` is valid for writes; `report_json` is null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mono_check_run(
    name: *const c_char,
    params: *const MonoParams,
    verdict: *mut MonoVerdict,
    report_json: *mut *mut c_char,
) -> MonoStatus {
    guard(|| {
        let id: CheckId = read_str(name, "name")?.parse().map_err(lift)?;
        let defaults = Params::default();
        let params = params.as_ref().map_or(&defaults, |p| &p.0);
        let report = run_check(id, params).map_err(lift)?;
        let v = match report.verdict {
            monodromic::cli::Verdict::Pass => MonoVerdict::Pass,
            monodromic::cli::Verdict::Fail => MonoVerdict::Fail,
            monodromic::cli::Verdict::Diagnostic => MonoVerdict::Diagnostic,
        };
        write_out(verdict, v)?;
        if !report_json.is_null() {
            let json = serde_json::to_string(&report).map_err(|e| (MonoStatus::ComputationFailed, e.to_string()))?;
            report_json.write(give_string(json));
        }
        Ok(())
    })
}

/// Number of registered checks.
#[no_mangle]
pub extern "C" fn mono_check_count() -> usize {
    CheckId::ALL.len()
}

/// Name of check `index` (static storage, do not free), or null when out of range.
#[no_mangle]
pub extern "C" fn mono_check_name(index: usize) -> *const c_char {
    static NAMES: std::sync::OnceLock<Vec<CString>> = std::sync::OnceLock::new();
    let names = NAMES.get_or_init(|| CheckId::ALL.iter().map(|c| CString::new(c.name()).expect("ascii")).collect());
    names.get(index).map_or(ptr::null(), |c| c.as_ptr())
}
