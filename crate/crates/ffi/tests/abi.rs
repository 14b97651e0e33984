use std::ffi::{CStr, CString};
use std::ptr;

use monodromic_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { mono_string_free(s) };
    out
}

fn parse(text: &str, algebra: MonoAlgebra, rank: usize) -> Result<*mut MonoOperator, MonoStatus> {
    let c = CString::new(text).unwrap();
    let mut op = ptr::null_mut();
    match unsafe { mono_operator_parse(c.as_ptr(), algebra, rank, &mut op) } {
        MonoStatus::Ok => Ok(op),
        s => Err(s),
    }
}

#[test]
fn operators_round_trip() {
    let op = parse("(s+1) - Ti*s", MonoAlgebra::Shift, 0).unwrap();
    assert_eq!(take(unsafe { mono_operator_to_string(op) }), "-Ti*s + 1 + s");

    let l = parse("dx*(x-1)", MonoAlgebra::Laurent, 0).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { mono_operator_mellin(l, &mut m) }, MonoStatus::Ok);
    let expected = parse("(s+1) - Ti*s", MonoAlgebra::Shift, 0).unwrap();
    assert!(unsafe { mono_operator_equal(m, expected) });

    let w = parse("1 - dx", MonoAlgebra::Weyl, 1).unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { mono_operator_fourier(w, true, &mut f) }, MonoStatus::Ok);
    assert_eq!(take(unsafe { mono_operator_to_string(f) }), "1 - x");

    // Mellin of a Weyl handle is refused
    let mut bogus = ptr::null_mut();
    assert_eq!(unsafe { mono_operator_mellin(w, &mut bogus) }, MonoStatus::WrongAlgebra);
    assert!(bogus.is_null());

    assert!(unsafe { mono_operator_equal(op, expected) });
    assert!(!unsafe { mono_operator_equal(op, ptr::null()) });
    for h in [op, l, m, expected, w, f] {
        unsafe { mono_operator_free(h) };
    }
    unsafe { mono_operator_free(ptr::null_mut()) };
}

#[test]
fn errors_carry_status_and_message() {
    assert_eq!(parse("s + +", MonoAlgebra::Shift, 0), Err(MonoStatus::Syntax));
    let msg = unsafe { CStr::from_ptr(mono_last_error()) }.to_str().unwrap();
    assert!(msg.contains("offset 4"), "{msg}");
    assert_eq!(parse("s*dx", MonoAlgebra::Shift, 0), Err(MonoStatus::UnknownAtom));
    assert_eq!(parse("x", MonoAlgebra::Weyl, 0), Err(MonoStatus::InvalidParameter));
    assert_eq!(unsafe { mono_operator_parse(ptr::null(), MonoAlgebra::Shift, 0, ptr::null_mut()) }, MonoStatus::NullPointer);

    let ok = parse("s", MonoAlgebra::Shift, 0);
    assert!(ok.is_ok());
    assert!(mono_last_error().is_null());
    unsafe { mono_operator_free(ok.unwrap()) };
}

#[test]
fn checks_run_through_handles() {
    let p = mono_params_new();
    unsafe {
        assert_eq!(mono_params_set(p, MonoParam::Q, 3), MonoStatus::Ok);
        assert_eq!(mono_params_set(p, MonoParam::D, 1), MonoStatus::Ok);
    }
    let name = CString::new("keythm").unwrap();
    let mut verdict = MonoVerdict::Fail;
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { mono_check_run(name.as_ptr(), p, &mut verdict, &mut json) }, MonoStatus::Ok);
    assert_eq!(verdict, MonoVerdict::Pass);
    let report: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(report["check"], "keythm");
    assert_eq!(report["parameters"]["q"], 3);

    let diag = CString::new("propB3-diagnostic").unwrap();
    assert_eq!(unsafe { mono_params_set(p, MonoParam::N, 1) }, MonoStatus::Ok);
    assert_eq!(unsafe { mono_params_set(p, MonoParam::Q, -3) }, MonoStatus::InvalidParameter);
    assert_eq!(unsafe { mono_check_run(diag.as_ptr(), p, &mut verdict, ptr::null_mut()) }, MonoStatus::Ok);
    assert_eq!(verdict, MonoVerdict::Diagnostic);

    let bad_chi = CString::new("one half").unwrap();
    assert_eq!(unsafe { mono_params_set_chi(p, bad_chi.as_ptr()) }, MonoStatus::InvalidParameter);
    let missing = CString::new("no-such-check").unwrap();
    assert_eq!(unsafe { mono_check_run(missing.as_ptr(), ptr::null(), &mut verdict, ptr::null_mut()) }, MonoStatus::UnknownCheck);
    unsafe { mono_params_free(p) };

    let names: Vec<String> = (0..mono_check_count())
        .map(|i| unsafe { CStr::from_ptr(mono_check_name(i)) }.to_str().unwrap().to_owned())
        .collect();
    assert!(names.iter().any(|n| n == "keythm"));
    assert!(mono_check_name(mono_check_count()).is_null());
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/monodromic.h")).unwrap();
    for symbol in ["mono_operator_parse", "mono_check_run", "mono_last_error", "mono_params_set(", "MONO_PARAM_WINDOW", "MONO_STATUS_SYNTAX", "typedef struct MonoOperator"] {
        assert!(header.contains(symbol), "missing {symbol}");
    }
}
