//! C ABI over `binpade`.
//!
//! Objects are opaque handles released with their `_free` function. Every
//! call returns a `BinpadeStatus`; on failure the message is available from
//! `binpade_last_error` until the next call on the same thread. Strings
//! returned through out-parameters are owned by the caller and released
//! with `binpade_string_free`. Rationals cross the boundary as decimal
//! strings `"p/q"` or `"p"`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use binpade::arith::parse_rational;
use binpade::binomial::{build_system, NthRootSystem};
use binpade::certify::{cf_hunt, gap_certificate, theta_pair, PairInput, RhoMode, Target};
use binpade::pade::{construct_residue, ExponentSystem};
use binpade::wire::{self, WCertificate, WHunt, WNthRootSystem, WPadeSystem, WPair};
use binpade::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Result of every call. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinpadeStatus {
    Ok = 0,
    InvalidSystem = 1,
    SingularSystem = 2,
    NonDivisible = 3,
    NotApplicable = 4,
    IdentityViolation = 5,
    BadParams = 6,
    RootOfUnity = 7,
    AllZero = 8,
    DivisionByZero = 9,
    NotDegreeN = 10,
    Q1IsOne = 11,
    InvariantViolation = 12,
    Indeterminate = 13,
    IndeterminatePartialQuotient = 14,
    Precondition = 15,
    Parse = 16,
    NullPointer = 17,
    Panic = 18,
}

impl From<&Error> for BinpadeStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidSystem(..) => BinpadeStatus::InvalidSystem,
            Error::SingularSystem(_) => BinpadeStatus::SingularSystem,
            Error::NonDivisible { .. } => BinpadeStatus::NonDivisible,
            Error::NotApplicable(_) => BinpadeStatus::NotApplicable,
            Error::IdentityViolation(_) => BinpadeStatus::IdentityViolation,
            Error::BadParams(_) => BinpadeStatus::BadParams,
            Error::RootOfUnity => BinpadeStatus::RootOfUnity,
            Error::AllZero { .. } => BinpadeStatus::AllZero,
            Error::DivisionByZero { .. } => BinpadeStatus::DivisionByZero,
            Error::NotDegreeN { .. } => BinpadeStatus::NotDegreeN,
            Error::Q1IsOne => BinpadeStatus::Q1IsOne,
            Error::InvariantViolation(_) => BinpadeStatus::InvariantViolation,
            Error::Indeterminate(_) => BinpadeStatus::Indeterminate,
            Error::IndeterminatePartialQuotient { .. } => BinpadeStatus::IndeterminatePartialQuotient,
            Error::Precondition(_) => BinpadeStatus::Precondition,
            Error::Parse(_) => BinpadeStatus::Parse,
        }
    }
}

/// An `m × m` system `A_hk(w)` for `ω_k = (k-1)/n`, `ϱ_k = ϱ`.
pub struct BinpadeNthRootSystem(NthRootSystem);

/// `ξ = (a/b)^{1/n}` with `m` and `ε`.
pub struct BinpadeTarget(Target);

enum Failure {
    Core(Error),
    Null(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BinpadeStatus {
    set_last_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BinpadeStatus::Ok,
        Ok(Err(Failure::Core(e))) => {
            set_last_error(&e.to_string());
            BinpadeStatus::from(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_last_error(&format!("null pointer: {what}"));
            BinpadeStatus::NullPointer
        }
        Err(_) => {
            set_last_error("internal panic");
            BinpadeStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Core(Error::Parse(format!("{what} is not UTF-8"))))
}

unsafe fn read_rational(p: *const c_char, what: &'static str) -> Result<BigRational, Failure> {
    Ok(parse_rational(read_str(p, what)?)?)
}

unsafe fn write_out<T>(out: *mut T, v: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure::Core(Error::Parse("interior NUL".into())))?;
    write_out(out, c.into_raw(), "out")
}

unsafe fn handle<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

fn rational_string(r: &BigRational) -> String {
    r.to_string()
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer is valid until the next call into this library.
#[no_mangle]
pub extern "C" fn binpade_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn binpade_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn binpade_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the system for comma-separated `omega` and `rho` and writes its
/// JSON to `out_json`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_pade_construct_json(
    omega: *const c_char,
    rho: *const c_char,
    out_json: *mut *mut c_char,
) -> BinpadeStatus {
    guard(|| {
        let omega = read_str(omega, "omega")?
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        let rho = read_str(rho, "rho")?
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad multiplicity {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let ps = construct_residue(&ExponentSystem::new(omega, rho)?)?;
        write_string(out_json, wire::to_json(&WPadeSystem::from(&ps)))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_nth_root_system_new(
    n: u32,
    m: u32,
    rho: u64,
    out: *mut *mut BinpadeNthRootSystem,
) -> BinpadeStatus {
    guard(|| {
        let sys = build_system(n, m, rho)?;
        write_out(out, Box::into_raw(Box::new(BinpadeNthRootSystem(sys))), "out")
    })
}

/// # Safety
/// `sys` must come from `binpade_nth_root_system_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn binpade_nth_root_system_free(sys: *mut BinpadeNthRootSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// # Safety
/// `sys` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_nth_root_system_to_json(
    sys: *const BinpadeNthRootSystem,
    out_json: *mut *mut c_char,
) -> BinpadeStatus {
    guard(|| {
        let sys = handle(sys, "sys")?;
        write_string(out_json, wire::to_json(&WNthRootSystem::from(&sys.0)))
    })
}

/// Exact `U_h(w, y)` for the 0-based row `h`, written as `"p/q"`.
///
/// # Safety
/// `sys` must be a live handle; strings NUL-terminated; `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_nth_root_system_eval_u(
    sys: *const BinpadeNthRootSystem,
    h: usize,
    w: *const c_char,
    y: *const c_char,
    out_value: *mut *mut c_char,
) -> BinpadeStatus {
    guard(|| {
        let sys = handle(sys, "sys")?;
        let v = sys.0.frak_u_eval(h, &read_rational(w, "w")?, &read_rational(y, "y")?)?;
        write_string(out_value, rational_string(&v))
    })
}

/// Smallest 0-based row with `U_h(w, y) != 0` and that value.
///
/// # Safety
/// As for `binpade_nth_root_system_eval_u`; `out_h` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_nth_root_system_select_h(
    sys: *const BinpadeNthRootSystem,
    w: *const c_char,
    y: *const c_char,
    out_h: *mut usize,
    out_value: *mut *mut c_char,
) -> BinpadeStatus {
    guard(|| {
        let sys = handle(sys, "sys")?;
        let (h, v) = sys.0.select_h(&read_rational(w, "w")?, &read_rational(y, "y")?)?;
        write_out(out_h, h, "out_h")?;
        write_string(out_value, rational_string(&v))
    })
}

/// # Safety
/// `eps` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_target_new(
    a: u64,
    b: u64,
    n: u32,
    m: u32,
    eps: *const c_char,
    out: *mut *mut BinpadeTarget,
) -> BinpadeStatus {
    guard(|| {
        let t = Target::new(a, b, n, m, read_rational(eps, "eps")?)?;
        write_out(out, Box::into_raw(Box::new(BinpadeTarget(t))), "out")
    })
}

/// # Safety
/// `t` must come from `binpade_target_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn binpade_target_free(t: *mut BinpadeTarget) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Gap certificate as JSON.
///
/// # Safety
/// `t` must be a live handle; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_certify_json(t: *const BinpadeTarget, out_json: *mut *mut c_char) -> BinpadeStatus {
    guard(|| {
        let t = handle(t, "target")?;
        write_string(out_json, wire::to_json(&WCertificate::from(&gap_certificate(&t.0)?)))
    })
}

/// `ϑ₁, ϑ₂` for `p1/q1, p2/q2` as JSON. `rho = 0` selects `ϱ` from the
/// denominators; any other value fixes it.
///
/// # Safety
/// `t` must be a live handle; strings NUL-terminated; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_theta_json(
    t: *const BinpadeTarget,
    p1: *const c_char,
    q1: *const c_char,
    p2: *const c_char,
    q2: *const c_char,
    rho: u64,
    prec: u32,
    out_json: *mut *mut c_char,
) -> BinpadeStatus {
    guard(|| {
        let t = handle(t, "target")?;
        let int = |p: *const c_char, what: &'static str| -> Result<BigInt, Failure> {
            let s = read_str(p, what)?;
            s.trim().parse().map_err(|_| Failure::Core(Error::Parse(format!("{what} is not an integer"))))
        };
        let input = PairInput { p1: int(p1, "p1")?, q1: int(q1, "q1")?, p2: int(p2, "p2")?, q2: int(q2, "q2")? };
        let mode = if rho == 0 { RhoMode::Select } else { RhoMode::Fixed(rho) };
        let pair = theta_pair(&input, &t.0, mode, prec)?;
        write_string(out_json, wire::to_json(&WPair::from(&pair)))
    })
}

/// Continued-fraction report as JSON.
///
/// # Safety
/// `t` must be a live handle; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn binpade_hunt_json(
    t: *const BinpadeTarget,
    depth: usize,
    prec: u32,
    out_json: *mut *mut c_char,
) -> BinpadeStatus {
    guard(|| {
        let t = handle(t, "target")?;
        write_string(out_json, wire::to_json(&WHunt::from(&cf_hunt(&t.0, depth, prec)?)))
    })
}
