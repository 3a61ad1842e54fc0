//! C ABI over the invol2 crate. Handles are opaque and owned by the caller
//! once returned; strings returned through out-parameters are owned by the
//! caller and must be released with `invol2_string_free`. Every function
//! returns an [`Invol2Status`]; on failure a message is available from
//! `invol2_last_error` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use invol2::scenario::{recheck, run, Certificate, Failure, RunOptions, Scenario};
use invol2::structure::{represents, FactorSpec};
use invol2::{DecomposedAlgebra, Error, FieldCtx};

/// Status codes. The first three agree with the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invol2Status {
    Ok = 0,
    Verification = 1,
    Parse = 2,
    DegreeOverflow = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
    /// The library rejected the input on mathematical grounds, for example a
    /// symplectic factor or a zero slot.
    Rejected = 6,
    Panic = 7,
}

/// A rational function field GF(2)(x_1, ..., x_m).
pub struct Invol2Field(FieldCtx);

/// A tensor product of quaternion and (M_2, t) factors with its involution.
pub struct Invol2Algebra(DecomposedAlgebra);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(Invol2Status, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = match e {
            Error::DegreeOverflow { .. } => Invol2Status::DegreeOverflow,
            Error::Parse(_) | Error::InvalidContext(_) => Invol2Status::Parse,
            _ => Invol2Status::Rejected,
        };
        Fail(status, e.to_string())
    }
}

impl From<Failure> for Fail {
    fn from(f: Failure) -> Fail {
        let status = match f {
            Failure::Parse(_) => Invol2Status::Parse,
            Failure::Verification(_) => Invol2Status::Verification,
            Failure::DegreeOverflow(_) => Invol2Status::DegreeOverflow,
        };
        Fail(status, f.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> Invol2Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Invol2Status::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            Invol2Status::Panic
        }
    }
}

/// # Safety
/// `p` is null or a valid nul-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(Invol2Status::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(Invol2Status::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn out_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

fn check_out<T>(p: *mut T, what: &str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(Invol2Status::NullArgument, format!("{what} is null")))
    } else {
        Ok(())
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn invol2_version() -> *const c_char {
    static V: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(c) => c,
        Err(_) => panic!("version has no interior nul"),
    };
    V.as_ptr()
}

/// Message of the last failure on this thread. Valid until the next call
/// into the library on this thread; never null.
#[no_mangle]
pub extern "C" fn invol2_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn invol2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the field GF(2)(vars) from comma-separated variable names.
/// `degree_budget` 0 selects the default budget.
///
/// # Safety
/// `vars` is a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn invol2_field_new(
    vars: *const c_char,
    degree_budget: u32,
    out: *mut *mut Invol2Field,
) -> Invol2Status {
    guard(|| {
        check_out(out, "out")?;
        let names: Vec<&str> = text(vars, "vars")?.split(',').map(str::trim).collect();
        let ctx = if degree_budget == 0 { FieldCtx::new(&names) } else { FieldCtx::with_budget(&names, degree_budget) }?;
        *out = Box::into_raw(Box::new(Invol2Field(ctx)));
        Ok(())
    })
}

/// # Safety
/// `f` is null or a handle from `invol2_field_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn invol2_field_free(f: *mut Invol2Field) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Builds the tensor product of semicolon-separated factors, each `m2t` or
/// `[alpha,beta)` with the orthogonal involution.
///
/// # Safety
/// `field` is a live handle, `factors` a nul-terminated string and `out` a
/// writable pointer.
#[no_mangle]
pub unsafe extern "C" fn invol2_algebra_new(
    field: *const Invol2Field,
    factors: *const c_char,
    out: *mut *mut Invol2Algebra,
) -> Invol2Status {
    guard(|| {
        check_out(out, "out")?;
        let k = &field.as_ref().ok_or_else(|| Fail(Invol2Status::NullArgument, "field is null".into()))?.0;
        let specs = text(factors, "factors")?
            .split(';')
            .map(|f| FactorSpec::parse(k, f))
            .collect::<Result<Vec<_>, _>>()?;
        *out = Box::into_raw(Box::new(Invol2Algebra(DecomposedAlgebra::new(k, &specs)?)));
        Ok(())
    })
}

/// # Safety
/// `a` is null or a handle from `invol2_algebra_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn invol2_algebra_free(a: *mut Invol2Algebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

unsafe fn algebra<'a>(a: *const Invol2Algebra) -> Result<&'a DecomposedAlgebra, Fail> {
    a.as_ref().map(|a| &a.0).ok_or_else(|| Fail(Invol2Status::NullArgument, "algebra is null".into()))
}

/// Dimension 4^n of the algebra; 0 for a null handle.
///
/// # Safety
/// `a` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn invol2_algebra_dim(a: *const Invol2Algebra) -> usize {
    a.as_ref().map_or(0, |a| a.0.algebra().dim())
}

/// i-invariant of the algebra's Pfister form.
///
/// # Safety
/// `a` is a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn invol2_i_invariant(a: *const Invol2Algebra, out: *mut u32) -> Invol2Status {
    guard(|| {
        check_out(out, "out")?;
        *out = algebra(a)?.i_invariant()?;
        Ok(())
    })
}

/// Decides whether alpha = x^2 for a nonzero x in F[v_1..v_n]. On success
/// `*represented` is set, and `*witness` receives the rendered x (or null
/// when not represented), to be released with `invol2_string_free`.
///
/// # Safety
/// `a` is a live handle, `alpha` a nul-terminated string, `represented`
/// writable and `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn invol2_represents(
    a: *const Invol2Algebra,
    alpha: *const c_char,
    represented: *mut bool,
    witness: *mut *mut c_char,
) -> Invol2Status {
    guard(|| {
        check_out(represented, "represented")?;
        let d = algebra(a)?;
        let alpha = d.ctx().parse(text(alpha, "alpha")?)?;
        let r = represents(d, &alpha)?;
        *represented = r.is_yes();
        if !witness.is_null() {
            *witness = r.witness().map_or(ptr::null_mut(), |x| out_string(x.render()));
        }
        Ok(())
    })
}

/// Runs a scenario given as JSON and returns its certificate as JSON. When
/// `use_seed` is false the scenario's own seed (or the default) is used.
/// Unmet expectations still produce a certificate and return
/// `INVOL2_STATUS_VERIFICATION`.
///
/// # Safety
/// `scenario_json` is a nul-terminated string and `certificate` writable.
#[no_mangle]
pub unsafe extern "C" fn invol2_run_scenario(
    scenario_json: *const c_char,
    use_seed: bool,
    seed: u64,
    certificate: *mut *mut c_char,
) -> Invol2Status {
    guard(|| {
        check_out(certificate, "certificate")?;
        *certificate = ptr::null_mut();
        let s = Scenario::from_json(text(scenario_json, "scenario_json")?)?;
        let opts = RunOptions { seed: use_seed.then_some(seed), ..RunOptions::default() };
        let cert = run(&s, opts)?;
        let json = serde_json::to_string_pretty(&cert).map_err(|e| Fail(Invol2Status::Panic, e.to_string()))?;
        *certificate = out_string(json);
        if cert.all_expectations_met {
            Ok(())
        } else {
            Err(Fail(Invol2Status::Verification, "some expectations were not met".into()))
        }
    })
}

/// Re-verifies every witness in a certificate. `*failures` receives the
/// number of witnesses that did not re-verify; the status is
/// `INVOL2_STATUS_VERIFICATION` when it is nonzero.
///
/// # Safety
/// `certificate_json` is a nul-terminated string and `failures` writable.
#[no_mangle]
pub unsafe extern "C" fn invol2_recheck(certificate_json: *const c_char, failures: *mut usize) -> Invol2Status {
    guard(|| {
        check_out(failures, "failures")?;
        let cert: Certificate = serde_json::from_str(text(certificate_json, "certificate_json")?)
            .map_err(|e| Fail(Invol2Status::Parse, format!("certificate: {e}")))?;
        let report = recheck(&cert, RunOptions { seed: Some(cert.seed), ..RunOptions::default() })?;
        *failures = report.failures.len();
        if report.ok() {
            Ok(())
        } else {
            Err(Fail(Invol2Status::Verification, report.failures.join("; ")))
        }
    })
}
