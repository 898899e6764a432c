//! C ABI for the cauchy-umbral engine.
//!
//! Polynomials cross the boundary as opaque `CuPolynomial` handles; numbers
//! cross as exact `"num/den"` strings. Every fallible call returns a
//! `CuStatus`; on anything but `CU_STATUS_OK` the message is available from
//! `cu_last_error`. Strings returned by this library must be released with
//! `cu_string_free`, handles with `cu_poly_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cauchy_umbral::cli::{self, Family, FamilyArgs, Table};
use cauchy_umbral::identities::{
    verify_standard, IdentityId, SuiteReport, VerifyOptions, DEFAULT_TRUNCATION,
};
use cauchy_umbral::{Error, Polynomial, Rational};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Truncation = 4,
    Parse = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuFamily {
    Cauchy = 0,
    HigherCauchy = 1,
    PolyCauchy = 2,
    Mixed = 3,
    Stirling1 = 4,
    Stirling2 = 5,
    Bernoulli = 6,
    FrobeniusEuler = 7,
    Narumi = 8,
    Bernoulli2 = 9,
}

/// Parameters for `cu_family_poly`; fields a family does not use are ignored.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CuFamilyParams {
    pub r: i64,
    pub k: i64,
    pub s: i64,
    pub alpha: i64,
    pub lambda_num: i64,
    pub lambda_den: i64,
}

/// Opaque polynomial with exact rational coefficients.
pub struct CuPolynomial(Polynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CuStatus {
    match err {
        Error::TruncationExceeded { .. } => CuStatus::Truncation,
        Error::Parse(_) => CuStatus::Parse,
        Error::Domain(_) => CuStatus::Domain,
        _ => CuStatus::InvalidArgument,
    }
}

struct Fail(CuStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, turning errors and panics into a status plus a stored message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CuStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CuStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            CuStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(CuStatus::NullPointer, format!("{what} is null"))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller passes a NUL-terminated string that outlives the call.
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(CuStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and, per the contract, valid for writes.
    out.write(value);
    Ok(())
}

fn rational(num: i64, den: i64) -> Result<Rational, Fail> {
    if den == 0 {
        return Err(Fail(CuStatus::InvalidArgument, "zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

impl From<CuFamily> for Family {
    fn from(f: CuFamily) -> Self {
        match f {
            CuFamily::Cauchy => Family::Cauchy,
            CuFamily::HigherCauchy => Family::HigherCauchy,
            CuFamily::PolyCauchy => Family::PolyCauchy,
            CuFamily::Mixed => Family::Mixed,
            CuFamily::Stirling1 => Family::Stirling1,
            CuFamily::Stirling2 => Family::Stirling2,
            CuFamily::Bernoulli => Family::Bernoulli,
            CuFamily::FrobeniusEuler => Family::FrobeniusEuler,
            CuFamily::Narumi => Family::Narumi,
            CuFamily::Bernoulli2 => Family::Bernoulli2,
        }
    }
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn cu_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Free with `cu_string_free`.
#[no_mangle]
pub extern "C" fn cu_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cu_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by CString::into_raw in this crate.
        drop(CString::from_raw(s));
    }
}

/// `A_n^{(r,k)}(x)` into `*out`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cu_mixed_a(
    n: usize,
    r: i64,
    k: i64,
    out: *mut *mut CuPolynomial,
) -> CuStatus {
    cu_family_poly(
        CuFamily::Mixed,
        n,
        CuFamilyParams {
            r,
            k,
            s: 0,
            alpha: 0,
            lambda_num: -1,
            lambda_den: 1,
        },
        out,
    )
}

/// Member `n` of `family` into `*out`. Number families yield constant polynomials;
/// Stirling families yield `sum_m S(n, m) x^m`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cu_family_poly(
    family: CuFamily,
    n: usize,
    params: CuFamilyParams,
    out: *mut *mut CuPolynomial,
) -> CuStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let args = FamilyArgs {
            family: family.into(),
            r: params.r,
            k: params.k,
            s: params.s,
            alpha: params.alpha,
            lambda: rational(params.lambda_num, params.lambda_den)?,
            trunc: DEFAULT_TRUNCATION.max(n + 2),
        };
        let p = match cli::table(&args, n)? {
            Table::Numbers(v) => Polynomial::constant(v[n].clone()),
            Table::Coefficients(rows) => Polynomial::new(rows[n].clone()),
        };
        write_out(out, Box::into_raw(Box::new(CuPolynomial(p))), "out")
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_free(p: *mut CuPolynomial) {
    if !p.is_null() {
        // SAFETY: created by Box::into_raw in this crate.
        drop(Box::from_raw(p));
    }
}

unsafe fn handle<'a>(p: *const CuPolynomial) -> Result<&'a Polynomial, Fail> {
    // SAFETY: caller guarantees a live handle when non-null.
    p.as_ref().map(|h| &h.0).ok_or_else(|| null("polynomial"))
}

/// Degree into `*out`; `-1` for the zero polynomial.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_degree(p: *const CuPolynomial, out: *mut i64) -> CuStatus {
    guard(|| {
        let d = handle(p)?.degree().map_or(-1, |d| d as i64);
        write_out(out, d, "out")
    })
}

/// Coefficient of `x^i` as `"num/den"` into `*out`; free with `cu_string_free`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_coeff(
    p: *const CuPolynomial,
    i: usize,
    out: *mut *mut c_char,
) -> CuStatus {
    guard(|| {
        let c = handle(p)?.coeff(i).to_string();
        write_out(out, to_c_string(c), "out")
    })
}

/// Text form, ascending powers (`"1/6 - 1x + 1x^2"`), into `*out`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_to_string(
    p: *const CuPolynomial,
    out: *mut *mut c_char,
) -> CuStatus {
    guard(|| {
        let s = handle(p)?.to_string();
        write_out(out, to_c_string(s), "out")
    })
}

/// `p(num/den)` as `"num/den"` into `*out`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_eval(
    p: *const CuPolynomial,
    num: i64,
    den: i64,
    out: *mut *mut c_char,
) -> CuStatus {
    guard(|| {
        let x = rational(num, den)?;
        let v = handle(p)?.eval(&x).to_string();
        write_out(out, to_c_string(v), "out")
    })
}

/// Verifies `identity` (a name such as `"thm8"`, or `"all"`) on its standard
/// grid up to `n_max` and writes the JSON suite report into `*out_json`.
/// `*out_passed` receives whether every identity (or one reading of each
/// theorem with a variant) passed.
///
/// # Safety
/// `identity` must be a NUL-terminated string; `out_json` and `out_passed` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cu_verify_json(
    identity: *const c_char,
    n_max: usize,
    jobs: usize,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> CuStatus {
    guard(|| {
        if out_json.is_null() || out_passed.is_null() {
            return Err(null("output pointer"));
        }
        let ids: Vec<IdentityId> = cli::select_identities(read_str(identity, "identity")?)?;
        let opts = VerifyOptions {
            jobs: jobs.max(1),
            truncation: DEFAULT_TRUNCATION,
        };
        let suite: SuiteReport = verify_standard(&ids, n_max, &opts)?;
        let json =
            serde_json::to_string(&suite).map_err(|e| Fail(CuStatus::Parse, e.to_string()))?;
        write_out(out_passed, suite.passed, "out_passed")?;
        write_out(out_json, to_c_string(json), "out_json")
    })
}
