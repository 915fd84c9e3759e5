//! C ABI over `peterweyl`.
//!
//! Every fallible call returns a [`PwStatus`] code; on failure the message is
//! kept per thread and read with [`pw_last_error`]. Objects cross the boundary
//! as opaque handles owned by the caller and released with their `_free`
//! function. Strings returned through out-parameters are UTF-8, NUL-terminated
//! and released with [`pw_string_free`]. Structured results are JSON.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use peterweyl::clebsch::threej;
use peterweyl::exactmath::QScalar;
use peterweyl::ofun::{self, OqAlgebra, PWElement};
use peterweyl::schurweyl::frt_relations;
use peterweyl::uqrep::{AlgebraSpec, IrrepLabel};
use peterweyl::Error;

/// Status codes. Zero is success.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidLabel = 4,
    InvalidArgument = 5,
    AlgebraMismatch = 6,
    DivisionByZero = 7,
    NotRegularAtOne = 8,
    Singular = 9,
    DimensionMismatch = 10,
    Consistency = 11,
    Panic = 12,
}

impl From<&Error> for PwStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => PwStatus::Parse,
            Error::InvalidLabel(_) => PwStatus::InvalidLabel,
            Error::InvalidArgument(_) => PwStatus::InvalidArgument,
            Error::AlgebraMismatch(..) => PwStatus::AlgebraMismatch,
            Error::DivisionByZero => PwStatus::DivisionByZero,
            Error::NotRegularAtOne | Error::PoleAtOne { .. } => PwStatus::NotRegularAtOne,
            Error::Singular => PwStatus::Singular,
            Error::DimensionMismatch(_) => PwStatus::DimensionMismatch,
            Error::Consistency(_) => PwStatus::Consistency,
        }
    }
}

/// A quantized function algebra `O_q(G)`.
pub struct PwAlgebra {
    inner: Arc<OqAlgebra>,
}

/// An element of `O_q(G)` in the Peter-Weyl basis.
pub struct PwElement {
    inner: PWElement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(PwStatus::from(&e), e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Outcome<()>) -> i32 {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PwStatus::Ok as i32,
        Ok(Err(Failure(code, msg))) => {
            set_error(msg);
            code as i32
        }
        Err(_) => {
            set_error("internal panic".into());
            PwStatus::Panic as i32
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(PwStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(PwStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, name: &str) -> Outcome<&'a T> {
    p.as_ref().ok_or_else(|| Failure(PwStatus::NullPointer, format!("{name} is null")))
}

unsafe fn put<T>(out: *mut T, v: T, name: &str) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(PwStatus::NullPointer, format!("{name} is null")));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    let c = CString::new(s).map_err(|_| Failure(PwStatus::Consistency, "output contains NUL".into()))?;
    put(out, c.into_raw(), "out")
}

unsafe fn put_element(out: *mut *mut PwElement, e: PWElement) -> Outcome<()> {
    put(out, Box::into_raw(Box::new(PwElement { inner: e })), "out")
}

fn json<T: serde::Serialize>(v: &T) -> Outcome<String> {
    serde_json::to_string(v).map_err(|e| Failure(PwStatus::Consistency, e.to_string()))
}

fn parse_weights(spec: AlgebraSpec, s: &str) -> Outcome<IrrepLabel> {
    let hw: Vec<i64> = serde_json::from_str(s).map_err(|e| Failure(PwStatus::Parse, format!("weights: {e}")))?;
    Ok(IrrepLabel::new(spec, hw)?)
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opens `O_q(G)` for `name`, one of `sl2` or `glK` with `K >= 2`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_algebra_new(name: *const c_char, out: *mut *mut PwAlgebra) -> i32 {
    guard(|| {
        let spec: AlgebraSpec = str_arg(name, "name")?.parse()?;
        put(out, Box::into_raw(Box::new(PwAlgebra { inner: OqAlgebra::shared(spec) })), "out")
    })
}

/// # Safety
/// `a` must be null or a live handle from [`pw_algebra_new`].
#[no_mangle]
pub unsafe extern "C" fn pw_algebra_free(a: *mut PwAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// The basis element `f^λ_{ij}`; `weights` is a JSON integer array.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_basis(
    alg: *const PwAlgebra,
    weights: *const c_char,
    i: usize,
    j: usize,
    out: *mut *mut PwElement,
) -> i32 {
    guard(|| {
        let alg = handle(alg, "alg")?;
        let label = parse_weights(alg.inner.spec, str_arg(weights, "weights")?)?;
        put_element(out, PWElement::symbol(&label, i, j)?)
    })
}

/// The matrix coefficient of the vector representation at `(i, j)`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_generator(alg: *const PwAlgebra, i: usize, j: usize, out: *mut *mut PwElement) -> i32 {
    guard(|| {
        let alg = handle(alg, "alg")?;
        put_element(out, ofun::pbw::generator(&alg.inner, i, j)?)
    })
}

/// Parses `[{"lambda": [..], "i": .., "j": .., "coeff": ".."}, ...]`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_from_json(alg: *const PwAlgebra, text: *const c_char, out: *mut *mut PwElement) -> i32 {
    guard(|| {
        let alg = handle(alg, "alg")?;
        let v: serde_json::Value = serde_json::from_str(str_arg(text, "json")?)
            .map_err(|e| Failure(PwStatus::Parse, e.to_string()))?;
        put_element(out, PWElement::from_json_value(alg.inner.spec, &v)?)
    })
}

/// # Safety
/// `e` must be null or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn pw_element_free(e: *mut PwElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// `out = a + b`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_add(a: *const PwElement, b: *const PwElement, out: *mut *mut PwElement) -> i32 {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        put_element(out, a.inner.add(&b.inner)?)
    })
}

/// `out = c · a` for a scalar expression `c` in `q`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_scale(a: *const PwElement, c: *const c_char, out: *mut *mut PwElement) -> i32 {
    guard(|| {
        let a = handle(a, "a")?;
        let c: QScalar = str_arg(c, "scalar")?.parse()?;
        put_element(out, a.inner.scale(&c))
    })
}

/// `out = a · b` in `alg`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_multiply(
    alg: *const PwAlgebra,
    a: *const PwElement,
    b: *const PwElement,
    out: *mut *mut PwElement,
) -> i32 {
    guard(|| {
        let alg = handle(alg, "alg")?;
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        put_element(out, alg.inner.multiply(&a.inner, &b.inner)?)
    })
}

/// Writes 1 to `out` when the elements are equal, 0 otherwise.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_equal(a: *const PwElement, b: *const PwElement, out: *mut i32) -> i32 {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        put(out, i32::from(a.inner == b.inner), "out")
    })
}

/// The element as JSON.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_to_json(e: *const PwElement, out: *mut *mut c_char) -> i32 {
    guard(|| put_string(out, json(&handle(e, "e")?.inner)?))
}

/// `Δ(e)` as JSON `[{"left", "right", "coeff"}]`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_comultiply_json(e: *const PwElement, out: *mut *mut c_char) -> i32 {
    guard(|| put_string(out, json(&ofun::comultiply(&handle(e, "e")?.inner))?))
}

/// `ε(e)` in canonical scalar form.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_counit(e: *const PwElement, out: *mut *mut c_char) -> i32 {
    guard(|| put_string(out, ofun::counit(&handle(e, "e")?.inner).to_string()))
}

/// The element as a polynomial in the vector-representation coefficients.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_element_pretty(alg: *const PwAlgebra, e: *const PwElement, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let alg = handle(alg, "alg")?;
        put_string(out, ofun::pbw::pretty(&alg.inner, &handle(e, "e")?.inner)?)
    })
}

/// Structure constants of `f^λ · f^μ` as JSON; weights are JSON integer arrays.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_structure_constants_json(
    alg: *const PwAlgebra,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let alg = handle(alg, "alg")?;
        let l = parse_weights(alg.inner.spec, str_arg(lambda, "lambda")?)?;
        let m = parse_weights(alg.inner.spec, str_arg(mu, "mu")?)?;
        put_string(out, json(&alg.inner.structure_constants(&l, &m)?)?)
    })
}

/// 3j and dual 3j symbols of `λ ⊗ μ` as JSON.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_threej_json(
    alg: *const PwAlgebra,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let alg = handle(alg, "alg")?;
        let l = parse_weights(alg.inner.spec, str_arg(lambda, "lambda")?)?;
        let m = parse_weights(alg.inner.spec, str_arg(mu, "mu")?)?;
        put_string(out, json(&threej(&l, &m)?)?)
    })
}

/// The quadratic relations of `O_q(M_k)`, one `... = 0` per line.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_frt_text(k: usize, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let report = frt_relations(k)?;
        if !report.passed() {
            return Err(Failure(PwStatus::Consistency, "relations leave nonzero residuals".into()));
        }
        put_string(out, report.relations.iter().map(|r| r.text() + "\n").collect())
    })
}

/// Canonical form of a scalar expression in `q`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_scalar_normalize(expr: *const c_char, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let x: QScalar = str_arg(expr, "expr")?.parse()?;
        put_string(out, x.to_string())
    })
}

/// Value of a scalar expression at `q = 1` as a reduced fraction.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pw_scalar_eval_at_one(expr: *const c_char, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let x: QScalar = str_arg(expr, "expr")?.parse()?;
        put_string(out, x.eval_at_one()?.to_string())
    })
}
