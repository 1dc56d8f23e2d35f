//! C interface to `osp-kostka`.
//!
//! Every fallible function returns an [`OspStatus`] and writes its result
//! through an out-pointer. On failure a description is kept per thread and
//! can be read with [`osp_last_error`]. Handles are opaque; free them with
//! the matching `_free` function. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use osp_kostka::exceptional::{self, CaseName};
use osp_kostka::{DominantWeightPair, Error, KostkaCalculator, KostkaOptions, LaurentPolynomial, QPolynomial, WeightVector};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OspStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    LimitExceeded = 3,
    Overflow = 4,
    Internal = 5,
    Panic = 6,
}

/// A rank-`n` calculator with its partition-function cache. Safe to share
/// between threads.
pub struct OspEngine {
    calc: KostkaCalculator,
}

/// A Laurent polynomial in `q` with integer coefficients; ordinary
/// polynomials have offset 0.
pub struct OspPoly {
    inner: LaurentPolynomial,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> OspStatus {
    match e {
        e if e.is_limit() => OspStatus::LimitExceeded,
        Error::Internal(_) => OspStatus::Internal,
        _ => OspStatus::InvalidArgument,
    }
}

fn fail(status: OspStatus, msg: impl Into<String>) -> OspStatus {
    set_error(msg);
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (OspStatus, String)>) -> OspStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OspStatus::Ok,
        Ok(Err((status, msg))) => fail(status, msg),
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(OspStatus::Panic, msg)
        }
    }
}

fn lift(e: Error) -> (OspStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (OspStatus, String) {
    (OspStatus::NullPointer, format!("{what} is null"))
}

unsafe fn slice<'a>(p: *const i64, len: usize, what: &str) -> Result<&'a [i64], (OspStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn engine_ref<'a>(e: *const OspEngine) -> Result<&'a OspEngine, (OspStatus, String)> {
    e.as_ref().ok_or_else(|| null("engine"))
}

unsafe fn pair_at(p1: *const i64, p0: *const i64, len: usize, name: &str) -> Result<DominantWeightPair, (OspStatus, String)> {
    let a = slice(p1, len, name)?;
    let b = slice(p0, len, name)?;
    DominantWeightPair::new(a, b).map_err(lift)
}

fn emit(out: *mut *mut OspPoly, inner: LaurentPolynomial) -> Result<(), (OspStatus, String)> {
    unsafe { *out = Box::into_raw(Box::new(OspPoly { inner })) };
    Ok(())
}

fn laurent(p: &QPolynomial) -> LaurentPolynomial {
    LaurentPolynomial::new(0, p.coeffs().to_vec())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn osp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn osp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Creates an engine for rank `n`. `jobs` is the worker count for Kostka
/// sums (1 runs on the calling thread); `max_rank` caps `n`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn osp_engine_new(n: usize, max_rank: usize, jobs: usize, out: *mut *mut OspEngine) -> OspStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if jobs == 0 {
            return Err((OspStatus::InvalidArgument, "jobs must be at least 1".into()));
        }
        let calc = KostkaCalculator::new(n, KostkaOptions { jobs, max_rank }).map_err(lift)?;
        *out = Box::into_raw(Box::new(OspEngine { calc }));
        Ok(())
    })
}

/// # Safety
/// `engine` must be NULL or a handle from [`osp_engine_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn osp_engine_free(engine: *mut OspEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// # Safety
/// `engine` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn osp_engine_rank(engine: *const OspEngine) -> usize {
    engine.as_ref().map_or(0, |e| e.calc.rank())
}

/// `L_α(q)` for `α = Σ delta[i]·δᵢ + Σ eps[i]·εᵢ`; both arrays have the
/// engine's rank as length.
///
/// # Safety
/// Pointers must be valid for `len` reads; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn osp_lpoly(
    engine: *const OspEngine,
    delta: *const i64,
    eps: *const i64,
    len: usize,
    out: *mut *mut OspPoly,
) -> OspStatus {
    guard(|| {
        let e = engine_ref(engine)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let alpha = WeightVector::new(slice(delta, len, "delta")?, slice(eps, len, "eps")?).map_err(lift)?;
        let p = e.calc.engine().l_poly(&alpha).map_err(lift)?;
        emit(out, laurent(&p))
    })
}

/// `K_{(λ₁,λ₀),(μ₁,μ₀)}(q)`. All four arrays have length `len`, equal to
/// the engine's rank, and must be partitions.
///
/// # Safety
/// Pointers must be valid for `len` reads; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn osp_kostka(
    engine: *const OspEngine,
    lam1: *const i64,
    lam0: *const i64,
    mu1: *const i64,
    mu0: *const i64,
    len: usize,
    out: *mut *mut OspPoly,
) -> OspStatus {
    guard(|| {
        let e = engine_ref(engine)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lam = pair_at(lam1, lam0, len, "lam")?;
        let mu = pair_at(mu1, mu0, len, "mu")?;
        let k = e.calc.kostka(&lam, &mu).map_err(lift)?;
        emit(out, laurent(&k))
    })
}

/// `q^{−dim}·K(q⁻¹)`, the IC-stalk Poincaré polynomial along the orbit of
/// `μ`, whose dimension `dim` the caller supplies.
///
/// # Safety
/// As for [`osp_kostka`].
#[no_mangle]
pub unsafe extern "C" fn osp_stalk(
    engine: *const OspEngine,
    lam1: *const i64,
    lam0: *const i64,
    mu1: *const i64,
    mu0: *const i64,
    len: usize,
    dim: i64,
    out: *mut *mut OspPoly,
) -> OspStatus {
    guard(|| {
        let e = engine_ref(engine)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lam = pair_at(lam1, lam0, len, "lam")?;
        let mu = pair_at(mu1, mu0, len, "mu")?;
        let s = e.calc.stalk(&lam, &mu, dim).map_err(lift)?;
        emit(out, s)
    })
}

/// Writes whether `(λ₁,λ₀) ≥ (μ₁,μ₀)` in the closure order.
///
/// # Safety
/// As for [`osp_kostka`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn osp_dominance_ge(
    engine: *const OspEngine,
    lam1: *const i64,
    lam0: *const i64,
    mu1: *const i64,
    mu0: *const i64,
    len: usize,
    out: *mut bool,
) -> OspStatus {
    guard(|| {
        let e = engine_ref(engine)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lam = pair_at(lam1, lam0, len, "lam")?;
        let mu = pair_at(mu1, mu0, len, "mu")?;
        *out = e.calc.support_check(&lam, &mu).map_err(lift)?;
        Ok(())
    })
}

/// # Safety
/// `poly` must be NULL or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn osp_poly_free(poly: *mut OspPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Exponent of the first stored coefficient (0 for the zero polynomial).
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn osp_poly_offset(poly: *const OspPoly) -> i64 {
    poly.as_ref().map_or(0, |p| p.inner.offset())
}

/// Number of stored coefficients; 0 for the zero polynomial.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn osp_poly_len(poly: *const OspPoly) -> usize {
    poly.as_ref().map_or(0, |p| p.inner.coeffs().len())
}

/// Coefficient of `q^exp`. Fails with `Overflow` if it does not fit in 64
/// bits; use [`osp_poly_to_json`] for those.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn osp_poly_coeff(poly: *const OspPoly, exp: i64, out: *mut i64) -> OspStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let c = p.inner.coeff(exp);
        *out = c
            .to_i64()
            .ok_or_else(|| (OspStatus::Overflow, format!("coefficient {c} does not fit in 64 bits")))?;
        Ok(())
    })
}

/// JSON text `{"offset":…,"coeffs":[…]}`; release with [`osp_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn osp_poly_to_json(poly: *const OspPoly, out: *mut *mut c_char) -> OspStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = serde_json::to_string(&p.inner).map_err(|e| (OspStatus::Internal, e.to_string()))?;
        *out = CString::new(s).map_err(|e| (OspStatus::Internal, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn osp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Dimension of the Hesselink resolution for `"F4"` or `"G3"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn osp_hesselink_dim(name: *const c_char, out: *mut usize) -> OspStatus {
    guard(|| {
        if name.is_null() {
            return Err(null("name"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(name)
            .to_str()
            .map_err(|e| (OspStatus::InvalidArgument, e.to_string()))?;
        let case: CaseName = s.parse().map_err(lift)?;
        *out = exceptional::hesselink_dim(case);
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> String {
        let p = osp_last_error();
        assert!(!p.is_null());
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::RankOverLimit { n: 5, limit: 4 }), OspStatus::LimitExceeded);
        assert_eq!(status_of(&Error::Internal("x".into())), OspStatus::Internal);
        assert_eq!(status_of(&Error::InvalidRank(0)), OspStatus::InvalidArgument);
    }

    #[test]
    fn panics_become_status() {
        let st = guard(|| panic!("boom"));
        assert_eq!(st, OspStatus::Panic);
        assert_eq!(last_error(), "boom");
        assert_eq!(guard(|| Ok(())), OspStatus::Ok);
        assert!(osp_last_error().is_null());
    }
}
