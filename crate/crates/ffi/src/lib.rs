//! C interface to `vpinterp`.
//!
//! Every function returns a [`VpStatus`]. On failure a message describing
//! the error is kept per thread and can be read with
//! [`vp_last_error_message`]. Kinds are numbered 1 to 4. Node arrays use
//! increasing angle order, so index `i` holds node `k = i + 1`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use vpinterp::analysis::{lebesgue_bound, lebesgue_constant, JacobiWeightU};
use vpinterp::simultaneous::{evaluate_deriv, DerivativeRequest};
use vpinterp::{ChebyshevKind, DegreePair, VpError, VpInterpolant};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidKind = 2,
    InvalidArgument = 3,
    Domain = 4,
    Shape = 5,
    NonFinite = 6,
    Inadmissible = 7,
    Panic = 8,
}

/// Opaque interpolant handle.
pub struct VpHandle {
    inner: VpInterpolant,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &VpError) -> VpStatus {
    match err {
        VpError::Domain { .. } => VpStatus::Domain,
        VpError::Shape { .. } => VpStatus::Shape,
        VpError::NonFinite { .. } => VpStatus::NonFinite,
        VpError::Inadmissible { .. } => VpStatus::Inadmissible,
        VpError::Parameter(_) | VpError::Index { .. } | VpError::Order(_) => VpStatus::InvalidArgument,
    }
}

struct Failure(VpStatus, String);

impl From<VpError> for Failure {
    fn from(e: VpError) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> VpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            VpStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            VpStatus::Panic
        }
    }
}

fn kind_of(kind: u32) -> Result<ChebyshevKind, Failure> {
    match kind {
        1 => Ok(ChebyshevKind::First),
        2 => Ok(ChebyshevKind::Second),
        3 => Ok(ChebyshevKind::Third),
        4 => Ok(ChebyshevKind::Fourth),
        _ => Err(Failure(VpStatus::InvalidKind, format!("kind must be 1..4, got {kind}"))),
    }
}

fn null(what: &str) -> Failure {
    Failure(VpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn input<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null(what))
    } else {
        Ok(slice::from_raw_parts(p, len))
    }
}

unsafe fn output<'a>(p: *mut f64, len: usize, what: &str) -> Result<&'a mut [f64], Failure> {
    if len == 0 {
        Ok(&mut [])
    } else if p.is_null() {
        Err(null(what))
    } else {
        Ok(slice::from_raw_parts_mut(p, len))
    }
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn vp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds the interpolant of degree pair `(n, m)` from `len == n` samples at
/// the nodes of `kind`. On success `*out` receives a handle to release with
/// [`vp_interpolant_free`].
///
/// # Safety
/// `samples` must point to `len` readable doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vp_interpolant_new(
    kind: u32,
    n: usize,
    m: usize,
    samples: *const f64,
    len: usize,
    out: *mut *mut VpHandle,
) -> VpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let kind = kind_of(kind)?;
        let pair = DegreePair::new(n, m)?;
        let samples = input(samples, len, "samples")?.to_vec();
        let inner = VpInterpolant::build(kind, pair, samples)?;
        *out = Box::into_raw(Box::new(VpHandle { inner }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `handle` must come from [`vp_interpolant_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn vp_interpolant_free(handle: *mut VpHandle) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Evaluates the interpolant at `len` points in `[-1, 1]`.
///
/// # Safety
/// `points` and `values` must each hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn vp_interpolant_evaluate(
    handle: *const VpHandle,
    points: *const f64,
    values: *mut f64,
    len: usize,
) -> VpStatus {
    guard(|| {
        let h = handle.as_ref().ok_or_else(|| null("handle"))?;
        let pts = input(points, len, "points")?;
        let out = output(values, len, "values")?;
        out.copy_from_slice(&h.inner.evaluate(pts)?);
        Ok(())
    })
}

/// Evaluates the derivative of order `r >= 1` at `len` points.
///
/// # Safety
/// `points` and `values` must each hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn vp_interpolant_evaluate_deriv(
    handle: *const VpHandle,
    r: usize,
    points: *const f64,
    values: *mut f64,
    len: usize,
) -> VpStatus {
    guard(|| {
        let h = handle.as_ref().ok_or_else(|| null("handle"))?;
        let pts = input(points, len, "points")?;
        let out = output(values, len, "values")?;
        let request = DerivativeRequest::new(h.inner.clone(), r)?;
        out.copy_from_slice(&evaluate_deriv(&request, pts)?);
        Ok(())
    })
}

/// Writes the `n` node angles, abscissae and Christoffel numbers of `kind`.
/// Any of the three output pointers may be null to skip that array.
///
/// # Safety
/// Each non-null output must hold `n` doubles.
#[no_mangle]
pub unsafe extern "C" fn vp_nodes(kind: u32, n: usize, t: *mut f64, x: *mut f64, lambda: *mut f64) -> VpStatus {
    guard(|| {
        let set = vpinterp::nodes(kind_of(kind)?, n)?;
        for (dst, src) in [(t, &set.t), (x, &set.x), (lambda, &set.lambda)] {
            if !dst.is_null() {
                slice::from_raw_parts_mut(dst, n).copy_from_slice(src);
            }
        }
        Ok(())
    })
}

/// Lebesgue constant of the `(n, m)` operator in the norm weighted by
/// `(1 - x)^gamma (1 + x)^delta`, scanned on `grid_size + 1` angles.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vp_lebesgue_constant(
    kind: u32,
    n: usize,
    m: usize,
    gamma: f64,
    delta: f64,
    grid_size: usize,
    out: *mut f64,
) -> VpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let u = JacobiWeightU::new(gamma, delta)?;
        *out = lebesgue_constant(kind_of(kind)?, DegreePair::new(n, m)?, u, grid_size)?;
        Ok(())
    })
}

/// Closed-form upper bound for the Lebesgue constant.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vp_lebesgue_bound(kind: u32, n: usize, m: usize, out: *mut f64) -> VpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = lebesgue_bound(kind_of(kind)?, DegreePair::new(n, m)?);
        Ok(())
    })
}
