//! C ABI over the `ncentered` library.
//!
//! Matrices cross the boundary as opaque [`NcOperator`] handles created by
//! [`nc_operator_new`] and released with [`nc_operator_free`]. Entries are
//! passed as interleaved `(re, im)` doubles in row-major order. Every
//! fallible function returns an [`NcStatus`]; on failure the message is
//! available from [`nc_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ncentered::classify::{aluthge, centered_order, is_binormal};
use ncentered::counterexample::{build_truncated, ShiftSpec};
use ncentered::decomp::{abs_value, moore_penrose, polar_decompose};
use ncentered::{Error, Operator, ToleranceConfig};
use num_complex::Complex64;

/// Opaque matrix handle.
pub struct NcOperator(Operator);

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Dimension = 3,
    NonFinite = 4,
    NotSquare = 5,
    Precondition = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

/// Relative tolerances; see [`nc_tolerances_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NcTolerances {
    pub rank_rel_tol: f64,
    pub zero_rel_tol: f64,
    pub equality_rel_tol: f64,
}

impl From<ToleranceConfig> for NcTolerances {
    fn from(cfg: ToleranceConfig) -> Self {
        Self {
            rank_rel_tol: cfg.rank_rel_tol,
            zero_rel_tol: cfg.zero_rel_tol,
            equality_rel_tol: cfg.equality_rel_tol,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(err: &Error) -> NcStatus {
    match err {
        Error::Empty { .. } | Error::EntryCount { .. } | Error::DimensionMismatch { .. } => NcStatus::Dimension,
        Error::NonFinite { .. } => NcStatus::NonFinite,
        Error::NotSquare { .. } => NcStatus::NotSquare,
        Error::NotHermitian { .. } | Error::NotPositive { .. } | Error::NotCommuting { .. } | Error::Precondition(_) => {
            NcStatus::Precondition
        }
        Error::InvalidTolerance { .. } | Error::InvalidParameter(_) | Error::UnknownSuite(_) => {
            NcStatus::InvalidArgument
        }
        _ => NcStatus::Internal,
    }
}

struct Failure(NcStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(NcStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, converting errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> NcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            NcStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_owned());
            NcStatus::Internal
        }
    }
}

unsafe fn operator<'a>(t: *const NcOperator) -> Result<&'a Operator, Failure> {
    t.as_ref().map(|h| &h.0).ok_or_else(|| null("operator"))
}

unsafe fn tolerances(tol: *const NcTolerances) -> Result<ToleranceConfig, Failure> {
    let cfg = match tol.as_ref() {
        None => ToleranceConfig::default(),
        Some(t) => ToleranceConfig::new(t.rank_rel_tol, t.zero_rel_tol, t.equality_rel_tol)?,
    };
    Ok(cfg)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_operator(out: *mut *mut NcOperator, op: Operator) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(NcOperator(op))))
}

unsafe fn clear(out: *mut *mut NcOperator) {
    if !out.is_null() {
        out.write(std::ptr::null_mut());
    }
}

/// Default tolerances: rank 1e-12, vanishing 1e-9, equality 1e-9.
#[no_mangle]
pub extern "C" fn nc_tolerances_default() -> NcTolerances {
    ToleranceConfig::default().into()
}

/// Message of the last failed call on this thread, or NULL after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn nc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

/// Creates a `rows x cols` operator from `2 * rows * cols` doubles holding
/// interleaved `(re, im)` pairs in row-major order.
///
/// # Safety
/// `data` must point to `2 * rows * cols` readable doubles; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn nc_operator_new(
    rows: usize,
    cols: usize,
    data: *const f64,
    out: *mut *mut NcOperator,
) -> NcStatus {
    clear(out);
    guard(|| {
        if data.is_null() {
            return Err(null("data"));
        }
        let len = rows
            .checked_mul(cols)
            .and_then(|n| n.checked_mul(2))
            .ok_or_else(|| Failure(NcStatus::Dimension, format!("{rows}x{cols} overflows")))?;
        let raw = std::slice::from_raw_parts(data, len);
        let entries = raw.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect();
        put_operator(out, Operator::from_row_major(rows, cols, entries)?)
    })
}

/// Releases an operator. NULL is ignored.
///
/// # Safety
/// `t` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nc_operator_free(t: *mut NcOperator) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of rows, 0 for NULL.
///
/// # Safety
/// `t` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nc_operator_rows(t: *const NcOperator) -> usize {
    t.as_ref().map_or(0, |h| h.0.rows())
}

/// Number of columns, 0 for NULL.
///
/// # Safety
/// `t` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nc_operator_cols(t: *const NcOperator) -> usize {
    t.as_ref().map_or(0, |h| h.0.cols())
}

/// Copies the entries into `out` in the layout of [`nc_operator_new`].
/// `len` is the capacity of `out` in doubles.
///
/// # Safety
/// `out` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn nc_operator_copy_data(t: *const NcOperator, out: *mut f64, len: usize) -> NcStatus {
    guard(|| {
        let t = operator(t)?;
        if out.is_null() {
            return Err(null("output buffer"));
        }
        let entries = t.to_row_major();
        let needed = 2 * entries.len();
        if len < needed {
            return Err(Failure(NcStatus::BufferTooSmall, format!("buffer holds {len} doubles, need {needed}")));
        }
        let dst = std::slice::from_raw_parts_mut(out, needed);
        for (pair, z) in dst.chunks_exact_mut(2).zip(entries) {
            pair[0] = z.re;
            pair[1] = z.im;
        }
        Ok(())
    })
}

/// Polar decomposition `T = U |T|`. `tol` may be NULL for the defaults.
///
/// # Safety
/// `t` must be a live handle; `u` and `p` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_polar(
    t: *const NcOperator,
    tol: *const NcTolerances,
    u: *mut *mut NcOperator,
    p: *mut *mut NcOperator,
) -> NcStatus {
    clear(u);
    clear(p);
    guard(|| {
        let t = operator(t)?;
        let cfg = tolerances(tol)?;
        if u.is_null() || p.is_null() {
            return Err(null("output pointer"));
        }
        let parts = polar_decompose(t, &cfg);
        put_operator(u, parts.isometry)?;
        put_operator(p, parts.modulus)
    })
}

/// Modulus `|T| = (T*T)^{1/2}`.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_abs_value(
    t: *const NcOperator,
    tol: *const NcTolerances,
    out: *mut *mut NcOperator,
) -> NcStatus {
    clear(out);
    guard(|| put_operator(out, abs_value(operator(t)?, &tolerances(tol)?)))
}

/// Moore-Penrose inverse.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_moore_penrose(
    t: *const NcOperator,
    tol: *const NcTolerances,
    out: *mut *mut NcOperator,
) -> NcStatus {
    clear(out);
    guard(|| put_operator(out, moore_penrose(operator(t)?, &tolerances(tol)?)))
}

/// Whether `T*T` commutes with `TT*`.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_is_binormal(t: *const NcOperator, tol: *const NcTolerances, out: *mut bool) -> NcStatus {
    guard(|| {
        let check = is_binormal(operator(t)?, &tolerances(tol)?)?;
        put(out, check.binormal)
    })
}

/// Largest `n <= max_n` for which `T` is verified `n`-centered. When
/// `oracle_agrees` is not NULL it receives whether the definitional check
/// confirms the order.
///
/// # Safety
/// `t` must be a live handle; `order` must be writable; `oracle_agrees`
/// must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn nc_centered_order(
    t: *const NcOperator,
    max_n: usize,
    tol: *const NcTolerances,
    order: *mut usize,
    oracle_agrees: *mut bool,
) -> NcStatus {
    guard(|| {
        let report = centered_order(operator(t)?, max_n, &tolerances(tol)?)?;
        put(order, report.verified_order)?;
        if !oracle_agrees.is_null() {
            oracle_agrees.write(report.oracle_agrees);
        }
        Ok(())
    })
}

/// The block weighted shift that is `n`-centered but not `(n+1)`-centered,
/// truncated to `blocks` blocks (0 selects the default `n + 3`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_counterexample(n: usize, blocks: usize, out: *mut *mut NcOperator) -> NcStatus {
    clear(out);
    guard(|| {
        let spec = ShiftSpec::recipe(n, (blocks > 0).then_some(blocks))?;
        put_operator(out, build_truncated(&spec)?)
    })
}

/// Generalized Aluthge transform `|T|^alpha U |T|^beta`.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_aluthge(
    t: *const NcOperator,
    alpha: f64,
    beta: f64,
    tol: *const NcTolerances,
    out: *mut *mut NcOperator,
) -> NcStatus {
    clear(out);
    guard(|| {
        let parts = aluthge(operator(t)?, alpha, beta, &tolerances(tol)?)?;
        put_operator(out, parts.transform)
    })
}
