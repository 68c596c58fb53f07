//! C ABI over `ringline`.
//!
//! Rings and lines are opaque heap handles created by `rl_*_new` and
//! released with the matching `rl_*_free`. Every fallible call returns an
//! [`RlStatus`]; on failure a description is available from
//! [`rl_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ringline::{Element, Error, FiniteRing, ProjectiveLine};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Ring = 4,
    Ideal = 5,
    Line = 6,
    Profile = 7,
    OutOfRange = 8,
    Panic = 9,
}

/// Opaque finite ring.
pub struct RlRing(FiniteRing);

/// Opaque projective line.
pub struct RlLine(ProjectiveLine);

/// Classification profile of a line.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RlProfile {
    /// Ring order (`A` of the type label `A/B`).
    pub order: u64,
    /// Zero-divisors of the ring (`B`).
    pub zero_divisors: u64,
    pub tot: u64,
    pub tp_i: u64,
    pub one_n: u64,
    pub cap2n: u64,
    pub cap3n: u64,
    pub jcb: u64,
    pub md: u64,
}

impl From<ringline::LineProfile> for RlProfile {
    fn from(p: ringline::LineProfile) -> Self {
        let c = p.counts;
        RlProfile {
            order: p.type_label.order as u64,
            zero_divisors: p.type_label.zero_divisors as u64,
            tot: c.tot as u64,
            tp_i: c.tp_i as u64,
            one_n: c.one_n as u64,
            cap2n: c.cap2n as u64,
            cap3n: c.cap3n as u64,
            jcb: c.jcb as u64,
            md: c.md as u64,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(message).ok());
}

fn status_of(err: &Error) -> RlStatus {
    match err {
        Error::Parse(_) => RlStatus::Parse,
        Error::Ring(_) => RlStatus::Ring,
        Error::Ideal(_) => RlStatus::Ideal,
        Error::Line(_) => RlStatus::Line,
        Error::Profile(_) => RlStatus::Profile,
    }
}

/// Runs `f`, recording errors and converting panics into `RlStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), (RlStatus, String)>) -> RlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RlStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RlStatus::Panic
        }
    }
}

fn lib_err(err: Error) -> (RlStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (RlStatus, String) {
    (RlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, (RlStatus, String)> {
    if text.is_null() {
        return Err(null("expression"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| (RlStatus::InvalidUtf8, e.to_string()))
}

unsafe fn element(ring: &FiniteRing, index: usize) -> Result<Element, (RlStatus, String)> {
    if index < ring.order() {
        Ok(Element::from_index(index))
    } else {
        Err((
            RlStatus::OutOfRange,
            format!("element {index} out of range for order {}", ring.order()),
        ))
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rl_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses and builds the ring described by `expr`.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_new(expr: *const c_char, out: *mut *mut RlRing) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let ring = ringline::build_ring(read_str(expr)?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(RlRing(ring)));
        Ok(())
    })
}

/// # Safety
/// `ring` must come from `rl_ring_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_free(ring: *mut RlRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_order(ring: *const RlRing) -> usize {
    ring.as_ref().map_or(0, |r| r.0.order())
}

/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_zero_divisor_count(ring: *const RlRing) -> usize {
    ring.as_ref().map_or(0, |r| r.0.zero_divisor_count())
}

/// Index of the multiplicative identity.
///
/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_one(ring: *const RlRing) -> usize {
    ring.as_ref().map_or(0, |r| r.0.one().index())
}

/// `*out = a + b`
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_add(
    ring: *const RlRing,
    a: usize,
    b: usize,
    out: *mut usize,
) -> RlStatus {
    guard(|| {
        let ring = &ring.as_ref().ok_or_else(|| null("ring"))?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ring.add(element(ring, a)?, element(ring, b)?).index();
        Ok(())
    })
}

/// `*out = a * b`
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_mul(
    ring: *const RlRing,
    a: usize,
    b: usize,
    out: *mut usize,
) -> RlStatus {
    guard(|| {
        let ring = &ring.as_ref().ok_or_else(|| null("ring"))?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ring.mul(element(ring, a)?, element(ring, b)?).index();
        Ok(())
    })
}

/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_is_unit(
    ring: *const RlRing,
    a: usize,
    out: *mut bool,
) -> RlStatus {
    guard(|| {
        let ring = &ring.as_ref().ok_or_else(|| null("ring"))?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ring.is_unit(element(ring, a)?);
        Ok(())
    })
}

/// Enumerates the projective line over a copy of `ring`.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_line_new(ring: *const RlRing, out: *mut *mut RlLine) -> RlStatus {
    guard(|| {
        let ring = &ring.as_ref().ok_or_else(|| null("ring"))?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        let line = ProjectiveLine::enumerate(ring.clone()).map_err(|e| lib_err(e.into()))?;
        *out = Box::into_raw(Box::new(RlLine(line)));
        Ok(())
    })
}

/// # Safety
/// `line` must come from `rl_line_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rl_line_free(line: *mut RlLine) {
    if !line.is_null() {
        drop(Box::from_raw(line));
    }
}

/// Number of points, or 0 for a null handle.
///
/// # Safety
/// `line` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_line_point_count(line: *const RlLine) -> usize {
    line.as_ref().map_or(0, |l| l.0.len())
}

/// Whether points `a` and `b` are distant.
///
/// # Safety
/// `line` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_line_is_distant(
    line: *const RlLine,
    a: usize,
    b: usize,
    out: *mut bool,
) -> RlStatus {
    guard(|| {
        let line = &line.as_ref().ok_or_else(|| null("line"))?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        if a >= line.len() || b >= line.len() {
            return Err((
                RlStatus::OutOfRange,
                format!("point index out of range for {} points", line.len()),
            ));
        }
        *out = line.is_distant(a, b);
        Ok(())
    })
}

/// Writes the canonical label of point `index`, e.g. `(1,[0,2])`, as a newly
/// allocated string to be released with `rl_string_free`.
///
/// # Safety
/// `line` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_line_point_label(
    line: *const RlLine,
    index: usize,
    out: *mut *mut c_char,
) -> RlStatus {
    guard(|| {
        let line = &line.as_ref().ok_or_else(|| null("line"))?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        if index >= line.len() {
            return Err((RlStatus::OutOfRange, format!("point {index} out of range")));
        }
        *out = CString::new(line.label(index))
            .expect("labels contain no NUL")
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `line` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_line_profile(line: *const RlLine, out: *mut RlProfile) -> RlStatus {
    guard(|| {
        let line = &line.as_ref().ok_or_else(|| null("line"))?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ringline::profile(line)
            .map_err(|e| lib_err(e.into()))?
            .into();
        Ok(())
    })
}

/// Parse, build, enumerate and profile in one call.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_profile(expr: *const c_char, out: *mut RlProfile) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ringline::analyse(read_str(expr)?)
            .map_err(lib_err)?
            .profile
            .into();
        Ok(())
    })
}

/// Canonical text of a ring expression, newly allocated; release with
/// `rl_string_free`.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_canonical(expr: *const c_char, out: *mut *mut c_char) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let parsed = ringline::parse(read_str(expr)?).map_err(|e| lib_err(e.into()))?;
        *out = CString::new(parsed.render())
            .expect("rendered text contains no NUL")
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn rl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
