//! C ABI for khrank.
//!
//! Every fallible function returns a [`KhrankStatus`] and writes its result
//! through an out-pointer. On failure `khrank_last_error` returns a message
//! for the calling thread. Diagrams are opaque handles released with
//! `khrank_diagram_free`; strings returned by the library are released with
//! `khrank_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use khrank::alexander::{lemma_bound_report, morton_axis_polynomial};
use khrank::braid::BraidWord;
use khrank::classify::classify_by_rank;
use khrank::khovanov::{kh_ranks, rank_report, Basepoint, KhOptions};
use khrank::laurent::VarNames;
use khrank::linkdiag::{axis_link_diagram, braid_closure_diagram, LinkDiagram};
use khrank::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KhrankStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    CrossingCap = 5,
    DisconnectedClosure = 6,
    Internal = 7,
}

/// Opaque link diagram.
pub struct KhrankDiagram {
    inner: LinkDiagram,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> KhrankStatus {
    match e {
        Error::PdParse(_) | Error::BraidParse(_) | Error::PolyParse(_) => KhrankStatus::ParseError,
        Error::CrossingCap { .. } => KhrankStatus::CrossingCap,
        Error::DisconnectedClosure(_) => KhrankStatus::DisconnectedClosure,
        _ => KhrankStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), KhrankStatus>) -> KhrankStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KhrankStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            KhrankStatus::Internal
        }
    }
}

fn fail(e: Error) -> KhrankStatus {
    set_error(&e.to_string());
    status_of(&e)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, KhrankStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(KhrankStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        KhrankStatus::InvalidUtf8
    })
}

unsafe fn diagram<'a>(d: *const KhrankDiagram) -> Result<&'a LinkDiagram, KhrankStatus> {
    if d.is_null() {
        set_error("null diagram");
        return Err(KhrankStatus::NullPointer);
    }
    Ok(&(*d).inner)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), KhrankStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(KhrankStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn put_diagram(out: *mut *mut KhrankDiagram, d: LinkDiagram) -> Result<(), KhrankStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(KhrankStatus::NullPointer);
    }
    out.write(Box::into_raw(Box::new(KhrankDiagram { inner: d })));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), KhrankStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("output contains a NUL byte");
        KhrankStatus::Internal
    })?;
    put(out, c.into_raw())
}

fn opts(max_crossings: usize) -> KhOptions {
    if max_crossings == 0 {
        KhOptions::default()
    } else {
        KhOptions { max_crossings }
    }
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn khrank_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn khrank_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parses PD text such as `X(1,3,2,4);X(3,1,4,2)`.
///
/// # Safety
/// `pd` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_diagram_from_pd(pd: *const c_char, out: *mut *mut KhrankDiagram) -> KhrankStatus {
    guard(|| {
        let d: LinkDiagram = read_str(pd)?.parse().map_err(fail)?;
        put_diagram(out, d)
    })
}

/// Closure of a braid given as `l:w`.
///
/// # Safety
/// `braid` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_diagram_from_braid(
    braid: *const c_char,
    out: *mut *mut KhrankDiagram,
) -> KhrankStatus {
    guard(|| {
        let w: BraidWord = read_str(braid)?.parse().map_err(fail)?;
        put_diagram(out, braid_closure_diagram(&w))
    })
}

/// Braid closure together with its axis.
///
/// # Safety
/// `braid` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_diagram_axis_link(
    braid: *const c_char,
    out: *mut *mut KhrankDiagram,
) -> KhrankStatus {
    guard(|| {
        let w: BraidWord = read_str(braid)?.parse().map_err(fail)?;
        put_diagram(out, axis_link_diagram(&w))
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_diagram_mirror(d: *const KhrankDiagram, out: *mut *mut KhrankDiagram) -> KhrankStatus {
    guard(|| {
        let m = diagram(d)?.mirror();
        put_diagram(out, m)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `d` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn khrank_diagram_free(d: *mut KhrankDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_diagram_components(d: *const KhrankDiagram, out: *mut usize) -> KhrankStatus {
    guard(|| put(out, diagram(d)?.component_count()))
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_diagram_crossings(d: *const KhrankDiagram, out: *mut usize) -> KhrankStatus {
    guard(|| put(out, diagram(d)?.crossing_count()))
}

/// Total rank of unreduced Khovanov homology over Z/2. `max_crossings` 0
/// selects the default cap.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_kh_total(d: *const KhrankDiagram, max_crossings: usize, out: *mut u64) -> KhrankStatus {
    guard(|| {
        let t = kh_ranks(diagram(d)?, false, None, opts(max_crossings)).map_err(fail)?.total();
        put(out, t)
    })
}

/// Total rank of reduced Khovanov homology, basepoint on arc 1 (or the first
/// free loop).
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_kh_reduced_total(
    d: *const KhrankDiagram,
    max_crossings: usize,
    out: *mut u64,
) -> KhrankStatus {
    guard(|| {
        let d = diagram(d)?;
        let bp = Basepoint::default_for(d);
        let t = kh_ranks(d, true, bp, opts(max_crossings)).map_err(fail)?.total();
        put(out, t)
    })
}

/// Rank report as JSON; free with `khrank_string_free`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_rank_report_json(
    d: *const KhrankDiagram,
    max_crossings: usize,
    out: *mut *mut c_char,
) -> KhrankStatus {
    guard(|| {
        let r = rank_report(diagram(d)?, None, false, opts(max_crossings)).map_err(fail)?;
        put_string(out, serde_json::to_string(&r).expect("report serializes"))
    })
}

/// Classification report as JSON; free with `khrank_string_free`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_classify_json(
    d: *const KhrankDiagram,
    max_crossings: usize,
    out: *mut *mut c_char,
) -> KhrankStatus {
    guard(|| {
        let r = classify_by_rank(diagram(d)?, None, opts(max_crossings)).map_err(fail)?;
        put_string(out, serde_json::to_string(&r).expect("report serializes"))
    })
}

/// Canonical axis-link Alexander polynomial of a braid, e.g. `x^2+x*y+y^2`.
///
/// # Safety
/// `braid` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_axis_polynomial(braid: *const c_char, out: *mut *mut c_char) -> KhrankStatus {
    guard(|| {
        let w: BraidWord = read_str(braid)?.parse().map_err(fail)?;
        let p = morton_axis_polynomial(&w).map_err(fail)?;
        put_string(out, p.render(VarNames::XY))
    })
}

/// Alexander report of a braid's axis link as JSON.
///
/// # Safety
/// `braid` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn khrank_alex_json(braid: *const c_char, out: *mut *mut c_char) -> KhrankStatus {
    guard(|| {
        let w: BraidWord = read_str(braid)?.parse().map_err(fail)?;
        let r = lemma_bound_report(&w).map_err(fail)?;
        put_string(out, serde_json::to_string(&r).expect("report serializes"))
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn khrank_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
