//! C ABI for the hyperbridge library.
//!
//! Conventions:
//!
//! * Hypermatrices travel as opaque [`HbHypermatrix`] handles created by
//!   [`hb_hypermatrix_parse`] and released by [`hb_hypermatrix_free`].
//! * Every fallible call returns an [`HbStatus`] code; on `HB_STATUS_OK` the
//!   output pointer receives a NUL-terminated UTF-8 string allocated by this
//!   library, released with [`hb_string_free`]. Payload strings carry the
//!   same JSON documents the `hyperbridge` CLI prints.
//! * On failure the thread-local message from [`hb_last_error_message`]
//!   describes the error; the status code classifies it (domain vs usage),
//!   mirroring the CLI exit codes.
//!
//! All functions are panic-safe: a panic inside the library is caught and
//! reported as `HB_STATUS_INTERNAL_PANIC`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::c_char;

use hyperbridge::bridge::{
    assignment_matches_params, derive_cube_assignment, params_to_uv, uv_to_cubic, BridgeParams,
};
use hyperbridge::elliptic::WeierstrassCurve;
use hyperbridge::invariants::{cayley_det, quartic_from_hypermatrix, quartic_invariants};
use hyperbridge::json as wire;
use hyperbridge::rational::{format_rational, parse_rational};
use hyperbridge::trilinear::{search_solutions, TrilinearSystem};
use hyperbridge::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HbStatus {
    /// Success; output pointers are populated.
    Ok = 0,
    /// Mathematically well-formed input outside the operation's domain
    /// (singular curve, non-square value, degenerate parameters, ...).
    DomainError = 1,
    /// Malformed input: bad JSON, wrong shape, unparsable rational.
    UsageError = 2,
    /// A required pointer argument was NULL.
    NullPointer = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
    /// Internal panic; a bug, not a caller error.
    InternalPanic = 5,
}

/// Opaque parsed hypermatrix (either shape). Create with
/// [`hb_hypermatrix_parse`], destroy with [`hb_hypermatrix_free`].
pub struct HbHypermatrix {
    inner: wire::HypermatrixJson,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> HbStatus {
    set_error(&format!("{}: {err}", err.kind()));
    if err.is_usage() {
        HbStatus::UsageError
    } else {
        HbStatus::DomainError
    }
}

fn write_string(out: *mut *mut c_char, payload: String) -> HbStatus {
    let sanitized = payload.replace('\0', " ");
    match CString::new(sanitized) {
        Ok(cstring) => {
            unsafe { *out = cstring.into_raw() };
            HbStatus::Ok
        }
        Err(_) => {
            set_error("payload contained an interior NUL");
            HbStatus::InternalPanic
        }
    }
}

/// Run `body` with panic isolation, storing a message on panic.
fn guarded<F: FnOnce() -> HbStatus>(body: F) -> HbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            HbStatus::InternalPanic
        }
    }
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, HbStatus> {
    if ptr.is_null() {
        set_error("NULL string argument");
        return Err(HbStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        HbStatus::InvalidUtf8
    })
}

/// ABI version of this header/library pair.
#[no_mangle]
pub extern "C" fn hb_abi_version() -> u32 {
    1
}

/// Message describing the most recent failure on this thread. The pointer is
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn hb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Free a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned through an output parameter of
/// this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse hypermatrix JSON (`{"shape":[2,2,2]|[2,2,2,2],"entries":[...]}`,
/// entries as integers or `"p/q"` strings) into an opaque handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn hb_hypermatrix_parse(
    json: *const c_char,
    out: *mut *mut HbHypermatrix,
) -> HbStatus {
    guarded(|| {
        if out.is_null() {
            set_error("NULL output pointer");
            return HbStatus::NullPointer;
        }
        let text = match read_utf8(json) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match wire::hypermatrix_from_str(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(HbHypermatrix { inner }));
                HbStatus::Ok
            }
            Err(err) => status_of(&err),
        }
    })
}

/// Release a handle from [`hb_hypermatrix_parse`]. NULL is ignored.
///
/// # Safety
/// `h` must come from `hb_hypermatrix_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hb_hypermatrix_free(h: *mut HbHypermatrix) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn deref_handle<'a>(h: *const HbHypermatrix) -> Result<&'a HbHypermatrix, HbStatus> {
    if h.is_null() {
        set_error("NULL hypermatrix handle");
        return Err(HbStatus::NullPointer);
    }
    Ok(&*h)
}

/// Cayley's hyperdeterminant of a shape-[2,2,2] handle, as a rational string.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid to receive a string.
#[no_mangle]
pub unsafe extern "C" fn hb_cayley_det(
    h: *const HbHypermatrix,
    out: *mut *mut c_char,
) -> HbStatus {
    guarded(|| {
        if out.is_null() {
            set_error("NULL output pointer");
            return HbStatus::NullPointer;
        }
        let handle = match deref_handle(h) {
            Ok(handle) => handle,
            Err(status) => return status,
        };
        match &handle.inner {
            wire::HypermatrixJson::Cube(m) => {
                write_string(out, format_rational(&cayley_det(m)))
            }
            wire::HypermatrixJson::Tesseract(_) => {
                set_error("cayley_det requires shape [2,2,2]");
                HbStatus::UsageError
            }
        }
    })
}

/// Invariant report (quartic, S, T, delta, J-or-null) of a shape-[2,2,2,2]
/// handle, as a JSON string.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid to receive a string.
#[no_mangle]
pub unsafe extern "C" fn hb_invariants(
    h: *const HbHypermatrix,
    out: *mut *mut c_char,
) -> HbStatus {
    guarded(|| {
        if out.is_null() {
            set_error("NULL output pointer");
            return HbStatus::NullPointer;
        }
        let handle = match deref_handle(h) {
            Ok(handle) => handle,
            Err(status) => return status,
        };
        match &handle.inner {
            wire::HypermatrixJson::Tesseract(m) => {
                let quartic = quartic_from_hypermatrix(m);
                let inv = quartic_invariants(&quartic);
                write_string(out, wire::invariants_report_value(&quartic, &inv).to_string())
            }
            wire::HypermatrixJson::Cube(_) => {
                set_error("invariants require shape [2,2,2,2]");
                HbStatus::UsageError
            }
        }
    })
}

/// Bounded trilinear solution search on a shape-[2,2,2,2] handle with integer
/// entries; the search report JSON matches the CLI output.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid to receive a string.
#[no_mangle]
pub unsafe extern "C" fn hb_trilinear_search(
    h: *const HbHypermatrix,
    bound: u32,
    out: *mut *mut c_char,
) -> HbStatus {
    guarded(|| {
        if out.is_null() {
            set_error("NULL output pointer");
            return HbStatus::NullPointer;
        }
        let handle = match deref_handle(h) {
            Ok(handle) => handle,
            Err(status) => return status,
        };
        if bound < 1 {
            set_error("bound must be at least 1");
            return HbStatus::UsageError;
        }
        let wire::HypermatrixJson::Tesseract(m) = &handle.inner else {
            set_error("trilinear search requires shape [2,2,2,2]");
            return HbStatus::UsageError;
        };
        let sys = match TrilinearSystem::new(m.clone()) {
            Ok(sys) => sys,
            Err(err) => return status_of(&err),
        };
        let report = search_solutions(&sys, bound);
        write_string(out, wire::search_report_to_value(&report, &sys).to_string())
    })
}

/// Bridge of the (k,m,p,r,s,t) family: uv-form, cubic, and the cube-corner
/// verification flag, as JSON. Arguments are rational strings.
///
/// # Safety
/// All six parameter strings must be valid NUL-terminated strings; `out`
/// must be valid to receive a string.
#[no_mangle]
pub unsafe extern "C" fn hb_bridge(
    k: *const c_char,
    m: *const c_char,
    p: *const c_char,
    r: *const c_char,
    s: *const c_char,
    t: *const c_char,
    out: *mut *mut c_char,
) -> HbStatus {
    guarded(|| {
        if out.is_null() {
            set_error("NULL output pointer");
            return HbStatus::NullPointer;
        }
        let parse = |ptr: *const c_char| -> Result<hyperbridge::rational::Rational, HbStatus> {
            let text = read_utf8(ptr)?;
            parse_rational(text).map_err(|err| status_of(&err))
        };
        let params = (|| -> Result<BridgeParams, HbStatus> {
            let k = parse(k)?;
            let m = parse(m)?;
            let p = parse(p)?;
            let r = parse(r)?;
            let s = parse(s)?;
            let t = parse(t)?;
            BridgeParams::new(k, m, p, r, s, t).map_err(|err| status_of(&err))
        })();
        let bp = match params {
            Ok(bp) => bp,
            Err(status) => return status,
        };
        let uv = params_to_uv(&bp);
        let cubic = match uv_to_cubic(&uv) {
            Ok(cubic) => cubic,
            Err(err) => return status_of(&err),
        };
        let assignment = match derive_cube_assignment() {
            Ok(assignment) => assignment,
            Err(err) => return status_of(&err),
        };
        let payload = serde_payload(&bp, &uv, &cubic, assignment_matches_params(&assignment, &bp));
        write_string(out, payload)
    })
}

fn serde_payload(
    bp: &BridgeParams,
    uv: &hyperbridge::bridge::UVCurve,
    cubic: &hyperbridge::elliptic::CubicCurve,
    verified: bool,
) -> String {
    let mut obj = serde_json::Map::new();
    obj.insert("params".into(), wire::params_to_value(bp));
    obj.insert("uv".into(), wire::uv_to_value(uv));
    obj.insert("cubic".into(), wire::cubic_to_value(cubic));
    obj.insert("assignment_verified".into(), serde_json::Value::Bool(verified));
    serde_json::Value::Object(obj).to_string()
}

/// Add two points on y² = x³ + αx + β. `alpha` and `beta` are rational
/// strings; points are `"O"` or `{"x":"..","y":".."}` JSON; the sum is
/// written in the same point format.
///
/// # Safety
/// All strings must be valid NUL-terminated strings; `out` must be valid to
/// receive a string.
#[no_mangle]
pub unsafe extern "C" fn hb_curve_add(
    alpha: *const c_char,
    beta: *const c_char,
    p_json: *const c_char,
    q_json: *const c_char,
    out: *mut *mut c_char,
) -> HbStatus {
    guarded(|| {
        if out.is_null() {
            set_error("NULL output pointer");
            return HbStatus::NullPointer;
        }
        let inner = || -> Result<String, HbStatus> {
            let alpha = parse_rational(read_utf8(alpha)?).map_err(|e| status_of(&e))?;
            let beta = parse_rational(read_utf8(beta)?).map_err(|e| status_of(&e))?;
            let curve = WeierstrassCurve::new(alpha, beta).map_err(|e| status_of(&e))?;
            let p = wire::point_from_str(read_utf8(p_json)?).map_err(|e| status_of(&e))?;
            let q = wire::point_from_str(read_utf8(q_json)?).map_err(|e| status_of(&e))?;
            for point in [&p, &q] {
                if !curve.contains(point) {
                    return Err(status_of(&Error::PointNotOnCurve));
                }
            }
            Ok(wire::point_to_value(&curve.add(&p, &q)).to_string())
        };
        match inner() {
            Ok(payload) => write_string(out, payload),
            Err(status) => status,
        }
    })
}
