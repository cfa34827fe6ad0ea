//! C interface to `affine-cluster`.
//!
//! Objects cross the boundary as opaque handles (`AcSequence`, `AcLaurent`,
//! `AcGraph`) owned by the caller and released with the matching `*_free`
//! function. Every fallible call returns an [`AcStatus`]; on failure a
//! description is available from [`ac_last_error`] until the next failing
//! call on the same thread. Strings returned through `char **` out-parameters
//! are heap allocated and must be released with [`ac_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use affine_cluster::graph::{build_g14, build_g22, build_h, build_tilde_g14, ExportFormat, WeightedGraph};
use affine_cluster::matching::{match_count, match_polynomial};
use affine_cluster::verify::Workbench;
use affine_cluster::{CanonicalForm, CaseParams, Error, Laurent, SequenceCache};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    IndexOutOfFamily = 3,
    UnsupportedCase = 4,
    ParseError = 5,
    NotDivisible = 6,
    LimitExceeded = 7,
    VerificationFailed = 8,
    Internal = 9,
    Panic = 10,
}

/// Graph export format.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcFormat {
    Json = 0,
    Dot = 1,
}

/// Graph family selector for [`ac_graph_build`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcFamily {
    /// The graph `G_n` of the `(b,c)` case.
    Standard = 0,
    /// The `(1,4)` tilde graph with index `n`.
    Tilde = 1,
    /// The 2-by-`n` grid.
    Grid = 2,
}

/// Memoized sequence `x_n` for one `(b,c)` case.
pub struct AcSequence(SequenceCache);

/// Laurent polynomial in `x1`, `x2` with integer coefficients.
pub struct AcLaurent(Laurent);

/// Weighted graph.
pub struct AcGraph(WeightedGraph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(AcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidParams(_) | Error::UnknownFormat(_) | Error::UnknownIdentity(_) => AcStatus::InvalidArgument,
            Error::IndexOutOfFamily { .. } => AcStatus::IndexOutOfFamily,
            Error::UnsupportedCase { .. } => AcStatus::UnsupportedCase,
            Error::Parse(_) => AcStatus::ParseError,
            Error::NotDivisible | Error::DivisionByZero => AcStatus::NotDivisible,
            Error::LimitExceeded { .. } | Error::TooManyVertices { .. } | Error::GroundSetTooLarge(_) => {
                AcStatus::LimitExceeded
            }
            _ => AcStatus::Internal,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(AcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AcStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            AcStatus::Panic
        }
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail(AcStatus::Internal, e.to_string()))?;
    write_out(out, c.into_raw())
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn borrow_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(AcStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ac_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn ac_status_message(status: AcStatus) -> *const c_char {
    let s: &'static CStr = match status {
        AcStatus::Ok => c"ok",
        AcStatus::NullPointer => c"null pointer argument",
        AcStatus::InvalidArgument => c"invalid argument",
        AcStatus::IndexOutOfFamily => c"index outside the graph family",
        AcStatus::UnsupportedCase => c"unsupported (b,c) case",
        AcStatus::ParseError => c"parse error",
        AcStatus::NotDivisible => c"exact division failed",
        AcStatus::LimitExceeded => c"size limit exceeded",
        AcStatus::VerificationFailed => c"verification failed",
        AcStatus::Internal => c"internal error",
        AcStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ac_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the sequence for the case `(b,c)`; both must be positive.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ac_sequence_new(b: u32, c: u32, out: *mut *mut AcSequence) -> AcStatus {
    guard(|| {
        let params = CaseParams::new(b, c)?;
        write_out(out, Box::into_raw(Box::new(AcSequence(SequenceCache::new(params)))))
    })
}

/// # Safety
/// `seq` must be null or a handle from [`ac_sequence_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ac_sequence_free(seq: *mut AcSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Writes a new handle holding `x_n`.
///
/// # Safety
/// `seq` must be a live sequence handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_sequence_x(seq: *mut AcSequence, n: i64, out: *mut *mut AcLaurent) -> AcStatus {
    guard(|| {
        let seq = borrow_mut(seq, "sequence")?;
        let x = seq.0.x_at(n)?.clone();
        write_out(out, Box::into_raw(Box::new(AcLaurent(x))))
    })
}

/// Writes `x_n(1,1)` as a decimal string.
///
/// # Safety
/// `seq` must be a live sequence handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_sequence_eval_at_ones(seq: *mut AcSequence, n: i64, out: *mut *mut c_char) -> AcStatus {
    guard(|| {
        let seq = borrow_mut(seq, "sequence")?;
        let v = seq.0.eval_at_ones(n)?;
        write_string(out, v.to_string())
    })
}

/// Parses text such as `x1^-1*x2 + 3`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_laurent_parse(text: *const c_char, out: *mut *mut AcLaurent) -> AcStatus {
    guard(|| {
        let p: Laurent = read_str(text, "text")?.parse()?;
        write_out(out, Box::into_raw(Box::new(AcLaurent(p))))
    })
}

/// # Safety
/// `p` must be null or a Laurent handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ac_laurent_free(p: *mut AcLaurent) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes the text form: flat terms when `expanded` is true, otherwise a
/// numerator over a monomial denominator.
///
/// # Safety
/// `p` must be a live Laurent handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_laurent_to_string(p: *const AcLaurent, expanded: bool, out: *mut *mut c_char) -> AcStatus {
    guard(|| {
        let p = &borrow(p, "polynomial")?.0;
        let s = if expanded {
            p.to_string()
        } else {
            CanonicalForm::from_laurent(p).to_string()
        };
        write_string(out, s)
    })
}

/// Writes the JSON form, an array of `[e1, e2, "coefficient"]` triples.
///
/// # Safety
/// `p` must be a live Laurent handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_laurent_to_json(p: *const AcLaurent, out: *mut *mut c_char) -> AcStatus {
    guard(|| {
        let p = &borrow(p, "polynomial")?.0;
        let s = serde_json::to_string(p).map_err(|e| Fail(AcStatus::Internal, e.to_string()))?;
        write_string(out, s)
    })
}

/// Writes the value at `x1 = x2 = 1` as a decimal string.
///
/// # Safety
/// `p` must be a live Laurent handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_laurent_eval_at_ones(p: *const AcLaurent, out: *mut *mut c_char) -> AcStatus {
    guard(|| write_string(out, borrow(p, "polynomial")?.0.eval_at_ones().to_string()))
}

/// Writes `a * b` as a new handle.
///
/// # Safety
/// `a` and `b` must be live Laurent handles and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_laurent_mul(
    a: *const AcLaurent,
    b: *const AcLaurent,
    out: *mut *mut AcLaurent,
) -> AcStatus {
    guard(|| {
        let prod = &borrow(a, "a")?.0 * &borrow(b, "b")?.0;
        write_out(out, Box::into_raw(Box::new(AcLaurent(prod))))
    })
}

/// Writes `a / b` as a new handle; fails with `NotDivisible` unless the
/// quotient is a Laurent polynomial.
///
/// # Safety
/// `a` and `b` must be live Laurent handles and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_laurent_div_exact(
    a: *const AcLaurent,
    b: *const AcLaurent,
    out: *mut *mut AcLaurent,
) -> AcStatus {
    guard(|| {
        let q = borrow(a, "a")?.0.div_exact(&borrow(b, "b")?.0)?;
        write_out(out, Box::into_raw(Box::new(AcLaurent(q))))
    })
}

/// True when both handles hold the same polynomial. Null handles compare
/// unequal.
///
/// # Safety
/// `a` and `b` must each be null or a live Laurent handle.
#[no_mangle]
pub unsafe extern "C" fn ac_laurent_equal(a: *const AcLaurent, b: *const AcLaurent) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Builds a family graph. For [`AcFamily::Standard`] the case must be
/// `(2,2)` or `(1,4)`; [`AcFamily::Tilde`] requires `(1,4)`; the grid
/// ignores `b` and `c` and needs `n >= 1`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_graph_build(b: u32, c: u32, family: AcFamily, n: i64, out: *mut *mut AcGraph) -> AcStatus {
    guard(|| {
        let g = match (family, b, c) {
            (AcFamily::Grid, _, _) => {
                let m = u32::try_from(n).map_err(|_| Fail(AcStatus::InvalidArgument, format!("grid length {n}")))?;
                build_h(m)?
            }
            (AcFamily::Standard, 2, 2) => build_g22(n)?,
            (AcFamily::Standard, 1, 4) => build_g14(n)?,
            (AcFamily::Tilde, 1, 4) => build_tilde_g14(n)?,
            _ => return Err(Error::UnsupportedCase { b, c }.into()),
        };
        write_out(out, Box::into_raw(Box::new(AcGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a graph handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ac_graph_free(g: *mut AcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ac_graph_vertex_count(g: *const AcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count)
}

/// Edge count including arcs, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ac_graph_edge_count(g: *const AcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live graph handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_graph_export(g: *const AcGraph, format: AcFormat, out: *mut *mut c_char) -> AcStatus {
    guard(|| {
        let format = match format {
            AcFormat::Json => ExportFormat::Json,
            AcFormat::Dot => ExportFormat::Dot,
        };
        write_string(out, borrow(g, "graph")?.0.export(format))
    })
}

/// Writes the perfect-matching polynomial as a new handle.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_graph_match_polynomial(g: *const AcGraph, out: *mut *mut AcLaurent) -> AcStatus {
    guard(|| {
        let p = match_polynomial(&borrow(g, "graph")?.0)?;
        write_out(out, Box::into_raw(Box::new(AcLaurent(p))))
    })
}

/// Writes the number of perfect matchings as a decimal string.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_graph_match_count(g: *const AcGraph, out: *mut *mut c_char) -> AcStatus {
    guard(|| write_string(out, match_count(&borrow(g, "graph")?.0)?.to_string()))
}

/// Runs the full identity suite up to `max_index` (at least 5) and writes
/// the reports as a JSON array. Returns `VerificationFailed` when any
/// identity fails; the report is written in that case too.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_verify_suite(max_index: i64, out: *mut *mut c_char) -> AcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        if max_index < 5 {
            return Err(Fail(
                AcStatus::InvalidArgument,
                format!("max index must be at least 5, got {max_index}"),
            ));
        }
        let reports = Workbench::new().run_full_suite(max_index)?;
        let json = serde_json::to_string(&reports).map_err(|e| Fail(AcStatus::Internal, e.to_string()))?;
        write_string(out, json)?;
        match reports.iter().find(|r| !r.passed) {
            Some(r) => Err(Fail(AcStatus::VerificationFailed, r.summary_line())),
            None => Ok(()),
        }
    })
}
