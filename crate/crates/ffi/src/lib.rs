//! C ABI over `gaincover`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`GcStatus`]; on failure [`gc_last_error_message`] describes the error
//! for the calling thread. Strings returned by the library are released
//! with [`gc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gaincover::regularity::{drackn_of_graph, is_antipodal, is_distance_regular, is_walk_regular, srg_parameters};
use gaincover::report::analyze;
use gaincover::{char_poly, classify_two_ev, Error, GainGraph, Graph};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Numeric = 5,
    Falsified = 6,
    Internal = 7,
}

/// A gain graph.
pub struct GcGainGraph(GainGraph);

/// A plain graph: parsed from an edge list or produced by a lift.
pub struct GcGraph(Graph);

/// Outcome of the two-eigenvalue classification.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GcTwoEv {
    pub is_two_ev: bool,
    pub cover_connected: bool,
    pub distinct_new: usize,
    /// When `is_two_ev`: the new eigenvalues and their multiplicities.
    pub theta: f64,
    pub tau: f64,
    pub mult_theta: usize,
    pub mult_tau: usize,
    /// `theta + tau`.
    pub lambda: i64,
    /// `-theta * tau`.
    pub mu: i64,
}

/// Regularity verdicts; `*_present` flags guard the parameter fields.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GcRegularity {
    pub walk_regular: bool,
    pub distance_regular: bool,
    pub diameter: usize,
    pub antipodal: bool,
    pub srg_present: bool,
    pub srg_n: usize,
    pub srg_k: usize,
    pub srg_a: usize,
    pub srg_c: usize,
    pub drackn_present: bool,
    pub drackn_n: usize,
    pub drackn_r: usize,
    pub drackn_t: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GcStatus {
    match e {
        Error::Parse { .. } => GcStatus::Parse,
        Error::NotHermitian(_) | Error::NoConvergence(_) => GcStatus::Numeric,
        Error::Falsified { .. } => GcStatus::Falsified,
        Error::Consistency(_) | Error::Io(_) => GcStatus::Internal,
        _ => GcStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (GcStatus, String)>) -> GcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            GcStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            GcStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (GcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (GcStatus, String) {
    (GcStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, (GcStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (GcStatus::InvalidUtf8, "input is not valid UTF-8".into()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, (GcStatus, String)> {
    p.as_ref().ok_or_else(null)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul removed").into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn gc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn gc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses gain-file text.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_gain_graph_parse(text: *const c_char, out: *mut *mut GcGainGraph) -> GcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let f = GainGraph::parse_gain_file(read_str(text)?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(GcGainGraph(f)));
        Ok(())
    })
}

/// # Safety
/// `f` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn gc_gain_graph_free(f: *mut GcGainGraph) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Canonical gain-file text.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_gain_graph_to_text(f: *const GcGainGraph, out: *mut *mut c_char) -> GcStatus {
    guard(|| {
        let f = deref(f)?;
        if out.is_null() {
            return Err(null());
        }
        *out = into_c_string(f.0.to_gain_file());
        Ok(())
    })
}

/// The covering graph.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_gain_graph_lift(f: *const GcGainGraph, out: *mut *mut GcGraph) -> GcStatus {
    guard(|| {
        let f = deref(f)?;
        if out.is_null() {
            return Err(null());
        }
        *out = Box::into_raw(Box::new(GcGraph(f.0.lift().graph().clone())));
        Ok(())
    })
}

/// Exact two-eigenvalue classification.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_gain_graph_classify(f: *const GcGainGraph, out: *mut GcTwoEv) -> GcStatus {
    guard(|| {
        let f = deref(f)?;
        if out.is_null() {
            return Err(null());
        }
        let cert = classify_two_ev(&f.0).map_err(lib_err)?;
        let mut r = GcTwoEv {
            is_two_ev: cert.is_two_ev,
            cover_connected: cert.cover_connected,
            distinct_new: cert.distinct_new,
            ..Default::default()
        };
        if let Some(e) = &cert.new_eigenvalues {
            r.theta = e.theta;
            r.tau = e.tau;
            r.mult_theta = e.mult_theta;
            r.mult_tau = e.mult_tau;
            r.lambda = e.lambda;
            r.mu = e.mu;
        }
        *out = r;
        Ok(())
    })
}

/// Full JSON report with clustering tolerance `tol`.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_gain_graph_report_json(
    f: *const GcGainGraph,
    tol: f64,
    out: *mut *mut c_char,
) -> GcStatus {
    guard(|| {
        let f = deref(f)?;
        if out.is_null() {
            return Err(null());
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err((GcStatus::InvalidArgument, "tolerance must be positive".into()));
        }
        *out = into_c_string(analyze(&f.0, "ffi", tol, false).map_err(lib_err)?.to_json());
        Ok(())
    })
}

/// Parses edge-list text.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_parse(text: *const c_char, out: *mut *mut GcGraph) -> GcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let g = Graph::parse_edge_list(read_str(text)?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(GcGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_free(g: *mut GcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_vertex_count(g: *const GcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_edge_count(g: *const GcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Edge-list text.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_to_text(g: *const GcGraph, out: *mut *mut c_char) -> GcStatus {
    guard(|| {
        let g = deref(g)?;
        if out.is_null() {
            return Err(null());
        }
        *out = into_c_string(g.0.to_edge_list());
        Ok(())
    })
}

/// Exact characteristic polynomial as comma-separated ascending integer
/// coefficients.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_char_poly(g: *const GcGraph, out: *mut *mut c_char) -> GcStatus {
    guard(|| {
        let g = deref(g)?;
        if out.is_null() {
            return Err(null());
        }
        let p = char_poly(&g.0);
        let text: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
        *out = into_c_string(text.join(","));
        Ok(())
    })
}

/// Walk, distance, strong and antipodal regularity plus drackn
/// parameters.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_certify(g: *const GcGraph, out: *mut GcRegularity) -> GcStatus {
    guard(|| {
        let g = &deref(g)?.0;
        if out.is_null() {
            return Err(null());
        }
        let mut r = GcRegularity {
            walk_regular: is_walk_regular(g),
            ..Default::default()
        };
        if g.is_connected() {
            if let Some(arr) = is_distance_regular(g).map_err(lib_err)? {
                r.distance_regular = true;
                r.diameter = arr.diameter();
            }
            r.antipodal = is_antipodal(g).map_err(lib_err)?.is_some();
            if let Some(p) = srg_parameters(g).map_err(lib_err)? {
                (r.srg_present, r.srg_n, r.srg_k, r.srg_a, r.srg_c) = (true, p.n, p.k, p.a, p.c);
            }
            if let Some(d) = drackn_of_graph(g).map_err(lib_err)? {
                (r.drackn_present, r.drackn_n, r.drackn_r, r.drackn_t) = (true, d.n, d.r, d.t);
            }
        }
        *out = r;
        Ok(())
    })
}
