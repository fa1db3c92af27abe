//! C ABI for `popgraph`.
//!
//! Graphs cross the boundary as opaque [`PpgGraph`] handles created by
//! [`ppg_parse`] or [`ppg_compose`] and released with [`ppg_free`]. Every
//! fallible function returns a [`PpgStatus`]; on failure the message is
//! available from [`ppg_last_error_message`] on the same thread. Strings
//! returned through out-parameters are owned by the caller and released
//! with [`ppg_string_free`]. No panic crosses the boundary: one is reported
//! as [`PpgStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use popgraph::{
    compose, count_planar_orders, emit_ppg, layout, layout_st, parse_ppg, render_svg,
    render_tikz, synthesize_pop, Error, PopGraph, PpgDocument,
};

/// Result of a call. The first four values match the `ppg` exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PpgStatus {
    /// Success.
    Ok = 0,
    /// The graph, order, or polarization failed validation.
    Invalid = 1,
    /// The input text is not a well-formed `.ppg` document.
    Parse = 2,
    /// Arity mismatch, enumeration bound exceeded, or missing data.
    Usage = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 5,
    /// An internal panic was caught; the library state is unaffected.
    Panic = 6,
}

/// Opaque handle to a parsed graph together with whatever order or
/// polarization data its document carried.
pub struct PpgGraph {
    doc: PpgDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PpgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match popgraph::cli::exit_code(&e) {
            1 => PpgStatus::Invalid,
            2 => PpgStatus::Parse,
            _ => PpgStatus::Usage,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `body`, records any failure for [`ppg_last_error_message`], and
/// converts panics into [`PpgStatus::Panic`].
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PpgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            PpgStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {what}"));
            PpgStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(PpgStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` must be null or a handle obtained from this library and not freed.
unsafe fn handle<'a>(p: *const PpgGraph, what: &str) -> Result<&'a PpgGraph, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn give_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(text)
        .map_err(|_| Failure(PpgStatus::Panic, "output contains a NUL byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// The handle's planar order, synthesizing it from the polarization and
/// anchor when the document had no order line.
fn ordered(g: &PpgGraph) -> Result<PopGraph, Failure> {
    if let Some(pop) = g.doc.pop() {
        return Ok(pop.clone());
    }
    match g.doc.pa() {
        Some(pa) => Ok(synthesize_pop(pa)?),
        None => Err(Failure(
            PpgStatus::Usage,
            "graph has neither an order nor polarization/anchor data".into(),
        )),
    }
}

/// Parses NUL-terminated `.ppg` text into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` must be null or
/// valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ppg_parse(text: *const c_char, out: *mut *mut PpgGraph) -> PpgStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(PpgStatus::InvalidUtf8, e.to_string()))?;
        let doc = parse_ppg(text)?;
        *out = Box::into_raw(Box::new(PpgGraph { doc }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `graph` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ppg_free(graph: *mut PpgGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ppg_edge_count(graph: *const PpgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.doc.graph().edge_count())
}

/// Number of inputs (edges leaving a source); 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ppg_input_count(graph: *const PpgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.doc.graph().inputs().len())
}

/// Number of outputs (edges entering a sink); 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ppg_output_count(graph: *const PpgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.doc.graph().outputs().len())
}

/// Number of internal vertices; 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ppg_internal_vertex_count(graph: *const PpgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.doc.graph().internal_vertices().len())
}

/// Whether the handle carries a planar order (parsed or computed).
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ppg_has_order(graph: *const PpgGraph) -> bool {
    graph.as_ref().is_some_and(|g| g.doc.pop().is_some())
}

/// Writes the planar order as space-separated edge ids to `*out`,
/// synthesizing it from the polarization and anchor if necessary. The
/// synthesized order is kept on the handle.
///
/// # Safety
/// `graph` must be null or a live handle; `out` must be null or valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn ppg_synthesize_order(graph: *mut PpgGraph, out: *mut *mut c_char) -> PpgStatus {
    guard(|| {
        let g = graph.as_mut().ok_or_else(|| null("graph"))?;
        let pop = ordered(g)?;
        let text = pop.order().to_string();
        if g.doc.pop().is_none() {
            g.doc = PpgDocument::from_pop(pop);
        }
        give_string(out, text)
    })
}

/// Composes `first` then `second` (outputs of `first` glued to inputs of
/// `second` in planar order) into a new handle stored in `*out`.
///
/// # Safety
/// Both handles must be null or live; `out` must be null or valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn ppg_compose(
    first: *const PpgGraph,
    second: *const PpgGraph,
    out: *mut *mut PpgGraph,
) -> PpgStatus {
    guard(|| {
        let a = ordered(handle(first, "first")?)?;
        let b = ordered(handle(second, "second")?)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let doc = PpgDocument::from_pop(compose(&a, &b)?);
        *out = Box::into_raw(Box::new(PpgGraph { doc }));
        Ok(())
    })
}

/// Counts the planar orders of the underlying graph into `*out`. Graphs
/// above the default enumeration bound fail with [`PpgStatus::Usage`].
///
/// # Safety
/// `graph` must be null or a live handle; `out` must be null or valid for a
/// write.
#[no_mangle]
pub unsafe extern "C" fn ppg_count_planar_orders(graph: *const PpgGraph, out: *mut u64) -> PpgStatus {
    guard(|| {
        let g = handle(graph, "graph")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = count_planar_orders(g.doc.graph())?;
        Ok(())
    })
}

/// Renders an upward drawing as SVG (`tikz` false) or TikZ (`tikz` true)
/// into `*out`. With `st` the boundary vertices are merged into a source
/// and a sink apex.
///
/// # Safety
/// `graph` must be null or a live handle; `out` must be null or valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn ppg_render(
    graph: *const PpgGraph,
    st: bool,
    tikz: bool,
    out: *mut *mut c_char,
) -> PpgStatus {
    guard(|| {
        let pop = ordered(handle(graph, "graph")?)?;
        let d = if st { layout_st(&pop) } else { layout(&pop) };
        give_string(out, if tikz { render_tikz(&d) } else { render_svg(&d) })
    })
}

/// Serializes the handle back to `.ppg` text into `*out`.
///
/// # Safety
/// `graph` must be null or a live handle; `out` must be null or valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn ppg_emit(graph: *const PpgGraph, out: *mut *mut c_char) -> PpgStatus {
    guard(|| give_string(out, emit_ppg(&handle(graph, "graph")?.doc)))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ppg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null if the last
/// call succeeded. Valid until the next library call on this thread; do
/// not free it.
#[no_mangle]
pub extern "C" fn ppg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
