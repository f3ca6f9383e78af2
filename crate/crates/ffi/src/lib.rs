//! C ABI for the thintree library: opaque handles, integer status codes,
//! and a thread-local last-error message. The generated header lives in
//! `include/thintree.h`.
//!
//! Ownership rules are the usual ones: every `*_parse` / `tt_reduce` out
//! pointer is owned by the caller and released with the matching `*_free`;
//! strings returned as `char*` are released with `tt_string_free`.
//! Rationals cross the boundary as (numerator, denominator) pairs of
//! signed 64-bit integers, which covers every value these instances can
//! produce; a value that will not fit reports `TT_STATUS_OVERFLOW` instead
//! of truncating.

use libc::c_char;
use num_traits::ToPrimitive;
use std::cell::RefCell;
use std::ffi::{CStr, CString};

use thintree::graph::{Cut, Multigraph, SignedWeights};
use thintree::oracle::{
    max_avg_cut_decision_bf, max_avg_cut_opt_bf, max_cut_bf, thin_tree_verify_bf, SpanningTree,
    ThinnessVerdict,
};
use thintree::rational::Rational;
use thintree::reduce::{reduce_mac_to_ttvc, ttvc_clique_respecting_oracle, GadgetInstance};
use thintree::{io, Error};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    InvalidCut = 4,
    InvalidInstance = 5,
    GuardExceeded = 6,
    Construction = 7,
    Protocol = 8,
    InvariantViolation = 9,
    NotCliqueRespecting = 10,
    ParseError = 11,
    IoError = 12,
    Overflow = 13,
    BufferTooSmall = 14,
}

/// A parsed graph together with its (possibly defaulted) edge weights.
pub struct TtGraph {
    graph: Multigraph,
    weights: SignedWeights,
}

/// A validated spanning tree of some [`TtGraph`].
pub struct TtTree {
    tree: SpanningTree,
}

/// Outcome of a thinness verification.
pub struct TtVerdict {
    verdict: ThinnessVerdict,
}

/// A gadget instance (G', T, alpha) produced by `tt_reduce`.
pub struct TtGadget {
    instance: GadgetInstance,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).ok();
    });
}

fn fail(status: TtStatus, message: impl Into<String>) -> TtStatus {
    set_error(message.into());
    status
}

fn status_of(err: &Error) -> TtStatus {
    match err {
        Error::InvalidCut(_) => TtStatus::InvalidCut,
        Error::InvalidArgument(_) => TtStatus::InvalidArgument,
        Error::InvalidInstance(_) => TtStatus::InvalidInstance,
        Error::GuardExceeded { .. } => TtStatus::GuardExceeded,
        Error::Construction(_) => TtStatus::Construction,
        Error::Protocol(_) => TtStatus::Protocol,
        Error::InvariantViolation(_) => TtStatus::InvariantViolation,
        Error::NotCliqueRespecting(_) => TtStatus::NotCliqueRespecting,
        Error::Parse { .. } => TtStatus::ParseError,
        Error::Io(_) => TtStatus::IoError,
    }
}

fn fail_with(err: Error) -> TtStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

unsafe fn read_utf8<'a>(text: *const c_char) -> Result<&'a str, TtStatus> {
    if text.is_null() {
        return Err(fail(TtStatus::NullPointer, "text pointer is null"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(TtStatus::InvalidUtf8, "text is not valid UTF-8"))
}

fn ratio_from(num: i64, den: i64) -> Result<Rational, TtStatus> {
    if den == 0 {
        return Err(fail(TtStatus::InvalidArgument, "denominator is zero"));
    }
    Ok(Rational::new(num.into(), den.into()))
}

fn ratio_out(value: &Rational, num: *mut i64, den: *mut i64) -> TtStatus {
    let (Some(n), Some(d)) = (value.numer().to_i64(), value.denom().to_i64()) else {
        return fail(TtStatus::Overflow, "rational does not fit in 64-bit integers");
    };
    unsafe {
        if !num.is_null() {
            *num = n;
        }
        if !den.is_null() {
            *den = d;
        }
    }
    TtStatus::Ok
}

fn string_out(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Returns a copy of the calling thread's last error message, or NULL if
/// none has been recorded. Free with `tt_string_free`.
#[no_mangle]
pub extern "C" fn tt_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null_mut(), |s| s.clone().into_raw())
    })
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by a `tt_` function that
/// documents `tt_string_free` as its deallocator, or NULL.
#[no_mangle]
pub unsafe extern "C" fn tt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph file (`p` / `e` lines; optional weight column defaults
/// to +1) into a new graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer. On success `*out` owns the graph and must be released with
/// `tt_graph_free`.
#[no_mangle]
pub unsafe extern "C" fn tt_graph_parse(text: *const c_char, out: *mut *mut TtGraph) -> TtStatus {
    if out.is_null() {
        return fail(TtStatus::NullPointer, "out pointer is null");
    }
    *out = std::ptr::null_mut();
    let text = match read_utf8(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match io::parse_graph(text) {
        Ok(file) => {
            *out = Box::into_raw(Box::new(TtGraph {
                graph: file.graph,
                weights: file.weights,
            }));
            TtStatus::Ok
        }
        Err(err) => fail_with(err),
    }
}

/// # Safety
/// `graph` must be NULL or a pointer from `tt_graph_parse` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tt_graph_free(graph: *mut TtGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a valid graph handle (NULL returns 0).
#[no_mangle]
pub unsafe extern "C" fn tt_graph_vertex_count(graph: *const TtGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// # Safety
/// `graph` must be a valid graph handle (NULL returns 0).
#[no_mangle]
pub unsafe extern "C" fn tt_graph_edge_count(graph: *const TtGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// Parses a tree file (`t` / `i` lines) and validates it as a spanning
/// tree of `graph`.
///
/// # Safety
/// `graph` must be a valid graph handle, `text` a valid NUL-terminated
/// string, `out` a valid pointer. On success `*out` must be released with
/// `tt_tree_free`.
#[no_mangle]
pub unsafe extern "C" fn tt_tree_parse(
    graph: *const TtGraph,
    text: *const c_char,
    out: *mut *mut TtTree,
) -> TtStatus {
    if out.is_null() {
        return fail(TtStatus::NullPointer, "out pointer is null");
    }
    *out = std::ptr::null_mut();
    let Some(graph) = graph.as_ref() else {
        return fail(TtStatus::NullPointer, "graph pointer is null");
    };
    let text = match read_utf8(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let ids = match io::parse_tree(text) {
        Ok(ids) => ids,
        Err(err) => return fail_with(err),
    };
    match SpanningTree::new(&graph.graph, ids) {
        Ok(tree) => {
            *out = Box::into_raw(Box::new(TtTree { tree }));
            TtStatus::Ok
        }
        Err(err) => fail_with(err),
    }
}

/// # Safety
/// `tree` must be NULL or a pointer from `tt_tree_parse` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tt_tree_free(tree: *mut TtTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

/// # Safety
/// `tree` must be a valid tree handle (NULL returns 0).
#[no_mangle]
pub unsafe extern "C" fn tt_tree_edge_count(tree: *const TtTree) -> usize {
    tree.as_ref().map_or(0, |t| t.tree.len())
}

/// Brute-force thinness verification at threshold `alpha_num/alpha_den`.
/// Refuses graphs with more than `vertex_limit` vertices (pass 26 for the
/// default guard).
///
/// # Safety
/// `graph` and `tree` must be valid handles for the same graph; `out`
/// must be valid. On success `*out` must be released with
/// `tt_verdict_free`.
#[no_mangle]
pub unsafe extern "C" fn tt_verify_thin(
    graph: *const TtGraph,
    tree: *const TtTree,
    alpha_num: i64,
    alpha_den: i64,
    vertex_limit: usize,
    out: *mut *mut TtVerdict,
) -> TtStatus {
    if out.is_null() {
        return fail(TtStatus::NullPointer, "out pointer is null");
    }
    *out = std::ptr::null_mut();
    let (Some(graph), Some(tree)) = (graph.as_ref(), tree.as_ref()) else {
        return fail(TtStatus::NullPointer, "graph or tree pointer is null");
    };
    let alpha = match ratio_from(alpha_num, alpha_den) {
        Ok(a) => a,
        Err(status) => return status,
    };
    match thin_tree_verify_bf(&graph.graph, &tree.tree, &alpha, vertex_limit) {
        Ok(verdict) => {
            *out = Box::into_raw(Box::new(TtVerdict { verdict }));
            TtStatus::Ok
        }
        Err(err) => fail_with(err),
    }
}

/// # Safety
/// `verdict` must be NULL or a pointer from `tt_verify_thin` not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn tt_verdict_free(verdict: *mut TtVerdict) {
    if !verdict.is_null() {
        drop(Box::from_raw(verdict));
    }
}

/// # Safety
/// `verdict` must be a valid verdict handle (NULL returns false).
#[no_mangle]
pub unsafe extern "C" fn tt_verdict_is_thin(verdict: *const TtVerdict) -> bool {
    verdict.as_ref().is_some_and(|v| v.verdict.is_thin)
}

/// Writes the maximum thickness over all cuts as an exact fraction.
///
/// # Safety
/// `verdict` must be a valid verdict handle; `num` and `den` may each be
/// NULL to skip that component.
#[no_mangle]
pub unsafe extern "C" fn tt_verdict_worst_thickness(
    verdict: *const TtVerdict,
    num: *mut i64,
    den: *mut i64,
) -> TtStatus {
    let Some(verdict) = verdict.as_ref() else {
        return fail(TtStatus::NullPointer, "verdict pointer is null");
    };
    ratio_out(&verdict.verdict.worst_thickness, num, den)
}

/// Number of vertices on side A of the violating cut; 0 when the tree is
/// thin (no certificate).
///
/// # Safety
/// `verdict` must be a valid verdict handle (NULL returns 0).
#[no_mangle]
pub unsafe extern "C" fn tt_verdict_certificate_len(verdict: *const TtVerdict) -> usize {
    verdict
        .as_ref()
        .and_then(|v| v.verdict.worst_cut.as_ref())
        .map_or(0, Cut::side_len)
}

/// Copies the violating cut's side-A vertices (ascending) into `buffer`.
/// `*written` receives the number of vertices; fails with
/// `TT_STATUS_BUFFER_TOO_SMALL` when `capacity` is insufficient.
///
/// # Safety
/// `verdict` must be a valid verdict handle; `buffer` must point to at
/// least `capacity` writable `size_t`s; `written` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn tt_verdict_certificate(
    verdict: *const TtVerdict,
    buffer: *mut usize,
    capacity: usize,
    written: *mut usize,
) -> TtStatus {
    let Some(verdict) = verdict.as_ref() else {
        return fail(TtStatus::NullPointer, "verdict pointer is null");
    };
    let Some(cut) = verdict.verdict.worst_cut.as_ref() else {
        if !written.is_null() {
            *written = 0;
        }
        return TtStatus::Ok;
    };
    let len = cut.side_len();
    if !written.is_null() {
        *written = len;
    }
    if capacity < len {
        return fail(
            TtStatus::BufferTooSmall,
            format!("certificate has {len} vertices, buffer holds {capacity}"),
        );
    }
    if buffer.is_null() {
        return fail(TtStatus::NullPointer, "buffer pointer is null");
    }
    for (i, v) in cut.vertices().enumerate() {
        *buffer.add(i) = v;
    }
    TtStatus::Ok
}

/// Exact maximum cut size by enumeration (default 26-vertex guard).
///
/// # Safety
/// `graph` must be a valid graph handle; `value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tt_max_cut(graph: *const TtGraph, value: *mut usize) -> TtStatus {
    let Some(graph) = graph.as_ref() else {
        return fail(TtStatus::NullPointer, "graph pointer is null");
    };
    if value.is_null() {
        return fail(TtStatus::NullPointer, "value pointer is null");
    }
    match max_cut_bf(&graph.graph) {
        Ok((size, _)) => {
            *value = size;
            TtStatus::Ok
        }
        Err(err) => fail_with(err),
    }
}

/// Exact maximum average cut weight under the graph's stored weights.
///
/// # Safety
/// `graph` must be a valid graph handle; `num`/`den` as in
/// `tt_verdict_worst_thickness`.
#[no_mangle]
pub unsafe extern "C" fn tt_max_avg_cut(
    graph: *const TtGraph,
    num: *mut i64,
    den: *mut i64,
) -> TtStatus {
    let Some(graph) = graph.as_ref() else {
        return fail(TtStatus::NullPointer, "graph pointer is null");
    };
    match max_avg_cut_opt_bf(&graph.graph, &graph.weights) {
        Ok((value, _)) => ratio_out(&value, num, den),
        Err(err) => fail_with(err),
    }
}

/// Exact MaxAvgCut decision at threshold `k_num/k_den`.
///
/// # Safety
/// `graph` must be a valid graph handle; `answer` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tt_max_avg_cut_decision(
    graph: *const TtGraph,
    k_num: i64,
    k_den: i64,
    answer: *mut bool,
) -> TtStatus {
    let Some(graph) = graph.as_ref() else {
        return fail(TtStatus::NullPointer, "graph pointer is null");
    };
    if answer.is_null() {
        return fail(TtStatus::NullPointer, "answer pointer is null");
    }
    let k = match ratio_from(k_num, k_den) {
        Ok(k) => k,
        Err(status) => return status,
    };
    match max_avg_cut_decision_bf(&graph.graph, &graph.weights, &k) {
        Ok(yes) => {
            *answer = yes;
            TtStatus::Ok
        }
        Err(err) => fail_with(err),
    }
}

/// Builds the gadget instance (G', T, alpha) for the MaxAvgCut triple
/// (graph, its stored weights, k). Pass multiplier 24 for the sound
/// construction.
///
/// # Safety
/// `graph` must be a valid graph handle; `out` must be valid. On success
/// `*out` must be released with `tt_gadget_free`.
#[no_mangle]
pub unsafe extern "C" fn tt_reduce(
    graph: *const TtGraph,
    k_num: i64,
    k_den: i64,
    multiplier: usize,
    out: *mut *mut TtGadget,
) -> TtStatus {
    if out.is_null() {
        return fail(TtStatus::NullPointer, "out pointer is null");
    }
    *out = std::ptr::null_mut();
    let Some(graph) = graph.as_ref() else {
        return fail(TtStatus::NullPointer, "graph pointer is null");
    };
    let k = match ratio_from(k_num, k_den) {
        Ok(k) => k,
        Err(status) => return status,
    };
    match reduce_mac_to_ttvc(&graph.graph, &graph.weights, &k, multiplier) {
        Ok(instance) => {
            *out = Box::into_raw(Box::new(TtGadget { instance }));
            TtStatus::Ok
        }
        Err(err) => fail_with(err),
    }
}

/// # Safety
/// `gadget` must be NULL or a pointer from `tt_reduce` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_free(gadget: *mut TtGadget) {
    if !gadget.is_null() {
        drop(Box::from_raw(gadget));
    }
}

/// # Safety
/// `gadget` must be a valid gadget handle (NULL returns 0).
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_vertex_count(gadget: *const TtGadget) -> usize {
    gadget.as_ref().map_or(0, |g| g.instance.g_prime().vertex_count())
}

/// # Safety
/// `gadget` must be a valid gadget handle (NULL returns 0).
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_edge_count(gadget: *const TtGadget) -> usize {
    gadget.as_ref().map_or(0, |g| g.instance.g_prime().edge_count())
}

/// The exact alpha threshold of the instance.
///
/// # Safety
/// `gadget` must be a valid gadget handle; `num`/`den` as in
/// `tt_verdict_worst_thickness`.
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_alpha(
    gadget: *const TtGadget,
    num: *mut i64,
    den: *mut i64,
) -> TtStatus {
    let Some(gadget) = gadget.as_ref() else {
        return fail(TtStatus::NullPointer, "gadget pointer is null");
    };
    ratio_out(gadget.instance.alpha(), num, den)
}

/// Whether the clique-splitting bound is established for this instance's
/// multiplier (true iff multiplier >= 24).
///
/// # Safety
/// `gadget` must be a valid gadget handle (NULL returns false).
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_is_sound(gadget: *const TtGadget) -> bool {
    gadget.as_ref().is_some_and(|g| g.instance.multiplier() >= 24)
}

/// Runs the clique-respecting oracle: `*is_yes` becomes true iff the
/// gadget tree is NOT alpha-thin, equivalently iff the source MaxAvgCut
/// instance is a YES instance.
///
/// # Safety
/// `gadget` must be a valid gadget handle; `is_yes` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_oracle(gadget: *const TtGadget, is_yes: *mut bool) -> TtStatus {
    let Some(gadget) = gadget.as_ref() else {
        return fail(TtStatus::NullPointer, "gadget pointer is null");
    };
    if is_yes.is_null() {
        return fail(TtStatus::NullPointer, "is_yes pointer is null");
    }
    match ttvc_clique_respecting_oracle(&gadget.instance) {
        Ok(answer) => {
            *is_yes = answer.is_yes;
            TtStatus::Ok
        }
        Err(err) => fail_with(err),
    }
}

/// Serialises G' in the graph file format. Free with `tt_string_free`.
///
/// # Safety
/// `gadget` must be a valid gadget handle (NULL returns NULL).
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_graph_text(gadget: *const TtGadget) -> *mut c_char {
    gadget.as_ref().map_or(std::ptr::null_mut(), |g| {
        string_out(io::write_graph(g.instance.g_prime(), None))
    })
}

/// Serialises T in the tree file format. Free with `tt_string_free`.
///
/// # Safety
/// `gadget` must be a valid gadget handle (NULL returns NULL).
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_tree_text(gadget: *const TtGadget) -> *mut c_char {
    gadget.as_ref().map_or(std::ptr::null_mut(), |g| {
        string_out(io::write_tree(g.instance.tree()))
    })
}

/// Serialises the sidecar correspondence map (`c` / `d` / `a` lines).
/// Free with `tt_string_free`.
///
/// # Safety
/// `gadget` must be a valid gadget handle (NULL returns NULL).
#[no_mangle]
pub unsafe extern "C" fn tt_gadget_map_text(gadget: *const TtGadget) -> *mut c_char {
    gadget.as_ref().map_or(std::ptr::null_mut(), |g| {
        string_out(g.instance.write_map())
    })
}
