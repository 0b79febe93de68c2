//! C ABI over `copwin-core`.
//!
//! Graphs live behind an opaque `CwGraph` handle created by
//! [`cw_graph_from_edges`] or [`cw_graph_parse`] and released with
//! [`cw_graph_free`]. Every fallible call returns a [`CwStatus`]; on failure
//! the message is available from [`cw_last_error`] on the same thread until
//! the next failing call.
//!
//! Vertices are 0-based. Ranks and capture times use [`CW_INFINITE`] for
//! infinity.

use copwin::graph::{canonical_form, parse_graph, sniff_format, LabeledGraph};
use copwin::rank::{capture_time_by_rank, top_heaviness};
use copwin::{corner_rank, CaptureTime, Error, Graph, Rank, TopHeaviness};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Stands for an infinite rank or capture time.
pub const CW_INFINITE: u32 = u32::MAX;

/// Largest supported order.
pub const CW_MAX_ORDER: usize = 64;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwStatus {
    Ok = 0,
    NullPointer = 1,
    /// A vertex index is out of range, or the order is unsupported.
    Range = 2,
    Argument = 3,
    Parse = 4,
    /// The graph is not cop-win, so the requested value does not exist.
    NotCopWin = 5,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 6,
    Utf8 = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwTop {
    Top0 = 0,
    Top1 = 1,
    /// The graph is a clique (rank 1).
    Clique = 2,
}

/// Opaque graph handle.
pub struct CwGraph {
    graph: Graph,
    labels: Vec<u64>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn fail(status: CwStatus, msg: impl Into<String>) -> CwStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> CwStatus {
    let status = match &e {
        Error::Range { .. } => CwStatus::Range,
        Error::Parse { .. } | Error::Corpus { .. } => CwStatus::Parse,
        Error::NotCopWin => CwStatus::NotCopWin,
        _ => CwStatus::Argument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> CwStatus) -> CwStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(CwStatus::Panic, "internal panic"))
}

unsafe fn graph_ref<'a>(g: *const CwGraph) -> Result<&'a CwGraph, CwStatus> {
    g.as_ref().ok_or_else(|| fail(CwStatus::NullPointer, "null graph handle"))
}

fn boxed(graph: Graph, labels: Vec<u64>, out: *mut *mut CwGraph) -> CwStatus {
    unsafe { *out = Box::into_raw(Box::new(CwGraph { graph, labels })) };
    CwStatus::Ok
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`). Loops are ignored.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut CwGraph,
) -> CwStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(CwStatus::NullPointer, "null pointer argument");
        }
        if n > CW_MAX_ORDER {
            return fail(CwStatus::Range, format!("order {n} exceeds {CW_MAX_ORDER}"));
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .filter(|(u, v)| u != v)
            .collect();
        match Graph::from_edges(n, &pairs) {
            Ok(g) => boxed(g, (1..=n as u64).collect(), out),
            Err(e) => from_error(e),
        }
    })
}

/// Parses a NUL-terminated graph in `adjlist` or `pairs` text format (the
/// format is detected).
///
/// # Safety
/// `text` must be a valid C string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_parse(text: *const c_char, out: *mut *mut CwGraph) -> CwStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(CwStatus::NullPointer, "null pointer argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(CwStatus::Utf8, "input is not valid UTF-8");
        };
        match parse_graph(s, sniff_format(s)) {
            Ok(LabeledGraph { graph, labels }) => boxed(graph, labels, out),
            Err(e) => from_error(e),
        }
    })
}

/// Releases a handle. Null is accepted.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_free(g: *mut CwGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_order(g: *const CwGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_edge_count(g: *const CwGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// Input label of vertex `v` (for parsed graphs; `v + 1` otherwise).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_label(g: *const CwGraph, v: usize, out: *mut u64) -> CwStatus {
    guard(|| {
        let g = match graph_ref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        match g.labels.get(v) {
            Some(&l) => {
                *out = l;
                CwStatus::Ok
            }
            None => from_error(Error::Range { vertex: v, n: g.graph.n() }),
        }
    })
}

/// Writes the corner rank of every vertex into `out[0..n]`; infinite ranks
/// are [`CW_INFINITE`]. `len` must be at least the order.
///
/// # Safety
/// `g` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn cw_corner_ranks(g: *const CwGraph, out: *mut u32, len: usize) -> CwStatus {
    guard(|| {
        let g = match graph_ref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        let n = g.graph.n();
        if len < n {
            return fail(CwStatus::BufferTooSmall, format!("need {n} slots, got {len}"));
        }
        if out.is_null() && n > 0 {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        let r = corner_rank(&g.graph);
        for (v, k) in r.ranks().iter().enumerate() {
            *out.add(v) = rank_value(*k);
        }
        CwStatus::Ok
    })
}

fn rank_value(r: Rank) -> u32 {
    r.finite().unwrap_or(CW_INFINITE)
}

fn capture_value(c: CaptureTime) -> u32 {
    c.finite().unwrap_or(CW_INFINITE)
}

/// Corner rank of the graph (the largest vertex rank).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_rank(g: *const CwGraph, out: *mut u32) -> CwStatus {
    guard(|| {
        let g = match graph_ref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        *out = rank_value(corner_rank(&g.graph).alpha());
        CwStatus::Ok
    })
}

/// Writes the rank cardinality vector. `*len` is set to its length; when
/// `cap` is smaller the call returns `BufferTooSmall` and writes nothing else.
/// Fails with `NotCopWin` for graphs of infinite rank.
///
/// # Safety
/// `g` must be a live handle, `out` must hold `cap` values (or be null with
/// `cap == 0`) and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cw_rank_vector(g: *const CwGraph, out: *mut u32, cap: usize, len: *mut usize) -> CwStatus {
    guard(|| {
        let g = match graph_ref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if len.is_null() {
            return fail(CwStatus::NullPointer, "null length pointer");
        }
        let v = match corner_rank(&g.graph).vector() {
            Ok(v) => v,
            Err(e) => return from_error(e),
        };
        let entries = v.entries();
        *len = entries.len();
        if cap < entries.len() {
            return fail(CwStatus::BufferTooSmall, format!("need {} slots, got {cap}", entries.len()));
        }
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        ptr::copy_nonoverlapping(entries.as_ptr(), out, entries.len());
        CwStatus::Ok
    })
}

/// Top class of a cop-win graph.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_top_class(g: *const CwGraph, out: *mut CwTop) -> CwStatus {
    guard(|| {
        let g = match graph_ref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        match top_heaviness(&g.graph, &corner_rank(&g.graph)) {
            Ok(t) => {
                *out = match t {
                    TopHeaviness::Top0 => CwTop::Top0,
                    TopHeaviness::Top1 => CwTop::Top1,
                    TopHeaviness::CliqueRank1 => CwTop::Clique,
                };
                CwStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Capture time read off the corner ranking; [`CW_INFINITE`] when the graph
/// is robber-win.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_capture_time_rank(g: *const CwGraph, out: *mut u32) -> CwStatus {
    guard(|| {
        let g = match graph_ref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        *out = capture_value(capture_time_by_rank(&g.graph, &corner_rank(&g.graph)));
        CwStatus::Ok
    })
}

/// Capture time from solving the game directly.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_capture_time_game(g: *const CwGraph, out: *mut u32) -> CwStatus {
    guard(|| {
        let g = match graph_ref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        *out = capture_value(copwin::game::capture_time_by_game(&g.graph));
        CwStatus::Ok
    })
}

/// Canonical form as a NUL-terminated compact string (`n:u-v,...`, 1-based);
/// two graphs give the same string iff they are isomorphic. `*needed` gets
/// the size including the terminator; with a short buffer the call returns
/// `BufferTooSmall`.
///
/// # Safety
/// `g` must be a live handle, `buf` must hold `cap` bytes (or be null with
/// `cap == 0`) and `needed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cw_canonical_form(
    g: *const CwGraph,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> CwStatus {
    guard(|| {
        let g = match graph_ref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if needed.is_null() {
            return fail(CwStatus::NullPointer, "null length pointer");
        }
        let s = canonical_form(&g.graph).to_graph().to_compact();
        *needed = s.len() + 1;
        if cap < s.len() + 1 {
            return fail(CwStatus::BufferTooSmall, format!("need {} bytes, got {cap}", s.len() + 1));
        }
        if buf.is_null() {
            return fail(CwStatus::NullPointer, "null output buffer");
        }
        ptr::copy_nonoverlapping(s.as_ptr().cast::<c_char>(), buf, s.len());
        *buf.add(s.len()) = 0;
        CwStatus::Ok
    })
}

/// Message for the last failing call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn cw_status_str(status: CwStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CwStatus::Ok => c"ok",
        CwStatus::NullPointer => c"null pointer",
        CwStatus::Range => c"out of range",
        CwStatus::Argument => c"invalid argument",
        CwStatus::Parse => c"parse error",
        CwStatus::NotCopWin => c"graph is not cop-win",
        CwStatus::BufferTooSmall => c"buffer too small",
        CwStatus::Utf8 => c"invalid UTF-8",
        CwStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}
