//! C ABI over `bicomp`.
//!
//! Graphs cross the boundary as opaque `BicompGraph` handles owned by the
//! caller and released with `bicomp_graph_free`. Every fallible call returns a
//! `BicompStatus`; results go through out-pointers, which are left untouched
//! on failure. The message for the most recent failure on the calling thread
//! is available from `bicomp_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bicomp::bounds::{m_upper, n_upper, ParameterTriple};
use bicomp::connectivity::{edge_connectivity, vertex_connectivity};
use bicomp::constructions::{build_witness, WitnessFamilyId};
use bicomp::{io, BipartiteGraph, Error};

/// Result code of every fallible call. `BICOMP_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicompStatus {
    Ok = 0,
    NullPointer = 1,
    IndexOutOfRange = 2,
    DuplicateEdge = 3,
    TooSmall = 4,
    TooLarge = 5,
    InvalidTriple = 6,
    PreconditionViolated = 7,
    UnknownFamily = 8,
    Parse = 9,
    InvalidUtf8 = 10,
    Internal = 11,
}

/// Opaque graph handle.
pub struct BicompGraph {
    inner: BipartiteGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn fail(status: BicompStatus, message: impl Into<String>) -> BicompStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = message.into());
    status
}

fn status_of(e: &Error) -> BicompStatus {
    match e {
        Error::IndexOutOfRange { .. } => BicompStatus::IndexOutOfRange,
        Error::DuplicateEdge { .. } => BicompStatus::DuplicateEdge,
        Error::TooSmall { .. } | Error::EmptyGraph | Error::EmptyPart => BicompStatus::TooSmall,
        Error::TooLarge { .. } => BicompStatus::TooLarge,
        Error::InvalidTriple { .. } => BicompStatus::InvalidTriple,
        Error::PreconditionViolated { .. } | Error::NoWitness { .. } => BicompStatus::PreconditionViolated,
        Error::UnknownFamily(_) => BicompStatus::UnknownFamily,
        Error::Parse { .. } | Error::Json(_) => BicompStatus::Parse,
        _ => BicompStatus::Internal,
    }
}

/// Runs `body`, turning library errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), BicompStatus>) -> BicompStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BicompStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(BicompStatus::Internal, "internal panic"),
    }
}

fn lib<T>(r: bicomp::Result<T>) -> Result<T, BicompStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn nonnull<T>(p: *const T, what: &str) -> Result<(), BicompStatus> {
    if p.is_null() {
        Err(fail(BicompStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

unsafe fn graph_ref<'a>(g: *const BicompGraph) -> Result<&'a BipartiteGraph, BicompStatus> {
    nonnull(g, "graph")?;
    Ok(&(*g).inner)
}

unsafe fn put_graph(out: *mut *mut BicompGraph, g: BipartiteGraph) {
    *out = Box::into_raw(Box::new(BicompGraph { inner: g }));
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, BicompStatus> {
    nonnull(s, what)?;
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(BicompStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

/// Creates a graph with parts of size `r` and `s` and `edge_count` edges,
/// given as `edge_count` consecutive `(i, j)` pairs in `edges` (1-based).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_graph_new(
    r: usize,
    s: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut BicompGraph,
) -> BicompStatus {
    guard(|| {
        nonnull(out, "out")?;
        let pairs: Vec<(usize, usize)> = if edge_count == 0 {
            Vec::new()
        } else {
            nonnull(edges, "edges")?;
            std::slice::from_raw_parts(edges, 2 * edge_count)
                .chunks_exact(2)
                .map(|c| (c[0], c[1]))
                .collect()
        };
        let g = lib(BipartiteGraph::new(r, s, &pairs))?;
        put_graph(out, g);
        Ok(())
    })
}

/// Parses a graph in edge-list format (`r s` header, then one `i j` per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_graph_parse(text: *const c_char, out: *mut *mut BicompGraph) -> BicompStatus {
    guard(|| {
        nonnull(out, "out")?;
        let g = lib(io::from_edge_list(c_str(text, "text")?))?;
        put_graph(out, g);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn bicomp_graph_free(g: *mut BicompGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Writes the bipartite complement of `g` to `out` as a new handle.
///
/// # Safety
/// `g` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_graph_complement(g: *const BicompGraph, out: *mut *mut BicompGraph) -> BicompStatus {
    guard(|| {
        let g = graph_ref(g)?;
        nonnull(out, "out")?;
        put_graph(out, g.complement());
        Ok(())
    })
}

/// Part sizes `r` and `s`.
///
/// # Safety
/// `g` must be a live handle; `r` and `s` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_graph_shape(g: *const BicompGraph, r: *mut usize, s: *mut usize) -> BicompStatus {
    guard(|| {
        let g = graph_ref(g)?;
        nonnull(r, "r")?;
        nonnull(s, "s")?;
        *r = g.left_size();
        *s = g.right_size();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_graph_edge_count(g: *const BicompGraph, out: *mut usize) -> BicompStatus {
    guard(|| {
        let g = graph_ref(g)?;
        nonnull(out, "out")?;
        *out = g.edge_count();
        Ok(())
    })
}

/// Copies up to `capacity` edges, in sorted order, as `(i, j)` pairs into
/// `buf` and stores the total edge count in `total`. Call with `capacity` 0
/// to query the size.
///
/// # Safety
/// `g` must be a live handle, `buf` must have room for `2 * capacity`
/// values (null allowed when `capacity` is 0) and `total` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_graph_edges(
    g: *const BicompGraph,
    buf: *mut usize,
    capacity: usize,
    total: *mut usize,
) -> BicompStatus {
    guard(|| {
        let g = graph_ref(g)?;
        nonnull(total, "total")?;
        if capacity > 0 {
            nonnull(buf, "buf")?;
            let dst = std::slice::from_raw_parts_mut(buf, 2 * capacity);
            for (k, (i, j)) in g.edges().take(capacity).enumerate() {
                dst[2 * k] = i;
                dst[2 * k + 1] = j;
            }
        }
        *total = g.edge_count();
        Ok(())
    })
}

/// Edge connectivity `κ'(g)`. Needs at least two vertices.
///
/// # Safety
/// `g` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_edge_connectivity(g: *const BicompGraph, out: *mut usize) -> BicompStatus {
    guard(|| {
        let g = graph_ref(g)?;
        nonnull(out, "out")?;
        *out = lib(edge_connectivity(g))?.value;
        Ok(())
    })
}

/// Vertex connectivity `κ(g)`. Needs at least two vertices.
///
/// # Safety
/// `g` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_vertex_connectivity(g: *const BicompGraph, out: *mut usize) -> BicompStatus {
    guard(|| {
        let g = graph_ref(g)?;
        nonnull(out, "out")?;
        *out = lib(vertex_connectivity(g))?.value;
        Ok(())
    })
}

/// Upper bound on `κ'(G) + κ'(G^bc)` (and on `κ`) for `r <= s` and
/// `m <= floor(rs/2)` edges.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_n_upper(r: usize, s: usize, m: usize, out: *mut usize) -> BicompStatus {
    guard(|| {
        nonnull(out, "out")?;
        *out = n_upper(&lib(ParameterTriple::new(r, s, m))?);
        Ok(())
    })
}

/// Upper bound on `κ'(G) κ'(G^bc)` (and on `κ`), same domain as `bicomp_n_upper`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_m_upper(r: usize, s: usize, m: usize, out: *mut usize) -> BicompStatus {
    guard(|| {
        nonnull(out, "out")?;
        *out = m_upper(&lib(ParameterTriple::new(r, s, m))?);
        Ok(())
    })
}

/// Builds the extremal graph of a witness family, named as in the CLI
/// (`"s3-g1"` .. `"s4-g7"`). `m` is ignored by the `s3-*` families.
///
/// # Safety
/// `family` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicomp_build_witness(
    family: *const c_char,
    r: usize,
    s: usize,
    m: usize,
    out: *mut *mut BicompGraph,
) -> BicompStatus {
    guard(|| {
        nonnull(out, "out")?;
        let family: WitnessFamilyId = lib(c_str(family, "family")?.parse())?;
        let w = lib(build_witness(family, r, s, m))?;
        put_graph(out, w.graph);
        Ok(())
    })
}

/// Copies the last error message of this thread into `buf` (truncated and
/// NUL-terminated) and returns the full message length in bytes, excluding
/// the terminator.
///
/// # Safety
/// `buf` must have room for `len` bytes, or be null with `len` 0.
#[no_mangle]
pub unsafe extern "C" fn bicomp_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn bicomp_status_str(status: BicompStatus) -> *const c_char {
    let s: &'static CStr = match status {
        BicompStatus::Ok => c"ok",
        BicompStatus::NullPointer => c"null pointer argument",
        BicompStatus::IndexOutOfRange => c"vertex index out of range",
        BicompStatus::DuplicateEdge => c"duplicate edge",
        BicompStatus::TooSmall => c"graph too small",
        BicompStatus::TooLarge => c"input too large",
        BicompStatus::InvalidTriple => c"invalid (r, s, m)",
        BicompStatus::PreconditionViolated => c"witness precondition violated",
        BicompStatus::UnknownFamily => c"unknown witness family",
        BicompStatus::Parse => c"parse error",
        BicompStatus::InvalidUtf8 => c"string is not UTF-8",
        BicompStatus::Internal => c"internal error",
    };
    s.as_ptr()
}
