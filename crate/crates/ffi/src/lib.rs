//! C ABI over `turan-core`.
//!
//! Graphs live behind an opaque `TuranGraph` handle owned by the caller and
//! released with `turan_graph_free`. Fallible calls return a `TuranStatus`;
//! on failure a message is kept per thread and read with `turan_last_error`.
//! Strings returned by the library are released with `turan_string_free`.
//! Panics never cross the boundary: they surface as `TURAN_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use turan_core::constructions::{self, ConstructionError};
use turan_core::detect::{self, DetectError, PatternSpec};
use turan_core::formulas::{self, BoundKind, FormulaError};
use turan_core::graph6::{self, Graph6Error};
use turan_core::search::{self, SearchError};
use turan_core::{FamilySpec, Graph, GraphError};

/// Opaque graph handle.
pub struct TuranGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuranStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    ParseError = 4,
    BelowThreshold = 5,
    BudgetExceeded = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuranPattern {
    C33 = 0,
    P33 = 1,
    M23 = 2,
    K5 = 3,
    K5Minus = 4,
}

/// Families for `turan_construct`, with their parameters in order.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuranFamily {
    /// k
    Matching = 0,
    /// k
    Star = 1,
    /// k
    Path = 2,
    /// k
    Cycle = 3,
    /// t
    Complete = 4,
    /// s, t
    CompleteBipartite = 5,
    /// n
    Empty = 6,
    /// p, m
    TuranGraph = 7,
    /// n, variant
    EdgeExtremal = 8,
    /// n
    MatchingJoin = 9,
    /// n
    ApexBipartite = 10,
    /// n, p, t
    HNpt = 11,
    /// n, p, t
    HPlus = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuranFormula {
    C33Edges = 0,
    C33Triangles = 1,
    P33Triangles = 2,
    M23Triangles = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuranBoundKind {
    Exact = 0,
    UpperBound = 1,
    LowerBound = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TuranBound {
    pub n: u64,
    pub value: u64,
    pub kind: TuranBoundKind,
    /// Smallest n for which the value is asserted.
    pub valid_from: u64,
    /// The expression was floored because it is not integral.
    pub odd_case: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// Failure with its status and message.
struct Failure(TuranStatus, String);

type FfiResult<T> = Result<T, Failure>;

fn fail<T>(status: TuranStatus, msg: impl Into<String>) -> FfiResult<T> {
    Err(Failure(status, msg.into()))
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let status = match e {
            GraphError::VertexOutOfRange { .. } | GraphError::CapExceeded { .. } => TuranStatus::OutOfRange,
            GraphError::LoopForbidden(_) => TuranStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        Failure(TuranStatus::InvalidArgument, e.to_string())
    }
}

impl From<Graph6Error> for Failure {
    fn from(e: Graph6Error) -> Self {
        Failure(TuranStatus::ParseError, e.to_string())
    }
}

impl From<DetectError> for Failure {
    fn from(e: DetectError) -> Self {
        Failure(TuranStatus::BudgetExceeded, e.to_string())
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Failure(TuranStatus::BelowThreshold, e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let status = match e {
            SearchError::BudgetExceeded { .. } | SearchError::CanonicalBudget(_) => TuranStatus::BudgetExceeded,
            SearchError::Pool(_) => TuranStatus::Internal,
            _ => TuranStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `f`, converting failures and panics into a status and the last error.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> TuranStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            clear_error();
            TuranStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TuranStatus::Internal
        }
    }
}

fn graph_ref<'a>(g: *const TuranGraph) -> FfiResult<&'a Graph> {
    // SAFETY: the caller passes a handle obtained from this library and not yet freed.
    unsafe { g.as_ref() }.map(|h| &h.0).ok_or(Failure(TuranStatus::NullPointer, "null graph handle".into()))
}

fn graph_mut<'a>(g: *mut TuranGraph) -> FfiResult<&'a mut Graph> {
    // SAFETY: as for `graph_ref`, with exclusive access for the call.
    unsafe { g.as_mut() }.map(|h| &mut h.0).ok_or(Failure(TuranStatus::NullPointer, "null graph handle".into()))
}

fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return fail(TuranStatus::NullPointer, "null output pointer");
    }
    // SAFETY: non-null and, per the API contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

fn write_graph(out: *mut *mut TuranGraph, g: Graph) -> FfiResult<()> {
    if out.is_null() {
        return fail(TuranStatus::NullPointer, "null output pointer");
    }
    write_out(out, Box::into_raw(Box::new(TuranGraph(g))))
}

fn pattern_spec(p: TuranPattern) -> PatternSpec {
    match p {
        TuranPattern::C33 => PatternSpec::C33,
        TuranPattern::P33 => PatternSpec::P33,
        TuranPattern::M23 => PatternSpec::M23,
        TuranPattern::K5 => PatternSpec::K5,
        TuranPattern::K5Minus => PatternSpec::K5Minus,
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next library call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn turan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn turan_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Empty graph on `n` vertices, or NULL on failure.
#[no_mangle]
pub extern "C" fn turan_graph_new(n: usize) -> *mut TuranGraph {
    let mut handle = ptr::null_mut();
    guard(|| write_graph(&mut handle, Graph::empty(n)?));
    handle
}

/// Copy of `g`, or NULL on failure.
#[no_mangle]
pub extern "C" fn turan_graph_clone(g: *const TuranGraph) -> *mut TuranGraph {
    let mut handle = ptr::null_mut();
    guard(|| write_graph(&mut handle, graph_ref(g)?.clone()));
    handle
}

/// Releases a handle; NULL is ignored.
///
/// # Safety
/// `g` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_free(g: *mut TuranGraph) {
    if !g.is_null() {
        // SAFETY: ownership returns to Rust exactly once, per the contract above.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices; 0 for NULL.
#[no_mangle]
pub extern "C" fn turan_graph_order(g: *const TuranGraph) -> usize {
    graph_ref(g).map_or(0, Graph::order)
}

/// Number of edges; 0 for NULL.
#[no_mangle]
pub extern "C" fn turan_graph_edge_count(g: *const TuranGraph) -> usize {
    graph_ref(g).map_or(0, Graph::edge_count)
}

/// t(G); 0 for NULL.
#[no_mangle]
pub extern "C" fn turan_graph_triangle_count(g: *const TuranGraph) -> u64 {
    graph_ref(g).map_or(0, Graph::triangle_count)
}

#[no_mangle]
pub extern "C" fn turan_graph_add_edge(g: *mut TuranGraph, u: usize, v: usize) -> TuranStatus {
    guard(|| {
        graph_mut(g)?.add_edge(u, v)?;
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn turan_graph_remove_edge(g: *mut TuranGraph, u: usize, v: usize) -> TuranStatus {
    guard(|| {
        graph_mut(g)?.remove_edge(u, v)?;
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn turan_graph_has_edge(g: *const TuranGraph, u: usize, v: usize, out: *mut bool) -> TuranStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let n = g.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { v: w, n }.into());
            }
        }
        write_out(out, g.has_edge(u, v))
    })
}

/// t(v): triangles through `v`.
#[no_mangle]
pub extern "C" fn turan_graph_triangles_at(g: *const TuranGraph, v: usize, out: *mut u64) -> TuranStatus {
    guard(|| write_out(out, graph_ref(g)?.triangles_at(v)?))
}

/// t(u, v): triangles through `u` or `v`.
#[no_mangle]
pub extern "C" fn turan_graph_triangles_at_pair(g: *const TuranGraph, u: usize, v: usize, out: *mut u64) -> TuranStatus {
    guard(|| write_out(out, graph_ref(g)?.triangles_at_pair(u, v)?))
}

/// Parses graph6 text into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_from_graph6(text: *const c_char, out: *mut *mut TuranGraph) -> TuranStatus {
    guard(|| {
        if text.is_null() {
            return fail(TuranStatus::NullPointer, "null string");
        }
        // SAFETY: non-null and NUL-terminated per the contract above.
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| Failure(TuranStatus::ParseError, "graph6 text is not UTF-8".into()))?;
        write_graph(out, graph6::decode(s)?)
    })
}

/// graph6 text of `g`, or NULL on failure. Release with `turan_string_free`.
#[no_mangle]
pub extern "C" fn turan_graph_to_graph6(g: *const TuranGraph) -> *mut c_char {
    let mut text = ptr::null_mut();
    guard(|| {
        let s = CString::new(graph6::encode(graph_ref(g)?)).expect("graph6 is printable ASCII");
        text = s.into_raw();
        Ok(())
    });
    text
}

/// Releases a string returned by this library; NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn turan_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by `CString::into_raw` in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Builds a family member from `len` parameters.
///
/// # Safety
/// `params` must point to `len` readable values (may be NULL when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn turan_construct(
    family: TuranFamily,
    params: *const usize,
    len: usize,
    out: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        let p: &[usize] = if len == 0 {
            &[]
        } else if params.is_null() {
            return fail(TuranStatus::NullPointer, "null parameter array");
        } else {
            // SAFETY: `len` readable values per the contract above.
            unsafe { std::slice::from_raw_parts(params, len) }
        };
        let need = match family {
            TuranFamily::CompleteBipartite | TuranFamily::TuranGraph | TuranFamily::EdgeExtremal => 2,
            TuranFamily::HNpt | TuranFamily::HPlus => 3,
            _ => 1,
        };
        if p.len() != need {
            return fail(TuranStatus::InvalidArgument, format!("{family:?} takes {need} parameter(s), got {}", p.len()));
        }
        let g = match family {
            TuranFamily::Matching => constructions::build(FamilySpec::Matching { k: p[0] })?,
            TuranFamily::Star => constructions::build(FamilySpec::Star { k: p[0] })?,
            TuranFamily::Path => constructions::build(FamilySpec::Path { k: p[0] })?,
            TuranFamily::Cycle => constructions::build(FamilySpec::Cycle { k: p[0] })?,
            TuranFamily::Complete => constructions::build(FamilySpec::Complete { t: p[0] })?,
            TuranFamily::CompleteBipartite => constructions::build(FamilySpec::CompleteBipartite { s: p[0], t: p[1] })?,
            TuranFamily::Empty => constructions::build(FamilySpec::Empty { n: p[0] })?,
            TuranFamily::TuranGraph => constructions::build(FamilySpec::TuranGraph { p: p[0], m: p[1] })?,
            TuranFamily::EdgeExtremal => constructions::thm1_extremal(p[0], p[1])?,
            TuranFamily::MatchingJoin => constructions::thm2_extremal(p[0])?,
            TuranFamily::ApexBipartite => constructions::thm3_extremal(p[0])?,
            TuranFamily::HNpt => constructions::h_npt(p[0], p[1], p[2])?,
            TuranFamily::HPlus => constructions::h_plus(p[0], p[1], p[2])?,
        };
        write_graph(out, g)
    })
}

/// Replaces every edge of `g` by a clique on `p` vertices.
#[no_mangle]
pub extern "C" fn turan_edge_blowup(g: *const TuranGraph, p: usize, out: *mut *mut TuranGraph) -> TuranStatus {
    guard(|| write_graph(out, constructions::edge_blowup(graph_ref(g)?, p)?))
}

fn report_embedding(
    found: Option<detect::Embedding>,
    out_found: *mut bool,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> FfiResult<()> {
    write_out(out_found, found.is_some())?;
    let map = found.map(|e| e.map).unwrap_or_default();
    if !out_len.is_null() {
        write_out(out_len, map.len())?;
    }
    if map.is_empty() {
        return Ok(());
    }
    if buf.is_null() {
        return Ok(());
    }
    if cap < map.len() {
        return fail(TuranStatus::BufferTooSmall, format!("embedding needs {} slots, buffer has {cap}", map.len()));
    }
    // SAFETY: `buf` holds `cap >= map.len()` writable slots per the API contract.
    unsafe { ptr::copy_nonoverlapping(map.as_ptr(), buf, map.len()) };
    Ok(())
}

/// Looks for a named pattern. On a hit, `embedding[i]` receives the host image
/// of pattern vertex `i` when `embedding` is non-NULL; `len` (optional)
/// receives the pattern order, or 0 when absent.
#[no_mangle]
pub extern "C" fn turan_contains(
    g: *const TuranGraph,
    pattern: TuranPattern,
    found: *mut bool,
    embedding: *mut usize,
    cap: usize,
    len: *mut usize,
) -> TuranStatus {
    guard(|| {
        let hit = detect::contains(graph_ref(g)?, &pattern_spec(pattern))?;
        report_embedding(hit, found, embedding, cap, len)
    })
}

/// As `turan_contains`, with an explicit pattern graph.
#[no_mangle]
pub extern "C" fn turan_contains_graph(
    g: *const TuranGraph,
    pattern: *const TuranGraph,
    found: *mut bool,
    embedding: *mut usize,
    cap: usize,
    len: *mut usize,
) -> TuranStatus {
    guard(|| {
        let spec = PatternSpec::Explicit(graph_ref(pattern)?.clone());
        let hit = detect::contains(graph_ref(g)?, &spec)?;
        report_embedding(hit, found, embedding, cap, len)
    })
}

#[no_mangle]
pub extern "C" fn turan_formula(which: TuranFormula, n: u64, out: *mut TuranBound) -> TuranStatus {
    guard(|| {
        let b = match which {
            TuranFormula::C33Edges => formulas::ex_c33_edges(n)?,
            TuranFormula::C33Triangles => formulas::ex_c33_triangles_bound(n)?,
            TuranFormula::P33Triangles => formulas::ex_p33_triangles(n)?,
            TuranFormula::M23Triangles => formulas::ex_m23_triangles(n)?,
        };
        let kind = match b.kind {
            BoundKind::Exact => TuranBoundKind::Exact,
            BoundKind::UpperBound => TuranBoundKind::UpperBound,
            BoundKind::LowerBound => TuranBoundKind::LowerBound,
        };
        write_out(out, TuranBound { n: b.n, value: b.value, kind, valid_from: b.valid_from, odd_case: b.odd_case })
    })
}

/// Exact ex(n, K_3, pattern) for small n; `witness` (optional) receives one optimal graph.
#[no_mangle]
pub extern "C" fn turan_ex_exact(
    n: usize,
    pattern: TuranPattern,
    value: *mut u64,
    witness: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        let out = search::exact_generalized_turan(n, &pattern_spec(pattern), &search::ExactParams::default())?;
        write_out(value, out.best_value)?;
        if !witness.is_null() {
            write_graph(witness, out.witnesses.into_iter().next().expect("at least one witness"))?;
        }
        Ok(())
    })
}

/// Seeded local search for a lower bound on ex(n, K_3, pattern). Zero
/// `restarts` or `iterations` select the defaults.
#[no_mangle]
pub extern "C" fn turan_ex_search(
    n: usize,
    pattern: TuranPattern,
    seed: u64,
    restarts: usize,
    iterations: usize,
    value: *mut u64,
    witness: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        let defaults = search::SearchParams::default();
        let params = search::SearchParams {
            seed,
            restarts: if restarts == 0 { defaults.restarts } else { restarts },
            iterations: if iterations == 0 { defaults.iterations } else { iterations },
            ..defaults
        };
        let out = search::local_search(n, &pattern_spec(pattern), &params)?;
        write_out(value, out.best_value)?;
        if !witness.is_null() {
            write_graph(witness, out.witnesses.into_iter().next().expect("one witness"))?;
        }
        Ok(())
    })
}
