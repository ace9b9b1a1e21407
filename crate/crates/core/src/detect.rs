//! Non-induced containment of the forbidden patterns.
//!
//! The named triangle blow-ups get dedicated existence checks built on
//! common-neighbourhood bitsets: a copy of C_3^3 is a triangle `xyz` whose
//! three edge neighbourhoods admit distinct representatives outside the
//! triangle, and P_3^3 is the same over a path `v0 v1 v2 v3`. Everything else
//! goes through a backtracking matcher.
//!
//! Pattern layouts (pattern vertex -> role):
//!
//! * `C33`: `0 1 2` the triangle; `3`, `4`, `5` private to edges `01`, `02`, `12`.
//! * `P33`: `0 1 2 3` the path; `4`, `5`, `6` private to edges `01`, `12`, `23`.
//! * `M23`: triangles `{0, 1, 4}` and `{2, 3, 5}`.
//! * `K5Minus`: K_5 without the edge `34`.
//!
//! Witnesses for named patterns are the lexicographically least embedding
//! vector in this layout order.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::constructions::{build, edge_blowup, FamilySpec};
use crate::graph::{Graph, Triangle};

/// Largest explicit pattern the generic matcher accepts.
pub const EXPLICIT_PATTERN_BUDGET: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("explicit pattern has {0} vertices, above the matcher budget of {EXPLICIT_PATTERN_BUDGET}")]
    PatternTooLarge(usize),
    #[error("unknown pattern name {0:?}")]
    UnknownPattern(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternSpec {
    C33,
    P33,
    M23,
    K5,
    K5Minus,
    Explicit(Graph),
}

impl PatternSpec {
    /// Parses one of the named patterns (case-insensitive).
    pub fn from_name(name: &str) -> Result<Self, DetectError> {
        Ok(match name.to_ascii_lowercase().as_str() {
            "c33" => PatternSpec::C33,
            "p33" => PatternSpec::P33,
            "m23" | "2k3" => PatternSpec::M23,
            "k5" => PatternSpec::K5,
            "k5minus" | "k5-" => PatternSpec::K5Minus,
            _ => return Err(DetectError::UnknownPattern(name.to_string())),
        })
    }

    pub fn name(&self) -> String {
        match self {
            PatternSpec::C33 => "C33".into(),
            PatternSpec::P33 => "P33".into(),
            PatternSpec::M23 => "M23".into(),
            PatternSpec::K5 => "K5".into(),
            PatternSpec::K5Minus => "K5minus".into(),
            PatternSpec::Explicit(g) => format!("explicit({} vertices, {} edges)", g.order(), g.edge_count()),
        }
    }

    /// The pattern as a graph in the layout documented at module level.
    pub fn graph(&self) -> Graph {
        let blow = |spec| edge_blowup(&build(spec).expect("valid family"), 3).expect("p = 3");
        match self {
            PatternSpec::C33 => blow(FamilySpec::Cycle { k: 3 }),
            PatternSpec::P33 => blow(FamilySpec::Path { k: 3 }),
            PatternSpec::M23 => blow(FamilySpec::Matching { k: 2 }),
            PatternSpec::K5 => Graph::complete(5).expect("small"),
            PatternSpec::K5Minus => {
                let mut g = Graph::complete(5).expect("small");
                g.remove_edge(3, 4).expect("in range");
                g
            }
            PatternSpec::Explicit(g) => g.clone(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            PatternSpec::C33 | PatternSpec::M23 => 6,
            PatternSpec::P33 => 7,
            PatternSpec::K5 | PatternSpec::K5Minus => 5,
            PatternSpec::Explicit(g) => g.order(),
        }
    }

    fn check_budget(&self) -> Result<(), DetectError> {
        match self {
            PatternSpec::Explicit(g) if g.order() > EXPLICIT_PATTERN_BUDGET => {
                Err(DetectError::PatternTooLarge(g.order()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Pattern vertex `i` maps to host vertex `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Injective, and every pattern edge lands on a host edge.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() || self.map.iter().any(|&v| v >= host.order()) {
            return false;
        }
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.map.len()
            && pattern.edges().all(|(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().enumerate().map(|(i, v)| format!("{i}->{v}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A witness embedding of `pattern` in `g`, if there is one.
pub fn contains(g: &Graph, pattern: &PatternSpec) -> Result<Option<Embedding>, DetectError> {
    pattern.check_budget()?;
    Ok(match pattern {
        PatternSpec::C33 => contains_c33(g),
        PatternSpec::P33 => contains_p33(g),
        PatternSpec::M23 => contains_m23(g),
        PatternSpec::K5 => contains_k5(g),
        PatternSpec::K5Minus => contains_k5_minus(g),
        PatternSpec::Explicit(p) => Matcher::new(g, p, MatchOrder::Heuristic).first(),
    })
}

pub fn is_free(g: &Graph, pattern: &PatternSpec) -> Result<bool, DetectError> {
    pattern.check_budget()?;
    Ok(match pattern {
        PatternSpec::C33 => !has_c33(g),
        PatternSpec::P33 => !has_p33(g),
        PatternSpec::M23 => !has_m23(g),
        PatternSpec::K5 => !has_k5(g),
        PatternSpec::K5Minus => !has_k5_minus(g),
        PatternSpec::Explicit(p) => Matcher::new(g, p, MatchOrder::Heuristic).first().is_none(),
    })
}

/// Whether some copy of `pattern` in `g` uses the edge `uv` (which must be present).
///
/// If `g − uv` is pattern-free this decides whether `g` is. Repeated callers
/// should hold a [`PreparedPattern`] instead.
pub fn creates_with_edge(g: &Graph, pattern: &PatternSpec, u: usize, v: usize) -> Result<bool, DetectError> {
    Ok(PreparedPattern::new(pattern)?.creates_with_edge(g, u, v))
}

/// Automorphism count above which edge orbits are not computed.
const AUTOMORPHISM_CAP: usize = 1 << 14;

/// A pattern with its graph and edge-orbit representatives worked out once,
/// for repeated incremental checks.
#[derive(Debug, Clone)]
pub struct PreparedPattern {
    spec: PatternSpec,
    graph: Graph,
    /// One oriented pattern edge per orbit under the automorphism group.
    anchors: Vec<(usize, usize)>,
}

impl PreparedPattern {
    pub fn new(spec: &PatternSpec) -> Result<Self, DetectError> {
        spec.check_budget()?;
        let graph = spec.graph();
        let anchors = match spec {
            PatternSpec::Explicit(_) | PatternSpec::K5 | PatternSpec::K5Minus => edge_orbit_anchors(&graph),
            _ => Vec::new(),
        };
        Ok(PreparedPattern { spec: spec.clone(), graph, anchors })
    }

    pub fn spec(&self) -> &PatternSpec {
        &self.spec
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        is_free(g, &self.spec).expect("budget checked")
    }

    /// See [`creates_with_edge`].
    pub fn creates_with_edge(&self, g: &Graph, u: usize, v: usize) -> bool {
        debug_assert!(g.has_edge(u, v));
        match self.spec {
            PatternSpec::C33 => [u, v].into_iter().any(|x| c33_through(g, x)),
            PatternSpec::P33 => [u, v].into_iter().any(|x| p33_through(g, x)),
            PatternSpec::M23 => m23_through_edge(g, u, v),
            _ => Matcher::new(g, &self.graph, MatchOrder::Heuristic).through_edge(&self.anchors, u, v),
        }
    }
}

/// Oriented edges `(a, b)`, one per orbit of the automorphism group; every
/// oriented edge if the group is too large to list.
fn edge_orbit_anchors(pattern: &Graph) -> Vec<(usize, usize)> {
    let oriented: Vec<(usize, usize)> = pattern.edges().flat_map(|(a, b)| [(a, b), (b, a)]).collect();
    let mut autos: Vec<Vec<usize>> = Vec::new();
    let complete = Matcher::new(pattern, pattern, MatchOrder::Index).for_each(|map| {
        autos.push(map.to_vec());
        autos.len() <= AUTOMORPHISM_CAP
    });
    if !complete {
        return oriented;
    }
    let mut covered = std::collections::HashSet::new();
    let mut anchors = Vec::new();
    for (a, b) in oriented {
        if covered.contains(&(a, b)) {
            continue;
        }
        anchors.push((a, b));
        for sigma in &autos {
            covered.insert((sigma[a], sigma[b]));
        }
    }
    anchors
}

/// Generic non-induced matcher: first embedding in degree-ordered search.
pub fn find_embedding(host: &Graph, pattern: &Graph) -> Result<Option<Embedding>, DetectError> {
    if pattern.order() > EXPLICIT_PATTERN_BUDGET {
        return Err(DetectError::PatternTooLarge(pattern.order()));
    }
    Ok(Matcher::new(host, pattern, MatchOrder::Heuristic).first())
}

/// Lexicographically least embedding of `pattern` (index order) in `host`.
pub fn lex_least_embedding(host: &Graph, pattern: &Graph) -> Result<Option<Embedding>, DetectError> {
    if pattern.order() > EXPLICIT_PATTERN_BUDGET {
        return Err(DetectError::PatternTooLarge(pattern.order()));
    }
    Ok(Matcher::new(host, pattern, MatchOrder::Index).first())
}

fn witness(g: &Graph, pattern: PatternSpec) -> Option<Embedding> {
    let found = Matcher::new(g, &pattern.graph(), MatchOrder::Index).first();
    debug_assert!(found.is_some(), "existence check and witness search disagree");
    found
}

pub fn contains_c33(g: &Graph) -> Option<Embedding> {
    has_c33(g).then(|| witness(g, PatternSpec::C33)).flatten()
}

pub fn contains_p33(g: &Graph) -> Option<Embedding> {
    has_p33(g).then(|| witness(g, PatternSpec::P33)).flatten()
}

pub fn contains_m23(g: &Graph) -> Option<Embedding> {
    has_m23(g).then(|| witness(g, PatternSpec::M23)).flatten()
}

pub fn contains_k5_minus(g: &Graph) -> Option<Embedding> {
    has_k5_minus(g).then(|| witness(g, PatternSpec::K5Minus)).flatten()
}

pub fn contains_k5(g: &Graph) -> Option<Embedding> {
    has_k5(g).then(|| witness(g, PatternSpec::K5)).flatten()
}

/// Up to three smallest elements of `N(a) ∩ N(b)` outside `skip`.
#[derive(Clone, Copy)]
struct Few {
    items: [usize; 3],
    len: usize,
}

impl Few {
    fn slice(&self) -> &[usize] {
        &self.items[..self.len]
    }
}

#[inline]
fn few_common(g: &Graph, a: usize, b: usize, skip: [usize; 2]) -> Few {
    let mut out = Few { items: [0; 3], len: 0 };
    for (wi, (x, y)) in g.row(a).iter().zip(g.row(b)).enumerate() {
        let mut w = x & y;
        while w != 0 {
            let v = wi * 64 + w.trailing_zeros() as usize;
            w &= w - 1;
            if v != skip[0] && v != skip[1] {
                out.items[out.len] = v;
                out.len += 1;
                if out.len == 3 {
                    return out;
                }
            }
        }
    }
    out
}

/// Hall's condition for three sets, evaluated on three-element truncations.
///
/// A set with at least three elements can always take its representative
/// last, so truncating to three elements preserves SDR existence.
fn hall3(a: &Few, b: &Few, c: &Few) -> bool {
    let union = |sets: &[&Few]| {
        let mut all: Vec<usize> = sets.iter().flat_map(|s| s.slice().iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    a.len >= 1
        && b.len >= 1
        && c.len >= 1
        && union(&[a, b]) >= 2
        && union(&[a, c]) >= 2
        && union(&[b, c]) >= 2
        && union(&[a, b, c]) >= 3
}

/// Private-vertex sets for the triangle `xyz` are distinct-representable.
#[inline]
fn c33_at(g: &Graph, x: usize, y: usize, z: usize) -> bool {
    let a = few_common(g, x, y, [z, z]);
    if a.len == 0 {
        return false;
    }
    let b = few_common(g, y, z, [x, x]);
    if b.len == 0 {
        return false;
    }
    let c = few_common(g, x, z, [y, y]);
    hall3(&a, &b, &c)
}

/// Path `v0 v1 v2 v3` extends to a copy of P_3^3.
#[inline]
fn p33_at(g: &Graph, v0: usize, v1: usize, v2: usize, v3: usize) -> bool {
    let a = few_common(g, v0, v1, [v2, v3]);
    if a.len == 0 {
        return false;
    }
    let b = few_common(g, v1, v2, [v0, v3]);
    if b.len == 0 {
        return false;
    }
    let c = few_common(g, v2, v3, [v0, v1]);
    hall3(&a, &b, &c)
}

fn has_c33(g: &Graph) -> bool {
    let n = g.order();
    for x in 0..n {
        for y in g.neighbors(x).filter(|&y| y > x) {
            if g.common_count(x, y) < 2 {
                continue;
            }
            for z in g.neighbors(x).filter(|&z| z > y && g.has_edge(y, z)) {
                if c33_at(g, x, y, z) {
                    return true;
                }
            }
        }
    }
    false
}

fn c33_through(g: &Graph, x: usize) -> bool {
    for y in g.neighbors(x) {
        for z in g.neighbors(x).filter(|&z| z > y && g.has_edge(y, z)) {
            if c33_at(g, x, y, z) {
                return true;
            }
        }
    }
    false
}

/// Up to `k` smallest vertices adjacent to all of `to`, outside `skip`.
fn common_up_to(g: &Graph, to: &[usize], skip: &[usize], k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    if k == 0 {
        return out;
    }
    for wi in 0..g.row(to[0]).len() {
        let mut w = to.iter().fold(!0u64, |acc, &x| acc & g.row(x)[wi]);
        while w != 0 {
            let v = wi * 64 + w.trailing_zeros() as usize;
            w &= w - 1;
            if !skip.contains(&v) {
                out.push(v);
                if out.len() == k {
                    return out;
                }
            }
        }
    }
    out
}

/// Greedy matching in the link `G[N(v)]`, stopped at five edges. Below five
/// it is maximal, so its vertices cover every link edge.
struct Link {
    matching: Vec<(usize, usize)>,
    maximal: bool,
}

const LINK_MATCHING_CAP: usize = 5;

fn link(g: &Graph, v: usize) -> Link {
    let mut matching = Vec::new();
    let mut used = Vec::new();
    for u in g.neighbors(v) {
        if used.contains(&u) {
            continue;
        }
        if let Some(&w) = common_up_to(g, &[v, u], &used, 1).first() {
            matching.push((u, w));
            used.extend([u, w]);
            if matching.len() == LINK_MATCHING_CAP {
                return Link { matching, maximal: false };
            }
        }
    }
    Link { matching, maximal: true }
}

/// An edge of the link of `v` avoiding `skip` (at most four vertices).
fn link_edge_avoiding(g: &Graph, v: usize, link: &Link, skip: &[usize]) -> Option<(usize, usize)> {
    debug_assert!(skip.len() < LINK_MATCHING_CAP);
    if !link.maximal {
        return link.matching.iter().copied().find(|&(a, b)| !skip.contains(&a) && !skip.contains(&b));
    }
    link.matching
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .filter(|c| !skip.contains(c))
        .find_map(|c| common_up_to(g, &[v, c], skip, 1).first().map(|&x| (c, x)))
}

/// P_3^3 with middle triangle `v1 v2 b`: disjoint edges in the links of `v1`
/// and `v2`, both avoiding the middle triangle.
fn middle_triangle_extends(g: &Graph, links: &[Link], v1: usize, v2: usize, b: usize) -> bool {
    let Some((p, q)) = link_edge_avoiding(g, v1, &links[v1], &[v2, b]) else {
        return false;
    };
    if link_edge_avoiding(g, v2, &links[v2], &[v1, b, p, q]).is_some() {
        return true;
    }
    // every candidate at v2 meets pq; stars cut to three leaves keep a solution if one exists
    let mut candidates = Vec::new();
    if g.has_edge(v2, p) && g.has_edge(v2, q) {
        candidates.push((p, q));
    }
    for (x, y) in [(p, q), (q, p)] {
        if g.has_edge(v2, x) {
            candidates.extend(common_up_to(g, &[v2, x], &[v1, b, y], 3).into_iter().map(|leaf| (x, leaf)));
        }
    }
    candidates
        .into_iter()
        .any(|(x, y)| link_edge_avoiding(g, v1, &links[v1], &[v2, b, x, y]).is_some())
}

fn has_p33(g: &Graph) -> bool {
    // Only the first five middle apexes matter: the two end edges use four vertices.
    let links: Vec<Link> = (0..g.order()).map(|v| link(g, v)).collect();
    g.edges().any(|(v1, v2)| {
        common_up_to(g, &[v1, v2], &[], 5)
            .into_iter()
            .any(|b| middle_triangle_extends(g, &links, v1, v2, b))
    })
}

#[inline]
fn middle_edge_extends(g: &Graph, v1: usize, v2: usize) -> bool {
    for v0 in g.neighbors(v1).filter(|&v0| v0 != v2) {
        if g.common_count(v0, v1) == 0 {
            continue;
        }
        for v3 in g.neighbors(v2).filter(|&v3| v3 != v1 && v3 != v0) {
            if p33_at(g, v0, v1, v2, v3) {
                return true;
            }
        }
    }
    false
}

fn p33_through(g: &Graph, x: usize) -> bool {
    // x as an end vertex or as an inner vertex; reversal covers the rest.
    for v1 in g.neighbors(x) {
        if g.common_count(x, v1) == 0 {
            continue;
        }
        for v2 in g.neighbors(v1).filter(|&v2| v2 != x) {
            if g.common_count(v1, v2) == 0 {
                continue;
            }
            for v3 in g.neighbors(v2).filter(|&v3| v3 != x && v3 != v1) {
                if p33_at(g, x, v1, v2, v3) {
                    return true;
                }
            }
        }
    }
    for v2 in g.neighbors(x) {
        if g.common_count(x, v2) == 0 {
            continue;
        }
        if middle_edge_extends(g, x, v2) {
            return true;
        }
    }
    false
}

/// Triangles meeting `t`, by inclusion-exclusion over vertex and edge counts.
fn triangles_meeting(g: &Graph, t: &Triangle) -> u64 {
    let per = &g.triangle_stats().per_vertex;
    let [a, b, c] = t.vertices();
    per[a] + per[b] + per[c]
        - g.common_count(a, b) as u64
        - g.common_count(a, c) as u64
        - g.common_count(b, c) as u64
        + 1
}

fn has_m23(g: &Graph) -> bool {
    let total = g.triangle_count();
    if total < 2 {
        return false;
    }
    let mut found = false;
    g.for_each_triangle(|t| {
        if !found && triangles_meeting(g, &t) < total {
            found = true;
        }
    });
    found
}

fn m23_through_edge(g: &Graph, u: usize, v: usize) -> bool {
    let total = g.triangle_count();
    g.common_neighbors(u, v)
        .expect("valid edge")
        .iter()
        .any(|w| triangles_meeting(g, &Triangle::new(u, v, w)) < total)
}

fn has_k5_minus(g: &Graph) -> bool {
    let mut found = false;
    g.for_each_triangle(|Triangle(a, b, c)| {
        if found {
            return;
        }
        let common = g
            .row(a)
            .iter()
            .zip(g.row(b))
            .zip(g.row(c))
            .map(|((x, y), z)| (x & y & z).count_ones())
            .sum::<u32>();
        found = common >= 2;
    });
    found
}

fn has_k5(g: &Graph) -> bool {
    let mut found = false;
    g.for_each_triangle(|Triangle(a, b, c)| {
        if found {
            return;
        }
        let common: Vec<u64> = g
            .row(a)
            .iter()
            .zip(g.row(b))
            .zip(g.row(c))
            .map(|((x, y), z)| x & y & z)
            .collect();
        found = crate::bits::Ones::new(&common)
            .any(|u| crate::bits::count_and(&common, g.row(u)) > 0);
    });
    found
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum MatchOrder {
    /// Pattern vertices in index order: first hit is lexicographically least.
    Index,
    /// Descending degree, preferring vertices attached to those already placed.
    Heuristic,
}

/// Backtracking subgraph matcher over host adjacency bitsets.
struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    /// For each position, earlier positions whose pattern vertices are adjacent.
    back: Vec<Vec<usize>>,
    pdeg: Vec<usize>,
    hdeg: Vec<usize>,
    /// Positions from here on form an independent set of pattern vertices,
    /// filled in one step by bipartite matching once the rest is placed.
    core_len: usize,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, mode: MatchOrder) -> Self {
        let pdeg: Vec<usize> = (0..pattern.order()).map(|p| pattern.degree(p)).collect();
        let hdeg: Vec<usize> = (0..host.order()).map(|v| host.degree(v)).collect();
        let k = pattern.order();
        let mut m = Matcher { host, pattern, order: Vec::new(), back: Vec::new(), pdeg, hdeg, core_len: k };
        let order = match mode {
            MatchOrder::Index => (0..k).collect(),
            MatchOrder::Heuristic => {
                let (order, core_len) = split_order(pattern, &m.pdeg, &[]);
                m.core_len = core_len;
                order
            }
        };
        m.set_order(order);
        m
    }

    fn set_order(&mut self, order: Vec<usize>) {
        self.back = order
            .iter()
            .enumerate()
            .map(|(i, &p)| (0..i).filter(|&j| self.pattern.has_edge(order[j], p)).collect())
            .collect();
        self.order = order;
    }

    fn first(&self) -> Option<Embedding> {
        let k = self.pattern.order();
        if k > self.host.order() {
            return None;
        }
        let mut images = vec![usize::MAX; k];
        let mut used = vec![0u64; crate::bits::words_for(self.host.order())];
        self.extend(0, &mut images, &mut used).then(|| self.embedding(&images))
    }

    /// Calls `f` on every embedding until it returns false; reports whether
    /// the enumeration ran to completion. Index order only.
    fn for_each(&self, mut f: impl FnMut(&[usize]) -> bool) -> bool {
        debug_assert_eq!(self.core_len, self.order.len());
        let k = self.pattern.order();
        if k > self.host.order() {
            return true;
        }
        let mut images = vec![usize::MAX; k];
        let mut used = vec![0u64; crate::bits::words_for(self.host.order())];
        self.visit(0, &mut images, &mut used, &mut f)
    }

    fn visit(&self, pos: usize, images: &mut [usize], used: &mut [u64], f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if pos == self.order.len() {
            return f(images);
        }
        let cand = self.candidates(pos, images, used);
        for v in crate::bits::Ones::new(&cand) {
            images[pos] = v;
            crate::bits::set(used, v);
            let go_on = self.visit(pos + 1, images, used, f);
            crate::bits::clear(used, v);
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Host vertices adjacent to the images of earlier neighbours, unused, of enough degree.
    fn candidates(&self, pos: usize, images: &[usize], used: &[u64]) -> Vec<u64> {
        let host = self.host;
        let mut cand = vec![0u64; used.len()];
        match self.back[pos].first() {
            Some(&j) => cand.copy_from_slice(host.row(images[j])),
            None => {
                for v in 0..host.order() {
                    crate::bits::set(&mut cand, v);
                }
            }
        }
        for &j in self.back[pos].iter().skip(1) {
            for (c, r) in cand.iter_mut().zip(host.row(images[j])) {
                *c &= r;
            }
        }
        for (c, u) in cand.iter_mut().zip(used.iter()) {
            *c &= !u;
        }
        let need = self.pdeg[self.order[pos]];
        let low: Vec<usize> = crate::bits::Ones::new(&cand).filter(|&v| self.hdeg[v] < need).collect();
        for v in low {
            crate::bits::clear(&mut cand, v);
        }
        cand
    }

    /// Some embedding maps a pattern edge onto `uv`.
    fn through_edge(&mut self, anchors: &[(usize, usize)], u: usize, v: usize) -> bool {
        let k = self.pattern.order();
        if k > self.host.order() {
            return false;
        }
        for &(a, b) in anchors {
            {
                if self.pdeg[a] > self.hdeg[u] || self.pdeg[b] > self.hdeg[v] {
                    continue;
                }
                let (order, core_len) = split_order(self.pattern, &self.pdeg, &[a, b]);
                self.core_len = core_len;
                self.set_order(order);
                let mut images = vec![usize::MAX; k];
                let mut used = vec![0u64; crate::bits::words_for(self.host.order())];
                images[0] = u;
                images[1] = v;
                crate::bits::set(&mut used, u);
                crate::bits::set(&mut used, v);
                if self.extend(2, &mut images, &mut used) {
                    return true;
                }
            }
        }
        false
    }

    fn embedding(&self, images: &[usize]) -> Embedding {
        let mut map = vec![0; images.len()];
        for (pos, &p) in self.order.iter().enumerate() {
            map[p] = images[pos];
        }
        Embedding { map }
    }

    /// `images` is indexed by position in `order`.
    fn extend(&self, pos: usize, images: &mut [usize], used: &mut [u64]) -> bool {
        if pos == self.order.len() {
            return true;
        }
        if pos == self.core_len {
            return self.match_tail(images, used);
        }
        let cand = self.candidates(pos, images, used);
        for v in crate::bits::Ones::new(&cand) {
            images[pos] = v;
            crate::bits::set(used, v);
            if self.extend(pos + 1, images, used) {
                return true;
            }
            crate::bits::clear(used, v);
        }
        false
    }
}

impl Matcher<'_> {
    /// Assigns the independent tail by augmenting paths. Each tail vertex only
    /// needs to see images of its (placed) neighbours, so the tail is a
    /// bipartite matching problem; `tail` candidates per vertex suffice.
    fn match_tail(&self, images: &mut [usize], used: &[u64]) -> bool {
        let tail = self.order.len() - self.core_len;
        let mut cands: Vec<Vec<usize>> = Vec::with_capacity(tail);
        for pos in self.core_len..self.order.len() {
            let cand = self.candidates(pos, images, used);
            let list: Vec<usize> = crate::bits::Ones::new(&cand).take(tail).collect();
            if list.is_empty() {
                return false;
            }
            cands.push(list);
        }
        let mut owner: Vec<(usize, usize)> = Vec::new();
        for i in 0..tail {
            let mut seen = Vec::new();
            if !augment(i, &cands, &mut owner, &mut seen) {
                return false;
            }
        }
        for (v, i) in owner {
            images[self.core_len + i] = v;
        }
        true
    }
}

/// Kuhn's augmenting path step; `owner` holds (host vertex, tail index) pairs.
fn augment(i: usize, cands: &[Vec<usize>], owner: &mut Vec<(usize, usize)>, seen: &mut Vec<usize>) -> bool {
    for &v in &cands[i] {
        if seen.contains(&v) {
            continue;
        }
        seen.push(v);
        match owner.iter().position(|&(w, _)| w == v) {
            None => {
                owner.push((v, i));
                return true;
            }
            Some(slot) => {
                let j = owner[slot].1;
                if augment(j, cands, owner, seen) {
                    let slot = owner.iter().position(|&(w, _)| w == v).expect("still owned");
                    owner[slot].1 = i;
                    return true;
                }
            }
        }
    }
    false
}

/// Heuristic order with a trailing independent set of low-degree vertices
/// outside `prefix`; returns the order and the length of its core.
fn split_order(pattern: &Graph, pdeg: &[usize], prefix: &[usize]) -> (Vec<usize>, usize) {
    let k = pattern.order();
    let mut by_degree: Vec<usize> = (0..k).filter(|p| !prefix.contains(p) && pdeg[*p] <= 2).collect();
    by_degree.sort_by_key(|&p| (pdeg[p], p));
    let mut tail: Vec<usize> = Vec::new();
    for p in by_degree {
        if tail.iter().all(|&q| !pattern.has_edge(p, q)) {
            tail.push(p);
        }
    }
    // keep at least one core vertex so the tail has anchors
    if tail.len() == k {
        tail.pop();
    }
    let core: Vec<usize> = (0..k).filter(|p| !tail.contains(p)).collect();
    let sub = pattern.induced_subgraph(&core).expect("in range");
    let sub_deg: Vec<usize> = core.iter().map(|&p| pdeg[p]).collect();
    let sub_prefix: Vec<usize> =
        prefix.iter().map(|p| core.iter().position(|q| q == p).expect("prefix is core")).collect();
    let mut order: Vec<usize> =
        heuristic_order(&sub, &sub_deg, &sub_prefix).into_iter().map(|i| core[i]).collect();
    let core_len = order.len();
    order.extend(tail);
    (order, core_len)
}

/// Connectivity to placed vertices first, then descending degree, lowest index on ties.
fn heuristic_order(pattern: &Graph, pdeg: &[usize], prefix: &[usize]) -> Vec<usize> {
    let k = pattern.order();
    let mut order: Vec<usize> = prefix.to_vec();
    let mut placed = vec![false; k];
    for &p in prefix {
        placed[p] = true;
    }
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let links = order.iter().filter(|&&q| pattern.has_edge(p, q)).count();
                (links > 0, links, pdeg[p], std::cmp::Reverse(p))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{thm2_extremal, thm3_extremal};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    const NAMED: [PatternSpec; 5] =
        [PatternSpec::C33, PatternSpec::P33, PatternSpec::M23, PatternSpec::K5, PatternSpec::K5Minus];

    #[test]
    fn pattern_layouts() {
        let c33 = PatternSpec::C33.graph();
        assert_eq!((c33.order(), c33.edge_count()), (6, 9));
        assert!(c33.has_edge(3, 0) && c33.has_edge(3, 1) && c33.has_edge(4, 2) && c33.has_edge(5, 1));
        let p33 = PatternSpec::P33.graph();
        assert!(p33.has_edge(6, 2) && p33.has_edge(6, 3));
        let m23 = PatternSpec::M23.graph();
        assert!(m23.has_edge(4, 0) && m23.has_edge(5, 3) && !m23.has_edge(1, 2));
        assert_eq!(PatternSpec::K5Minus.graph().edge_count(), 9);
        for p in NAMED {
            assert_eq!(p.order(), p.graph().order());
        }
    }

    #[test]
    fn c33_examples() {
        let k6 = Graph::complete(6).unwrap();
        let w = contains(&k6, &PatternSpec::C33).unwrap().unwrap();
        assert_eq!(w.map, vec![0, 1, 2, 3, 4, 5]);
        let blow = PatternSpec::C33.graph();
        assert_eq!(contains_c33(&blow).unwrap().map, vec![0, 1, 2, 3, 4, 5]);
        assert!(contains_c33(&Graph::complete(5).unwrap()).is_none());
        assert!(contains(&thm2_extremal(24).unwrap(), &PatternSpec::C33).unwrap().is_none());
        let m3 = build(FamilySpec::Matching { k: 3 }).unwrap();
        assert!(contains_c33(&m3.join(&m3).unwrap()).is_none());
    }

    #[test]
    fn p33_examples() {
        let blow = PatternSpec::P33.graph();
        let w = contains_p33(&blow).unwrap();
        assert!(w.is_valid(&blow, &blow));
        assert!(contains_p33(&Graph::complete(7).unwrap()).is_some());
        assert!(contains(&thm3_extremal(50).unwrap(), &PatternSpec::P33).unwrap().is_none());
        for n in 3..30 {
            assert!(contains_p33(&thm3_extremal(n).unwrap()).is_none(), "n = {n}");
        }
        assert!(contains_p33(&Graph::complete(6).unwrap()).is_none());
    }

    #[test]
    fn p33_at_the_boundary() {
        // grow P_3^3-free graphs edge by edge under the generic matcher, so
        // every probe sits next to the free/containing boundary
        let pattern = PatternSpec::P33.graph();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for trial in 0..40 {
            let n = 7 + trial % 8;
            let mut g = Graph::empty(n).unwrap();
            let mut pairs: Vec<(usize, usize)> = g.non_edges().collect();
            for i in (1..pairs.len()).rev() {
                pairs.swap(i, rng.gen_range(0..=i));
            }
            for (u, v) in pairs {
                g.add_edge(u, v).unwrap();
                let generic = find_embedding(&g, &pattern).unwrap().is_some();
                assert_eq!(has_p33(&g), generic, "{}", crate::graph6::encode(&g));
                if generic {
                    g.remove_edge(u, v).unwrap();
                }
            }
        }
    }

    #[test]
    fn m23_and_k5_minus_examples() {
        let k3 = Graph::complete(3).unwrap();
        let two = k3.disjoint_union(&k3).unwrap();
        let w = contains_m23(&two).unwrap();
        assert_eq!(w.map, vec![0, 1, 3, 4, 2, 5]);
        assert!(contains_m23(&thm3_extremal(20).unwrap()).is_none());

        let mut k5m = Graph::complete(5).unwrap();
        k5m.remove_edge(0, 1).unwrap();
        let w = contains_k5_minus(&k5m).unwrap();
        assert!(w.is_valid(&PatternSpec::K5Minus.graph(), &k5m));
        assert!(contains_k5(&k5m).is_none());
        assert!(contains_k5(&Graph::complete(5).unwrap()).is_some());

        let m2 = build(FamilySpec::Matching { k: 2 }).unwrap();
        let g = m2.join(&m2).unwrap();
        assert!(contains_k5_minus(&g).is_none());
        // oracle: scan all 5-subsets for >= 9 edges
        let mut dense = false;
        for mask in 0u32..256 {
            if mask.count_ones() == 5 {
                let vs: Vec<usize> = (0..8).filter(|i| mask >> i & 1 == 1).collect();
                dense |= g.induced_subgraph(&vs).unwrap().edge_count() >= 9;
            }
        }
        assert!(!dense);
    }

    #[test]
    fn explicit_budget() {
        let big = Graph::empty(17).unwrap();
        assert_eq!(
            contains(&Graph::empty(20).unwrap(), &PatternSpec::Explicit(big)),
            Err(DetectError::PatternTooLarge(17))
        );
        let k3 = PatternSpec::Explicit(Graph::complete(3).unwrap());
        assert!(contains(&Graph::complete(4).unwrap(), &k3).unwrap().is_some());
        assert!(is_free(&Graph::empty(4).unwrap(), &k3).unwrap());
    }

    #[test]
    fn witnesses_valid_and_lex_least() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(5..10);
            let g = random_graph(&mut rng, n, 0.6);
            for p in NAMED {
                let pg = p.graph();
                let found = contains(&g, &p).unwrap();
                let brute = brute_lex_least(&g, &pg);
                assert_eq!(found.map(|e| e.map), brute, "{p} on {g:?}");
            }
        }
    }

    /// Enumerates injective maps in lexicographic order.
    fn brute_lex_least(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
        fn rec(host: &Graph, pattern: &Graph, cur: &mut Vec<usize>) -> bool {
            let i = cur.len();
            if i == pattern.order() {
                return true;
            }
            for v in 0..host.order() {
                if cur.contains(&v) {
                    continue;
                }
                if (0..i).all(|j| !pattern.has_edge(i, j) || host.has_edge(v, cur[j])) {
                    cur.push(v);
                    if rec(host, pattern, cur) {
                        return true;
                    }
                    cur.pop();
                }
            }
            false
        }
        let mut cur = Vec::new();
        rec(host, pattern, &mut cur).then_some(cur)
    }

    #[test]
    fn explicit_patterns_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let blow = |base: FamilySpec| edge_blowup(&build(base).unwrap(), 3).unwrap();
        let mut patterns: Vec<Graph> = NAMED.iter().map(PatternSpec::graph).collect();
        patterns.push(blow(FamilySpec::Cycle { k: 4 }));
        patterns.push(blow(FamilySpec::Path { k: 2 }));
        patterns.push(build(FamilySpec::Star { k: 3 }).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap());
        for _ in 0..6 {
            let k = rng.gen_range(3..7);
            patterns.push(random_graph(&mut rng, k, 0.5));
        }
        for _ in 0..150 {
            let n = rng.gen_range(5..10);
            let g = random_graph(&mut rng, n, 0.6);
            for pg in &patterns {
                let spec = PatternSpec::Explicit(pg.clone());
                let found = contains(&g, &spec).unwrap();
                assert_eq!(found.is_some(), brute_lex_least(&g, pg).is_some(), "{pg:?} in {g:?}");
                if let Some(e) = found {
                    assert!(e.is_valid(pg, &g));
                }
                if is_free(&g, &spec).unwrap() {
                    for (u, v) in g.non_edges().collect::<Vec<_>>() {
                        let mut h = g.clone();
                        h.add_edge(u, v).unwrap();
                        let full = brute_lex_least(&h, pg).is_some();
                        assert_eq!(creates_with_edge(&h, &spec, u, v).unwrap(), full, "{pg:?} adding {u}{v}");
                    }
                }
            }
        }
    }

    #[test]
    fn through_edge_matches_full_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(6..11);
            let g = random_graph(&mut rng, n, 0.45);
            for p in NAMED {
                if !is_free(&g, &p).unwrap() {
                    continue;
                }
                for (u, v) in g.non_edges().collect::<Vec<_>>() {
                    let mut h = g.clone();
                    h.add_edge(u, v).unwrap();
                    assert_eq!(
                        creates_with_edge(&h, &p, u, v).unwrap(),
                        !is_free(&h, &p).unwrap(),
                        "{p} adding {u}{v} to {g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_hosts_are_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 0..6 {
            let g = Graph::complete(n).unwrap();
            assert!(contains_c33(&g).is_none());
            let r = random_graph(&mut rng, n, 0.5);
            assert!(contains_c33(&r).is_none());
        }
        assert!(contains_p33(&Graph::complete(6).unwrap()).is_none());
    }
}
