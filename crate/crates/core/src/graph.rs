//! Compact undirected simple graphs over dense vertex indices.
//!
//! Every vertex owns an adjacency row of `ceil(n / 64)` words. Triangle
//! statistics are computed on first use and dropped on any mutation.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::bits::{self, Ones};

/// Vertex cap applied by [`Graph::empty`] and every builder that does not ask otherwise.
pub const DEFAULT_VERTEX_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the vertex cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    LoopForbidden(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// A triangle `u < v < w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triangle(pub usize, pub usize, pub usize);

impl Triangle {
    /// Sorts the three vertices; callers guarantee they are distinct.
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        Triangle(t[0], t[1], t[2])
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.0, self.1, self.2]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v || self.2 == v
    }

    pub fn is_disjoint(&self, other: &Triangle) -> bool {
        other.vertices().iter().all(|&v| !self.contains(v))
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0, self.1, self.2)
    }
}

/// Exact triangle counts: `total` is t(G), `per_vertex[v]` is t(v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleStats {
    pub total: u64,
    pub per_vertex: Vec<u64>,
}

/// A set of vertices of a fixed graph, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { words: vec![0; bits::words_for(n)] }
    }

    pub(crate) fn from_words(words: Vec<u64>) -> Self {
        VertexSet { words }
    }

    pub fn insert(&mut self, v: usize) {
        bits::set(&mut self.words, v);
    }

    pub fn remove(&mut self, v: usize) {
        if v >> 6 < self.words.len() {
            bits::clear(&mut self.words, v);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v >> 6 < self.words.len() && bits::get(&self.words, v)
    }

    pub fn len(&self) -> usize {
        bits::count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones::new(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Graph {
    n: usize,
    cap: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
    stats: OnceLock<TriangleStats>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            cap: self.cap,
            words: self.words,
            rows: self.rows.clone(),
            edge_count: self.edge_count,
            stats: self.stats.clone(),
        }
    }
}

impl PartialEq for Graph {
    /// Labelled equality: same order and same edge set. The cap is configuration, not structure.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Edgeless graph on `n` vertices under the default cap.
pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::empty_with_cap(n, DEFAULT_VERTEX_CAP)
    }

    pub fn empty_with_cap(n: usize, cap: usize) -> Result<Graph> {
        if n > cap {
            return Err(GraphError::CapExceeded { n, cap });
        }
        let words = bits::words_for(n);
        Ok(Graph {
            n,
            cap,
            words,
            rows: vec![0; n * words],
            edge_count: 0,
            stats: OnceLock::new(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopForbidden(u));
        }
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::get(self.row(u), v)
    }

    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        if bits::get(self.row(u), v) {
            return false;
        }
        let w = self.words;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
        self.edge_count += 1;
        self.stats = OnceLock::new();
        true
    }

    pub(crate) fn delete_unchecked(&mut self, u: usize, v: usize) -> bool {
        if !bits::get(self.row(u), v) {
            return false;
        }
        let w = self.words;
        bits::clear(&mut self.rows[u * w..(u + 1) * w], v);
        bits::clear(&mut self.rows[v * w..(v + 1) * w], u);
        self.edge_count -= 1;
        self.stats = OnceLock::new();
        true
    }

    /// Adds `uv`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.insert_unchecked(u, v))
    }

    /// Removes `uv`; returns whether the edge was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.delete_unchecked(u, v))
    }

    /// Toggles `uv` and returns the resulting change in t(G).
    ///
    /// The change is ±|N(uv)|, evaluated without the edge itself. A cached
    /// [`TriangleStats`] is dropped like for any other mutation.
    pub fn toggle_edge(&mut self, u: usize, v: usize) -> Result<i64> {
        self.check_pair(u, v)?;
        let common = bits::count_and(self.row(u), self.row(v)) as i64;
        if self.delete_unchecked(u, v) {
            Ok(-common)
        } else {
            self.insert_unchecked(u, v);
            Ok(common)
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v).to_vec())
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut out = Vec::new();
            bits::for_each_and_above(self.row(u), self.row(u), u, |v| out.push((u, v)));
            out
        })
    }

    /// Vertex pairs `(u, v)` with `u < v` that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(move |&(u, v)| !self.has_edge(u, v))
    }

    /// N(u) ∩ N(v).
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_pair(u, v)?;
        Ok(VertexSet::from_words(
            self.row(u).iter().zip(self.row(v)).map(|(a, b)| a & b).collect(),
        ))
    }

    /// |N(u) ∩ N(v)| without bounds checks beyond indexing.
    #[inline]
    pub fn common_count(&self, u: usize, v: usize) -> usize {
        bits::count_and(self.row(u), self.row(v))
    }

    /// Every triangle in lexicographic order of `(u, v, w)`.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        self.for_each_triangle(|t| out.push(t));
        out
    }

    pub fn for_each_triangle(&self, mut f: impl FnMut(Triangle)) {
        for u in 0..self.n {
            let ru = self.row(u);
            bits::for_each_and_above(ru, ru, u, |v| {
                bits::for_each_and_above(ru, self.row(v), v, |w| f(Triangle(u, v, w)));
            });
        }
    }

    pub fn triangle_stats(&self) -> &TriangleStats {
        self.stats.get_or_init(|| {
            let mut per_vertex = vec![0u64; self.n];
            let mut total = 0u64;
            self.for_each_triangle(|Triangle(a, b, c)| {
                total += 1;
                per_vertex[a] += 1;
                per_vertex[b] += 1;
                per_vertex[c] += 1;
            });
            TriangleStats { total, per_vertex }
        })
    }

    /// t(G).
    pub fn triangle_count(&self) -> u64 {
        self.triangle_stats().total
    }

    /// t(v).
    pub fn triangles_at(&self, v: usize) -> Result<u64> {
        self.check_vertex(v)?;
        Ok(self.triangle_stats().per_vertex[v])
    }

    /// t(u, v): triangles containing `u`, `v` or both.
    pub fn triangles_at_pair(&self, u: usize, v: usize) -> Result<u64> {
        self.check_pair(u, v)?;
        let stats = self.triangle_stats();
        let both = if self.has_edge(u, v) { self.common_count(u, v) as u64 } else { 0 };
        Ok(stats.per_vertex[u] + stats.per_vertex[v] - both)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty_with_cap(n, self.cap.max(other.cap))?;
        for (u, v) in self.edges() {
            g.insert_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_unchecked(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.insert_unchecked(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// G[S], relabelled densely in increasing order of the kept vertices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for &v in &kept {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty_with_cap(kept.len(), self.cap)?;
        for (i, &a) in kept.iter().enumerate() {
            for (j, &b) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.insert_unchecked(i, j);
                }
            }
        }
        Ok(g)
    }

    /// G − S.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<Graph> {
        for &v in remove {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !remove.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Removes every edge that lies in no triangle.
    ///
    /// One pass reaches the fixed point: if `uv` is in no triangle then no
    /// triangle uses `uv`, so deleting it leaves |N(xy)| unchanged for every
    /// other edge `xy`.
    pub fn clean(&self) -> Graph {
        let mut g = self.clone();
        let dead: Vec<(usize, usize)> =
            self.edges().filter(|&(u, v)| self.common_count(u, v) == 0).collect();
        for (u, v) in dead {
            g.delete_unchecked(u, v);
        }
        g
    }

    /// Every edge lies in at least one triangle.
    pub fn is_clean(&self) -> bool {
        self.edges().all(|(u, v)| self.common_count(u, v) > 0)
    }

    /// Applies `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty_with_cap(self.n, self.cap).expect("same order");
        for (u, v) in self.edges() {
            g.insert_unchecked(perm[u], perm[v]);
        }
        g
    }

    /// Same labelled graph under a different vertex cap.
    pub fn with_cap(&self, cap: usize) -> Result<Graph> {
        if self.n > cap {
            return Err(GraphError::CapExceeded { n: self.n, cap });
        }
        let mut g = self.clone();
        g.cap = cap;
        Ok(g)
    }
}
