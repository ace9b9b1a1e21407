//! Builders for the named graph families and the extremal constructions.
//!
//! Layouts are fixed so that graph6 output and canonical forms are
//! reproducible:
//!
//! * `Path k`: vertices `0..=k` in path order.
//! * `Cycle k`: vertices `0..k` in cyclic order.
//! * `Matching k`: edge `i` is `(2i, 2i + 1)`.
//! * `Star k`: centre `0`, leaves `1..=k`.
//! * `CompleteBipartite s t`: the `s` side first.
//! * `TuranGraph p m`: parts as equal as possible, larger parts first.
//!
//! Joins and unions keep the left operand at `0..n_left`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("odd order {0}: the matching-join construction is only extremal for even n")]
    EvenOnly(usize),
    #[error("variant {variant} out of range: n = {n} has {available} listed extremal graphs")]
    VariantOutOfRange { n: usize, variant: usize, available: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T, E = ConstructionError> = std::result::Result<T, E>;

/// A named graph family. `k` counts edges for matchings, stars, paths and cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Matching { k: usize },
    Star { k: usize },
    Path { k: usize },
    Cycle { k: usize },
    Complete { t: usize },
    CompleteBipartite { s: usize, t: usize },
    Empty { n: usize },
    TuranGraph { p: usize, m: usize },
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidParameter(msg.into())
}

pub fn build(spec: FamilySpec) -> Result<Graph> {
    let g = match spec {
        FamilySpec::Matching { k } => {
            let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::from_edges(2 * k, &edges)?
        }
        FamilySpec::Star { k } => {
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            Graph::from_edges(k + 1, &edges)?
        }
        FamilySpec::Path { k } => {
            let edges: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
            Graph::from_edges(k + 1, &edges)?
        }
        FamilySpec::Cycle { k } => {
            if k < 3 {
                return Err(invalid(format!("cycle needs at least 3 edges, got {k}")));
            }
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            Graph::from_edges(k, &edges)?
        }
        FamilySpec::Complete { t } => Graph::complete(t)?,
        FamilySpec::CompleteBipartite { s, t } => {
            Graph::empty(s)?.join(&Graph::empty(t)?)?
        }
        FamilySpec::Empty { n } => Graph::empty(n)?,
        FamilySpec::TuranGraph { p, m } => turan_graph(p, m)?,
    };
    Ok(g)
}

/// Part sizes of T_p(m), larger parts first.
pub fn turan_parts(p: usize, m: usize) -> Vec<usize> {
    (0..p).map(|i| m / p + usize::from(i < m % p)).collect()
}

fn turan_graph(p: usize, m: usize) -> Result<Graph> {
    if p == 0 {
        return Err(invalid("Turán graph needs at least one part"));
    }
    let mut g = Graph::empty(m)?;
    let mut part = Vec::with_capacity(m);
    for (i, size) in turan_parts(p, m).into_iter().enumerate() {
        part.extend(std::iter::repeat_n(i, size));
    }
    for u in 0..m {
        for v in u + 1..m {
            if part[u] != part[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

fn matching(k: usize) -> Result<Graph> {
    build(FamilySpec::Matching { k })
}

fn star(k: usize) -> Result<Graph> {
    build(FamilySpec::Star { k })
}

fn independent(n: usize) -> Result<Graph> {
    build(FamilySpec::Empty { n })
}

fn with_isolated(g: Graph) -> Result<Graph> {
    Ok(g.disjoint_union(&Graph::empty(1)?)?)
}

/// H^p: every edge of `base` becomes a K_p with p − 2 private vertices.
///
/// Vertices of `base` keep their indices; edge `i` in lexicographic order
/// gets the block `v(base) + i(p − 2) ..` of new vertices.
pub fn edge_blowup(base: &Graph, p: usize) -> Result<Graph> {
    if p < 3 {
        return Err(invalid(format!("edge blow-up needs p >= 3, got {p}")));
    }
    let edges: Vec<_> = base.edges().collect();
    let extra = p - 2;
    let n = base.order() + edges.len() * extra;
    let mut g = Graph::empty_with_cap(n, base.cap())?;
    for (i, &(u, v)) in edges.iter().enumerate() {
        let start = base.order() + i * extra;
        let clique: Vec<usize> = [u, v].into_iter().chain(start..start + extra).collect();
        for (a, &x) in clique.iter().enumerate() {
            for &y in &clique[a + 1..] {
                g.add_edge(x, y)?;
            }
        }
    }
    Ok(g)
}

/// Human-readable names of the listed extremal graphs for ex(n, C_3^3), in variant order.
pub fn thm1_variants(n: usize) -> Vec<String> {
    let k = n / 4;
    match n % 4 {
        0 => vec![format!("M_{k} + M_{k}")],
        1 => vec![
            format!("(M_{k} ∪ K_1) + M_{k}"),
            format!("S_{} + co-K_{}", 2 * k, 2 * k),
        ],
        2 => vec![
            format!("(M_{k} ∪ K_1) + (M_{k} ∪ K_1)"),
            format!("M_{} + M_{k}", k + 1),
            format!("S_{} + co-K_{}", 2 * k, 2 * k + 1),
        ],
        _ => vec![
            format!("(M_{k} ∪ K_1) + M_{}", k + 1),
            format!("S_{} + co-K_{}", 2 * k + 1, 2 * k + 1),
        ],
    }
}

/// The `variant`-th listed extremal graph for the edge Turán number of C_3^3.
///
/// Variant numbering follows the listing order per residue class of `n mod 4`;
/// it is a convention of this crate, not an intrinsic order.
pub fn thm1_extremal(n: usize, variant: usize) -> Result<Graph> {
    if n < 6 {
        return Err(invalid(format!("extremal graphs for C_3^3 are listed for n >= 6, got {n}")));
    }
    let available = thm1_variants(n).len();
    if variant >= available {
        return Err(ConstructionError::VariantOutOfRange { n, variant, available });
    }
    let k = n / 4;
    let g = match (n % 4, variant) {
        (0, _) => matching(k)?.join(&matching(k)?)?,
        (1, 0) => with_isolated(matching(k)?)?.join(&matching(k)?)?,
        (1, _) => star(2 * k)?.join(&independent(2 * k)?)?,
        (2, 0) => with_isolated(matching(k)?)?.join(&with_isolated(matching(k)?)?)?,
        (2, 1) => matching(k + 1)?.join(&matching(k)?)?,
        (2, _) => star(2 * k)?.join(&independent(2 * k + 1)?)?,
        (_, 0) => with_isolated(matching(k)?)?.join(&matching(k + 1)?)?,
        (_, _) => star(2 * k + 1)?.join(&independent(2 * k + 1)?)?,
    };
    debug_assert_eq!(g.order(), n);
    Ok(g)
}

/// M_{⌈n/4⌉} + M_{⌊n/4⌋} for even `n >= 8`.
pub fn thm2_extremal(n: usize) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(ConstructionError::EvenOnly(n));
    }
    if n < 8 {
        return Err(invalid(format!("matching-join construction is stated for n >= 8, got {n}")));
    }
    Ok(matching(n.div_ceil(4))?.join(&matching(n / 4)?)?)
}

/// K_1 + K_{⌊(n−1)/2⌋, ⌈(n−1)/2⌉} with the apex at vertex 0.
pub fn thm3_extremal(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("apex construction needs n >= 3, got {n}")));
    }
    let rest = n - 1;
    let bip = build(FamilySpec::CompleteBipartite { s: rest / 2, t: rest - rest / 2 })?;
    Ok(Graph::complete(1)?.join(&bip)?)
}

/// H(n, p, t) = K_{t−1} + T_p(n − t + 1).
pub fn h_npt(n: usize, p: usize, t: usize) -> Result<Graph> {
    if t == 0 || t > n || p < 2 {
        return Err(invalid(format!("H(n, p, t) needs n >= t >= 1 and p >= 2, got ({n}, {p}, {t})")));
    }
    Ok(Graph::complete(t - 1)?.join(&turan_graph(p, n - t + 1)?)?)
}

/// H(n, p, t) plus one edge between the two lowest vertices of the largest Turán class.
pub fn h_plus(n: usize, p: usize, t: usize) -> Result<Graph> {
    let mut g = h_npt(n, p, t)?;
    let largest = turan_parts(p, n - t + 1)[0];
    if largest < 2 {
        return Err(invalid(format!("H+(n, p, t) needs a Turán class of size >= 2, got ({n}, {p}, {t})")));
    }
    g.add_edge(t - 1, t)?;
    Ok(g)
}
