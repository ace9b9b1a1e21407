//! Exact ex(n, K_3, H) by isomorph-free generation.
//!
//! Level `k + 1` is grown from level `k` by adding one vertex joined to a
//! subset `S`, keeping only children in which the new vertex has minimum
//! degree, then deduplicating by canonical form. Every H-free graph `G` on
//! `k + 1` vertices is reached: delete a vertex `v` of minimum degree. `G − v`
//! is H-free because freeness is hereditary, so its canonical labelling sits
//! in level `k`, and joining a new vertex to the image of `N(v)` rebuilds `G`
//! with the new vertex at minimum degree.
//!
//! On the last level only optimal edge-maximal graphs are kept. Adding an
//! edge never lowers t(G), so some optimal H-free graph is edge-maximal and
//! the maximum over edge-maximal graphs is the maximum over all of them.

use std::time::Instant;

use rayon::prelude::*;

use super::canon::{canonical_code, CanonicalForm, CANONICAL_BUDGET};
use super::{binomial3, with_workers, SearchError, SearchMode, SearchOutcome};
use crate::detect::{is_free, DetectError, PatternSpec, PreparedPattern};
use crate::graph::Graph;

pub const DEFAULT_EXACT_BUDGET: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactParams {
    /// Largest n accepted; capped at the canonical-form limit.
    pub budget: usize,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for ExactParams {
    fn default() -> Self {
        ExactParams { budget: DEFAULT_EXACT_BUDGET, workers: None }
    }
}

/// Canonical forms of every H-free graph on `0..=n` vertices, level by level.
#[derive(Debug, Clone)]
pub struct FreeClasses {
    pub levels: Vec<Vec<CanonicalForm>>,
    /// Children examined after the minimum-degree filter.
    pub nodes_explored: u64,
}

impl FreeClasses {
    /// Canonically labelled graphs on `k` vertices.
    pub fn graphs(&self, k: usize) -> impl Iterator<Item = Graph> + '_ {
        self.levels[k].iter().map(CanonicalForm::to_graph)
    }
}

fn check_budget(n: usize, params: &ExactParams) -> Result<(), SearchError> {
    let budget = params.budget.min(CANONICAL_BUDGET);
    if n > budget {
        Err(SearchError::BudgetExceeded { n, budget })
    } else {
        Ok(())
    }
}

fn graph_of(adj: &[u16]) -> Graph {
    let n = adj.len();
    let mut g = Graph::empty(n).expect("within cap");
    for (u, &row) in adj.iter().enumerate() {
        let mut m = row & !((2u16 << u) - 1);
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            g.insert_unchecked(u, v);
        }
    }
    g
}

fn masks_of(code: u128, k: usize) -> Vec<u16> {
    let total = k * k.saturating_sub(1) / 2;
    let mut adj = vec![0u16; k];
    let mut i = 0;
    for j in 1..k {
        for r in 0..j {
            if code >> (total - 1 - i) & 1 == 1 {
                adj[r] |= 1 << j;
                adj[j] |= 1 << r;
            }
            i += 1;
        }
    }
    adj
}

fn triangles_of(adj: &[u16]) -> u64 {
    let mut t = 0;
    for (u, &row) in adj.iter().enumerate() {
        let mut m = row & !((2u16 << u) - 1);
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            t += u64::from((row & adj[v] & !((2u16 << v) - 1)).count_ones());
        }
    }
    t
}

/// Calls `f` on each child of `parent` that passes the minimum-degree filter.
fn for_each_child(parent: &[u16], mut f: impl FnMut(&[u16])) {
    let k = parent.len();
    let deg: Vec<u32> = parent.iter().map(|r| r.count_ones()).collect();
    let floor = deg.iter().copied().min().unwrap_or(0);
    let mut child = parent.to_vec();
    child.push(0);
    for s in 0u32..1 << k {
        let d = s.count_ones();
        if d > floor + 1 || (0..k).any(|v| deg[v] + (s >> v & 1) < d) {
            continue;
        }
        for v in 0..k {
            child[v] = parent[v] | ((s >> v & 1) as u16) << k;
        }
        child[k] = s as u16;
        f(&child);
    }
}

/// Free children of one parent: canonical codes and the number examined.
fn free_children(parent: &[u16], pattern: &PatternSpec) -> Result<(Vec<u128>, u64), DetectError> {
    let mut out = Vec::new();
    let mut seen = 0u64;
    let mut err = None;
    for_each_child(parent, |child| {
        seen += 1;
        if err.is_some() {
            return;
        }
        match is_free(&graph_of(child), pattern) {
            Ok(true) => out.push(canonical_code(child)),
            Ok(false) => {}
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    out.sort_unstable();
    out.dedup();
    Ok((out, seen))
}

fn edge_maximal(g: &mut Graph, pattern: &PreparedPattern) -> bool {
    let missing: Vec<(usize, usize)> = g.non_edges().collect();
    for (u, v) in missing {
        g.insert_unchecked(u, v);
        let creates = pattern.creates_with_edge(g, u, v);
        g.delete_unchecked(u, v);
        if !creates {
            return false;
        }
    }
    true
}

/// Best value among one parent's free children and the canonical codes of
/// the edge-maximal children attaining it.
fn best_children(parent: &[u16], pattern: &PreparedPattern) -> (u64, Vec<u128>, u64) {
    let mut best = 0u64;
    let mut tops: Vec<Vec<u16>> = Vec::new();
    let mut seen = 0u64;
    for_each_child(parent, |child| {
        seen += 1;
        let t = triangles_of(child);
        if t < best {
            return;
        }
        if pattern.is_free(&graph_of(child)) {
            if t > best || tops.is_empty() {
                best = t;
                tops.clear();
            }
            tops.push(child.to_vec());
        }
    });
    let mut codes = Vec::new();
    for c in &tops {
        if edge_maximal(&mut graph_of(c), pattern) {
            codes.push(canonical_code(c));
        }
    }
    codes.sort_unstable();
    codes.dedup();
    (best, codes, seen)
}

fn next_level(
    level: &[u128],
    k: usize,
    pattern: &PatternSpec,
) -> Result<(Vec<u128>, u64), DetectError> {
    let parts: Vec<Result<(Vec<u128>, u64), DetectError>> = level
        .par_iter()
        .map(|&code| free_children(&masks_of(code, k), pattern))
        .collect();
    let mut all = Vec::new();
    let mut seen = 0;
    for p in parts {
        let (codes, s) = p?;
        all.extend(codes);
        seen += s;
    }
    all.par_sort_unstable();
    all.dedup();
    Ok((all, seen))
}

fn form(order: usize, code: u128) -> CanonicalForm {
    CanonicalForm::from_parts(order, code)
}

/// Every H-free graph on at most `n` vertices up to isomorphism.
pub fn enumerate_free_classes(
    n: usize,
    pattern: &PatternSpec,
    params: &ExactParams,
) -> Result<FreeClasses, SearchError> {
    check_budget(n, params)?;
    with_workers(params.workers, || {
        let mut levels = vec![vec![0u128]];
        let mut nodes = 0;
        for k in 0..n {
            let (next, seen) = next_level(&levels[k], k, pattern)?;
            nodes += seen;
            levels.push(next);
        }
        Ok(FreeClasses {
            levels: levels
                .into_iter()
                .enumerate()
                .map(|(k, codes)| codes.into_iter().map(|c| form(k, c)).collect())
                .collect(),
            nodes_explored: nodes,
        })
    })?
}

/// ex(n, K_3, H) with the canonical forms of every optimal edge-maximal H-free graph.
pub fn exact_generalized_turan(
    n: usize,
    pattern: &PatternSpec,
    params: &ExactParams,
) -> Result<SearchOutcome, SearchError> {
    check_budget(n, params)?;
    let start = Instant::now();
    let outcome = |best_value, witnesses, nodes_explored| SearchOutcome {
        n,
        forbidden: pattern.name(),
        best_value,
        witnesses,
        mode: SearchMode::Exact,
        nodes_explored,
        wall_time: start.elapsed(),
        seed: None,
    };
    // Validates an explicit pattern before the shortcut below.
    is_free(&Graph::empty(0)?, pattern)?;
    if pattern.order() > n || n == 0 {
        let kn = Graph::complete(n)?;
        let witness = super::canonical_form(&kn)?.to_graph();
        return Ok(outcome(binomial3(n), vec![witness], 0));
    }
    with_workers(params.workers, || {
        let mut level = vec![0u128];
        let mut nodes = 0;
        for k in 0..n - 1 {
            let (next, seen) = next_level(&level, k, pattern)?;
            nodes += seen;
            level = next;
        }
        let prepared = PreparedPattern::new(pattern)?;
        let parts: Vec<(u64, Vec<u128>, u64)> = level
            .par_iter()
            .map(|&code| best_children(&masks_of(code, n - 1), &prepared))
            .collect();
        let mut best = 0;
        let mut codes = Vec::new();
        for (t, cs, seen) in parts {
            nodes += seen;
            if cs.is_empty() {
                continue;
            }
            if t > best {
                best = t;
                codes.clear();
            }
            if t == best {
                codes.extend(cs);
            }
        }
        codes.sort_unstable();
        codes.dedup();
        let witnesses = codes.into_iter().map(|c| form(n, c).to_graph()).collect();
        Ok(outcome(best, witnesses, nodes))
    })?
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::canonical_form;
    use std::collections::BTreeSet;

    /// Filter all labelled graphs on `n` vertices and deduplicate.
    fn naive_classes(n: usize, pattern: &PatternSpec) -> BTreeSet<CanonicalForm> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if is_free(&g, pattern).unwrap() {
                out.insert(canonical_form(&g).unwrap());
            }
        }
        out
    }

    fn k3_plus_empty(n: usize) -> Graph {
        Graph::complete(3).unwrap().join(&Graph::empty(n - 3).unwrap()).unwrap()
    }

    #[test]
    fn matches_naive_enumeration() {
        let p = ExactParams::default();
        for pattern in [PatternSpec::C33, PatternSpec::M23, PatternSpec::K5Minus] {
            let classes = enumerate_free_classes(6, &pattern, &p).unwrap();
            for n in 0..=6 {
                let got: BTreeSet<_> = classes.levels[n].iter().copied().collect();
                assert_eq!(got.len(), classes.levels[n].len());
                assert_eq!(got, naive_classes(n, &pattern), "{pattern} n = {n}");
            }
        }
        // nothing forbidden below the pattern order: all 156 graphs on 6 vertices
        let all = enumerate_free_classes(6, &PatternSpec::P33, &p).unwrap();
        assert_eq!(all.levels[6].len(), 156);
    }

    #[test]
    fn pattern_larger_than_n() {
        let p = ExactParams::default();
        let out = exact_generalized_turan(5, &PatternSpec::C33, &p).unwrap();
        assert_eq!(out.best_value, 10);
        assert_eq!(out.witnesses, vec![Graph::complete(5).unwrap()]);
        let out = exact_generalized_turan(6, &PatternSpec::P33, &p).unwrap();
        assert_eq!(out.best_value, 20);
    }

    #[test]
    fn matching_pattern_small_orders() {
        let p = ExactParams::default();
        let out = exact_generalized_turan(7, &PatternSpec::M23, &p).unwrap();
        assert_eq!(out.best_value, 13);
        let target = canonical_form(&k3_plus_empty(7)).unwrap().to_graph();
        assert!(out.witnesses.contains(&target));
        for w in &out.witnesses {
            assert!(is_free(w, &PatternSpec::M23).unwrap());
            assert_eq!(w.triangle_count(), 13);
        }
        let out = exact_generalized_turan(8, &PatternSpec::M23, &p).unwrap();
        assert_eq!(out.best_value, 16);
    }

    #[test]
    fn budget_and_workers() {
        let p = ExactParams { budget: 6, workers: Some(1) };
        assert_eq!(
            exact_generalized_turan(7, &PatternSpec::C33, &p).unwrap_err(),
            SearchError::BudgetExceeded { n: 7, budget: 6 }
        );
        let one = exact_generalized_turan(7, &PatternSpec::C33, &ExactParams { budget: 10, workers: Some(1) }).unwrap();
        let four = exact_generalized_turan(7, &PatternSpec::C33, &ExactParams { budget: 10, workers: Some(4) }).unwrap();
        assert!(one.same_result(&four));
    }

    #[test]
    fn witnesses_are_edge_maximal() {
        let out = exact_generalized_turan(7, &PatternSpec::C33, &ExactParams::default()).unwrap();
        assert!(!out.witnesses.is_empty());
        for w in &out.witnesses {
            let mut g = w.clone();
            assert!(edge_maximal(&mut g, &PreparedPattern::new(&PatternSpec::C33).unwrap()));
            assert_eq!(w.triangle_count(), out.best_value);
        }
    }
}
