//! Canonical forms for graphs on at most 16 vertices.
//!
//! The form is the least upper-triangle bit string, read column by column
//! (`x01, x02, x12, x03, ...`, first bit most significant), over the vertex
//! orders produced by individualisation and equitable refinement. Refinement
//! only ever splits cells by neighbour counts in an order-independent way, so
//! the set of candidate orders is carried along by any isomorphism and the
//! minimum is an invariant.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_BUDGET: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    order: u8,
    code: u128,
}

impl CanonicalForm {
    pub(crate) fn from_parts(order: usize, code: u128) -> Self {
        CanonicalForm { order: order as u8, code }
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bit_len(&self) -> usize {
        let n = self.order();
        n * n.saturating_sub(1) / 2
    }

    /// Bit string packed MSB-first into bytes, zero padded.
    pub fn to_bytes(&self) -> Vec<u8> {
        let len = self.bit_len();
        let mut out = vec![0u8; len.div_ceil(8)];
        for i in 0..len {
            if self.bit(i) {
                out[i / 8] |= 0x80 >> (i % 8);
            }
        }
        out
    }

    fn bit(&self, i: usize) -> bool {
        self.code >> (self.bit_len() - 1 - i) & 1 == 1
    }

    /// The canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n).expect("order within budget");
        let mut i = 0;
        for j in 1..n {
            for r in 0..j {
                if self.bit(i) {
                    g.add_edge(r, j).expect("in range");
                }
                i += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.order)?;
        for b in self.to_bytes() {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, SearchError> {
    let n = g.order();
    if n > CANONICAL_BUDGET {
        return Err(SearchError::CanonicalBudget(n));
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).fold(0u16, |m, u| m | 1 << u))
        .collect();
    Ok(CanonicalForm { order: n as u8, code: canonical_code(&adj) })
}

/// Minimum code over the refinement tree of `adj`.
pub(crate) fn canonical_code(adj: &[u16]) -> u128 {
    let n = adj.len();
    if n <= 1 {
        return 0;
    }
    let all: u16 = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    let mut cells = vec![all];
    refine(adj, &mut cells);
    let mut best: Option<u128> = None;
    descend(adj, cells, &mut best);
    best.expect("at least one leaf")
}

/// Splits cells by neighbour counts into each cell until the partition is equitable.
fn refine(adj: &[u16], cells: &mut Vec<u16>) {
    'restart: loop {
        for wi in 0..cells.len() {
            let w = cells[wi];
            for ci in 0..cells.len() {
                let c = cells[ci];
                if c & (c - 1) == 0 {
                    continue;
                }
                let mut counts = [0u16; 17];
                let mut m = c;
                let first = (adj[m.trailing_zeros() as usize] & w).count_ones();
                let mut uniform = true;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let k = (adj[v] & w).count_ones();
                    uniform &= k == first;
                    counts[k as usize] |= 1 << v;
                }
                if uniform {
                    continue;
                }
                let parts: Vec<u16> = counts.iter().copied().filter(|&p| p != 0).collect();
                cells.splice(ci..=ci, parts);
                continue 'restart;
            }
        }
        return;
    }
}

fn leading_singletons(cells: &[u16]) -> usize {
    cells.iter().take_while(|c| c.count_ones() == 1).count()
}

/// Code bits determined by the first `fixed` positions, and how many there are.
fn prefix_code(adj: &[u16], cells: &[u16], fixed: usize) -> (u128, usize) {
    let order: Vec<usize> = cells[..fixed].iter().map(|c| c.trailing_zeros() as usize).collect();
    let mut code = 0u128;
    let mut bits = 0;
    for j in 1..fixed {
        for i in 0..j {
            code = code << 1 | u128::from(adj[order[i]] >> order[j] & 1);
            bits += 1;
        }
    }
    (code, bits)
}

fn descend(adj: &[u16], cells: Vec<u16>, best: &mut Option<u128>) {
    let n = adj.len();
    let total_bits = n * (n - 1) / 2;
    let fixed = leading_singletons(&cells);
    if let Some(b) = *best {
        let (prefix, bits) = prefix_code(adj, &cells, fixed);
        if bits > 0 && prefix > b >> (total_bits - bits) {
            return;
        }
    }
    if fixed == cells.len() {
        let (code, _) = prefix_code(adj, &cells, fixed);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    }
    let target = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete");
    let cell = cells[target];
    let mut tried: u16 = 0;
    let mut m = cell;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        // A twin of a tried vertex is exchanged with it by an automorphism
        // fixing every other vertex, so its subtree repeats the same codes.
        let mut t = tried;
        let mut twin = false;
        while t != 0 {
            let u = t.trailing_zeros() as usize;
            t &= t - 1;
            if adj[u] & !(1 << v) == adj[v] & !(1 << u) {
                twin = true;
                break;
            }
        }
        if twin {
            continue;
        }
        tried |= 1 << v;
        let mut next = cells.clone();
        next.splice(target..=target, [1u16 << v, cell & !(1 << v)]);
        refine(adj, &mut next);
        descend(adj, next, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, FamilySpec};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        g.relabel(&perm)
    }

    /// Least code over every permutation.
    fn brute_min_code(g: &Graph) -> u128 {
        fn rec(g: &Graph, order: &mut Vec<usize>, best: &mut u128) {
            let n = g.order();
            if order.len() == n {
                let mut code = 0u128;
                for j in 1..n {
                    for i in 0..j {
                        code = code << 1 | u128::from(g.has_edge(order[i], order[j]));
                    }
                }
                *best = (*best).min(code);
                return;
            }
            for v in 0..n {
                if !order.contains(&v) {
                    order.push(v);
                    rec(g, order, best);
                    order.pop();
                }
            }
        }
        let mut best = u128::MAX;
        rec(g, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c5 = build(FamilySpec::Cycle { k: 5 }).unwrap();
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&shuffled(&c5, &mut rng)).unwrap());
        for _ in 0..300 {
            let n = rng.gen_range(1..12);
            let mut g = Graph::empty(n).unwrap();
            let p = rng.gen_range(0.1..0.9);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let form = canonical_form(&g).unwrap();
            assert_eq!(form, canonical_form(&shuffled(&g, &mut rng)).unwrap());
            // the canonical graph is isomorphic to the input
            assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
            assert_eq!(form.to_graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn distinguishes_small_graphs() {
        let k3k1 = Graph::complete(3).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let p2k1 = build(FamilySpec::Path { k: 2 }).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_ne!(canonical_form(&k3k1).unwrap(), canonical_form(&p2k1).unwrap());
    }

    #[test]
    fn counts_isomorphism_classes() {
        // graphs on 0..=6 vertices: 1, 1, 2, 4, 11, 34, 156
        for (n, expect) in [(0usize, 1usize), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let mut seen = HashSet::new();
            let mut brute = HashSet::new();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                seen.insert(canonical_form(&g).unwrap());
                if n <= 5 {
                    brute.insert(brute_min_code(&g));
                }
            }
            assert_eq!(seen.len(), expect, "n = {n}");
            if n <= 5 {
                assert_eq!(brute.len(), expect);
            }
        }
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        for g in [
            Graph::empty(16).unwrap(),
            Graph::complete(16).unwrap(),
            build(FamilySpec::Matching { k: 8 }).unwrap(),
            build(FamilySpec::CompleteBipartite { s: 8, t: 8 }).unwrap(),
            build(FamilySpec::Cycle { k: 16 }).unwrap(),
        ] {
            let f = canonical_form(&g).unwrap();
            assert_eq!(f.to_graph().edge_count(), g.edge_count());
        }
        assert!(canonical_form(&Graph::empty(17).unwrap()).is_err());
    }

    #[test]
    fn byte_packing() {
        let k2 = Graph::complete(2).unwrap();
        let f = canonical_form(&k2).unwrap();
        assert_eq!(f.to_bytes(), vec![0x80]);
        assert_eq!(f.to_string(), "2:80");
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).unwrap().to_bytes(), Vec::<u8>::new());
    }
}
