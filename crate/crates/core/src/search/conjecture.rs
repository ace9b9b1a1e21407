//! Conjectured extremal graphs for cycle and path blow-ups against local search.
//!
//! For the blow-ups C_k^3 and P_k^3 (edges of the k-cycle or the k-edge path
//! each grown into a triangle) the candidate is H(n, 2, t) for odd `k` and
//! H+(n, 2, t) for even `k`, with t = ⌊(k − 1)/2⌋ + 1.

use serde::Serialize;

use super::{binomial3, local_search, SearchError, SearchParams};
use crate::constructions::{build, edge_blowup, h_npt, h_plus, FamilySpec};
use crate::detect::{is_free, PatternSpec};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureVerdict {
    /// Search matched the conjectured value.
    Agree,
    /// Search beat the conjectured value.
    Exceed,
    /// Search stayed below the conjectured value.
    Shortfall,
    /// The pattern has more vertices than `n`; K_n is extremal.
    Vacuous,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureEntry {
    pub pattern: String,
    pub pattern_order: usize,
    pub candidate: String,
    pub candidate_value: u64,
    pub candidate_free: bool,
    pub search_best: u64,
    pub verdict: ConjectureVerdict,
    #[serde(serialize_with = "graph_as_graph6")]
    pub search_witness: Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub k: usize,
    pub n: usize,
    pub entries: Vec<ConjectureEntry>,
}

fn graph_as_graph6<S: serde::Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::graph6::encode(g))
}

pub fn explore_conjecture(k: usize, n: usize, params: &SearchParams) -> Result<ConjectureReport, SearchError> {
    if k < 4 {
        return Err(SearchError::ConjectureK(k));
    }
    let t = (k - 1) / 2 + 1;
    let (candidate_name, candidate) = if k % 2 == 1 {
        (format!("H({n}, 2, {t})"), h_npt(n, 2, t))
    } else {
        (format!("H+({n}, 2, {t})"), h_plus(n, 2, t))
    };
    let patterns = [
        (format!("C_{k}^3"), edge_blowup(&build(FamilySpec::Cycle { k })?, 3)?),
        (format!("P_{k}^3"), edge_blowup(&build(FamilySpec::Path { k })?, 3)?),
    ];
    let mut entries = Vec::new();
    for (name, h) in patterns {
        let order = h.order();
        let pattern = PatternSpec::Explicit(h);
        if order > n {
            let kn = Graph::complete(n)?;
            entries.push(ConjectureEntry {
                pattern: name,
                pattern_order: order,
                candidate: candidate_name.clone(),
                candidate_value: candidate.as_ref().map_or(0, Graph::triangle_count),
                candidate_free: candidate.is_ok(),
                search_best: binomial3(n),
                verdict: ConjectureVerdict::Vacuous,
                search_witness: kn,
            });
            continue;
        }
        let cand = candidate.clone()?;
        let value = cand.triangle_count();
        let free = is_free(&cand, &pattern)?;
        let out = local_search(n, &pattern, params)?;
        let verdict = match out.best_value.cmp(&value) {
            std::cmp::Ordering::Equal => ConjectureVerdict::Agree,
            std::cmp::Ordering::Greater => ConjectureVerdict::Exceed,
            std::cmp::Ordering::Less => ConjectureVerdict::Shortfall,
        };
        entries.push(ConjectureEntry {
            pattern: name,
            pattern_order: order,
            candidate: candidate_name.clone(),
            candidate_value: value,
            candidate_free: free,
            search_best: out.best_value,
            verdict,
            search_witness: out.witnesses.into_iter().next().expect("one witness"),
        });
    }
    Ok(ConjectureReport { k, n, entries })
}
