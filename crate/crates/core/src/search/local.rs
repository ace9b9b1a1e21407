//! Lower-bound witnesses by hill climbing over pattern-free graphs.
//!
//! Every state is H-free. Moves are a single edge insertion, or a swap that
//! deletes one edge and inserts another; only moves that keep t(G) from
//! dropping are taken, and a new edge is kept only if no copy of the pattern
//! runs through it. Equal-value moves are screened against a tabu list of
//! recent fingerprints (hash of the sorted degree/triangle profile).
//!
//! Restart `i` draws from its own generator seeded by `(seed, i)`, and the
//! best restart is the one with the highest value and lowest index, so the
//! outcome does not depend on how restarts are scheduled.

use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{binomial3, with_workers, SearchError, SearchMode, SearchOutcome};
use crate::constructions::{h_npt, h_plus, thm1_extremal, thm1_variants, thm2_extremal, thm3_extremal};
use crate::detect::{is_free, PatternSpec, PreparedPattern};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub seed: u64,
    pub restarts: usize,
    /// Moves attempted per restart.
    pub iterations: usize,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    pub tabu_len: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams { seed: 0x7572_616e, restarts: 50, iterations: 400, workers: None, tabu_len: 64 }
    }
}

/// Known constructions on `n` vertices that avoid `pattern`, by name, most triangles first.
pub fn construction_seeds(n: usize, pattern: &PatternSpec) -> Result<Vec<(String, Graph)>, SearchError> {
    let mut candidates: Vec<(String, Graph)> = Vec::new();
    if pattern.order() > n {
        candidates.push((format!("K_{n}"), Graph::complete(n)?));
    }
    if let Ok(g) = thm2_extremal(n) {
        candidates.push(("matching join".into(), g));
    }
    for (i, name) in thm1_variants(n).into_iter().enumerate() {
        if let Ok(g) = thm1_extremal(n, i) {
            candidates.push((name, g));
        }
    }
    if let Ok(g) = thm3_extremal(n) {
        candidates.push(("apex bipartite".into(), g));
    }
    if n >= 3 {
        candidates.push(("K_3 + co-K".into(), Graph::complete(3)?.join(&Graph::empty(n - 3)?)?));
    }
    for t in 1..=4 {
        if let Ok(g) = h_npt(n, 2, t) {
            candidates.push((format!("H({n}, 2, {t})"), g));
        }
        if let Ok(g) = h_plus(n, 2, t) {
            candidates.push((format!("H+({n}, 2, {t})"), g));
        }
    }
    let mut out = Vec::new();
    for (name, g) in candidates {
        if is_free(&g, pattern)? && !out.iter().any(|(_, h): &(String, Graph)| *h == g) {
            out.push((name, g));
        }
    }
    out.sort_by_key(|(_, g)| std::cmp::Reverse(g.triangle_count()));
    Ok(out)
}

fn restart_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Inserts `uv` if that keeps `g` free; reports whether it did.
fn try_insert(g: &mut Graph, pattern: &PreparedPattern, u: usize, v: usize) -> bool {
    g.insert_unchecked(u, v);
    if pattern.creates_with_edge(g, u, v) {
        g.delete_unchecked(u, v);
        false
    } else {
        true
    }
}

/// Greedy insertion of all pairs in random order.
fn random_maximal(n: usize, pattern: &PreparedPattern, rng: &mut ChaCha8Rng) -> Result<Graph, SearchError> {
    let mut g = Graph::empty(n)?;
    let mut pairs: Vec<(usize, usize)> = g.non_edges().collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        try_insert(&mut g, pattern, u, v);
    }
    Ok(g)
}

fn fingerprint(g: &Graph) -> u64 {
    let per = &g.triangle_stats().per_vertex;
    let mut profile: Vec<(usize, u64)> = (0..g.order()).map(|v| (g.degree(v), per[v])).collect();
    profile.sort_unstable();
    let mut h = DefaultHasher::new();
    profile.hash(&mut h);
    h.finish()
}

struct Climb<'a> {
    g: Graph,
    t: u64,
    pattern: &'a PreparedPattern,
    tabu: VecDeque<u64>,
    tabu_len: usize,
}

impl Climb<'_> {
    /// Accepts an equal-value state unless it is tabu.
    fn admit_plateau(&mut self) -> bool {
        if self.tabu_len == 0 {
            return true;
        }
        let f = fingerprint(&self.g);
        if self.tabu.contains(&f) {
            return false;
        }
        if self.tabu.len() == self.tabu_len {
            self.tabu.pop_front();
        }
        self.tabu.push_back(f);
        true
    }

    fn pick_gain(&self, rng: &mut ChaCha8Rng, min_gain: usize, skip: (usize, usize)) -> Option<(usize, usize)> {
        let cands: Vec<(usize, usize)> = self
            .g
            .non_edges()
            .filter(|&e| e != skip && self.g.common_count(e.0, e.1) >= min_gain)
            .collect();
        cands.choose(rng).copied()
    }

    fn step_insert(&mut self, rng: &mut ChaCha8Rng) {
        let min_gain = usize::from(rng.gen_bool(0.8));
        let Some((u, v)) = self.pick_gain(rng, min_gain, (0, 0)) else {
            return;
        };
        let gain = self.g.common_count(u, v) as u64;
        if try_insert(&mut self.g, self.pattern, u, v) {
            if gain == 0 && !self.admit_plateau() {
                self.g.delete_unchecked(u, v);
                return;
            }
            self.t += gain;
        }
    }

    fn step_swap(&mut self, rng: &mut ChaCha8Rng) {
        let edges: Vec<(usize, usize)> = self.g.edges().collect();
        let Some(&(a, b)) = edges.choose(rng) else {
            return;
        };
        let loss = self.g.common_count(a, b);
        self.g.delete_unchecked(a, b);
        let Some((u, v)) = self.pick_gain(rng, loss, (a, b)) else {
            self.g.insert_unchecked(a, b);
            return;
        };
        let gain = self.g.common_count(u, v);
        if !try_insert(&mut self.g, self.pattern, u, v) {
            self.g.insert_unchecked(a, b);
            return;
        }
        if gain == loss && !self.admit_plateau() {
            self.g.delete_unchecked(u, v);
            self.g.insert_unchecked(a, b);
            return;
        }
        self.t = self.t + gain as u64 - loss as u64;
    }
}

struct RestartResult {
    best: u64,
    graph: Graph,
    moves: u64,
}

fn run_restart(start: Graph, pattern: &PreparedPattern, params: &SearchParams, rng: &mut ChaCha8Rng) -> RestartResult {
    let t = start.triangle_count();
    let mut climb = Climb { g: start, t, pattern, tabu: VecDeque::new(), tabu_len: params.tabu_len };
    let mut best = RestartResult { best: t, graph: climb.g.clone(), moves: 0 };
    // K_n cannot be improved
    if binomial3(climb.g.order()) == t {
        return best;
    }
    for _ in 0..params.iterations {
        best.moves += 1;
        if rng.gen_bool(0.5) {
            climb.step_insert(rng);
        } else {
            climb.step_swap(rng);
        }
        if climb.t > best.best {
            best.best = climb.t;
            best.graph = climb.g.clone();
        }
    }
    debug_assert_eq!(best.graph.triangle_count(), best.best);
    best
}

/// Best H-free graph found over `params.restarts` climbs. The first restarts
/// start from the pattern-free constructions in [`construction_seeds`], the
/// rest from random maximal H-free graphs.
pub fn local_search(n: usize, pattern: &PatternSpec, params: &SearchParams) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let seeds = construction_seeds(n, pattern)?;
    let prepared = PreparedPattern::new(pattern)?;
    let restarts = params.restarts.max(1);
    let results: Vec<Result<RestartResult, SearchError>> = with_workers(params.workers, || {
        (0..restarts)
            .into_par_iter()
            .map(|i| {
                let mut rng = restart_rng(params.seed, i);
                let g = match seeds.get(i) {
                    Some((_, g)) => g.clone(),
                    None => random_maximal(n, &prepared, &mut rng)?,
                };
                Ok(run_restart(g, &prepared, params, &mut rng))
            })
            .collect()
    })?;
    let mut best: Option<RestartResult> = None;
    let mut moves = 0;
    for r in results {
        let r = r?;
        moves += r.moves;
        if best.as_ref().is_none_or(|b| r.best > b.best) {
            best = Some(r);
        }
    }
    let best = best.expect("at least one restart");
    Ok(SearchOutcome {
        n,
        forbidden: pattern.name(),
        best_value: best.best,
        witnesses: vec![best.graph],
        mode: SearchMode::Heuristic,
        nodes_explored: moves,
        wall_time: start.elapsed(),
        seed: Some(params.seed),
    })
}
