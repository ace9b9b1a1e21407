//! Extremal search: exact values by isomorph-free enumeration at small n,
//! lower-bound witnesses by local search above that.

mod canon;
mod conjecture;
mod exact;
mod local;

use std::time::Duration;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::detect::DetectError;
use crate::graph::{Graph, GraphError};

pub use canon::{canonical_form, CanonicalForm, CANONICAL_BUDGET};
pub use conjecture::{explore_conjecture, ConjectureEntry, ConjectureReport, ConjectureVerdict};
pub use exact::{enumerate_free_classes, exact_generalized_turan, ExactParams, FreeClasses, DEFAULT_EXACT_BUDGET};
pub use local::{construction_seeds, local_search, SearchParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("exact search on {n} vertices exceeds the budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    #[error("canonical forms are limited to {CANONICAL_BUDGET} vertices, got {0}")]
    CanonicalBudget(usize),
    #[error("conjecture exploration needs k >= 4, got {0}")]
    ConjectureK(usize),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Detect(#[from] DetectError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub forbidden: String,
    pub best_value: u64,
    /// Exact mode: canonical labellings of every optimal edge-maximal graph.
    /// Heuristic mode: the best graph found.
    #[serde(serialize_with = "graphs_as_graph6")]
    pub witnesses: Vec<Graph>,
    pub mode: SearchMode,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    pub seed: Option<u64>,
}

impl SearchOutcome {
    /// Equality of everything except wall time.
    pub fn same_result(&self, other: &SearchOutcome) -> bool {
        self.n == other.n
            && self.forbidden == other.forbidden
            && self.best_value == other.best_value
            && self.witnesses == other.witnesses
            && self.mode == other.mode
            && self.nodes_explored == other.nodes_explored
            && self.seed == other.seed
    }
}

fn graphs_as_graph6<S: Serializer>(graphs: &[Graph], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(graphs.iter().map(crate::graph6::encode))
}

/// Runs `f` on a pool of `workers` threads, or on the global pool.
pub(crate) fn with_workers<T: Send>(
    workers: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> Result<T, SearchError> {
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| SearchError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

pub(crate) fn binomial3(n: usize) -> u64 {
    let n = n as u64;
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}
