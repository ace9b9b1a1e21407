//! Workbench for generalized Turán numbers of triangle, path and cycle edge blow-ups.
//!
//! * [`graph`]: bitset graphs, triangle statistics, joins and unions.
//! * [`constructions`]: named families and the extremal constructions.
//! * [`formulas`]: closed-form values with their validity ranges.
//! * [`detect`]: pattern containment (C_3^3, P_3^3, 2K_3, K_5, K_5^- and explicit graphs).
//! * [`search`]: exact isomorph-free enumeration and local search.
//! * [`verify`]: edge weights, triangle-weight claims and the vertex deletion process.
//! * [`graph6`], [`ledger`], [`cli`]: interchange format, results ledger and the command runner.

mod bits;

pub mod cli;
pub mod constructions;
pub mod detect;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod ledger;
pub mod search;
pub mod verify;

pub use bits::Ones;
pub use constructions::{build, edge_blowup, FamilySpec};
pub use detect::{contains, Embedding, PatternSpec};
pub use formulas::{BoundKind, BoundValue};
pub use graph::{empty_graph, Graph, GraphError, Triangle, TriangleStats, VertexSet};
