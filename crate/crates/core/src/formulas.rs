//! Closed-form extremal values and bounds, tagged with the range where they are asserted.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Exact,
    UpperBound,
    LowerBound,
}

/// Which result a value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// ex(n, C_3^3), the edge Turán number.
    C33Edges,
    /// ex(n, K_3, C_3^3).
    C33Triangles,
    /// ex(n, K_3, P_3^3).
    P33Triangles,
    /// ex(n, K_3, M_2^3).
    M23Triangles,
}

impl Source {
    /// Index used by the `verify-theorem` command.
    pub fn theorem(self) -> u8 {
        match self {
            Source::C33Edges => 1,
            Source::C33Triangles => 2,
            Source::P33Triangles => 3,
            Source::M23Triangles => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub n: u64,
    pub value: u64,
    pub kind: BoundKind,
    /// Smallest n for which the result is asserted.
    pub valid_from: u64,
    pub source: Source,
    /// Set when the real-valued expression was floored because it is not integral.
    pub odd_case: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("n = {n} is below the smallest order {valid_from} this formula covers")]
    BelowThreshold { n: u64, valid_from: u64 },
}

pub const C33_EDGES_FROM: u64 = 6;
pub const C33_TRIANGLES_FROM: u64 = 22;
pub const P33_TRIANGLES_FROM: u64 = 300 * 300 * 300;
pub const P33_DEFINED_FROM: u64 = 3;
pub const M23_TRIANGLES_FROM: u64 = 7;

fn require(n: u64, valid_from: u64) -> Result<(), FormulaError> {
    if n < valid_from {
        Err(FormulaError::BelowThreshold { n, valid_from })
    } else {
        Ok(())
    }
}

/// ⌊(n − 1)² / 4⌋.
pub fn apex_bipartite_triangles(n: u64) -> u64 {
    let m = n.saturating_sub(1);
    m * m / 4
}

/// ex(n, C_3^3): ⌊n²/4⌋ + ⌊n/2⌋, or n²/4 + n/2 − 1 when n ≡ 2 (mod 4).
pub fn ex_c33_edges(n: u64) -> Result<BoundValue, FormulaError> {
    require(n, C33_EDGES_FROM)?;
    let value = if n % 4 == 2 { n * n / 4 + n / 2 - 1 } else { n * n / 4 + n / 2 };
    Ok(BoundValue {
        n,
        value,
        kind: BoundKind::Exact,
        valid_from: C33_EDGES_FROM,
        source: Source::C33Edges,
        odd_case: false,
    })
}

/// Upper bound n²/4 − 1 + 1_{4|n} on ex(n, K_3, C_3^3); exact for even n.
///
/// For odd n the expression is not an integer and its floor is reported as an
/// upper bound with `odd_case` set.
pub fn ex_c33_triangles_bound(n: u64) -> Result<BoundValue, FormulaError> {
    require(n, C33_TRIANGLES_FROM)?;
    let (value, kind, odd_case) = if n.is_multiple_of(2) {
        (n * n / 4 - 1 + u64::from(n.is_multiple_of(4)), BoundKind::Exact, false)
    } else {
        ((n * n - 4) / 4, BoundKind::UpperBound, true)
    };
    Ok(BoundValue {
        n,
        value,
        kind,
        valid_from: C33_TRIANGLES_FROM,
        source: Source::C33Triangles,
        odd_case,
    })
}

/// ⌊(n − 1)²/4⌋. Exact from 300³ on; below that only the construction's value, a lower bound.
pub fn ex_p33_triangles(n: u64) -> Result<BoundValue, FormulaError> {
    require(n, P33_DEFINED_FROM)?;
    Ok(BoundValue {
        n,
        value: apex_bipartite_triangles(n),
        kind: if n >= P33_TRIANGLES_FROM { BoundKind::Exact } else { BoundKind::LowerBound },
        valid_from: P33_TRIANGLES_FROM,
        source: Source::P33Triangles,
        odd_case: false,
    })
}

/// max{3n − 8, ⌊(n − 1)²/4⌋}.
pub fn ex_m23_triangles(n: u64) -> Result<BoundValue, FormulaError> {
    require(n, M23_TRIANGLES_FROM)?;
    Ok(BoundValue {
        n,
        value: (3 * n - 8).max(apex_bipartite_triangles(n)),
        kind: BoundKind::Exact,
        valid_from: M23_TRIANGLES_FROM,
        source: Source::M23Triangles,
        odd_case: false,
    })
}

/// Looks up a formula by its command-line name.
pub fn by_name(name: &str) -> Option<fn(u64) -> Result<BoundValue, FormulaError>> {
    let f: fn(u64) -> Result<BoundValue, FormulaError> = match name {
        "ex_c33" | "ex_c33_edges" => ex_c33_edges,
        "ex_c33_triangles" | "ex_k3_c33" => ex_c33_triangles_bound,
        "ex_p33" | "ex_k3_p33" => ex_p33_triangles,
        "ex_m23" | "ex_k3_m23" => ex_m23_triangles,
        _ => return None,
    };
    Some(f)
}

pub const FORMULA_NAMES: [&str; 4] = ["ex_c33_edges", "ex_c33_triangles", "ex_p33", "ex_m23"];
