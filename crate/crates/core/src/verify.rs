//! Edge and triangle weights, the triangle-weight claims, and the vertex
//! deletion process behind the P_3^3 bound, as checks on concrete graphs.
//!
//! `w(uv) = 1/|N(uv)|` and `w(xyz) = w(xy) + w(xz) + w(yz)`, in exact
//! rationals. Summing over triangles counts each edge `|N(uv)|` times, so
//! `Σ w(xyz) = e(G)` on any cleaned graph.
//!
//! Claims 1 and 2 are established for every cleaned C_3^3-free graph on at
//! least 22 vertices; 3 and 4 only for triangle-maximal ones. Verdicts are
//! reported raw and callers decide what a failure means.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::detect::{contains_c33, contains_k5_minus, Embedding};
use crate::graph::{Graph, Triangle};

pub type Weight = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("edge {0}-{1} lies in no triangle; weights are defined on cleaned graphs only")]
    UncleanedGraph(usize, usize),
}

fn ratio_str<S: Serializer>(r: &Weight, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn big(r: Weight) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Exact weights of a cleaned graph and the split of its triangles at `1 + 2/n`.
#[derive(Debug, Clone)]
pub struct WeightProfile {
    pub n: usize,
    edges: BTreeMap<(usize, usize), Weight>,
    /// Every triangle with its weight, in lexicographic order.
    pub triangles: Vec<(Triangle, Weight)>,
    /// Triangles of weight at least `1 + 2/n`.
    pub t1: BTreeSet<Triangle>,
    pub t2: BTreeSet<Triangle>,
}

impl WeightProfile {
    pub fn edge_weight(&self, u: usize, v: usize) -> Option<Weight> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn edge_weights(&self) -> impl Iterator<Item = ((usize, usize), Weight)> + '_ {
        self.edges.iter().map(|(&e, &w)| (e, w))
    }

    pub fn triangle_weight(&self, t: &Triangle) -> Option<Weight> {
        self.triangles.binary_search_by(|(s, _)| s.cmp(t)).ok().map(|i| self.triangles[i].1)
    }

    /// `1 + 2/n`.
    pub fn threshold(&self) -> Weight {
        Weight::new(self.n as i64 + 2, self.n as i64)
    }

    /// Σ w(xyz).
    pub fn total(&self) -> BigRational {
        self.triangles.iter().fold(BigRational::zero(), |acc, &(_, w)| acc + big(w))
    }

    /// Σ w(xyz) / t(G); `None` without triangles.
    pub fn average(&self) -> Option<BigRational> {
        if self.triangles.is_empty() {
            None
        } else {
            Some(self.total() / BigRational::from_integer(BigInt::from(self.triangles.len())))
        }
    }
}

pub fn weight_profile(g: &Graph) -> Result<WeightProfile, VerifyError> {
    let mut edges = BTreeMap::new();
    for (u, v) in g.edges() {
        let c = g.common_count(u, v);
        if c == 0 {
            return Err(VerifyError::UncleanedGraph(u, v));
        }
        edges.insert((u, v), Weight::new(1, c as i64));
    }
    let n = g.order();
    let threshold = Weight::new(n as i64 + 2, n.max(1) as i64);
    let mut triangles = Vec::new();
    let mut t1 = BTreeSet::new();
    let mut t2 = BTreeSet::new();
    g.for_each_triangle(|t| {
        let Triangle(x, y, z) = t;
        let w = edges[&(x, y)] + edges[&(x, z)] + edges[&(y, z)];
        triangles.push((t, w));
        if w >= threshold {
            t1.insert(t);
        } else {
            t2.insert(t);
        }
    });
    triangles.sort_unstable();
    Ok(WeightProfile { n, edges, triangles, t1, t2 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimWitness {
    Triangle {
        triangle: Triangle,
        #[serde(serialize_with = "ratio_str")]
        weight: Weight,
    },
    Embedding(Embedding),
    Counts { triangles: u64, edges: usize, weight_sum: String },
    Unpaired(Triangle),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum ClaimVerdict {
    Holds,
    Fails(ClaimWitness),
    NotApplicable(String),
}

impl ClaimVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ClaimVerdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, ClaimVerdict::Fails(_))
    }
}

/// NotApplicable unless `g` is cleaned and C_3^3-free.
fn applicability(g: &Graph) -> Result<WeightProfile, ClaimVerdict> {
    let profile = weight_profile(g).map_err(|e| ClaimVerdict::NotApplicable(e.to_string()))?;
    if let Some(e) = contains_c33(g) {
        return Err(ClaimVerdict::NotApplicable(format!("graph contains C_3^3 at {e}")));
    }
    Ok(profile)
}

/// Five vertices `{x, y, z, u, v}` spanning at least nine edges.
fn k5_minus_closure(g: &Graph, t: Triangle) -> bool {
    let Triangle(x, y, z) = t;
    let mut around: Vec<usize> = [(x, y), (x, z), (y, z)]
        .iter()
        .flat_map(|&(a, b)| g.common_neighbors(a, b).expect("in range").to_vec())
        .filter(|&w| !t.contains(w))
        .collect();
    around.sort_unstable();
    around.dedup();
    around.iter().enumerate().any(|(i, &u)| {
        around[i + 1..].iter().any(|&v| {
            let set = [x, y, z, u, v];
            let edges = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))
                .filter(|&(a, b)| g.has_edge(set[a], set[b]))
                .count();
            edges >= 9
        })
    })
}

/// Every triangle has `1 + 1/(n−2) <= w <= 3`, or all edge weights `1/3`
/// with two more vertices completing a K_5^- or K_5.
pub fn check_claim1(g: &Graph) -> ClaimVerdict {
    let profile = match applicability(g) {
        Ok(p) => p,
        Err(v) => return v,
    };
    let n = g.order() as i64;
    let third = Weight::new(1, 3);
    for &(t, w) in &profile.triangles {
        let low = Weight::new(n - 1, n - 2);
        if low <= w && w <= Weight::from_integer(3) {
            continue;
        }
        let Triangle(x, y, z) = t;
        let thirds = [(x, y), (x, z), (y, z)].iter().all(|&(a, b)| profile.edge_weight(a, b) == Some(third));
        if thirds && k5_minus_closure(g, t) {
            continue;
        }
        return ClaimVerdict::Fails(ClaimWitness::Triangle { triangle: t, weight: w });
    }
    ClaimVerdict::Holds
}

/// `t(G) <= e(G)`, together with the identity `Σ w(xyz) = e(G)`.
pub fn check_claim2(g: &Graph) -> ClaimVerdict {
    let profile = match applicability(g) {
        Ok(p) => p,
        Err(v) => return v,
    };
    let total = profile.total();
    let t = g.triangle_count();
    let e = g.edge_count();
    if total != BigRational::from_integer(BigInt::from(e)) {
        return ClaimVerdict::Fails(ClaimWitness::Counts { triangles: t, edges: e, weight_sum: total.to_string() });
    }
    if t > e as u64 {
        let &(triangle, weight) = profile
            .triangles
            .iter()
            .find(|(_, w)| *w < Weight::one())
            .expect("weights sum to e(G) < t(G)");
        return ClaimVerdict::Fails(ClaimWitness::Triangle { triangle, weight });
    }
    ClaimVerdict::Holds
}

/// No K_5^- (hence no K_5).
pub fn check_claim3(g: &Graph) -> ClaimVerdict {
    if let Err(v) = applicability(g) {
        return v;
    }
    match contains_k5_minus(g) {
        Some(e) => ClaimVerdict::Fails(ClaimWitness::Embedding(e)),
        None => ClaimVerdict::Holds,
    }
}

/// Average triangle weight at least `1 + 2/n`. A failure names the lightest triangle.
pub fn check_claim4(g: &Graph) -> ClaimVerdict {
    let profile = match applicability(g) {
        Ok(p) => p,
        Err(v) => return v,
    };
    let Some(avg) = profile.average() else {
        return ClaimVerdict::Holds;
    };
    if avg >= big(profile.threshold()) {
        return ClaimVerdict::Holds;
    }
    let &(triangle, weight) = profile.triangles.iter().min_by_key(|(_, w)| *w).expect("nonempty");
    ClaimVerdict::Fails(ClaimWitness::Triangle { triangle, weight })
}

/// `φ(xyz, x'yz) = {xyz, x'yz, xx'y, xx'z}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiImage {
    pub pair: (Triangle, Triangle),
    pub companions: (Triangle, Triangle),
}

/// The partner `x'yz` of a light triangle and the two companions, or `None`
/// if the triangle does not have the K_4 structure.
fn phi_partner(g: &Graph, p: &WeightProfile, t: Triangle) -> Option<(Triangle, Triangle, Triangle)> {
    let half = Some(Weight::new(1, 2));
    let [a, b, c] = t.vertices();
    let apexes: Vec<(usize, usize, usize)> = [(a, b, c), (b, a, c), (c, a, b)]
        .into_iter()
        .filter(|&(x, y, z)| p.edge_weight(x, y) == half && p.edge_weight(x, z) == half)
        .collect();
    let &[(x, y, z)] = apexes.as_slice() else {
        return None;
    };
    let xp = g.common_neighbors(x, y).ok()?.iter().find(|&w| w != z)?;
    let nxz: BTreeSet<usize> = g.common_neighbors(x, z).ok()?.iter().collect();
    if nxz != BTreeSet::from([y, xp]) {
        return None;
    }
    if p.edge_weight(xp, y) != half || p.edge_weight(xp, z) != half {
        return None;
    }
    let partner = Triangle::new(xp, y, z);
    let (c1, c2) = (Triangle::new(x, xp, y), Triangle::new(x, xp, z));
    (p.t2.contains(&partner) && p.t1.contains(&c1) && p.t1.contains(&c2)).then_some((partner, c1, c2))
}

/// Pairs light triangles `(xyz, x'yz)` spanning a K_4 and checks the images
/// of φ are disjoint.
pub fn phi_pairing(g: &Graph) -> (Vec<PhiImage>, ClaimVerdict) {
    let profile = match applicability(g) {
        Ok(p) => p,
        Err(v) => return (Vec::new(), v),
    };
    let mut images = Vec::new();
    let mut used: BTreeSet<Triangle> = BTreeSet::new();
    for &t in &profile.t2 {
        if used.contains(&t) {
            continue;
        }
        let fail = (Vec::new(), ClaimVerdict::Fails(ClaimWitness::Unpaired(t)));
        let Some((partner, c1, c2)) = phi_partner(g, &profile, t) else {
            return fail;
        };
        // the relation must be symmetric
        if phi_partner(g, &profile, partner).map(|r| r.0) != Some(t) {
            return fail;
        }
        for s in [t, partner, c1, c2] {
            if !used.insert(s) {
                return fail;
            }
        }
        images.push(PhiImage { pair: (t, partner), companions: (c1, c2) });
    }
    (images, ClaimVerdict::Holds)
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub n: usize,
    pub triangles: u64,
    pub edges: usize,
    pub claim1: ClaimVerdict,
    pub claim2: ClaimVerdict,
    pub claim3: ClaimVerdict,
    pub claim4: ClaimVerdict,
    /// Σ w(xyz) / t(G) as an exact fraction, when defined.
    pub average_weight: Option<String>,
    pub phi_images: Vec<PhiImage>,
    pub pairing: ClaimVerdict,
}

impl ClaimReport {
    pub fn verdicts(&self) -> [(&'static str, &ClaimVerdict); 5] {
        [
            ("claim 1", &self.claim1),
            ("claim 2", &self.claim2),
            ("claim 3", &self.claim3),
            ("claim 4", &self.claim4),
            ("pairing", &self.pairing),
        ]
    }
}

pub fn check_claims(g: &Graph) -> ClaimReport {
    let (phi_images, pairing) = phi_pairing(g);
    ClaimReport {
        n: g.order(),
        triangles: g.triangle_count(),
        edges: g.edge_count(),
        claim1: check_claim1(g),
        claim2: check_claim2(g),
        claim3: check_claim3(g),
        claim4: check_claim4(g),
        average_weight: weight_profile(g).ok().and_then(|p| p.average()).map(|a| a.to_string()),
        phi_images,
        pairing,
    }
}

/// Tallies over many graphs: how often each claim held, failed, or did not apply.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimAudit {
    pub graphs: usize,
    pub holds: [usize; 4],
    pub fails: [usize; 4],
    pub not_applicable: [usize; 4],
    /// Graphs where `Σ w(xyz) = e(G)` was checked and failed.
    pub identity_failures: usize,
    /// First failing graph per claim, as graph6.
    pub first_failures: [Option<String>; 4],
}

pub fn audit_claims(graphs: &[Graph]) -> ClaimAudit {
    let per: Vec<([ClaimVerdict; 4], bool)> = graphs
        .par_iter()
        .map(|g| {
            let identity_ok = weight_profile(g)
                .map(|p| p.total() == BigRational::from_integer(BigInt::from(g.edge_count())))
                .unwrap_or(true);
            ([check_claim1(g), check_claim2(g), check_claim3(g), check_claim4(g)], identity_ok)
        })
        .collect();
    let mut audit = ClaimAudit { graphs: graphs.len(), ..ClaimAudit::default() };
    for (g, (verdicts, identity_ok)) in graphs.iter().zip(per) {
        audit.identity_failures += usize::from(!identity_ok);
        for (i, v) in verdicts.iter().enumerate() {
            match v {
                ClaimVerdict::Holds => audit.holds[i] += 1,
                ClaimVerdict::NotApplicable(_) => audit.not_applicable[i] += 1,
                ClaimVerdict::Fails(_) => {
                    audit.fails[i] += 1;
                    audit.first_failures[i].get_or_insert_with(|| crate::graph6::encode(g));
                }
            }
        }
    }
    audit
}

/// t(u, v): triangles containing `u` or `v`.
fn pair_triangles(g: &Graph, per: &[u64], u: usize, v: usize) -> u64 {
    let shared = if g.has_edge(u, v) { g.common_count(u, v) as u64 } else { 0 };
    per[u] + per[v] - shared
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisViolation {
    /// `t(v) < n/2 − 1`.
    Vertex { v: usize, triangles: u64 },
    /// `t(u, v) < n − 2`.
    Pair { u: usize, v: usize, triangles: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub n: usize,
    pub holds: bool,
    /// The least-indexed vertex violation, else the least pair.
    pub violation: Option<HypothesisViolation>,
}

fn first_violation(g: &Graph) -> Option<HypothesisViolation> {
    let n = g.order() as i64;
    let per = &g.triangle_stats().per_vertex;
    if let Some(v) = (0..g.order()).find(|&v| 2 * (per[v] as i64) < n - 2) {
        return Some(HypothesisViolation::Vertex { v, triangles: per[v] });
    }
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let t = pair_triangles(g, per, u, v);
            if (t as i64) < n - 2 {
                return Some(HypothesisViolation::Pair { u, v, triangles: t });
            }
        }
    }
    None
}

/// `t(v) >= n/2 − 1` for every vertex and `t(u, v) >= n − 2` for every pair.
pub fn check_lemma1_hypotheses(g: &Graph) -> HypothesisCheck {
    let violation = first_violation(g);
    HypothesisCheck { n: g.order(), holds: violation.is_none(), violation }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionStep {
    /// Deleted vertices, labelled as in the input graph.
    pub deleted: Vec<usize>,
    /// Order of the graph the vertices were deleted from.
    pub order_before: usize,
    pub triangles_destroyed: u64,
    /// Strict upper bound on the destroyed count that triggered the step.
    #[serde(serialize_with = "ratio_str")]
    pub allowance: Weight,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionTrace {
    pub initial_order: usize,
    pub initial_triangles: u64,
    pub steps: Vec<ReductionStep>,
    #[serde(serialize_with = "graph_as_graph6")]
    pub terminal: Graph,
    /// Input labels of the terminal vertices, in order.
    pub terminal_labels: Vec<usize>,
    pub terminal_order: usize,
    pub terminal_triangles: u64,
    #[serde(serialize_with = "ratio_str")]
    pub total_allowance: Weight,
    /// `t(G_ℓ) >= t(G) − Σ allowances`.
    pub accounting_holds: bool,
    /// When `t(G) >= ⌊(n−1)²/4⌋`: whether `t(G_ℓ) >= ⌊(ℓ−1)²/4⌋ + (n−ℓ)/2`.
    pub floor_bound_holds: Option<bool>,
    pub terminal_satisfies_hypotheses: bool,
}

fn graph_as_graph6<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::graph6::encode(g))
}

fn floor_quarter_sq(m: usize) -> u64 {
    let m = m.saturating_sub(1) as u64;
    m * m / 4
}

/// Deletes light vertices, then light pairs, until the hypotheses hold.
///
/// At order `m`: the least vertex with `t(v) < m/2 − 1` goes first; failing
/// that, the lexicographically least pair with `t(u, v) < m − 2`.
pub fn reduce_lemma1(g: &Graph) -> ReductionTrace {
    let n = g.order();
    let t0 = g.triangle_count();
    let mut cur = g.clone();
    let mut labels: Vec<usize> = (0..n).collect();
    let mut steps = Vec::new();
    let mut total_allowance = Weight::zero();
    while let Some(violation) = first_violation(&cur) {
        let m = cur.order() as i64;
        let (remove, allowance) = match violation {
            HypothesisViolation::Vertex { v, .. } => (vec![v], Weight::new(m - 2, 2)),
            HypothesisViolation::Pair { u, v, .. } => (vec![u, v], Weight::from_integer(m - 2)),
        };
        let before = cur.triangle_count();
        let next = cur.delete_vertices(&remove).expect("vertices in range");
        steps.push(ReductionStep {
            deleted: remove.iter().map(|&v| labels[v]).collect(),
            order_before: cur.order(),
            triangles_destroyed: before - next.triangle_count(),
            allowance,
        });
        total_allowance += allowance;
        labels.retain(|l| !steps.last().expect("just pushed").deleted.contains(l));
        cur = next;
    }
    let tl = cur.triangle_count();
    let ell = cur.order();
    let accounting_holds = Weight::from_integer(tl as i64) >= Weight::from_integer(t0 as i64) - total_allowance;
    let floor_bound_holds =
        (t0 >= floor_quarter_sq(n)).then(|| 2 * tl >= 2 * floor_quarter_sq(ell) + (n - ell) as u64);
    ReductionTrace {
        initial_order: n,
        initial_triangles: t0,
        steps,
        terminal_satisfies_hypotheses: check_lemma1_hypotheses(&cur).holds,
        terminal: cur,
        terminal_labels: labels,
        terminal_order: ell,
        terminal_triangles: tl,
        total_allowance,
        accounting_holds,
        floor_bound_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, edge_blowup, thm2_extremal, thm3_extremal, FamilySpec};

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    #[test]
    fn weights_of_small_graphs() {
        let p = weight_profile(&Graph::complete(4).unwrap()).unwrap();
        assert!(p.edge_weights().all(|(_, x)| x == w(1, 2)));
        assert!(p.triangles.iter().all(|&(_, x)| x == w(3, 2)));

        let apex = Graph::complete(1).unwrap().join(&build(FamilySpec::CompleteBipartite { s: 2, t: 2 }).unwrap()).unwrap();
        let p = weight_profile(&apex).unwrap();
        assert_eq!(p.edge_weight(1, 3), Some(w(1, 1)));
        assert_eq!(p.edge_weight(0, 1), Some(w(1, 2)));
        assert!(p.triangles.iter().all(|&(_, x)| x == w(2, 1)));

        let c5 = build(FamilySpec::Cycle { k: 5 }).unwrap();
        assert!(matches!(weight_profile(&c5), Err(VerifyError::UncleanedGraph(..))));
    }

    #[test]
    fn weight_identity() {
        for g in [thm2_extremal(24).unwrap(), thm3_extremal(17).unwrap(), Graph::complete(7).unwrap()] {
            let p = weight_profile(&g).unwrap();
            assert_eq!(p.total(), BigRational::from_integer(BigInt::from(g.edge_count())));
        }
    }

    #[test]
    fn claim_examples() {
        let g = thm2_extremal(24).unwrap();
        let r = check_claims(&g);
        assert!(r.claim1.holds() && r.claim2.holds() && r.claim3.holds() && r.claim4.holds());
        assert_eq!(r.average_weight.as_deref(), Some("13/12"));

        assert!(matches!(check_claim1(&Graph::complete(6).unwrap()), ClaimVerdict::NotApplicable(_)));
        let blow = edge_blowup(&Graph::complete(3).unwrap(), 3).unwrap();
        assert!(matches!(check_claim1(&blow), ClaimVerdict::NotApplicable(_)));

        let m2 = build(FamilySpec::Matching { k: 2 }).unwrap();
        let g = m2.join(&m2).unwrap();
        assert_eq!((g.triangle_count(), g.edge_count()), (16, 20));
        assert!(check_claim2(&g).holds());
        assert!(check_claim2(&thm3_extremal(9).unwrap()).holds());
        assert!(check_claim2(&Graph::complete(3).unwrap()).holds());
        assert!(check_claim3(&thm3_extremal(15).unwrap()).holds());

        let k4k4 = Graph::complete(4).unwrap().disjoint_union(&Graph::complete(4).unwrap()).unwrap();
        let r = check_claims(&k4k4);
        assert_eq!((r.triangles, r.edges), (8, 12));
        assert!(r.claim2.holds());
    }

    #[test]
    fn k5_closure_rescues_third_weights() {
        // inside K_5 every edge weight is 1/3 and every triangle weighs 1
        let k5 = Graph::complete(5).unwrap();
        assert!(check_claim1(&k5).holds());
        assert!(check_claim3(&k5).fails());
    }

    #[test]
    fn pairing_on_k4_chain() {
        // two K_4 sharing nothing: every triangle weighs 3/2, T_2 empty
        let k4 = Graph::complete(4).unwrap();
        let (images, v) = phi_pairing(&k4);
        assert!(images.is_empty() && v.holds());
    }

    #[test]
    fn degree_hypothesis_examples() {
        assert!(check_lemma1_hypotheses(&Graph::complete(6).unwrap()).holds);
        let k3k3 = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        let c = check_lemma1_hypotheses(&k3k3);
        assert!(!c.holds);
        assert_eq!(c.violation, Some(HypothesisViolation::Vertex { v: 0, triangles: 1 }));
    }

    #[test]
    fn reduction_examples() {
        let r = reduce_lemma1(&Graph::complete(5).unwrap());
        assert!(r.steps.is_empty());
        assert_eq!(r.terminal, Graph::complete(5).unwrap());

        let g = Graph::complete(3).unwrap().disjoint_union(&Graph::empty(10).unwrap()).unwrap();
        let r = reduce_lemma1(&g);
        // the least light vertex goes first, here a triangle vertex
        assert_eq!(r.steps[0].deleted, vec![0]);
        assert_eq!(r.steps[0].triangles_destroyed, 1);
        assert!(r.steps.iter().all(|s| s.deleted.len() == 1));
        let destroyed: u64 = r.steps.iter().map(|s| s.triangles_destroyed).sum();
        assert_eq!(destroyed, 1 - r.terminal_triangles);
        assert!(r.accounting_holds && r.terminal_satisfies_hypotheses);

        let r = reduce_lemma1(&Graph::empty(5).unwrap());
        assert!(r.steps.len() <= 5);
        assert!(r.terminal_satisfies_hypotheses);
        assert_eq!(r.terminal_order, 2);

        let r = reduce_lemma1(&thm3_extremal(40).unwrap());
        assert!(r.steps.is_empty());
        assert_eq!(r.floor_bound_holds, Some(true));
    }
}
