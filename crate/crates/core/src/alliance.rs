//! Predicates and exact solvers for domination, defensive k-alliances,
//! global defensive k-alliances, and 1-perfect codes.
//!
//! The solvers enumerate candidate sets by increasing cardinality and,
//! within a cardinality, in lexicographic order of the sorted member
//! list, so the reported witness is always the lexicographically smallest
//! minimum set. The parallel variants split the search space by the first
//! chosen vertex and reduce deterministically, returning the identical
//! witness.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{AllianceValue, Graph, VertexSet};

/// Hard limit of the exact search: one machine word of vertices.
pub const SOLVER_LIMIT: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AllianceError {
    #[error("alliance predicates are undefined for the empty set")]
    EmptySet,
    #[error("graph order {n} exceeds the solver limit of {limit} vertices")]
    TooLarge { n: usize, limit: usize },
}

/// Outcome of an exact solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: AllianceValue,
    /// Lexicographically smallest minimum set; absent iff the value is
    /// infinite.
    pub witness: Option<VertexSet>,
    /// Candidate sets tested; diagnostic only, and not deterministic
    /// under parallel execution.
    pub nodes_explored: u64,
}

fn assert_universe(g: &Graph, s: &VertexSet) {
    assert_eq!(
        s.universe(),
        g.n(),
        "vertex set universe does not match graph order"
    );
}

/// True iff every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    assert_universe(g, s);
    let mut member = vec![false; g.n()];
    for v in s.iter() {
        member[v] = true;
    }
    (0..g.n()).all(|v| member[v] || g.neighbors(v).iter().any(|&u| member[u]))
}

/// True iff every member of `s` has at least `k` more neighbors inside
/// `s` than outside. The empty set is an error, not `false`.
pub fn is_defensive_k_alliance(g: &Graph, s: &VertexSet, k: i64) -> Result<bool, AllianceError> {
    assert_universe(g, s);
    if s.is_empty() {
        return Err(AllianceError::EmptySet);
    }
    let mut member = vec![false; g.n()];
    for v in s.iter() {
        member[v] = true;
    }
    Ok(s.iter().all(|v| {
        let inside = g.neighbors(v).iter().filter(|&&u| member[u]).count() as i64;
        let outside = g.degree(v) as i64 - inside;
        inside >= outside + k
    }))
}

/// True iff `s` is both a dominating set and a defensive k-alliance.
pub fn is_gdka(g: &Graph, s: &VertexSet, k: i64) -> Result<bool, AllianceError> {
    Ok(is_defensive_k_alliance(g, s, k)? && is_dominating(g, s))
}

/// Smallest dominating set.
pub fn domination_number(g: &Graph) -> Result<SolveResult, AllianceError> {
    solve(g, Goal::dominating(), false)
}

pub fn domination_number_par(g: &Graph) -> Result<SolveResult, AllianceError> {
    solve(g, Goal::dominating(), true)
}

/// Smallest global defensive k-alliance; infinite if none exists.
pub fn gdka_number(g: &Graph, k: i64) -> Result<SolveResult, AllianceError> {
    solve(g, Goal::global(k), false)
}

pub fn gdka_number_par(g: &Graph, k: i64) -> Result<SolveResult, AllianceError> {
    solve(g, Goal::global(k), true)
}

/// Smallest defensive k-alliance (no domination requirement); infinite if
/// none exists.
pub fn dka_number(g: &Graph, k: i64) -> Result<SolveResult, AllianceError> {
    solve(g, Goal::defensive(k), false)
}

pub fn dka_number_par(g: &Graph, k: i64) -> Result<SolveResult, AllianceError> {
    solve(g, Goal::defensive(k), true)
}

/// Visits every minimum global defensive k-alliance in lexicographic
/// order until the visitor returns `false`. Returns the alliance number.
pub fn visit_minimum_gdkas(
    g: &Graph,
    k: i64,
    mut visit: impl FnMut(&VertexSet) -> bool,
) -> Result<AllianceValue, AllianceError> {
    let result = gdka_number(g, k)?;
    let Some(cardinality) = result.value.finite() else {
        return Ok(AllianceValue::Infinite);
    };
    let bg = BitGraph::build(g)?;
    let goal = Goal::global(k);
    let search = Search::new(&bg, goal.eligible(g), goal);
    search.for_each_hit(cardinality, &mut |mask| {
        visit(&VertexSet::from_mask(g.n(), mask))
    });
    Ok(result.value)
}

/// Finds a set whose closed neighborhoods partition the vertex set, or
/// `None` if the graph has no such set. Deterministic: the search always
/// extends from the lowest uncovered vertex.
pub fn find_1_perfect_code(g: &Graph) -> Result<Option<VertexSet>, AllianceError> {
    if g.n() == 0 {
        return Ok(Some(VertexSet::empty(0)));
    }
    let bg = BitGraph::build(g)?;
    Ok(pcode(&bg, 0, 0).map(|mask| VertexSet::from_mask(g.n(), mask)))
}

fn pcode(bg: &BitGraph, covered: u64, chosen: u64) -> Option<u64> {
    if covered == bg.full {
        return Some(chosen);
    }
    let v = (!covered).trailing_zeros() as usize;
    let mut candidates = bg.closed[v];
    while candidates != 0 {
        let d = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        if bg.closed[d] & covered == 0 {
            if let Some(hit) = pcode(bg, covered | bg.closed[d], chosen | 1u64 << d) {
                return Some(hit);
            }
        }
    }
    None
}

#[derive(Clone, Copy)]
struct Goal {
    defense_k: Option<i64>,
    dominate: bool,
}

impl Goal {
    fn dominating() -> Goal {
        Goal {
            defense_k: None,
            dominate: true,
        }
    }

    fn global(k: i64) -> Goal {
        Goal {
            defense_k: Some(k),
            dominate: true,
        }
    }

    fn defensive(k: i64) -> Goal {
        Goal {
            defense_k: Some(k),
            dominate: false,
        }
    }

    /// Vertices that can belong to a qualifying set: a vertex of degree
    /// below k can never meet the defense condition.
    fn eligible(&self, g: &Graph) -> Vec<usize> {
        match self.defense_k {
            Some(k) => (0..g.n()).filter(|&v| g.degree(v) as i64 >= k).collect(),
            None => (0..g.n()).collect(),
        }
    }
}

struct BitGraph {
    full: u64,
    adj: Vec<u64>,
    closed: Vec<u64>,
    deg: Vec<i64>,
}

impl BitGraph {
    fn build(g: &Graph) -> Result<BitGraph, AllianceError> {
        let n = g.n();
        if n > SOLVER_LIMIT {
            return Err(AllianceError::TooLarge {
                n,
                limit: SOLVER_LIMIT,
            });
        }
        let mut adj = vec![0u64; n];
        for (v, row) in adj.iter_mut().enumerate() {
            for &u in g.neighbors(v) {
                *row |= 1u64 << u;
            }
        }
        let closed: Vec<u64> = (0..n).map(|v| adj[v] | 1u64 << v).collect();
        let deg: Vec<i64> = (0..n).map(|v| g.degree(v) as i64).collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(BitGraph {
            full,
            adj,
            closed,
            deg,
        })
    }
}

struct Search<'a> {
    bg: &'a BitGraph,
    items: Vec<usize>,
    goal: Goal,
    /// `suffix_items[i]` is the bitmask of `items[i..]`.
    suffix_items: Vec<u64>,
    /// `suffix_closed[i]` is the union of closed neighborhoods of `items[i..]`.
    suffix_closed: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(bg: &'a BitGraph, items: Vec<usize>, goal: Goal) -> Search<'a> {
        let len = items.len();
        let mut suffix_items = vec![0u64; len + 1];
        let mut suffix_closed = vec![0u64; len + 1];
        for i in (0..len).rev() {
            suffix_items[i] = suffix_items[i + 1] | 1u64 << items[i];
            suffix_closed[i] = suffix_closed[i + 1] | bg.closed[items[i]];
        }
        Search {
            bg,
            items,
            goal,
            suffix_items,
            suffix_closed,
        }
    }

    fn accepts(&self, s: u64, covered: u64) -> bool {
        if self.goal.dominate && covered != self.bg.full {
            return false;
        }
        if let Some(k) = self.goal.defense_k {
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let inside = (self.bg.adj[v] & s).count_ones() as i64;
                let outside = self.bg.deg[v] - inside;
                if inside < outside + k {
                    return false;
                }
            }
        }
        true
    }

    /// First qualifying set of the given cardinality, in lexicographic
    /// order, exploring only combinations whose first item index is in
    /// `first`.
    fn first_hit(
        &self,
        cardinality: usize,
        first: std::ops::Range<usize>,
        nodes: &mut u64,
    ) -> Option<u64> {
        if cardinality == 0 || cardinality > self.items.len() {
            return None;
        }
        let bound = self.items.len() - cardinality + 1;
        for i in first.start..first.end.min(bound) {
            if let Some(hit) = self.descend(i, cardinality, 0, 0, nodes) {
                return Some(hit);
            }
        }
        None
    }

    fn descend(&self, i: usize, need: usize, s: u64, covered: u64, nodes: &mut u64) -> Option<u64> {
        let v = self.items[i];
        let s2 = s | 1u64 << v;
        let rem = self.suffix_items[i + 1];
        if let Some(k) = self.goal.defense_k {
            // even with every remaining candidate added, v's defense
            // condition must still be reachable
            let best_inside =
                ((self.bg.adj[v] & s2).count_ones() + (self.bg.adj[v] & rem).count_ones()) as i64;
            if 2 * best_inside < self.bg.deg[v] + k {
                return None;
            }
        }
        let covered2 = covered | self.bg.closed[v];
        if self.goal.dominate && covered2 | self.suffix_closed[i + 1] != self.bg.full {
            return None;
        }
        if need == 1 {
            *nodes += 1;
            return self.accepts(s2, covered2).then_some(s2);
        }
        let last = self.items.len() - (need - 1);
        for j in i + 1..=last {
            if let Some(hit) = self.descend(j, need - 1, s2, covered2, nodes) {
                return Some(hit);
            }
        }
        None
    }

    /// Visits every qualifying set of the given cardinality in
    /// lexicographic order; the visitor returns `false` to stop.
    fn for_each_hit(&self, cardinality: usize, visit: &mut impl FnMut(u64) -> bool) {
        if cardinality == 0 || cardinality > self.items.len() {
            return;
        }
        self.visit_descend(0, cardinality, 0, 0, visit);
    }

    fn visit_descend(
        &self,
        start: usize,
        need: usize,
        s: u64,
        covered: u64,
        visit: &mut impl FnMut(u64) -> bool,
    ) -> bool {
        let last = self.items.len() - need;
        for i in start..=last {
            let v = self.items[i];
            let s2 = s | 1u64 << v;
            let covered2 = covered | self.bg.closed[v];
            if need == 1 {
                if self.accepts(s2, covered2) && !visit(s2) {
                    return false;
                }
            } else if !self.visit_descend(i + 1, need - 1, s2, covered2, visit) {
                return false;
            }
        }
        true
    }
}

fn solve(g: &Graph, goal: Goal, parallel: bool) -> Result<SolveResult, AllianceError> {
    if g.n() == 0 {
        // the empty set dominates the empty graph; an alliance must be nonempty
        return Ok(if goal.defense_k.is_some() {
            SolveResult {
                value: AllianceValue::Infinite,
                witness: None,
                nodes_explored: 0,
            }
        } else {
            SolveResult {
                value: AllianceValue::Finite(0),
                witness: Some(VertexSet::empty(0)),
                nodes_explored: 0,
            }
        });
    }
    let bg = BitGraph::build(g)?;
    let items = goal.eligible(g);
    let search = Search::new(&bg, items, goal);

    let mut nodes_total = 0u64;
    // no subset of the eligible vertices can dominate if all of them
    // together do not
    let reachable = !goal.dominate || search.suffix_closed[0] == bg.full;
    if reachable {
        for cardinality in 1..=search.items.len() {
            let hit = if parallel && search.items.len() > cardinality {
                let splits = search.items.len() - cardinality + 1;
                let results: Vec<(Option<u64>, u64)> = (0..splits)
                    .into_par_iter()
                    .map(|i| {
                        let mut nodes = 0u64;
                        let hit = search.first_hit(cardinality, i..i + 1, &mut nodes);
                        (hit, nodes)
                    })
                    .collect();
                nodes_total += results.iter().map(|(_, n)| n).sum::<u64>();
                results.into_iter().find_map(|(hit, _)| hit)
            } else {
                let mut nodes = 0u64;
                let hit = search.first_hit(cardinality, 0..search.items.len(), &mut nodes);
                nodes_total += nodes;
                hit
            };
            if let Some(mask) = hit {
                return Ok(SolveResult {
                    value: AllianceValue::Finite(cardinality),
                    witness: Some(VertexSet::from_mask(g.n(), mask)),
                    nodes_explored: nodes_total,
                });
            }
        }
    }
    Ok(SolveResult {
        value: AllianceValue::Infinite,
        witness: None,
        nodes_explored: nodes_total,
    })
}
