//! Independent brute-force reference implementations for the exact
//! solvers, plus random graph helpers shared across integration tests.
//!
//! The oracles enumerate every subset as a plain id list with naive
//! membership tests; they share no code with the bitset search engine
//! they check.

#![allow(dead_code)]

use gdka_core::{AllianceValue, Graph};
use rand::Rng;

/// Every subset of `0..n`, ordered by cardinality and then
/// lexicographically on the sorted member list.
pub fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 16);
    let mut subs: Vec<Vec<usize>> = (0..(1u32 << n))
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subs
}

pub fn naive_dominating(g: &Graph, s: &[usize]) -> bool {
    (0..g.n()).all(|v| s.contains(&v) || g.neighbors(v).iter().any(|u| s.contains(u)))
}

pub fn naive_defensive(g: &Graph, s: &[usize], k: i64) -> bool {
    !s.is_empty()
        && s.iter().all(|&v| {
            let inside = g.neighbors(v).iter().filter(|u| s.contains(u)).count() as i64;
            let outside = g.neighbors(v).len() as i64 - inside;
            inside >= outside + k
        })
}

pub fn oracle_gdka(g: &Graph, k: i64) -> (AllianceValue, Option<Vec<usize>>) {
    for s in all_subsets(g.n()) {
        if !s.is_empty() && naive_defensive(g, &s, k) && naive_dominating(g, &s) {
            return (AllianceValue::Finite(s.len()), Some(s));
        }
    }
    (AllianceValue::Infinite, None)
}

pub fn oracle_dka(g: &Graph, k: i64) -> (AllianceValue, Option<Vec<usize>>) {
    for s in all_subsets(g.n()) {
        if !s.is_empty() && naive_defensive(g, &s, k) {
            return (AllianceValue::Finite(s.len()), Some(s));
        }
    }
    (AllianceValue::Infinite, None)
}

pub fn oracle_domination(g: &Graph) -> (AllianceValue, Option<Vec<usize>>) {
    for s in all_subsets(g.n()) {
        if naive_dominating(g, &s) {
            return (AllianceValue::Finite(s.len()), Some(s));
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// True iff some subset has closed neighborhoods partitioning the graph.
pub fn oracle_has_perfect_code(g: &Graph) -> bool {
    'subset: for s in all_subsets(g.n()) {
        let mut seen = vec![0usize; g.n()];
        for &d in &s {
            seen[d] += 1;
            for &u in g.neighbors(d) {
                seen[u] += 1;
            }
        }
        for &count in &seen {
            if count != 1 {
                continue 'subset;
            }
        }
        return true;
    }
    g.n() == 0
}

pub fn random_graph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// All graphs of order `n` up to isomorphism, optionally connected only.
pub fn graphs_of_order(n: usize, connected_only: bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if connected_only && !is_connected(&g) {
            continue;
        }
        if !reps.iter().any(|r| gdka_core::are_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}
