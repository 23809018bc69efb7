//! Graph isomorphism by backtracking, for small instances (n up to ~30).

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Tests whether an adjacency-preserving bijection exists between `a`
/// and `b`. Candidates are pruned by iterated neighbor-class refinement
/// and partial-map consistency; intended for small graphs.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    if n == 0 {
        return true;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }

    let (colors_a, colors_b) = refine_pair(a, b);
    if color_histogram(&colors_a) != color_histogram(&colors_b) {
        return false;
    }

    // map vertices of `a` in an order that keeps each next vertex attached
    // to the already-mapped prefix where possible
    let order = anchor_order(a, &colors_a);

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(a, b, &colors_a, &colors_b, &order, 0, &mut mapping, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &Graph,
    b: &Graph,
    colors_a: &[u64],
    colors_b: &[u64],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let g = order[depth];
    'candidates: for h in 0..b.n() {
        if used[h] || colors_b[h] != colors_a[g] {
            continue;
        }
        // adjacency with every already-mapped vertex must match exactly
        for &g2 in a.neighbors(g) {
            let m = mapping[g2];
            if m != usize::MAX && !b.has_edge(h, m) {
                continue 'candidates;
            }
        }
        let mapped_nbrs = a.neighbors(g).iter().filter(|&&g2| mapping[g2] != usize::MAX).count();
        let mapped_nbrs_b = b
            .neighbors(h)
            .iter()
            .filter(|&&h2| used[h2])
            .count();
        if mapped_nbrs != mapped_nbrs_b {
            continue;
        }
        mapping[g] = h;
        used[h] = true;
        if backtrack(a, b, colors_a, colors_b, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[g] = usize::MAX;
        used[h] = false;
    }
    false
}

/// Iterated refinement over both graphs at once: each round a vertex
/// color becomes the rank of (own color, sorted neighbor colors) in a
/// codebook shared by the two graphs, so resulting colors are comparable
/// across them.
fn refine_pair(a: &Graph, b: &Graph) -> (Vec<u64>, Vec<u64>) {
    let signatures = |g: &Graph, colors: &[u64]| -> Vec<(u64, Vec<u64>)> {
        (0..g.n())
            .map(|v| {
                let mut nbr: Vec<u64> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect()
    };
    let mut colors_a: Vec<u64> = (0..a.n()).map(|v| a.degree(v) as u64).collect();
    let mut colors_b: Vec<u64> = (0..b.n()).map(|v| b.degree(v) as u64).collect();
    for _ in 0..a.n() {
        let sig_a = signatures(a, &colors_a);
        let sig_b = signatures(b, &colors_b);
        let mut codebook: BTreeMap<&(u64, Vec<u64>), u64> =
            sig_a.iter().chain(sig_b.iter()).map(|s| (s, 0)).collect();
        for (rank, code) in codebook.values_mut().enumerate() {
            *code = rank as u64;
        }
        let next_a: Vec<u64> = sig_a.iter().map(|s| codebook[s]).collect();
        let next_b: Vec<u64> = sig_b.iter().map(|s| codebook[s]).collect();
        if next_a == colors_a && next_b == colors_b {
            break;
        }
        colors_a = next_a;
        colors_b = next_b;
    }
    (colors_a, colors_b)
}

fn color_histogram(colors: &[u64]) -> BTreeMap<u64, usize> {
    let mut hist = BTreeMap::new();
    for &c in colors {
        *hist.entry(c).or_insert(0) += 1;
    }
    hist
}

fn anchor_order(g: &Graph, colors: &[u64]) -> Vec<usize> {
    let n = g.n();
    let hist = color_histogram(colors);
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let mut best: Option<usize> = None;
        let mut best_key = (0usize, usize::MAX, usize::MAX);
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let attached = g.neighbors(v).iter().filter(|&&u| placed[u]).count();
            // more mapped neighbors first, then rarer color, then lowest id
            let key = (attached, hist[&colors[v]], v);
            let better = match best {
                None => true,
                Some(_) => key.0 > best_key.0 || (key.0 == best_key.0 && (key.1, key.2) < (best_key.1, best_key.2)),
            };
            if better {
                best = Some(v);
                best_key = key;
            }
        }
        let v = best.unwrap();
        placed[v] = true;
        order.push(v);
    }
    order
}
