//! Immutable simple graphs, vertex subsets, and extended alliance values.
//!
//! Vertices are dense ids `0..n`. Adjacency is stored as sorted neighbor
//! lists and the edge list is kept sorted as `(min, max)` pairs, so edge
//! indices are stable and reproducible across runs. Graphs are immutable
//! after construction and safe to share between threads.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// Errors from graph or vertex-set construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {v} out of range for graph of order {n}")]
    EndpointOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range for universe {universe}")]
    VertexOutOfRange { v: usize, universe: usize },
    #[error("universe mismatch: expected {expected}, got {got}")]
    UniverseMismatch { expected: usize, got: usize },
}

/// An immutable simple graph: no loops, no parallel edges, undirected.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    min_degree: usize,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list. Edges are
    /// deduplicated; insertion is idempotent.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            sorted.push((u.min(v), u.max(v)));
        }
        sorted.sort_unstable();
        sorted.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &sorted {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let min_degree = adj.iter().map(Vec::len).min().unwrap_or(0);
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Graph {
            n,
            adj,
            edges: sorted,
            min_degree,
            max_degree,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge list sorted as `(min, max)` pairs; positions in this slice are
    /// the canonical edge indices.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Indices of edges with both endpoints in `s`.
    pub fn edge_indices_within(&self, s: &VertexSet) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| s.contains(u) && s.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Subgraph induced by `x`, together with the old-id to new-id map.
    /// New ids follow the sorted order of the members of `x`.
    pub fn induced(&self, x: &VertexSet) -> (Graph, BTreeMap<usize, usize>) {
        let map: BTreeMap<usize, usize> = x
            .members()
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if let (Some(&nu), Some(&nv)) = (map.get(&u), map.get(&v)) {
                edges.push((nu, nv));
            }
        }
        let g = Graph::new(x.len(), &edges).expect("induced subgraph ids are in range");
        (g, map)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degs.sort_unstable();
        degs
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A subset of the vertices of a graph of order `universe`.
///
/// Members are kept sorted and deduplicated; the derived ordering is
/// therefore lexicographic on the sorted member list, which is the
/// tie-breaking order used by the solvers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    universe: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(universe: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut m: Vec<usize> = members.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        if let Some(&v) = m.last() {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange { v, universe });
            }
        }
        Ok(VertexSet {
            universe,
            members: m,
        })
    }

    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            members: Vec::new(),
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            universe,
            members: (0..universe).collect(),
        }
    }

    /// Decodes a bitmask (bit `v` set means vertex `v` is a member).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        VertexSet {
            universe,
            members: (0..universe).filter(|&v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            universe: self.universe,
            members: (0..self.universe).filter(|&v| !self.contains(v)).collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> Result<VertexSet, GraphError> {
        if self.universe != other.universe {
            return Err(GraphError::UniverseMismatch {
                expected: self.universe,
                got: other.universe,
            });
        }
        VertexSet::new(self.universe, self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &VertexSet) -> Result<VertexSet, GraphError> {
        if self.universe != other.universe {
            return Err(GraphError::UniverseMismatch {
                expected: self.universe,
                got: other.universe,
            });
        }
        VertexSet::new(self.universe, self.iter().filter(|&v| !other.contains(v)))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({:?}/{})", self.members, self.universe)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.members {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.members.len()))?;
        for v in &self.members {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

/// A cardinality that may be infinite: the value of an alliance number
/// when no qualifying set exists.
///
/// Arithmetic follows the extended-natural rules needed by the bound
/// formulas: infinity absorbs addition, and multiplication by zero yields
/// zero even for the infinite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AllianceValue {
    Finite(usize),
    Infinite,
}

impl AllianceValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, AllianceValue::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            AllianceValue::Finite(c) => Some(*c),
            AllianceValue::Infinite => None,
        }
    }

    /// Multiplies by a count; `Infinite.times(0) == Finite(0)`.
    pub fn times(self, count: usize) -> AllianceValue {
        match self {
            AllianceValue::Finite(c) => AllianceValue::Finite(c * count),
            AllianceValue::Infinite if count == 0 => AllianceValue::Finite(0),
            AllianceValue::Infinite => AllianceValue::Infinite,
        }
    }
}

impl Add for AllianceValue {
    type Output = AllianceValue;

    fn add(self, rhs: AllianceValue) -> AllianceValue {
        match (self, rhs) {
            (AllianceValue::Finite(a), AllianceValue::Finite(b)) => AllianceValue::Finite(a + b),
            _ => AllianceValue::Infinite,
        }
    }
}

impl fmt::Display for AllianceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AllianceValue::Finite(c) => write!(f, "{c}"),
            AllianceValue::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for AllianceValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            AllianceValue::Finite(c) => serializer.serialize_u64(*c as u64),
            AllianceValue::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Interchange form of a graph: `{"n": .., "edges": [[u,v],..]}` with an
/// optional distinguished vertex set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph, set: Option<&VertexSet>) -> GraphJson {
        GraphJson {
            n: g.n(),
            edges: g.edges().to_vec(),
            set: set.map(|s| s.members().to_vec()),
        }
    }

    pub fn into_graph(self) -> Result<(Graph, Option<VertexSet>), GraphError> {
        let g = Graph::new(self.n, &self.edges)?;
        let set = match self.set {
            Some(ids) => Some(VertexSet::new(self.n, ids)?),
            None => None,
        };
        Ok((g, set))
    }
}
