//! The five graph products with bijective label maps.
//!
//! Canonical id layouts are part of the public contract so that vertex
//! sets described over the factors land on reproducible product ids:
//!
//! * pair products (cartesian, hierarchical, lexicographic):
//!   `(g, h)` has id `g * n(H) + h`;
//! * corona: bases `0..n(G)`, then copy vertex `(g, h)` at
//!   `n(G) + g * n(H) + h`;
//! * edge corona: bases `0..n(G)`, then copy vertex `(e, h)` at
//!   `n(G) + e * n(H) + h`, where `e` indexes the sorted edge list of G.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Cartesian,
    Hierarchical,
    Lexicographic,
    Corona,
    EdgeCorona,
}

impl ProductKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Hierarchical => "hierarchical",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Corona => "corona",
            ProductKind::EdgeCorona => "edge_corona",
        }
    }
}

/// Structured name of a product vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Label {
    /// `(g, h)` in a pair product.
    Pair { g: usize, h: usize },
    /// A vertex of the base copy of G.
    Base { g: usize },
    /// Vertex `h` in the copy of H attached to base vertex `g`.
    VCopy { g: usize, h: usize },
    /// Vertex `h` in the copy of H attached to edge index `e` of G.
    ECopy { e: usize, h: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("{side} factor must have at least one vertex")]
    EmptyFactor { side: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A product graph together with its label bijection.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    graph: Graph,
    kind: ProductKind,
    labels: Vec<Label>,
    left_n: usize,
    right_n: usize,
    left_m: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, id: usize) -> Label {
        self.labels[id]
    }

    /// Order of the left factor.
    pub fn left_n(&self) -> usize {
        self.left_n
    }

    /// Order of the right factor.
    pub fn right_n(&self) -> usize {
        self.right_n
    }

    /// Inverse of the label map.
    pub fn id_of(&self, label: Label) -> Option<usize> {
        let id = match (self.kind, label) {
            (
                ProductKind::Cartesian | ProductKind::Hierarchical | ProductKind::Lexicographic,
                Label::Pair { g, h },
            ) => {
                if g >= self.left_n || h >= self.right_n {
                    return None;
                }
                g * self.right_n + h
            }
            (ProductKind::Corona | ProductKind::EdgeCorona, Label::Base { g }) => {
                if g >= self.left_n {
                    return None;
                }
                g
            }
            (ProductKind::Corona, Label::VCopy { g, h }) => {
                if g >= self.left_n || h >= self.right_n {
                    return None;
                }
                self.left_n + g * self.right_n + h
            }
            (ProductKind::EdgeCorona, Label::ECopy { e, h }) => {
                if e >= self.left_m || h >= self.right_n {
                    return None;
                }
                self.left_n + e * self.right_n + h
            }
            _ => return None,
        };
        Some(id)
    }
}

fn require_nonempty(g: &Graph, side: &'static str) -> Result<(), ProductError> {
    if g.n() == 0 {
        return Err(ProductError::EmptyFactor { side });
    }
    Ok(())
}

/// Generalized hierarchical product: `(g,h) ~ (g',h')` iff `g = g'` is in
/// `u` and `hh'` is an edge of `h_graph`, or `gg'` is an edge of `g_graph`
/// and `h = h'`. With `u` equal to the whole left vertex set this is the
/// cartesian product.
pub fn hierarchical(
    g_graph: &Graph,
    u: &VertexSet,
    h_graph: &Graph,
) -> Result<ProductGraph, ProductError> {
    if u.universe() != g_graph.n() {
        return Err(ProductError::Graph(GraphError::UniverseMismatch {
            expected: g_graph.n(),
            got: u.universe(),
        }));
    }
    let kind = if u.len() == g_graph.n() {
        ProductKind::Cartesian
    } else {
        ProductKind::Hierarchical
    };
    pair_product(g_graph, h_graph, kind, |g1, g2, h1, h2| {
        (g1 == g2 && u.contains(g1) && h_graph.has_edge(h1, h2))
            || (h1 == h2 && g_graph.has_edge(g1, g2))
    })
}

/// Cartesian product; identical to `hierarchical` over the full left
/// vertex set, including the id scheme.
pub fn cartesian(g_graph: &Graph, h_graph: &Graph) -> Result<ProductGraph, ProductError> {
    hierarchical(g_graph, &VertexSet::full(g_graph.n()), h_graph)
}

/// Lexicographic product: `(g1,h1) ~ (g2,h2)` iff `g1 g2` is an edge, or
/// `g1 = g2` and `h1 h2` is an edge.
pub fn lexicographic(g_graph: &Graph, h_graph: &Graph) -> Result<ProductGraph, ProductError> {
    pair_product(g_graph, h_graph, ProductKind::Lexicographic, |g1, g2, h1, h2| {
        g_graph.has_edge(g1, g2) || (g1 == g2 && h_graph.has_edge(h1, h2))
    })
}

fn pair_product(
    g_graph: &Graph,
    h_graph: &Graph,
    kind: ProductKind,
    adjacent: impl Fn(usize, usize, usize, usize) -> bool,
) -> Result<ProductGraph, ProductError> {
    require_nonempty(g_graph, "left")?;
    require_nonempty(h_graph, "right")?;
    let (ng, nh) = (g_graph.n(), h_graph.n());
    let n = ng * nh;
    let id = |g: usize, h: usize| g * nh + h;

    let mut edges = Vec::new();
    for g1 in 0..ng {
        for h1 in 0..nh {
            for g2 in g1..ng {
                let h_start = if g2 == g1 { h1 + 1 } else { 0 };
                for h2 in h_start..nh {
                    if adjacent(g1, g2, h1, h2) {
                        edges.push((id(g1, h1), id(g2, h2)));
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for g in 0..ng {
        for h in 0..nh {
            labels.push(Label::Pair { g, h });
        }
    }
    Ok(ProductGraph {
        graph: Graph::new(n, &edges)?,
        kind,
        labels,
        left_n: ng,
        right_n: nh,
        left_m: g_graph.m(),
    })
}

/// Corona product: one copy of `h_graph` per vertex of `g_graph`, fully
/// joined to that vertex.
pub fn corona(g_graph: &Graph, h_graph: &Graph) -> Result<ProductGraph, ProductError> {
    require_nonempty(g_graph, "left")?;
    require_nonempty(h_graph, "right")?;
    let (ng, nh) = (g_graph.n(), h_graph.n());
    let n = ng * (1 + nh);
    let copy_id = |g: usize, h: usize| ng + g * nh + h;

    let mut edges: Vec<(usize, usize)> = g_graph.edges().to_vec();
    for g in 0..ng {
        for h in 0..nh {
            edges.push((g, copy_id(g, h)));
        }
        for &(h1, h2) in h_graph.edges() {
            edges.push((copy_id(g, h1), copy_id(g, h2)));
        }
    }
    let mut labels: Vec<Label> = (0..ng).map(|g| Label::Base { g }).collect();
    for g in 0..ng {
        for h in 0..nh {
            labels.push(Label::VCopy { g, h });
        }
    }
    Ok(ProductGraph {
        graph: Graph::new(n, &edges)?,
        kind: ProductKind::Corona,
        labels,
        left_n: ng,
        right_n: nh,
        left_m: g_graph.m(),
    })
}

/// Edge corona: one copy of `h_graph` per edge of `g_graph`, fully joined
/// to both endpoints of that edge. An edgeless left factor yields a copy
/// of it with no attachments.
pub fn edge_corona(g_graph: &Graph, h_graph: &Graph) -> Result<ProductGraph, ProductError> {
    require_nonempty(g_graph, "left")?;
    require_nonempty(h_graph, "right")?;
    let (ng, nh) = (g_graph.n(), h_graph.n());
    let mg = g_graph.m();
    let n = ng + mg * nh;
    let copy_id = |e: usize, h: usize| ng + e * nh + h;

    let mut edges: Vec<(usize, usize)> = g_graph.edges().to_vec();
    for (e, &(u, v)) in g_graph.edges().iter().enumerate() {
        for h in 0..nh {
            edges.push((u, copy_id(e, h)));
            edges.push((v, copy_id(e, h)));
        }
        for &(h1, h2) in h_graph.edges() {
            edges.push((copy_id(e, h1), copy_id(e, h2)));
        }
    }
    let mut labels: Vec<Label> = (0..ng).map(|g| Label::Base { g }).collect();
    for e in 0..mg {
        for h in 0..nh {
            labels.push(Label::ECopy { e, h });
        }
    }
    Ok(ProductGraph {
        graph: Graph::new(n, &edges)?,
        kind: ProductKind::EdgeCorona,
        labels,
        left_n: ng,
        right_n: nh,
        left_m: mg,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("set description uses {label} labels, but the product is {kind}")]
    KindMismatch {
        label: &'static str,
        kind: &'static str,
    },
    #[error("set described over universe {got}, factor has {expected} vertices")]
    UniverseMismatch { expected: usize, got: usize },
    #[error("edge index {e} out of range: left factor has {m} edges")]
    EdgeIndexOutOfRange { e: usize, m: usize },
}

/// A vertex-set description over factor labels, to be lifted into
/// product ids.
#[derive(Debug, Clone)]
pub enum LiftSpec {
    /// `left x right` in a pair product.
    PairRect { left: VertexSet, right: VertexSet },
    /// Base vertices of a corona-style product.
    Bases(VertexSet),
    /// `{ VCopy(g, h) : g in over, h in members }`.
    VertexCopies { over: VertexSet, members: VertexSet },
    /// `{ ECopy(e, h) : e in edges, h in members }`.
    EdgeCopies { edges: Vec<usize>, members: VertexSet },
    Union(Vec<LiftSpec>),
}

/// Resolves a factor-level set description to the exact set of product
/// ids whose labels satisfy it.
pub fn lift(product: &ProductGraph, spec: &LiftSpec) -> Result<VertexSet, LiftError> {
    let mut ids = Vec::new();
    collect(product, spec, &mut ids)?;
    Ok(VertexSet::new(product.graph().n(), ids).expect("lifted ids are in range"))
}

fn collect(product: &ProductGraph, spec: &LiftSpec, ids: &mut Vec<usize>) -> Result<(), LiftError> {
    let pairish = matches!(
        product.kind(),
        ProductKind::Cartesian | ProductKind::Hierarchical | ProductKind::Lexicographic
    );
    let check_universe = |set: &VertexSet, expected: usize| {
        if set.universe() != expected {
            return Err(LiftError::UniverseMismatch {
                expected,
                got: set.universe(),
            });
        }
        Ok(())
    };
    match spec {
        LiftSpec::PairRect { left, right } => {
            if !pairish {
                return Err(LiftError::KindMismatch {
                    label: "pair",
                    kind: product.kind().name(),
                });
            }
            check_universe(left, product.left_n)?;
            check_universe(right, product.right_n)?;
            for g in left.iter() {
                for h in right.iter() {
                    ids.push(product.id_of(Label::Pair { g, h }).unwrap());
                }
            }
        }
        LiftSpec::Bases(set) => {
            if pairish {
                return Err(LiftError::KindMismatch {
                    label: "base",
                    kind: product.kind().name(),
                });
            }
            check_universe(set, product.left_n)?;
            ids.extend(set.iter());
        }
        LiftSpec::VertexCopies { over, members } => {
            if product.kind() != ProductKind::Corona {
                return Err(LiftError::KindMismatch {
                    label: "vertex-copy",
                    kind: product.kind().name(),
                });
            }
            check_universe(over, product.left_n)?;
            check_universe(members, product.right_n)?;
            for g in over.iter() {
                for h in members.iter() {
                    ids.push(product.id_of(Label::VCopy { g, h }).unwrap());
                }
            }
        }
        LiftSpec::EdgeCopies { edges, members } => {
            if product.kind() != ProductKind::EdgeCorona {
                return Err(LiftError::KindMismatch {
                    label: "edge-copy",
                    kind: product.kind().name(),
                });
            }
            check_universe(members, product.right_n)?;
            for &e in edges {
                if e >= product.left_m {
                    return Err(LiftError::EdgeIndexOutOfRange {
                        e,
                        m: product.left_m,
                    });
                }
                for h in members.iter() {
                    ids.push(product.id_of(Label::ECopy { e, h }).unwrap());
                }
            }
        }
        LiftSpec::Union(parts) => {
            for part in parts {
                collect(product, part, ids)?;
            }
        }
    }
    Ok(())
}
