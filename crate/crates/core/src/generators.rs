//! Named graph families with documented canonical vertex numbering.

use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::products;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path `P_n`, vertices numbered consecutively along the path.
    Path,
    /// Cycle `C_n` (n >= 3), vertex `i` adjacent to `i+1 mod n`.
    Cycle,
    /// Complete graph `K_n`.
    Complete,
    /// Edgeless graph `E_n`.
    Empty,
    /// Sun graph: a cycle with every edge replaced by a triangle, built as
    /// the edge corona of `C_n` with `K_1`. Cycle vertices come first,
    /// then one apex per cycle edge in sorted edge order.
    Sun,
    /// The 24-vertex 3-regular Archimedean truncated cube.
    TruncatedCube,
    /// Order-12 graph: an 8-cycle `0..7` with four apexes `8..11`, apex
    /// `8+i` adjacent to both endpoints of cycle edge `{2i, 2i+1}`. The
    /// distinguished set is the four apexes.
    G12,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Sun => "sun",
            Family::TruncatedCube => "truncated_cube",
            Family::G12 => "g12",
        }
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, GenerateError> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "empty" => Ok(Family::Empty),
            "sun" => Ok(Family::Sun),
            "truncated_cube" => Ok(Family::TruncatedCube),
            "g12" => Ok(Family::G12),
            _ => Err(GenerateError::UnknownFamily {
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("unknown graph family: {name}")]
    UnknownFamily { name: String },
    #[error("{family} requires n >= {min}")]
    ParamBelowMinimum { family: &'static str, min: usize },
    #[error("{family} requires a size parameter")]
    ParamRequired { family: &'static str },
    #[error("{family} takes no size parameter")]
    UnexpectedParam { family: &'static str },
}

/// A generated graph, possibly with a distinguished vertex set.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub distinguished: Option<VertexSet>,
}

pub fn generate(family: Family, param: Option<usize>) -> Result<Generated, GenerateError> {
    let sized = |min: usize| -> Result<usize, GenerateError> {
        let n = param.ok_or(GenerateError::ParamRequired {
            family: family.name(),
        })?;
        if n < min {
            return Err(GenerateError::ParamBelowMinimum {
                family: family.name(),
                min,
            });
        }
        Ok(n)
    };
    let fixed = || -> Result<(), GenerateError> {
        if param.is_some() {
            return Err(GenerateError::UnexpectedParam {
                family: family.name(),
            });
        }
        Ok(())
    };

    let plain = |g: Graph| Generated {
        graph: g,
        distinguished: None,
    };

    match family {
        Family::Path => {
            let n = sized(1)?;
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Ok(plain(Graph::new(n, &edges).unwrap()))
        }
        Family::Cycle => {
            let n = sized(3)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(plain(Graph::new(n, &edges).unwrap()))
        }
        Family::Complete => {
            let n = sized(1)?;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            Ok(plain(Graph::new(n, &edges).unwrap()))
        }
        Family::Empty => {
            let n = sized(1)?;
            Ok(plain(Graph::new(n, &[]).unwrap()))
        }
        Family::Sun => {
            let n = sized(3)?;
            let cycle = generate(Family::Cycle, Some(n))?.graph;
            let k1 = generate(Family::Complete, Some(1))?.graph;
            let product = products::edge_corona(&cycle, &k1)
                .expect("edge corona of a cycle with K1 is well defined");
            Ok(plain(product.into_graph()))
        }
        Family::TruncatedCube => {
            fixed()?;
            Ok(plain(truncated_cube()))
        }
        Family::G12 => {
            fixed()?;
            let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
            for i in 0..4 {
                edges.push((8 + i, 2 * i));
                edges.push((8 + i, 2 * i + 1));
            }
            let graph = Graph::new(12, &edges).unwrap();
            let distinguished = Some(VertexSet::new(12, 8..12).unwrap());
            Ok(Generated {
                graph,
                distinguished,
            })
        }
    }
}

/// Truncated cube: every vertex of the 3-cube is replaced by a triangle
/// of corners, one per incident cube edge; cube edges connect matching
/// corners. Corner ids are `3v + r` where `r` is the rank of the edge
/// among the three incident to cube vertex `v` in sorted edge order.
fn truncated_cube() -> Graph {
    let mut cube_edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                cube_edges.push((u, v));
            }
        }
    }
    cube_edges.sort_unstable();

    let mut incident = vec![Vec::new(); 8];
    for (idx, &(u, v)) in cube_edges.iter().enumerate() {
        incident[u].push(idx);
        incident[v].push(idx);
    }
    let corner = |v: usize, edge: usize| -> usize {
        let rank = incident[v].iter().position(|&e| e == edge).unwrap();
        3 * v + rank
    };

    let mut edges = Vec::new();
    for (v, edges_at_v) in incident.iter().enumerate() {
        for a in 0..3 {
            for b in a + 1..3 {
                edges.push((corner(v, edges_at_v[a]), corner(v, edges_at_v[b])));
            }
        }
    }
    for (idx, &(u, v)) in cube_edges.iter().enumerate() {
        edges.push((corner(u, idx), corner(v, idx)));
    }
    Graph::new(24, &edges).unwrap()
}
