//! Graph arguments: builtin names or files.
//!
//! A token without a path separator is first tried as a builtin name:
//! `k4`, `c5`, `p3`, `e2`, `sun3`, `g12`, `truncated_cube`. Anything
//! else is read as a file, graph6 for `.g6`/`.graph6` and the JSON graph
//! format otherwise.

use std::fs;
use std::path::Path;

use gdka_core::{generate, parse_graph6, Family, Graph, GraphJson, VertexSet};

use crate::errors::CliError;

pub struct LoadedGraph {
    pub name: String,
    pub graph: Graph,
    pub set: Option<VertexSet>,
}

pub fn load_graph_spec(spec: &str) -> Result<LoadedGraph, CliError> {
    let pathless = !spec.contains('/') && !spec.contains('\\');
    if pathless {
        if let Some(result) = builtin(spec) {
            let generated = result.map_err(CliError::usage)?;
            return Ok(LoadedGraph {
                name: spec.to_string(),
                graph: generated.graph,
                set: generated.distinguished,
            });
        }
    }
    load_file(spec)
}

fn builtin(spec: &str) -> Option<Result<gdka_core::Generated, gdka_core::GenerateError>> {
    match spec {
        "g12" => return Some(generate(Family::G12, None)),
        "truncated_cube" => return Some(generate(Family::TruncatedCube, None)),
        _ => {}
    }
    let (family, digits) = if let Some(rest) = spec.strip_prefix("sun") {
        (Family::Sun, rest)
    } else {
        let mut chars = spec.chars();
        let family = match chars.next()? {
            'k' => Family::Complete,
            'c' => Family::Cycle,
            'p' => Family::Path,
            'e' => Family::Empty,
            _ => return None,
        };
        (family, chars.as_str())
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: usize = digits.parse().ok()?;
    Some(generate(family, Some(n)))
}

fn load_file(spec: &str) -> Result<LoadedGraph, CliError> {
    let path = Path::new(spec);
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read graph {spec}: {e}")))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| spec.to_string());
    let is_graph6 = matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("g6") | Some("graph6")
    );
    if is_graph6 {
        let graph = parse_graph6(&text).map_err(CliError::usage)?;
        Ok(LoadedGraph {
            name,
            graph,
            set: None,
        })
    } else {
        let json: GraphJson = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid graph JSON in {spec}: {e}")))?;
        let (graph, set) = json.into_graph().map_err(CliError::usage)?;
        Ok(LoadedGraph { name, graph, set })
    }
}

pub fn parse_id_list(text: &str, universe: usize) -> Result<VertexSet, CliError> {
    let mut ids = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let id: usize = part
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid vertex id: {part}")))?;
        ids.push(id);
    }
    VertexSet::new(universe, ids).map_err(CliError::usage)
}
