//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit
//! chunks offset by 63, preceded by the order `n` encoded in one, four,
//! or eight bytes. An optional `>>graph6<<` header is accepted on input.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed header at byte {offset}")]
    MalformedHeader { offset: usize },
    #[error("character out of range at byte {offset}: 0x{byte:02x}")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("truncated bit stream: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data at byte {offset}")]
    TrailingData { offset: usize },
    #[error("graph too large for encoding: {n}")]
    TooLarge { n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes a graph as a canonical graph6 string (no optional header).
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else if n <= 68_719_476_735 {
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Graph6Error::TooLarge { n });
    }

    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push(chunk + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

/// Decodes a graph6 string. Leading/trailing whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim();
    let base = text.len() - text.trim_start().len();
    let bytes = trimmed.as_bytes();

    let mut pos = 0usize;
    if bytes.starts_with(b">>") {
        if bytes.len() >= HEADER.len() && &bytes[..HEADER.len()] == HEADER.as_bytes() {
            pos = HEADER.len();
        } else {
            return Err(Graph6Error::MalformedHeader { offset: base });
        }
    }

    let value = |i: usize| -> Result<usize, Graph6Error> {
        let b = *bytes
            .get(i)
            .ok_or(Graph6Error::MalformedHeader { offset: base + i })?;
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar {
                offset: base + i,
                byte: b,
            });
        }
        Ok((b - 63) as usize)
    };

    // order field: one byte for n <= 62, '~' + 3 bytes, or '~~' + 6 bytes
    let n;
    if bytes.get(pos) == Some(&b'~') {
        if bytes.get(pos + 1) == Some(&b'~') {
            let mut v = 0usize;
            for i in 0..6 {
                v = v << 6 | value(pos + 2 + i)?;
            }
            n = v;
            pos += 8;
        } else {
            let mut v = 0usize;
            for i in 0..3 {
                v = v << 6 | value(pos + 1 + i)?;
            }
            n = v;
            pos += 4;
        }
    } else {
        n = value(pos)?;
        pos += 1;
    }

    let bits = n * n.saturating_sub(1) / 2;
    let data_bytes = bits.div_ceil(6);
    if bytes.len() < pos + data_bytes {
        return Err(Graph6Error::Truncated {
            expected: data_bytes,
            found: bytes.len() - pos,
        });
    }
    if bytes.len() > pos + data_bytes {
        return Err(Graph6Error::TrailingData {
            offset: base + pos + data_bytes,
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let v = value(pos + bit / 6)?;
            if v >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family};

    #[test]
    fn decodes_complete_graph() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn decodes_edgeless_graph() {
        let g = parse_graph6("B?").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn encodes_complete_graph() {
        let k4 = generate(Family::Complete, Some(4)).unwrap().graph;
        assert_eq!(emit_graph6(&k4).unwrap(), "C~");
    }

    #[test]
    fn canonical_round_trip() {
        for s in ["C~", "B?", "DQc", "?", "@"] {
            let g = parse_graph6(s).unwrap();
            assert_eq!(emit_graph6(&g).unwrap(), s);
        }
    }

    #[test]
    fn optional_header_accepted() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn malformed_header_is_reported() {
        assert_eq!(
            parse_graph6(">>graphsix<<C~"),
            Err(Graph6Error::MalformedHeader { offset: 0 })
        );
    }

    #[test]
    fn truncated_stream_is_reported() {
        // n = 10 needs ceil(45/6) = 8 data bytes
        assert_eq!(
            parse_graph6("I~~"),
            Err(Graph6Error::Truncated {
                expected: 8,
                found: 2
            })
        );
    }

    #[test]
    fn out_of_range_character_is_reported() {
        let err = parse_graph6("C!").unwrap_err();
        assert_eq!(
            err,
            Graph6Error::InvalidChar {
                offset: 1,
                byte: 0x21
            }
        );
    }

    #[test]
    fn trailing_data_is_reported() {
        assert_eq!(
            parse_graph6("C~~"),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
    }

    #[test]
    fn long_form_order() {
        let g = Graph::new(100, &[(0, 99)]).unwrap();
        let s = emit_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        let g2 = parse_graph6(&s).unwrap();
        assert_eq!(g, g2);
    }
}
