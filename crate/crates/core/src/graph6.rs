//! graph6 encoding for graphs on at most 62 vertices.
//!
//! Only the single-byte size header is supported; longer headers are
//! rejected with an explicit error.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

/// Encodes `g` as a graph6 string (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::Input(format!(
            "graph6 output is limited to {MAX_GRAPH6_VERTICES} vertices, graph has {n}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + nbits.div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. An optional `>>graph6<<` prefix and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let err = |i: usize, reason: String| Error::Graph6 {
        offset: skip + i,
        reason,
    };

    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte 0x{b:02x} is outside the graph6 range 63..=126")));
        }
    }
    let Some(&first) = body.first() else {
        return Err(err(0, "empty input".into()));
    };
    if first == 126 {
        return Err(err(
            0,
            format!("multi-byte size headers (n > {MAX_GRAPH6_VERTICES}) are not supported"),
        ));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &body[1..];
    if data.len() < nbytes {
        return Err(err(
            body.len(),
            format!("truncated: expected {nbytes} data bytes, found {}", data.len()),
        ));
    }
    if data.len() > nbytes {
        return Err(err(
            1 + nbytes,
            format!("{} unexpected trailing bytes", data.len() - nbytes),
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = data[nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(nbytes, "nonzero padding bits".into()));
        }
    }
    Graph::from_adjacency(adj)
}

/// Parses every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| match e {
                Error::Graph6 { offset, reason } => Error::Graph6 {
                    offset,
                    reason: format!("line {}: {reason}", i + 1),
                },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_is_at_sign() {
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    // Values from the format description: the 5-vertex graph with edges
    // 0-2, 0-4, 1-3, 3-4 encodes as "DQc".
    #[test]
    fn reference_string() {
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn small_known_codes() {
        assert_eq!(emit_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(emit_graph6(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(emit_graph6(&Graph::path(3).unwrap()).unwrap(), "Bg");
    }

    #[test]
    fn invalid_byte_reports_offset() {
        match parse_graph6("not-graph6\x01") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("DQc\x01") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn truncation_and_trailing() {
        assert!(matches!(parse_graph6("DQ"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("DQcc"), Err(Error::Graph6 { offset: 3, .. })));
        assert!(matches!(parse_graph6("~"), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn header_prefix_accepted() {
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap().edge_count(), 4);
    }

    #[test]
    fn too_large_for_emit() {
        assert!(emit_graph6(&Graph::empty(63).unwrap()).is_err());
        let g = Graph::path(62).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&g).unwrap()).unwrap(), g);
    }
}
