//! Text formats for graphs: the standard graph6 one-line encoding used by
//! small-graph catalogs, and a simple edge-list format used for fixtures.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 character {byte:#04x} at position {pos} outside the printable range 63..=126")]
    CharOutOfRange { pos: usize, byte: u8 },
    #[error("graph6 line truncated: expected {expected} data characters, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 line has {extra} extra trailing characters")]
    ExtraData { extra: usize },
    #[error("nonzero padding bits at the end of a graph6 line")]
    TrailingBits,
    #[error("graph on {n} vertices exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooLarge { n: usize },
}

/// Parses one line of standard graph6: the `N(n)` header followed by the
/// upper triangle of the adjacency matrix, column by column, six bits per
/// character, zero-padded.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::CharOutOfRange { pos, byte: b });
        }
    }

    // N(n): one byte for n <= 62, 126 + three bytes for 63 <= n <= 258047.
    let (n, data) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        if n <= 62 {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }

    let nbits = if n == 0 { 0 } else { n * (n - 1) / 2 };
    let expected = nbits.div_ceil(6);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::ExtraData {
            extra: data.len() - expected,
        });
    }

    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    for &byte in data {
        let group = byte - 63;
        for k in 0..6 {
            let bit = (group >> (5 - k)) & 1;
            if bit_index >= nbits {
                if bit != 0 {
                    return Err(Graph6Error::TrailingBits);
                }
            } else if bit != 0 {
                let (u, v) = triangle_position(bit_index);
                adj[u] |= 1u64 << v;
                adj[v] |= 1u64 << u;
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is valid by construction"))
}

/// Inverse of the column-major upper-triangle bit layout: bit `k` encodes
/// the pair `(u, v)` with `v` the column and `u < v`.
fn triangle_position(k: usize) -> (usize, usize) {
    let mut v = 1usize;
    let mut base = 0usize;
    while base + v <= k {
        base += v;
        v += 1;
    }
    (k - base, v)
}

/// Encodes a graph as one line of standard graph6.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(group + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("edge list is empty")]
    Empty,
    #[error("line {line}: expected `{expected}`, got `{got}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        got: String,
    },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Parses the fixture edge-list format: a `n m` header line, then `m`
/// lines `u v`, with optional `label i name` lines.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, header) = lines.next().ok_or(EdgeListError::Empty)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(lineno, "n m", header))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(lineno, "n m", header))?;
    if parts.next().is_some() {
        return Err(malformed(lineno, "n m", header));
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut labels: Vec<Option<String>> = vec![None; n];
    let mut any_label = false;
    for (lineno, line) in lines {
        if let Some(rest) = line.strip_prefix("label ") {
            let mut parts = rest.split_whitespace();
            let i: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| malformed(lineno, "label i name", line))?;
            let name = parts
                .next()
                .ok_or_else(|| malformed(lineno, "label i name", line))?;
            if i >= n {
                return Err(EdgeListError::Graph {
                    line: lineno,
                    source: GraphError::VertexOutOfRange { v: i, n },
                });
            }
            labels[i] = Some(name.to_string());
            any_label = true;
            continue;
        }
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| malformed(lineno, "u v", line))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| malformed(lineno, "u v", line))?;
        if parts.next().is_some() {
            return Err(malformed(lineno, "u v", line));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    let g = Graph::from_edge_list(n, &edges).map_err(|source| EdgeListError::Graph {
        line: 1,
        source,
    })?;
    if any_label {
        let labels: Vec<String> = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.unwrap_or_else(|| i.to_string()))
            .collect();
        Ok(g.with_labels(labels).expect("label count matches n"))
    } else {
        Ok(g)
    }
}

fn malformed(line: usize, expected: &'static str, got: &str) -> EdgeListError {
    EdgeListError::Malformed {
        line,
        expected,
        got: got.to_string(),
    }
}

/// Serializes a graph in the edge-list format accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    if g.has_labels() {
        for v in 0..g.vertex_count() {
            out.push_str(&format!("label {} {}\n", v, g.vertex_name(v)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_values() {
        // "@" is K1, "A_" two isolated vertices, "A?" is the same as "A_"?
        // No: "A?" has the single upper-triangle bit 0 (no edge), "A_" sets it.
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.edge_count(), 0);

        let e2 = parse_graph6("A?").unwrap();
        assert_eq!(e2.vertex_count(), 2);
        assert_eq!(e2.edge_count(), 0);

        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);

        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&Graph::edgeless(1).unwrap()), "@");
        assert_eq!(encode_graph6(&Graph::edgeless(2).unwrap()), "A?");
        assert_eq!(encode_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode_graph6(&Graph::complete(6).unwrap()), "E~~w");
        assert_eq!(encode_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(encode_graph6(&Graph::path(4).unwrap()), "Ch");
    }

    #[test]
    fn optional_file_header_is_accepted() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn zero_vertex_graph_round_trips() {
        assert_eq!(encode_graph6(&Graph::edgeless(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().vertex_count(), 0);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(
            parse_graph6("C\u{20}"),
            Err(Graph6Error::CharOutOfRange { pos: 1, byte: 0x20 })
        ));
        assert!(matches!(parse_graph6("C"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(parse_graph6("C~~"), Err(Graph6Error::ExtraData { .. })));
        assert!(matches!(parse_graph6("~"), Err(Graph6Error::MalformedHeader)));
        // 3 vertices need only one data character; set a padding bit
        assert_eq!(parse_graph6("B~"), Err(Graph6Error::TrailingBits));
        // long-form header encoding a small n is not canonical
        assert!(matches!(parse_graph6("~??@"), Err(Graph6Error::MalformedHeader)));
    }

    #[test]
    fn long_header_rejected_above_cap() {
        // n = 100 uses the long form and exceeds the 64-vertex cap
        let mut s = String::from("~");
        s.push(63u8 as char);
        s.push((63 + (100 >> 6)) as u8 as char);
        s.push((63 + (100 & 63)) as u8 as char);
        assert!(matches!(parse_graph6(&s), Err(Graph6Error::TooLarge { n: 100 })));
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "4 3\n0 1\n1 2\n2 3\nlabel 0 a\nlabel 1 b\nlabel 2 c\nlabel 3 d\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.vertex_by_label("c"), Some(2));
        assert_eq!(write_edge_list(&g), text);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list(""), Err(EdgeListError::Empty));
        assert!(matches!(
            parse_edge_list("2 1\n0 1\n0 1\n"),
            Err(EdgeListError::EdgeCountMismatch { expected: 1, found: 2 })
        ));
        assert!(matches!(parse_edge_list("x y\n"), Err(EdgeListError::Malformed { .. })));
        assert!(matches!(
            parse_edge_list("2 1\n0 5\n"),
            Err(EdgeListError::Graph { .. })
        ));
    }
}
