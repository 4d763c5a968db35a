//! graph6 and plain edge-list encodings.
//!
//! graph6 follows the nauty description: a size header followed by the upper
//! triangle of the adjacency matrix in column order, packed six bits per
//! printable byte (offset 63). The short header covers `n <= 62`, the
//! four-byte form covers `n <= 258047`.
//!
//! Edge lists hold one `u v` pair per line with 0-based endpoints. Text after
//! `#` is a comment; a `# n=<order>` comment fixes the order so trailing
//! isolated vertices survive a round trip.

use thiserror::Error;

use super::{Graph, GraphError};

pub const GRAPH6_MAX_ORDER: usize = 258_047;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed graph6 header: {0}")]
    Header(String),
    #[error("graph6 byte {byte:#04x} at offset {offset} is outside the printable range")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 body has {found} bytes, expected {expected} for n = {n}")]
    BitLength { n: usize, expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    Padding,
    #[error("graph order {0} exceeds the graph6 limit of {GRAPH6_MAX_ORDER}")]
    TooLarge(usize),
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn decode_byte(b: u8, offset: usize) -> Result<u32, FormatError> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as u32)
    } else {
        Err(FormatError::InvalidByte { byte: b, offset })
    }
}

/// Parses one graph6 string (surrounding whitespace and an optional
/// `>>graph6<<` prefix are ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Header("empty input".into()));
    }
    let (n, body) = if bytes[0] != 126 {
        (decode_byte(bytes[0], 0)? as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(FormatError::Header(
                "eight-byte size header exceeds the supported order".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(FormatError::Header("truncated four-byte size header".into()));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | decode_byte(b, i + 1)? as usize;
        }
        if n <= 62 {
            return Err(FormatError::Header(format!("non-canonical long header for n = {n}")));
        }
        (n, &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::BitLength { n, expected, found: body.len() });
    }
    let header_len = bytes.len() - body.len();
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    let mut values = body
        .iter()
        .enumerate()
        .map(|(i, &b)| decode_byte(b, header_len + i))
        .collect::<Result<Vec<u32>, _>>()?
        .into_iter();
    let mut cur = 0u32;
    for j in 1..n {
        for i in 0..j {
            if idx % 6 == 0 {
                cur = values.next().expect("length checked above");
            }
            if (cur >> (5 - idx % 6)) & 1 == 1 {
                g.set(i, j);
            }
            idx += 1;
        }
    }
    if idx % 6 != 0 {
        let pad = 6 - idx % 6;
        if cur & ((1 << pad) - 1) != 0 {
            return Err(FormatError::Padding);
        }
    }
    Ok(g)
}

/// Parses a file with one graph6 string per non-empty line; errors carry
/// the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, FormatError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}

pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::TooLarge(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((cur << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the edge-list format. The order is the `# n=` hint when present,
/// otherwise one past the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut hint: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (content, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(v) = c.trim().strip_prefix("n=") {
                let n = v.trim().parse::<usize>().map_err(|_| FormatError::EdgeList {
                    line,
                    msg: format!("bad order hint `{}`", v.trim()),
                })?;
                hint = Some(n);
            }
        }
        let mut parts = content.split_whitespace();
        let Some(a) = parts.next() else { continue };
        let b = parts.next().ok_or_else(|| FormatError::EdgeList {
            line,
            msg: "expected two endpoints".into(),
        })?;
        if parts.next().is_some() {
            return Err(FormatError::EdgeList { line, msg: "trailing tokens".into() });
        }
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| FormatError::EdgeList {
                line,
                msg: format!("`{t}` is not a vertex index"),
            })
        };
        edges.push((line, parse(a)?, parse(b)?));
    }
    let n = match hint {
        Some(n) => n,
        None => edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    let mut g = Graph::empty(n);
    for (line, u, v) in edges {
        g.check_pair(u, v).map_err(|source| FormatError::Graph { line, source })?;
        if g.has_edge(u, v) {
            return Err(FormatError::DuplicateEdge { line, u: u.min(v), v: u.max(v) });
        }
        g.set(u, v);
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("# n={}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_complete;

    #[test]
    fn k3_is_bw() {
        // n = 3 -> 'B'; bits x01 x02 x12 = 111 padded to 111000 = 56 -> 'w'.
        assert_eq!(parse_graph6("Bw").unwrap(), build_complete(3).unwrap());
        assert_eq!(write_graph6(&build_complete(3).unwrap()).unwrap(), "Bw");
    }

    #[test]
    fn petgraph_reference_string() {
        // Five vertices with edges a-c, a-e, b-d, d-e.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(FormatError::Header(_))));
        assert!(matches!(parse_graph6("Bww"), Err(FormatError::BitLength { .. })));
        assert!(matches!(parse_graph6("B"), Err(FormatError::BitLength { .. })));
        assert!(matches!(parse_graph6("Bx"), Err(FormatError::Padding)));
        assert!(matches!(parse_graph6("B "), Err(FormatError::BitLength { .. })));
        assert!(matches!(parse_graph6("B\u{7f}"), Err(FormatError::InvalidByte { .. })));
        assert!(matches!(parse_graph6("~~??????"), Err(FormatError::Header(_))));
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap().size(), 3);
    }

    #[test]
    fn long_header_round_trip() {
        let n = 70;
        let g = Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        let s = write_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let k1 = Graph::empty(1);
        assert_eq!(write_graph6(&k1).unwrap(), "@");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn multi_line_file_reports_line_numbers() {
        let err = parse_graph6_lines("Bw\n\nBx\n").unwrap_err();
        assert_eq!(err.0, 3);
        assert_eq!(parse_graph6_lines("Bw\nA_\n").unwrap().len(), 2);
    }

    #[test]
    fn edge_list_parsing() {
        let p3 = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p3, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        let with_comments = parse_edge_list("# a path\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(with_comments, p3);
        assert!(matches!(
            parse_edge_list("0 1\n1 0\n"),
            Err(FormatError::DuplicateEdge { line: 2, u: 0, v: 1 })
        ));
        assert!(matches!(parse_edge_list("0 0"), Err(FormatError::Graph { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 x"), Err(FormatError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(FormatError::EdgeList { .. })));
        let hinted = parse_edge_list("# n=5\n0 1\n").unwrap();
        assert_eq!(hinted.order(), 5);
        assert_eq!(parse_edge_list(&write_edge_list(&hinted)).unwrap(), hinted);
    }
}
