//! Graph serialization: the bit-packed graph6 interchange format and a plain
//! edge-list text format.
//!
//! graph6 stores n, then the upper triangle of the adjacency matrix in
//! column order — bit (i, j) for j = 1..n, i = 0..j — packed six bits per
//! byte, most significant first, each byte offset by 63 into printable
//! ASCII. Sizes up to 62 use a single byte; larger sizes (up to 258047)
//! use '~' followed by three bytes of six bits each.
//!
//! The edge-list format is a header line `n m` followed by m lines `u v`
//! with 0-based endpoints.

use crate::graph::{Graph, GraphError};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid graph6 size byte {byte:#04x}")]
    InvalidSizeByte { byte: u8 },
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 body")]
    TrailingData,
    #[error("graph6 body byte {byte:#04x} outside printable range")]
    InvalidBodyByte { byte: u8 },
    #[error("nonzero padding bits in graph6 body")]
    NonzeroPadding,
    #[error("malformed header line {line:?} (expected \"n m\")")]
    MalformedHeader { line: String },
    #[error("malformed edge line {line:?} (expected \"u v\")")]
    MalformedEdge { line: String },
    #[error("edge count mismatch: header says {expected}, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
        })
    }
}

pub fn parse_graph(input: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => parse_graph6(input),
        Format::EdgeList => parse_edge_list(input),
    }
}

pub fn emit_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => {
            let mut s = emit_graph6(g);
            s.push('\n');
            s
        }
        Format::EdgeList => emit_edge_list(g),
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

pub fn parse_graph6(input: &str) -> Result<Graph, ParseError> {
    let bytes = input.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    let (n, mut pos) = match bytes[0] {
        b'~' => {
            if bytes.len() < 4 {
                return Err(ParseError::Truncated { expected: 4, found: bytes.len() });
            }
            if bytes[1] == b'~' {
                // 8-byte sizes go up to 2^36 vertices; nothing in this crate
                // comes anywhere near, so they are rejected rather than half
                // supported.
                return Err(ParseError::InvalidSizeByte { byte: b'~' });
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(63..=126).contains(&b) {
                    return Err(ParseError::InvalidSizeByte { byte: b });
                }
                n = n << 6 | (b - 63) as usize;
            }
            (n, 4)
        }
        b @ 63..=125 => ((b - 63) as usize, 1),
        byte => return Err(ParseError::InvalidSizeByte { byte }),
    };

    let bit_count = n * (n.saturating_sub(1)) / 2;
    let body_len = bit_count.div_ceil(6);
    if bytes.len() - pos < body_len {
        return Err(ParseError::Truncated { expected: pos + body_len, found: bytes.len() });
    }
    if bytes.len() - pos > body_len {
        return Err(ParseError::TrailingData);
    }

    let mut edges = Vec::new();
    let mut chunk = 0u8;
    let mut bits_left = 0u8;
    let mut column = (0usize, 1usize); // (i, j) walking the upper triangle
    for t in 0..body_len * 6 {
        if bits_left == 0 {
            let b = bytes[pos];
            pos += 1;
            if !(63..=126).contains(&b) {
                return Err(ParseError::InvalidBodyByte { byte: b });
            }
            chunk = b - 63;
            bits_left = 6;
        }
        let bit = chunk >> (bits_left - 1) & 1;
        bits_left -= 1;
        if t < bit_count {
            if bit == 1 {
                edges.push(column);
            }
            column = if column.0 + 1 == column.1 { (0, column.1 + 1) } else { (column.0 + 1, column.1) };
        } else if bit == 1 {
            return Err(ParseError::NonzeroPadding);
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258047, "graph too large for 3-byte graph6 size");
        out.push(b'~');
        out.push((n >> 12 & 0x3f) as u8 + 63);
        out.push((n >> 6 & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

// ---------------------------------------------------------------------------
// Edge list
// ---------------------------------------------------------------------------

pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(ParseError::Empty)?;
    let parse_pair = |line: &str| -> Option<(usize, usize)> {
        let mut it = line.split_whitespace();
        let a = it.next()?.parse().ok()?;
        let b = it.next()?.parse().ok()?;
        it.next().is_none().then_some((a, b))
    };
    let (n, m) = parse_pair(header).ok_or_else(|| ParseError::MalformedHeader { line: header.to_string() })?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let e = parse_pair(line).ok_or_else(|| ParseError::MalformedEdge { line: line.to_string() })?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}
