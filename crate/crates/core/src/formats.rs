//! graph6, DIMACS and plain edge-list encodings.
//!
//! graph6 writes the upper triangle column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte offset by 63. Graphs
//! with `n <= 62` use the one-byte header `n + 63`; larger graphs (up to
//! 258047 vertices) use `~` followed by three header bytes.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("graph6 header malformed")]
    BadHeader,
    #[error("byte {0:#04x} outside the printable graph6 range")]
    BadByte(u8),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("graph has {0} vertices, more than graph6 supports")]
    TooLarge(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Supported text encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Dimacs,
    EdgeList,
}

impl FromStr for Format {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "dimacs" => Ok(Format::Dimacs),
            "edges" | "edgelist" => Ok(Format::EdgeList),
            other => Err(FormatError::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
            Format::EdgeList => "edges",
        })
    }
}

pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>, FormatError> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    } else {
        return Err(FormatError::TooLarge(n));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(out)
}

pub fn decode_graph6(bytes: &[u8]) -> Result<Graph, FormatError> {
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let bytes = trim_line_end(bytes);
    let (&first, rest) = bytes.split_first().ok_or(FormatError::Empty)?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::BadByte(b));
    }
    let (n, body) = if first < 126 {
        ((first - 63) as usize, rest)
    } else {
        if rest.len() < 3 || rest[0] == 126 {
            return Err(FormatError::BadHeader);
        }
        let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= SMALL_MAX {
            return Err(FormatError::BadHeader);
        }
        (n, &rest[3..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::LengthMismatch { expected, found: body.len() });
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(FormatError::NonZeroPadding);
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, pairs)?)
}

fn trim_line_end(mut b: &[u8]) -> &[u8] {
    while let Some((&last, rest)) = b.split_last() {
        if last == b'\n' || last == b'\r' {
            b = rest;
        } else {
            break;
        }
    }
    b
}

/// `p edge n m` followed by `e u v` lines, vertices 1-indexed.
pub fn encode_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

pub fn decode_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: &str| FormatError::Parse { line, msg: msg.to_string() };
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err("second problem line"));
                }
                if tok.next() != Some("edge") {
                    return Err(err("expected `p edge n m`"));
                }
                let n = parse_num(tok.next(), line)?;
                let m = parse_num(tok.next(), line)?;
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(err("edge before problem line"));
                }
                let u = parse_num(tok.next(), line)?;
                let v = parse_num(tok.next(), line)?;
                if u == 0 || v == 0 {
                    return Err(err("DIMACS vertices are 1-indexed"));
                }
                pairs.push((u - 1, v - 1));
            }
            Some(other) => return Err(err(&format!("unexpected token `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(FormatError::Empty)?;
    if pairs.len() != m {
        return Err(FormatError::Parse { line: 0, msg: format!("header declares {m} edges, found {}", pairs.len()) });
    }
    Ok(Graph::from_edges(n, pairs)?)
}

/// First line `n`, then one `u v` per edge, 0-indexed.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn decode_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(FormatError::Empty)?;
    let n = parse_num(Some(first), line)?;
    let mut pairs = Vec::new();
    for (line, l) in lines {
        let mut tok = l.split_whitespace();
        let u = parse_num(tok.next(), line)?;
        let v = parse_num(tok.next(), line)?;
        if tok.next().is_some() {
            return Err(FormatError::Parse { line, msg: "trailing tokens".into() });
        }
        pairs.push((u, v));
    }
    Ok(Graph::from_edges(n, pairs)?)
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize, FormatError> {
    let t = tok.ok_or(FormatError::Parse { line, msg: "missing number".into() })?;
    t.parse().map_err(|_| FormatError::Parse { line, msg: format!("`{t}` is not a vertex count or id") })
}

/// Serializes one graph in `format`. graph6 output carries a trailing newline.
pub fn encode(g: &Graph, format: Format) -> Result<String, FormatError> {
    Ok(match format {
        Format::Graph6 => {
            let mut s = String::from_utf8(encode_graph6(g)?).expect("graph6 is ASCII");
            s.push('\n');
            s
        }
        Format::Dimacs => encode_dimacs(g),
        Format::EdgeList => encode_edge_list(g),
    })
}

/// Parses every graph in `text`. graph6 input may hold one graph per line;
/// the other formats hold exactly one graph.
pub fn decode_all(text: &str, format: Format) -> Result<Vec<Graph>, FormatError> {
    match format {
        Format::Graph6 => {
            text.lines().map(str::trim).filter(|l| !l.is_empty()).map(|l| decode_graph6(l.as_bytes())).collect()
        }
        Format::Dimacs => Ok(vec![decode_dimacs(text)?]),
        Format::EdgeList => Ok(vec![decode_edge_list(text)?]),
    }
}
