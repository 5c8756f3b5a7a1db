//! Short-form graph6 and a plain edge-list text format.
//!
//! graph6 layout: one byte `n + 63`, then the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed big-endian into 6-bit
//! groups, zero-padded, each group offset by 63.

use crate::graph::{pair_from_index, Graph, GraphError};

pub const GRAPH6_MAX_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::UnsupportedOrder(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + bits.div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, body) = bytes.split_first().ok_or(GraphError::MalformedHeader)?;
    if !(63..=126).contains(&first) {
        return Err(GraphError::MalformedHeader);
    }
    if first == 126 {
        // long-form order prefix
        return Err(GraphError::UnsupportedOrder(GRAPH6_MAX_ORDER + 1));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(GraphError::TruncatedBody {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected || body.iter().any(|b| !(63..=126).contains(b)) {
        return Err(GraphError::MalformedHeader);
    }
    let mut g = Graph::empty(n);
    for (k, &byte) in body.iter().enumerate() {
        let group = byte - 63;
        for bit in 0..6 {
            let idx = 6 * k + bit;
            let set = group >> (5 - bit) & 1 == 1;
            if idx >= bits {
                if set {
                    return Err(GraphError::BadPadding);
                }
                continue;
            }
            if set {
                let (i, j) = pair_from_index(idx);
                g.set_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Parses one graph per non-empty line. Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, GraphError)> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        out.push(from_graph6(line).map_err(|e| (idx + 1, e))?);
    }
    Ok(out)
}

/// `"n m"` header line followed by one `"u v"` line per edge, 0-indexed.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, reason: &str| GraphError::EdgeList {
        line,
        reason: reason.to_string(),
    };
    let (line, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let [n, m] = parse_pair(header).ok_or_else(|| bad(line, "expected \"n m\""))?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let [u, v] = parse_pair(text).ok_or_else(|| bad(line, "expected \"u v\""))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(
            0,
            &format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.m() != m {
        return Err(bad(0, "duplicate edges"));
    }
    Ok(g)
}

fn parse_pair(text: &str) -> Option<[usize; 2]> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    let pair = [it.next()?.ok()?, it.next()?.ok()?];
    it.next().is_none().then_some(pair)
}
