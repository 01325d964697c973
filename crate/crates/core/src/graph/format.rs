//! graph6 (short form) and plain edge-list text formats.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

/// Largest order expressible in the one-byte graph6 header.
const GRAPH6_SHORT_MAX: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

fn graph6_body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. An optional `>>graph6<<` prefix and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end();
    let (skip, line) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::at_byte(skip, "empty graph6 string"));
    };
    if first == 126 {
        return Err(Error::Unsupported(format!(
            "graph6 long form (n > {GRAPH6_SHORT_MAX}) is not supported"
        )));
    }
    if !(63..126).contains(&first) {
        return Err(Error::at_byte(skip, format!("invalid header byte {first}")));
    }
    let n = (first - 63) as usize;
    let expected = graph6_body_len(n);
    let body = &bytes[1..];
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::at_byte(skip + 1 + pos, format!("invalid graph6 byte {}", body[pos])));
    }
    if body.len() != expected {
        return Err(Error::at_byte(
            skip + 1 + body.len().min(expected),
            format!("length mismatch: n={n} needs {expected} data bytes, found {}", body.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Error::at_byte(skip + expected, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as a graph6 line (without newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_SHORT_MAX {
        return Err(Error::Unsupported(format!(
            "graph6 short form holds at most {GRAPH6_SHORT_MAX} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + graph6_body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses `u v` lines (0-based). The first non-blank line may be
/// `n <count>`; otherwise the order is one more than the largest endpoint.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_content {
                return Err(Error::at_line(lineno, "order header must be the first line"));
            }
            seen_content = true;
            let [_, count] = tokens[..] else {
                return Err(Error::at_line(lineno, "expected `n <count>`"));
            };
            let count: usize = count
                .parse()
                .map_err(|_| Error::at_line(lineno, format!("invalid vertex count `{count}`")))?;
            if count > MAX_ORDER {
                return Err(Error::Unsupported(format!(
                    "graphs are limited to {MAX_ORDER} vertices, got {count}"
                )));
            }
            declared = Some(count);
            continue;
        }
        seen_content = true;
        let [a, b] = tokens[..] else {
            return Err(Error::at_line(lineno, "expected `u v`"));
        };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::at_line(lineno, format!("invalid vertex `{t}`")))
        };
        edges.push((parse(a)?, parse(b)?, lineno));
    }

    let n = match declared {
        Some(n) => n,
        None => edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };
    if n > MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "graphs are limited to {MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut masks = vec![0u64; n];
    for &(u, v, lineno) in &edges {
        if u >= n || v >= n {
            return Err(Error::at_line(lineno, format!("vertex {} out of range (n={n})", u.max(v))));
        }
        if u == v {
            return Err(Error::at_line(lineno, format!("self-loop at vertex {u}")));
        }
        if masks[u] >> v & 1 == 1 {
            return Err(Error::at_line(lineno, format!("duplicate edge {u} {v}")));
        }
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

/// Writes the `n <count>` header followed by one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
