//! graph6 encoding.
//!
//! The order is written as `N(n)`: one byte `n + 63` for `n <= 62`, otherwise
//! `126` followed by three six-bit groups (or `126 126` and six groups above
//! 258047). The upper triangle follows in column order `x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`, six bits per byte, most significant first, padded
//! with zeros. Every byte is offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted; nonzero padding bits are rejected.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {} at offset {i} outside 63..=126",
            bytes[i]
        )));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated order".into()));
        }
        let n = bytes[2..8].iter().fold(0, |acc, &b| acc << 6 | six(b));
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order".into()));
        }
        let n = bytes[1..4].iter().fold(0, |acc, &b| acc << 6 | six(b));
        (n, &bytes[4..])
    };
    if n == 0 {
        return Err(Error::Graph6("order 0 is not supported".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::CapacityExceeded(n));
    }
    let total = n * (n - 1) / 2;
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let bit = |p: usize| six(body[p / 6]) >> (5 - p % 6) & 1 == 1;
    if (total..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut p = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(p) {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Graph::from_edges(n, edges)
}
