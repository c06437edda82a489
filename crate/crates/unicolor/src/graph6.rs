//! The graph6 text format: an order header followed by the upper triangle
//! of the adjacency matrix, column by column, six bits per printable byte.

use thiserror::Error;
use unicolor_core::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed order header")]
    BadHeader,
    #[error("order {0} is above the limit of {max}", max = MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("byte {byte:#04x} at position {pos} is not a graph6 character")]
    BadChar { pos: usize, byte: u8 },
    #[error("expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected bytes after the graph")]
    TrailingData(usize),
    #[error("padding bits in the last byte are not zero")]
    NonZeroPadding,
}

fn sextet(bytes: &[u8], pos: usize) -> Result<u64, Graph6Error> {
    match bytes.get(pos) {
        Some(&b @ 63..=126) => Ok(u64::from(b - 63)),
        Some(&byte) => Err(Graph6Error::BadChar { pos, byte }),
        None => Err(Graph6Error::BadHeader),
    }
}

/// Parses one graph6 string. A leading `>>graph6<<` is accepted; anything
/// after the data bytes, including whitespace, is rejected.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    let (n, mut pos) = if first == b'~' {
        if bytes.get(1) == Some(&b'~') {
            // 6-byte order form, only used above 258047 vertices
            let mut n = 0u64;
            for i in 2..8 {
                n = n << 6 | sextet(bytes, i)?;
            }
            return Err(if n <= 258_047 {
                Graph6Error::BadHeader
            } else {
                Graph6Error::OrderTooLarge(n as usize)
            });
        }
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i)?;
        }
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        (n as usize, 4)
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let found = bytes.len() - pos;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingData(found - expected));
    }
    let mut g = Graph::new(n).expect("order checked");
    let mut bit = 0;
    let mut current = 0;
    for v in 1..n {
        for u in 0..v {
            if bit % 6 == 0 {
                current = sextet(bytes, pos)?;
                pos += 1;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 && current & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    // data bytes after the last used one are covered by the length check
    Ok(g)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut current = 0u8;
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            current = current << 1 | u8::from(g.has_edge(u, v));
            bit += 1;
            if bit == 6 {
                out.push(current + 63);
                current = 0;
                bit = 0;
            }
        }
    }
    if bit > 0 {
        out.push((current << (6 - bit)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
