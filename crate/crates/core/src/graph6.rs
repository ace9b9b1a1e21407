//! graph6 text encoding.
//!
//! Header: `63 + n` for `n <= 62`; `126` followed by three 6-bit groups for
//! `n <= 258047`; `126 126` followed by six groups beyond that. Body: the
//! upper triangle read column by column (`x01, x02, x12, x03, ...`), six bits
//! per character offset by 63, zero padded.

use thiserror::Error;

use crate::graph::{Graph, GraphError, DEFAULT_VERTEX_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("character {0:?} at offset {1} is outside the printable graph6 range")]
    BadChar(char, usize),
    #[error("malformed size header")]
    BadHeader,
    #[error("expected {expected} body characters, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("padding bits in the last character must be zero")]
    NonZeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Largest order graph6 can describe.
pub const MAX_ORDER: u64 = 68_719_476_735;

fn push_size(out: &mut String, n: u64) {
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + (n >> shift & 63) as u8) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((63 + (n >> shift & 63) as u8) as char);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_size(&mut out, n as u64);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    out
}

/// Decodes under the default vertex cap.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    decode_with_cap(text, DEFAULT_VERTEX_CAP)
}

pub fn decode_with_cap(text: &str, cap: usize) -> Result<Graph, Graph6Error> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let text = text.strip_suffix('\n').unwrap_or(text);
    if text.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut vals = Vec::with_capacity(text.len());
    for (i, c) in text.chars().enumerate() {
        if !('?'..='~').contains(&c) {
            return Err(Graph6Error::BadChar(c, i));
        }
        vals.push(c as u8 - 63);
    }
    let (n, body) = if vals[0] != 63 {
        (u64::from(vals[0]), &vals[1..])
    } else if vals.len() >= 2 && vals[1] != 63 {
        if vals.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let n = vals[1..4].iter().fold(0u64, |a, &v| a << 6 | u64::from(v));
        if n <= 62 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &vals[4..])
    } else {
        if vals.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        let n = vals[2..8].iter().fold(0u64, |a, &v| a << 6 | u64::from(v));
        if n <= 258_047 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &vals[8..])
    };
    if n > cap as u64 {
        return Err(GraphError::CapExceeded { n: n as usize, cap }.into());
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength { expected, found: body.len() });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && body[expected - 1] & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut g = Graph::empty_with_cap(n, cap)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
