//! graph6 text encoding.
//!
//! Header: `n + 63` for `n <= 62`, `~` plus 18 bits for `n <= 258047`,
//! `~~` plus 36 bits beyond. Body: the upper triangle in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte offset by 63,
//! zero-padded.

use thiserror::Error;

use super::{set_bit, Graph};

const MAX_ORDER: u64 = 68_719_476_735;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed size header")]
    BadHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("expected {expected} body bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    NonzeroPadding,
    #[error("graph on {0} vertices is too large")]
    TooLarge(u64),
}

fn push_size(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes without a trailing newline.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n as u64 <= MAX_ORDER);
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n as u64);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adj(i, j) as u8;
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

fn read_size(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    let digit = |i: usize| -> Result<u64, Graph6Error> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(_) | None => Err(Graph6Error::BadHeader),
        }
    };
    let collect = |from: usize, count: usize| -> Result<u64, Graph6Error> {
        (from..from + count).try_fold(0u64, |acc, i| Ok((acc << 6) | digit(i)?))
    };
    match bytes.first() {
        None => Err(Graph6Error::Empty),
        Some(&126) if bytes.get(1) == Some(&126) => Ok((collect(2, 6)?, 8)),
        Some(&126) => Ok((collect(1, 3)?, 4)),
        Some(&b) if (63..126).contains(&b) => Ok((u64::from(b - 63), 1)),
        Some(_) => Err(Graph6Error::BadHeader),
    }
}

/// Decodes one graph. Surrounding whitespace and a `>>graph6<<` prefix are accepted.
pub fn graph6_decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header) = read_size(bytes)?;
    if n > MAX_ORDER || n > usize::MAX as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let body = &bytes[header..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }
    if let Some((i, &b)) = body
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::BadByte {
            byte: b,
            offset: header + i,
        });
    }
    let pad = expected * 6 - nbits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                set_bit(g.row_mut(i), j);
                set_bit(g.row_mut(j), i);
            }
            k += 1;
        }
    }
    Ok(g)
}
