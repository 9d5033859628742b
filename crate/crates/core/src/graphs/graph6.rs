//! graph6 codec, bit-compatible with the format used by nauty and the common
//! graph catalogs.
//!
//! Layout of one line: optional ASCII header `>>graph6<<`, a size field
//! `N(n)`, then the upper-triangle bits `x(0,1), x(0,2), x(1,2), x(0,3), ...`
//! (column-major: for `j = 1..n-1`, `i = 0..j-1`) packed big-endian six bits
//! per byte, zero-padded, every byte offset by 63.

use super::{Graph, MAX_VERTICES};

const HEADER: &[u8] = b">>graph6<<";
const OFFSET: u8 = 63;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("line length {got} does not match {expected} bytes expected for n={n}")]
    BadLength { n: u64, expected: usize, got: usize },
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    BadChar { pos: usize, byte: u8 },
    #[error("vertex count {n} not supported (maximum {max})")]
    UnsupportedSize { n: u64, max: u64 },
    #[error("empty input")]
    Empty,
}

/// Decodes one graph6 line (trailing newline tolerated).
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let mut data = line;
    while let Some((&last, rest)) = data.split_last() {
        if last == b'\n' || last == b'\r' {
            data = rest;
        } else {
            break;
        }
    }
    if let Some(stripped) = data.strip_prefix(HEADER) {
        data = stripped;
    }
    if data.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in data.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::BadChar { pos, byte: b });
        }
    }
    let (n, body) = decode_size(data)?;
    if n >= 1u64 << 63 || n > MAX_VERTICES as u64 {
        return Err(Graph6Error::UnsupportedSize {
            n,
            max: MAX_VERTICES as u64,
        });
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            n: n as u64,
            expected: expected + (data.len() - body.len()),
            got: data.len(),
        });
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = encode_size(n as u64);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; nbits.div_ceil(6)];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    for b in body {
        out.push((b + OFFSET) as char);
    }
    out
}

/// Parses a multi-line graph6 file; per-line errors are collected, not fatal.
pub fn parse_graph6_lines(text: &[u8]) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    text.split(|&b| b == b'\n')
        .enumerate()
        .filter(|(_, line)| !line.iter().all(|&b| b == b'\r' || b == b' '))
        .map(|(idx, line)| (idx + 1, parse_graph6(line)))
        .collect()
}

/// Reads the size field, returning `(n, rest)`.
fn decode_size(data: &[u8]) -> Result<(u64, &[u8]), Graph6Error> {
    let first = data[0] - OFFSET;
    if first < 63 {
        return Ok((first as u64, &data[1..]));
    }
    // first == 63 (byte 126): 3- or 6-chunk big-endian size.
    let chunks = if data.len() >= 2 && data[1] == 126 {
        6
    } else {
        3
    };
    let start = if chunks == 6 { 2 } else { 1 };
    if data.len() < start + chunks {
        return Err(Graph6Error::BadLength {
            n: 0,
            expected: start + chunks,
            got: data.len(),
        });
    }
    let mut n: u64 = 0;
    for &b in &data[start..start + chunks] {
        n = n << 6 | (b - OFFSET) as u64;
    }
    Ok((n, &data[start + chunks..]))
}

fn encode_size(n: u64) -> String {
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + OFFSET) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + OFFSET) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + OFFSET) as char);
        }
    }
    out
}
