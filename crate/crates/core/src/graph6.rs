//! graph6 encoding (short form, order ≤ 62).
//!
//! Byte 0 is order+63. The remaining bytes pack the upper-triangle
//! adjacency bits in column order (0,1),(0,2),(1,2),(0,3),… six bits per
//! byte, most significant first, each byte offset by 63. Trailing pad bits
//! must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_G6_ORDER: usize = 62;

/// Decodes a short-form graph6 string.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if bytes[0] == b'~' {
        return Err(Error::Graph6(
            "extended multi-byte order form is not supported (order must be <= 62)".into(),
        ));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n == 0 {
        return Err(Error::Graph6("order 0 is not a valid graph".into()));
    }
    let pair_bits = n * (n - 1) / 2;
    let expected = 1 + pair_bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6(format!(
            "length {} does not match order {n} (expected {expected} bytes)",
            bytes.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = bytes[1 + bit_index / 6] - OFFSET;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((row, col));
            }
            bit_index += 1;
            if bit_index == pair_bits {
                break 'outer;
            }
        }
    }
    // pad bits in the final byte must be zero
    for pad in pair_bits..(expected - 1) * 6 {
        let byte = bytes[1 + pad / 6] - OFFSET;
        if (byte >> (5 - pad % 6)) & 1 != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes a graph of order ≤ 62; exact inverse of [`parse_graph6`].
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_G6_ORDER {
        return Err(Error::Graph6(format!(
            "order {n} exceeds the short-form maximum {MAX_G6_ORDER}"
        )));
    }
    let pair_bits = n * (n - 1) / 2;
    let mut out = vec![n as u8 + OFFSET];
    let mut acc = 0u8;
    let mut filled = 0usize;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    debug_assert_eq!(out.len(), 1 + pair_bits.div_ceil(6));
    Ok(String::from_utf8(out).expect("printable range"))
}
