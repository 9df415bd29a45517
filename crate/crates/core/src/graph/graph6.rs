//! graph6 encoding: size prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use super::{PolytopeGraph, MAX_VERTICES};
use crate::error::{Error, Result};

pub(super) fn size_prefix(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![
            126,
            (n >> 12 & 63) as u8 + 63,
            (n >> 6 & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
        out
    }
}

pub(super) fn encode(g: &PolytopeGraph) -> String {
    let n = g.vertex_count();
    let mut out = size_prefix(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub(super) fn decode(text: &str) -> Result<PolytopeGraph> {
    let bad = |msg: &str| Error::Graph6(msg.to_string());
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside the printable range 63..=126"));
    }
    let value = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(bad("truncated size prefix"));
        }
        (value(&bytes[2..8]), &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(bad("truncated size prefix"));
        }
        (value(&bytes[1..4]), &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(bad(&format!("expected {needed} data bytes for n = {n}, found {}", body.len())));
    }
    let mut g = PolytopeGraph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = (body[k / 6] - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    let padding = needed * 6 - k;
    if padding > 0 && (body[needed - 1] - 63) & ((1 << padding) - 1) != 0 {
        return Err(bad("non-zero padding bits"));
    }
    Ok(g)
}
