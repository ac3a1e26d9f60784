//! graph6 encoding, short header form only (`n <= 62`).
//!
//! Header byte `n + 63`, then the upper triangle of the adjacency matrix in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per
//! byte, most significant bit first, each byte offset by 63. Padding bits in
//! the last byte are zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Packs the column-major upper-triangle bits of `has_edge` into graph6 body bytes.
pub(crate) fn pack_bits(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> Vec<u8> {
    let mut out = vec![0u8; body_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if has_edge(i, j) {
                out[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    for b in &mut out {
        *b += 63;
    }
    out
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::MalformedGraph6(format!("order {n} needs the long header form")));
    }
    let mut bytes = vec![n as u8 + 63];
    bytes.extend(pack_bits(n, |i, j| g.has_edge(i, j)));
    Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ASCII"))
}

pub fn decode_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let (&header, body) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedGraph6("empty input".into()))?;
    if !(63..=125).contains(&header) {
        return Err(Error::MalformedGraph6(format!("bad header byte {header}")));
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if body.len() != body_len(n) {
        return Err(Error::MalformedGraph6(format!(
            "expected {} data bytes for n={n}, found {}",
            body_len(n),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let total = n * (n - 1) / 2;
    if (total..body.len() * 6).any(bit) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
