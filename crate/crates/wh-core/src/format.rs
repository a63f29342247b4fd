//! graph6 and sparse6 encoding (bit-exact per the standard format
//! definition), matching decoders used for round-trip checks, and DOT export.
//!
//! The vertex order in every export is the fixed A-block/B-block/C-block
//! linearization.

use crate::graph::WhGraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph too large for this encoder (order {0})")]
    TooLarge(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        panic!("order {n} beyond supported graph6 range");
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), FormatError> {
    let b0 = *bytes
        .first()
        .ok_or_else(|| FormatError::Malformed("empty input".into()))?;
    if b0 == 126 {
        if bytes.len() < 4 {
            return Err(FormatError::Malformed("truncated order field".into()));
        }
        if bytes[1] == 126 {
            return Err(FormatError::Malformed(
                "orders above 258047 unsupported".into(),
            ));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        Ok((n, 4))
    } else if (63..=125).contains(&b0) {
        Ok(((b0 - 63) as usize, 1))
    } else {
        Err(FormatError::Malformed(format!("bad order byte {b0}")))
    }
}

struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    fn new() -> Self {
        BitWriter { bits: Vec::new() }
    }

    fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    fn push_value(&mut self, value: usize, width: usize) {
        for i in (0..width).rev() {
            self.bits.push((value >> i) & 1 == 1);
        }
    }

    fn len(&self) -> usize {
        self.bits.len()
    }

    /// Pack into printable bytes, 6 bits per byte offset by 63. The caller
    /// must have padded to a multiple of 6 already (graph6 pads with zeros
    /// implicitly here).
    fn into_bytes(mut self, pad_with: bool) -> Vec<u8> {
        while !self.bits.len().is_multiple_of(6) {
            self.bits.push(pad_with);
        }
        self.bits
            .chunks(6)
            .map(|chunk| {
                let mut v = 0u8;
                for &b in chunk {
                    v = (v << 1) | u8::from(b);
                }
                v + 63
            })
            .collect()
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn new(bytes: &'a [u8]) -> Result<Self, FormatError> {
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(FormatError::Malformed(format!("bad data byte {b}")));
            }
        }
        Ok(BitReader { bytes, pos: 0 })
    }

    fn remaining(&self) -> usize {
        self.bytes.len() * 6 - self.pos
    }

    fn read_bit(&mut self) -> bool {
        let byte = self.bytes[self.pos / 6] - 63;
        let bit = (byte >> (5 - self.pos % 6)) & 1 == 1;
        self.pos += 1;
        bit
    }

    fn read_value(&mut self, width: usize) -> usize {
        let mut v = 0;
        for _ in 0..width {
            v = (v << 1) | usize::from(self.read_bit());
        }
        v
    }
}

/// graph6 string of an arbitrary edge list on `n` vertices.
pub fn graph6_from_edges(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![false; n * n];
    for &(u, v) in edges {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut bits = BitWriter::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[i * n + j]);
        }
    }
    out.extend(bits.into_bytes(false));
    String::from_utf8(out).expect("printable ascii")
}

/// graph6 export of a Woolly Hat graph under the fixed vertex linearization.
pub fn graph6(g: &WhGraph) -> String {
    let edges: Vec<(usize, usize)> = g.edge_pairs().collect();
    graph6_from_edges(g.order(), &edges)
}

/// Parses a graph6 string into (order, sorted edge list).
pub fn parse_graph6(s: &str) -> Result<(usize, Vec<(usize, usize)>), FormatError> {
    let bytes = s.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (n, used) = decode_order(bytes)?;
    let mut reader = BitReader::new(&bytes[used..])?;
    let need = n * n.saturating_sub(1) / 2;
    if reader.remaining() < need {
        return Err(FormatError::Malformed("not enough adjacency bits".into()));
    }
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if reader.read_bit() {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    Ok((n, edges))
}

/// sparse6 string of an edge list on `n` vertices.
pub fn sparse6_from_edges(n: usize, edges: &[(usize, usize)]) -> String {
    let k = std::cmp::max(
        1,
        usize::BITS as usize - n.saturating_sub(1).leading_zeros() as usize,
    );
    let mut sorted: Vec<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    sorted.sort_unstable_by_key(|&(u, v)| (v, u));

    let mut out = vec![b':'];
    encode_order(n, &mut out);
    let mut bits = BitWriter::new();
    let mut v = 0usize;
    for &(u, w) in &sorted {
        if w == v {
            bits.push(false);
            bits.push_value(u, k);
        } else if w == v + 1 {
            v += 1;
            bits.push(true);
            bits.push_value(u, k);
        } else {
            v = w;
            bits.push(true);
            bits.push_value(w, k);
            bits.push(false);
            bits.push_value(u, k);
        }
    }
    // Pad with 1s; when n is a power of two a run of 1s could decode as one
    // more edge, so a single guard 0 goes first in that situation.
    let rem = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && rem >= k && v < n.saturating_sub(1) {
        bits.push(false);
    }
    out.extend(bits.into_bytes(true));
    String::from_utf8(out).expect("printable ascii")
}

/// sparse6 export of a Woolly Hat graph.
pub fn sparse6(g: &WhGraph) -> String {
    let edges: Vec<(usize, usize)> = g.edge_pairs().collect();
    sparse6_from_edges(g.order(), &edges)
}

/// Parses a sparse6 string into (order, sorted edge list).
pub fn parse_sparse6(s: &str) -> Result<(usize, Vec<(usize, usize)>), FormatError> {
    let bytes = s.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>sparse6<<").unwrap_or(bytes);
    let bytes = bytes
        .strip_prefix(b":")
        .ok_or_else(|| FormatError::Malformed("sparse6 must start with ':'".into()))?;
    let (n, used) = decode_order(bytes)?;
    let k = std::cmp::max(
        1,
        usize::BITS as usize - n.saturating_sub(1).leading_zeros() as usize,
    );
    let mut reader = BitReader::new(&bytes[used..])?;
    let mut edges = Vec::new();
    let mut v = 0usize;
    while reader.remaining() > k {
        let b = reader.read_bit();
        let x = reader.read_value(k);
        if b {
            v += 1;
        }
        if v >= n || x >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok((n, edges))
}

/// DOT rendering with vertex labels `A0..`, `B0..`, `C0..` and an edge-kind
/// attribute per edge.
pub fn dot(g: &WhGraph) -> String {
    let p = g.params();
    let mut out = String::new();
    out.push_str(&format!(
        "graph wh_{}_{}_{}_{}_{} {{\n",
        p.n(),
        p.a(),
        p.b(),
        p.c(),
        p.d()
    ));
    for v in 0..g.order() {
        out.push_str(&format!("  {};\n", g.vertex_id(v)));
    }
    for &(u, v, kind) in g.edges() {
        out.push_str(&format!(
            "  {} -- {} [kind=\"{}\"];\n",
            g.vertex_id(u),
            g.vertex_id(v),
            kind.label()
        ));
    }
    out.push_str("}\n");
    out
}
