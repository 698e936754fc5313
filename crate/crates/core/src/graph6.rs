//! graph6 encoding of undirected graphs (ASCII, one graph per line).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

fn upper_triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let nbits = upper_triangle_bits(n);
    let mut bits = vec![false; nbits];
    for &(i, j) in g.edges() {
        // bit order: (0,1), (0,2), (1,2), (0,3), ...
        bits[j * (j - 1) / 2 + i] = true;
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let sixes = |b: &[u8]| -> usize { b.iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize) };
    match bytes {
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((sixes(&rest[..6]), &rest[6..])),
        [126, rest @ ..] if rest.len() >= 3 => Ok((sixes(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::Graph6("truncated size field".into())),
        [c, rest @ ..] => Ok(((c - 63) as usize, rest)),
        [] => Err(Error::Graph6("empty input".into())),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header is accepted.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(Error::Graph6(format!("invalid byte {c:#04x}")));
    }
    let (n, body) = decode_size(bytes)?;
    let nbits = upper_triangle_bits(n);
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    for (k, &c) in body.iter().enumerate() {
        let v = c - 63;
        for bit in 0..6 {
            let idx = k * 6 + bit;
            let set = v & (1 << (5 - bit)) != 0;
            if idx >= nbits {
                if set {
                    return Err(Error::Graph6("nonzero padding bits".into()));
                }
                continue;
            }
            if set {
                edges.push((i, j));
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Graph::new(n, &edges)
}

/// Parses every non-blank line of `text`.
pub fn read_graph6(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(from_graph6)
        .collect()
}
