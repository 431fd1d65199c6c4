//! graph6 interchange format: canonical ASCII encoding with >=63 offset bytes
//! and big-endian bit packing of the upper triangle in column order.

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err<T>(offset: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Graph6Parse {
        offset,
        msg: msg.into(),
    })
}

/// Decodes a one-line graph6 string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return parse_err(0, "empty input");
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return parse_err(i, format!("byte {b:#04x} outside graph6 range 63..=126"));
        }
    }

    // size header
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return parse_err(bytes.len(), "truncated 36-bit size header");
            }
            let mut n: u64 = 0;
            for &b in &bytes[2..8] {
                n = (n << 6) | u64::from(b - 63);
            }
            (n as usize, 8)
        } else {
            if bytes.len() < 4 {
                return parse_err(bytes.len(), "truncated 18-bit size header");
            }
            let mut n: u64 = 0;
            for &b in &bytes[1..4] {
                n = (n << 6) | u64::from(b - 63);
            }
            if n < 63 {
                return parse_err(1, "18-bit size header used for n < 63");
            }
            (n as usize, 4)
        }
    } else {
        (usize::from(bytes[0] - 63), 1)
    };

    if n == 0 {
        return parse_err(0, "graph6 requires n >= 1");
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return parse_err(
            bytes.len(),
            format!(
                "need {nbytes} adjacency bytes for n={n}, found {}",
                bytes.len() - pos
            ),
        );
    }
    if bytes.len() - pos > nbytes {
        return parse_err(pos + nbytes, "trailing bytes after adjacency data");
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_index / 6];
            let bit = (byte - 63) >> (5 - (bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = bytes[pos + nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos += nbytes;
            return parse_err(pos - 1, "nonzero padding bits");
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes a graph in graph6 form, preserving the current labeling.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc: u8 = 0;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Canonical graph6: relabels to the canonical form first, so isomorphic
/// graphs encode identically.
pub fn canonical_graph6(g: &Graph) -> String {
    encode_graph6(&canon::canonical_labeling(g))
}
