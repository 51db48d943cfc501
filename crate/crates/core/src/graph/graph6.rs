//! graph6 encoding (the format used by nauty's `geng`/`showg`).
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, `126` followed by three
//! 6-bit groups for `n <= 258047`, and `126 126` followed by six groups
//! beyond that. The upper triangle is packed column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), big-endian within each 6-bit group,
//! each group offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub const HEADER: &str = ">>graph6<<";

fn push_n(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` without header or trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    push_n(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn read_n(bytes: &[u8]) -> Result<(usize, usize)> {
    let group = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(Error::Parse(format!("byte {b} outside graph6 range 63..=126")))
        }
    };
    match bytes {
        [] => Err(Error::Parse("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("truncated 8-byte vertex count".into()));
            }
            let mut n = 0;
            for &b in &rest[..6] {
                n = n << 6 | group(b)?;
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("truncated 4-byte vertex count".into()));
            }
            let mut n = 0;
            for &b in &rest[..3] {
                n = n << 6 | group(b)?;
            }
            Ok((n, 4))
        }
        [b, ..] => {
            let n = group(*b)?;
            if n > 62 {
                return Err(Error::Parse("invalid one-byte vertex count".into()));
            }
            Ok((n, 1))
        }
    }
}

/// Decodes a single graph6 line. A leading `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn decode(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let (n, off) = read_n(bytes)?;
    let body = &bytes[off..];
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Parse(format!(
            "expected {need} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6];
            if !(63..=126).contains(&b) {
                return Err(Error::Parse(format!("byte {b} outside graph6 range 63..=126")));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::Parse("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

/// Decodes every non-empty line of a graph6 file.
pub fn decode_all(text: &str) -> Result<Vec<Graph>> {
    let graphs: Vec<Graph> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(decode)
        .collect::<Result<_>>()?;
    if graphs.is_empty() {
        return Err(Error::Parse("no graph in input".into()));
    }
    Ok(graphs)
}
