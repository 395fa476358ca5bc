//! graph6 encoding for graphs of up to 62 vertices (this crate stops at 16).
//!
//! One byte `n + 63`, then the upper triangle `x(0,1), x(0,2), x(1,2), x(0,3), ..`
//! packed six bits per byte, most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;

/// Upper-triangle bits packed into a `u128`, first pair in the most
/// significant position; numeric order equals bitstring order.
pub(crate) fn upper_triangle_bits(g: &Graph) -> u128 {
    let mut bits = 0u128;
    let mut k = 0;
    for j in 1..g.n() {
        let row = g.row(j);
        for i in 0..j {
            if row & (1 << i) != 0 {
                bits |= 1u128 << (127 - k);
            }
            k += 1;
        }
    }
    bits
}

pub(crate) fn graph_from_bits(n: usize, bits: u128) -> Graph {
    let mut g = Graph::new(n).expect("bit keys only exist for n <= 16");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits & (1u128 << (127 - k)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

pub(crate) fn encode_bits(n: usize, bits: u128) -> String {
    let total = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + total.div_ceil(6));
    out.push((n as u8 + BIAS) as char);
    let mut k = 0;
    while k < total {
        let chunk = ((bits << k) >> 122) as u8;
        out.push((chunk + BIAS) as char);
        k += 6;
    }
    out
}

/// Encodes `g` as a graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    encode_bits(g.n(), upper_triangle_bits(g))
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let mut bytes = line.trim().as_bytes();
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
    }
    let Some((&first, data)) = bytes.split_first() else {
        return Err(Error::TruncatedBits);
    };
    check_char(first, 0)?;
    if first == 126 {
        // 18- and 36-bit size forms are for n >= 63
        return Err(Error::OversizeGraph { n: 63, max: MAX_VERTICES });
    }
    let n = (first - BIAS) as usize;
    if n > MAX_VERTICES {
        return Err(Error::OversizeGraph { n, max: MAX_VERTICES });
    }
    let total = n * n.saturating_sub(1) / 2;
    let needed = total.div_ceil(6);
    for (i, &b) in data.iter().enumerate() {
        check_char(b, i + 1)?;
    }
    if data.len() < needed {
        return Err(Error::TruncatedBits);
    }
    if data.len() > needed {
        return Err(Error::TrailingGarbage(data.len() - needed));
    }
    let mut bits = 0u128;
    for (i, &b) in data.iter().enumerate() {
        let chunk = ((b - BIAS) as u128) << 122;
        bits |= chunk >> (6 * i);
    }
    // padding bits beyond the triangle are ignored
    if total < 128 {
        bits &= !(u128::MAX >> total);
    }
    Ok(graph_from_bits(n, bits))
}

fn check_char(b: u8, offset: usize) -> Result<()> {
    if (63..=126).contains(&b) {
        Ok(())
    } else {
        Err(Error::BadChar { byte: b, offset })
    }
}

/// Parses a corpus: one graph6 line per graph, blank lines ignored.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(emit_graph6(&Graph::new(1).unwrap()), "@");
        assert_eq!(emit_graph6(&Graph::new(0).unwrap()), "?");
        assert_eq!(emit_graph6(&Graph::complete(2).unwrap()), "A_");
        // published examples: K4 is "C~", the 5-cycle 0-1-2-3-4-0 is "Dhc"
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(emit_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(emit_graph6(&Graph::petersen()).len(), 1 + 8);
    }

    #[test]
    fn decodes_what_it_encodes() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&c5)).unwrap(), c5);
        let p = Graph::petersen();
        assert_eq!(parse_graph6(&emit_graph6(&p)).unwrap(), p);
        assert_eq!(parse_graph6(">>graph6<<Dhc\n").unwrap(), c5);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(parse_graph6(""), Err(Error::TruncatedBits));
        assert_eq!(parse_graph6("D"), Err(Error::TruncatedBits));
        assert_eq!(parse_graph6("Dhc?"), Err(Error::TrailingGarbage(1)));
        assert_eq!(parse_graph6("D h"), Err(Error::BadChar { byte: b' ', offset: 1 }));
        assert!(matches!(parse_graph6("Q"), Err(Error::OversizeGraph { n: 18, .. })));
    }
}
