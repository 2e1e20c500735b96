//! graph6 encoding.
//!
//! Layout: a size prefix, then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into
//! 6-bit groups, zero-padded, each group stored as `value + 63`.
//! Orders up to 62 use one prefix byte; larger orders use `126` followed by
//! three bytes carrying 18 bits.

use crate::graph::{GraphBuilder, MAX_ORDER};
use crate::{Error, Graph, Result};

const BIAS: u8 = 63;
const LONG_MARKER: u8 = 126;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_MARKER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let (body, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (text.as_bytes(), 0),
    };
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: base + offset,
        reason: reason.to_string(),
    };

    let byte = |pos: usize| -> Result<u8> {
        let b = *body.get(pos).ok_or_else(|| err(pos, "unexpected end of input"))?;
        if !(BIAS..=126).contains(&b) {
            return Err(err(pos, &format!("byte {b:#04x} outside printable range 63..126")));
        }
        Ok(b - BIAS)
    };

    if body.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, mut pos) = if body[0] != LONG_MARKER {
        (byte(0)? as usize, 1)
    } else if body.get(1) != Some(&LONG_MARKER) {
        let mut n = 0usize;
        for k in 1..4 {
            n = (n << 6) | byte(k)? as usize;
        }
        if n < 63 {
            return Err(err(1, "long size prefix used for order below 63"));
        }
        (n, 4)
    } else {
        let mut n = 0u64;
        for k in 2..8 {
            n = (n << 6) | byte(k)? as u64;
        }
        if n <= 258_047 {
            return Err(err(2, "8-byte size prefix used for order below 258048"));
        }
        (n as usize, 8)
    };
    if n > MAX_ORDER {
        return Err(err(0, &format!("order {n} exceeds supported maximum {MAX_ORDER}")));
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let groups = total_bits.div_ceil(6);
    let mut b = GraphBuilder::new(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut seen = 0usize;
    for _ in 0..groups {
        let v = byte(pos)?;
        for bit in (0..6).rev() {
            let on = (v >> bit) & 1 == 1;
            if seen < total_bits {
                if on {
                    b.add_edge(i, j);
                }
                i += 1;
                if i == j {
                    j += 1;
                    i = 0;
                }
                seen += 1;
            } else if on {
                return Err(err(pos, "nonzero padding bits"));
            }
        }
        pos += 1;
    }
    if pos != body.len() {
        return Err(err(pos, "trailing data after adjacency bytes"));
    }
    Ok(b.build())
}

/// Parse newline-separated graph6 text, skipping blank lines.
/// Error offsets are relative to the offending line; the line number is prefixed.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .map(|(k, line)| (k, line.trim_end_matches('\r')))
        .filter(|(_, line)| !line.is_empty())
        .map(|(k, line)| {
            from_graph6(line).map_err(|e| match e {
                Error::Graph6 { offset, reason } => Error::Graph6 {
                    offset,
                    reason: format!("line {}: {reason}", k + 1),
                },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straightforward re-encoding from an explicit bit list, used as an
    /// independent check of the packed writer.
    fn reference_encode(g: &Graph) -> String {
        let n = g.n();
        assert!(n <= 62);
        let mut bitlist = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bitlist.push(g.has_edge(i, j));
            }
        }
        while bitlist.len() % 6 != 0 {
            bitlist.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bitlist.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a * 2 + b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_orders() {
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(reference_encode(&Graph::cycle(5)), "Dhc");
        assert_eq!(from_graph6("Dhc").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn matches_reference_encoder() {
        for seed in 0..50 {
            let g = crate::random::random_gnp(1 + (seed as usize % 40), seed, 0.5);
            assert_eq!(to_graph6(&g), reference_encode(&g));
        }
    }

    #[test]
    fn long_prefix_round_trip() {
        let g = crate::random::random_gnp(100, 3, 0.2);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(from_graph6(">>graph6<<Dhc").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn errors_name_offsets() {
        match from_graph6("Dh") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match from_graph6("Dhcx") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        match from_graph6("D h") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(from_graph6("").is_err());
        // 'd' = 37 = 0b100101: padding bits for n = 5 must be zero
        assert!(from_graph6("Dhd").is_err());
    }

    #[test]
    fn parse_lines_skips_blanks() {
        let gs = parse_lines("Dhc\n\n@\r\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].n(), 1);
    }
}
