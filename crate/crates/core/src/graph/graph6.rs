//! graph6 text encoding (header-less form, as written by nauty's `geng`).

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn parse_err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + 63));
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted; error offsets index the original input.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let lead = s.len() - s.trim_start().len();
    let mut text = s.trim();
    let mut base = lead;
    if let Some(rest) = text.strip_prefix(HEADER) {
        text = rest;
        base += HEADER.len();
    }
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return parse_err(base, "empty input");
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return parse_err(base + i, format!("byte 0x{b:02x} outside graph6 range 63..=126"));
        }
    }
    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return parse_err(base + bytes.len(), "truncated vertex count");
        }
        if bytes[1] == 126 {
            return parse_err(base + 1, format!("vertex count exceeds {MAX_VERTICES}"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n == 0 || n > MAX_VERTICES {
        return parse_err(base, format!("vertex count {n} outside 1..={MAX_VERTICES}"));
    }
    let need = (n * (n - 1) / 2).div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != need {
        let at = base + body_start + body.len().min(need);
        return parse_err(at, format!("expected {need} adjacency bytes for n = {n}, found {}", body.len()));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_codes() {
        assert_eq!(to_graph6(&Graph::new(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::new(2).unwrap()), "A?");
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        // example from the format description: n = 5, edges 02 04 13 34
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn long_vertex_count_prefix() {
        let g = Graph::new(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let k = Graph::complete(64).unwrap();
        assert_eq!(from_graph6(&to_graph6(&k)).unwrap(), k);
    }

    #[test]
    fn decode_errors_carry_offsets() {
        assert!(matches!(from_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(from_graph6("D Q"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(from_graph6("DQ"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(from_graph6("DQcc"), Err(Error::Parse { .. })));
        assert!(from_graph6("?").is_err());
        assert!(from_graph6("~~????????").is_err());
    }

    #[test]
    fn accepts_header_and_whitespace() {
        let g = from_graph6(">>graph6<<DQc\n").unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(3, 4));
    }
}
