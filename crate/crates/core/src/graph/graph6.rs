//! graph6 encoding (McKay's format), restricted to the kernel's order cap.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, otherwise `126` followed by three
//! 6-bit groups. The upper triangle is read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed big-endian into 6-bit groups,
//! zero-padded, each group offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse one graph6 string. An optional `>>graph6<<` header and a single
/// trailing newline are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut start = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
    }
    let mut end = bytes.len();
    if end > start && bytes[end - 1] == b'\n' {
        end -= 1;
        if end > start && bytes[end - 1] == b'\r' {
            end -= 1;
        }
    }
    let body = &bytes[start..end];
    if body.is_empty() {
        return Err(Error::parse(start, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(start + i, format!("byte 0x{b:02x} outside graph6 range")));
        }
    }
    let (n, header_len) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.len() >= 2 && body[1] == 126 {
            return Err(Error::parse(start + 1, "8-byte order header exceeds the order cap"));
        }
        if body.len() < 4 {
            return Err(Error::parse(start + body.len(), "truncated order header"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(Error::OrderCap {
            order: n,
            cap: MAX_ORDER,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < need {
        return Err(Error::parse(start + body.len(), format!("truncated: expected {need} data bytes, found {}", data.len())));
    }
    if data.len() > need {
        return Err(Error::parse(start + header_len + need, "trailing bytes after graph6 data"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(start + header_len + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parse newline-separated graph6 lines, skipping blank lines.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            out.push(decode(trimmed).map_err(|e| match e {
                Error::Parse { offset: o, reason } => Error::Parse {
                    offset: offset + o,
                    reason,
                },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        decode(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // Same example as networkx / petgraph: 5 vertices, edges 0-2 0-4 1-3 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(encode(&petersen()), "IheA@GUAo");
        assert_eq!(encode(&complete(4).unwrap()), "C~");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn serde_uses_graph6() {
        let g = petersen();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, "\"IheA@GUAo\"");
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        assert!(serde_json::from_str::<Graph>("\"D?\"").is_err());
    }

    #[test]
    fn round_trip_five_vertex_strings() {
        for s in ["D?{", "DQc", "D~{", "D??"] {
            assert_eq!(encode(&decode(s).unwrap()), s);
        }
        assert_eq!(decode("D?{").unwrap().size(), 4);
    }

    #[test]
    fn long_header() {
        for n in [63, 64] {
            let g = cycle(n).unwrap();
            let s = encode(&g);
            assert_eq!(s.as_bytes()[0], 126);
            assert_eq!(decode(&s).unwrap(), g);
        }
        assert!(matches!(decode("~?@@"), Err(Error::OrderCap { order: 65, .. })));
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(decode("D?"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(decode("D?{?"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(decode("D ?"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("~~"), Err(Error::Parse { offset: 1, .. })));
        // "A" = 2 vertices needs one data byte; "A@" has a nonzero padding bit.
        assert!(matches!(decode("A@"), Err(Error::Parse { offset: 1, .. })));
        assert_eq!(decode("A_").unwrap(), path(2).unwrap());
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(decode(">>graph6<<DQc\n").unwrap(), decode("DQc").unwrap());
        let gs = decode_lines("DQc\n\nC~\r\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert!(matches!(decode_lines("DQc\nC~~\n"), Err(Error::Parse { offset: 6, .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=10, seed in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut x = seed | 1;
            for j in 1..n {
                for i in 0..j {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 1 == 1 { g.add_edge(i, j); }
                }
            }
            let s = encode(&g);
            prop_assert_eq!(decode(&s).unwrap(), g);
            prop_assert_eq!(encode(&decode(&s).unwrap()), s);
        }
    }
}
