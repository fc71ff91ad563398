//! graph6 codec for graphs on up to 64 vertices, compatible with the format
//! emitted by nauty's geng and friends: a size field, then the upper triangle
//! of the adjacency matrix in column order, six bits per printable byte
//! (value + 63). Sizes 0..=62 use a single byte; 63 and 64 use the standard
//! long form `~` followed by three bytes carrying 18 bits.

use std::io::BufRead;

use crate::error::{Graph6Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Encodes a graph as one graph6 line (no trailing newline). Deterministic.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // long form: '~' then 18 bits of n, big-endian, 6 bits per byte
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | g.has_edge(row, col) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line. A leading `>>graph6<<` header is tolerated and
/// stripped.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { byte: b, offset }.into());
        }
    }
    let (n, payload) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength {
                n: 0,
                expected: 4,
                got: bytes.len(),
            }
            .into());
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > 64 {
        return Err(Graph6Error::UnsupportedSize { n }.into());
    }
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let expected = bit_count.div_ceil(6);
    if payload.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            got: payload.len(),
        }
        .into());
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = payload[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((row, col));
            }
            idx += 1;
            if idx == bit_count {
                break 'outer;
            }
        }
    }
    if bit_count % 6 != 0 {
        let last = payload[payload.len() - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::PaddingBits.into());
        }
    }
    Graph::from_edges(n, &edges)
}

/// Reads graph6 lines from a buffered reader, one graph per line. Header
/// lines and blank lines are skipped.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().filter_map(|line| match line {
        Err(e) => Some(Err(e.into())),
        Ok(l) => {
            let l = l.trim();
            let l = l.strip_prefix(HEADER).unwrap_or(l);
            if l.is_empty() {
                None
            } else {
                Some(parse_graph6(l))
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn parse_k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parse_edgeless_five() {
        let g = parse_graph6("D??").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn c5_round_trip() {
        let c5 = Graph::cycle(5).unwrap();
        let enc = to_graph6(&c5);
        assert_eq!(parse_graph6(&enc).unwrap(), c5);
    }

    #[test]
    fn header_tolerated() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g.n(), 2);
    }

    #[test]
    fn long_form_for_63_and_64_vertices() {
        for n in [63usize, 64] {
            let g = Graph::path(n).unwrap();
            let enc = to_graph6(&g);
            assert_eq!(enc.as_bytes()[0], 126);
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            parse_graph6("A"),
            Err(Error::Graph6(Graph6Error::BadLength { .. }))
        ));
        assert!(matches!(
            parse_graph6("A\x1f"),
            Err(Error::Graph6(Graph6Error::ByteOutOfRange { .. }))
        ));
        // K2 payload with a nonzero padding bit: 100001 -> 33+63 = 96 = '`'
        assert!(matches!(
            parse_graph6("A`"),
            Err(Error::Graph6(Graph6Error::PaddingBits))
        ));
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6(Graph6Error::Empty))
        ));
    }

    #[test]
    fn reader_skips_header_and_blank_lines() {
        let data = ">>graph6<<\nA_\n\nD??\n";
        let graphs: Vec<_> = read_graph6(data.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].n(), 2);
        assert_eq!(graphs[1].n(), 5);
    }
}
