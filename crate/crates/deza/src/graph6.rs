//! graph6 interchange format, bit-exact per the standard definition: a size
//! prefix `N(n)`, then the upper-triangle adjacency bits `x(0,1), x(0,2),
//! x(1,2), x(0,3), ...` packed big-endian six bits per character, each
//! character offset by 63, padded with zero bits.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated size prefix")]
    TruncatedHeader,
    #[error("truncated record: expected {expected} adjacency characters, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("unexpected trailing character at offset {offset}")]
    Trailing { offset: usize },
    #[error("padding bits at offset {offset} are not zero")]
    NonzeroPadding { offset: usize },
    #[error("graph6 order {order} is outside the supported range 1..={MAX_ORDER}")]
    UnsupportedOrder { order: u64 },
}

/// Parse error for a multi-record file, one graph per line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct Graph6LineError {
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // Three-character form for 63 <= n <= 258047; our cap is 64.
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.adjacent(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(record: &str) -> Result<Graph, Graph6Error> {
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, offset });
        }
    }

    let (order, header_len) = parse_order(bytes)?;
    if order == 0 || order > MAX_ORDER as u64 {
        return Err(Graph6Error::UnsupportedOrder { order });
    }
    let n = order as usize;

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    let found = bytes.len() - header_len;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::Trailing {
            offset: header_len + expected,
        });
    }

    let mut adj = vec![0u64; n];
    let mut idx = 0;
    'fill: for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            idx += 1;
            if idx == bit_count {
                break 'fill;
            }
        }
    }
    if !bit_count.is_multiple_of(6) {
        let last = bytes[header_len + expected - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: header_len + expected - 1,
            });
        }
    }
    Ok(Graph::from_rows(adj))
}

fn parse_order(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as u64, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let mut order = 0u64;
        for &b in &bytes[2..8] {
            order = order << 6 | (b - 63) as u64;
        }
        return Ok((order, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::TruncatedHeader);
    }
    let mut order = 0u64;
    for &b in &bytes[1..4] {
        order = order << 6 | (b - 63) as u64;
    }
    Ok((order, 4))
}

/// Parses a whole file of graph6 records, one per line. An empty line is a
/// parse error; line numbers are 1-based. A trailing `\r` is tolerated.
pub fn decode_lines(input: &str) -> Result<Vec<Graph>, Graph6LineError> {
    input
        .lines()
        .enumerate()
        .map(|(idx, line)| {
            decode(line.trim_end_matches('\r')).map_err(|source| Graph6LineError {
                line: idx + 1,
                source,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_encodes_by_hand() {
        // Size prefix 'A' = 63 + 2; single bit x(0,1) = 1 packed as 100000,
        // so 63 + 32 = 95 = '_'.
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(encode(&k2), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
    }

    #[test]
    fn k3_known_form() {
        assert_eq!(encode(&Graph::complete(3).unwrap()), "Bw");
    }

    #[test]
    fn roundtrip_small_corpus() {
        let graphs = vec![
            Graph::empty(1).unwrap(),
            Graph::empty(7).unwrap(),
            Graph::path(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(6).unwrap(),
            Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
            crate::testutil::petersen(),
            Graph::complete(63).unwrap(),
            Graph::cycle(64).unwrap(),
        ];
        for g in graphs {
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn empty_record_is_an_error() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
    }

    #[test]
    fn invalid_byte_reports_offset() {
        assert_eq!(
            decode("A "),
            Err(Graph6Error::InvalidByte {
                byte: b' ',
                offset: 1
            })
        );
    }

    #[test]
    fn truncated_and_trailing() {
        assert_eq!(
            decode("D"),
            Err(Graph6Error::Truncated {
                expected: 2,
                found: 0
            })
        );
        assert_eq!(decode("A_?"), Err(Graph6Error::Trailing { offset: 2 }));
    }

    #[test]
    fn nonzero_padding_rejected() {
        // K2 body with a padding bit set: 100001 -> 63 + 33 = '`'.
        assert_eq!(decode("A`"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
    }

    #[test]
    fn order_zero_unsupported() {
        assert_eq!(decode("?"), Err(Graph6Error::UnsupportedOrder { order: 0 }));
    }

    #[test]
    fn large_order_unsupported() {
        // n = 100 in the three-character form.
        let rec: String = vec![126u8, 63, 63 + 1, 63 + 36]
            .into_iter()
            .map(char::from)
            .collect();
        match decode(&rec) {
            Err(Graph6Error::UnsupportedOrder { order }) => assert!(order > 64),
            other => panic!("expected UnsupportedOrder, got {other:?}"),
        }
    }

    #[test]
    fn line_errors_carry_line_numbers() {
        let err = decode_lines("A_\n\nA_").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.source, Graph6Error::Empty);

        let ok = decode_lines("A_\r\nBw\n").unwrap();
        assert_eq!(ok.len(), 2);
    }
}
