//! graph6 text codec.
//!
//! One graph per line, no trailing newline in the value itself. Output uses
//! the short header for orders up to 62 and the 3-byte long header above
//! that; input accepts both. The companion formats sparse6 (`:`) and
//! digraph6 (`&`) are rejected with dedicated errors so callers can tell a
//! wrong format from a corrupt one.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const LONG_HEADER: u8 = 126; // '~'

/// Number of 6-bit groups needed for the upper triangle of an order-n graph.
fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Encode a graph as graph6 text.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        // 18-bit order, big-endian 6-bit groups.
        out.push(LONG_HEADER);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    // Upper triangle in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode one line of graph6 text.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Header("empty input".into()));
    }
    if bytes[0] == b':' || bytes[0] == b';' {
        return Err(Error::Sparse6Unsupported);
    }
    if bytes[0] == b'&' {
        return Err(Error::Digraph6Unsupported);
    }
    for &b in bytes {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6CharOutOfRange(b));
        }
    }
    let (n, body) = if bytes[0] == LONG_HEADER {
        if bytes.len() >= 2 && bytes[1] == LONG_HEADER {
            // 8-byte header encodes orders beyond any graph this crate holds.
            if bytes.len() < 8 {
                return Err(Error::Graph6Header("truncated long-order header".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | (b - OFFSET) as usize;
            }
            (n, &bytes[8..])
        } else {
            if bytes.len() < 4 {
                return Err(Error::Graph6Header("truncated long-order header".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = (n << 6) | (b - OFFSET) as usize;
            }
            (n, &bytes[4..])
        }
    } else {
        (usize::from(bytes[0] - OFFSET), &bytes[1..])
    };
    if n < 1 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Error::Graph6Length {
            expected,
            found: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = body[bit / 6] - OFFSET;
            if group >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    while bit % 6 != 0 {
        let group = body[bit / 6] - OFFSET;
        if group >> (5 - bit % 6) & 1 == 1 {
            return Err(Error::Graph6TrailingBits);
        }
        bit += 1;
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent reference encoder: builds the bit string naively and
    /// chunks it by hand, straight from the format definition.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits: Vec<bool> = Vec::new();
        for v in 1..n {
            for u in 0..v {
                bits.push(edges.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut out = String::new();
        assert!(n <= 62, "reference encoder only covers the short header");
        out.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let val = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
            out.push((val + 63) as char);
        }
        out
    }

    #[test]
    fn known_strings() {
        // Single edge on two vertices and the 3-leaf star, checked against
        // the reference encoder and the expected literals.
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");

        let star3 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(to_graph6(&star3), "Cs");
        assert_eq!(reference_encode(4, &[(0, 1), (0, 2), (0, 3)]), "Cs");
    }

    #[test]
    fn decode_known_strings() {
        let g = from_graph6("A_").unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.has_edge(0, 1));

        let g = from_graph6("Cs").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn encoder_matches_reference_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0x67726170);
        for _ in 0..200 {
            let n = rng.random_range(1..=20);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            assert_eq!(to_graph6(&g), reference_encode(n, &edges));
        }
    }

    #[test]
    fn round_trip_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0x726f756e);
        for _ in 0..1000 {
            let n = rng.random_range(1..=20);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let text = to_graph6(&g);
            assert_eq!(from_graph6(&text).unwrap(), g);
        }
    }

    #[test]
    fn round_trip_every_order_up_to_cap() {
        // Path graphs at every supported order, including the two that need
        // the long header (63, 64).
        for n in 2..=64 {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let g = Graph::new(n, &edges).unwrap();
            let text = to_graph6(&g);
            if n <= 62 {
                assert_eq!(text.as_bytes()[0], n as u8 + 63);
            } else {
                assert_eq!(text.as_bytes()[0], b'~');
            }
            assert_eq!(from_graph6(&text).unwrap(), g);
        }
    }

    #[test]
    fn long_header_accepted_for_small_order() {
        // A long-form header spelling n=2 decodes the same graph as "A_".
        let long = format!("~{}{}{}_", '?', '?', 'A');
        assert_eq!(from_graph6(&long).unwrap(), from_graph6("A_").unwrap());
    }

    #[test]
    fn rejects_wrong_formats_distinctly() {
        assert_eq!(from_graph6(":Fa@x^"), Err(Error::Sparse6Unsupported));
        assert_eq!(from_graph6("&A_"), Err(Error::Digraph6Unsupported));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(from_graph6(""), Err(Error::Graph6Header(_))));
        assert_eq!(
            from_graph6("C"),
            Err(Error::Graph6Length { expected: 1, found: 0 })
        );
        assert_eq!(
            from_graph6("Csa"),
            Err(Error::Graph6Length { expected: 1, found: 2 })
        );
        assert_eq!(from_graph6("A "), Err(Error::Graph6CharOutOfRange(b' ')));
        // "A" header (n=2) has one payload bit; a nonzero pad bit is junk.
        assert_eq!(from_graph6("AG"), Err(Error::Graph6TrailingBits));
        // Order 0 and orders beyond the 64-vertex cap are rejected.
        assert_eq!(from_graph6("?"), Err(Error::OrderOutOfRange(0)));
        assert_eq!(from_graph6("~?A?"), Err(Error::OrderOutOfRange(128)));
    }

    #[test]
    fn trims_line_endings() {
        assert!(from_graph6("A_\n").is_ok());
        assert!(from_graph6("A_\r\n").is_ok());
    }
}
