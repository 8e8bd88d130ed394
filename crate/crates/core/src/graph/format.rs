//! graph6 and plain edge-list text formats.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups, each offset by 63.
//! The edge-list format is a vertex count followed by one `u v` pair per line.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses either format. Input whose first non-blank character is a digit is an
/// edge list; anything else is a single graph6 line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let start = text.len() - text.trim_start().len();
    match text[start..].chars().next() {
        Some(c) if c.is_ascii_digit() => parse_edge_list(text),
        Some(_) => {
            let line_end = text[start..].find('\n').map_or(text.len(), |p| start + p);
            let rest = &text[line_end..];
            if let Some(p) = rest.find(|c: char| !c.is_whitespace()) {
                return Err(parse_err(
                    line_end + p,
                    "trailing data after graph6 line (use a stream reader for several graphs)",
                ));
            }
            parse_graph6_at(text[start..line_end].trim_end(), start)
        }
        None => Err(parse_err(0, "empty input")),
    }
}

/// Parses a document holding either one edge list or any number of graph6 lines.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let start = text.len() - text.trim_start().len();
    if text[start..].starts_with(|c: char| c.is_ascii_digit()) {
        return Ok(vec![parse_edge_list(text)?]);
    }
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim_end();
        let lead = body.len() - body.trim_start().len();
        if !body.trim().is_empty() {
            graphs.push(parse_graph6_at(body.trim_start(), offset + lead)?);
        }
        offset += line.len();
    }
    Ok(graphs)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_at(text.trim(), 0)
}

fn parse_graph6_at(line: &str, base: usize) -> Result<Graph> {
    let (bytes, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), base + HEADER.len()),
        None => (line.as_bytes(), base),
    };
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(
            base + pos,
            format!("byte {:#04x} outside graph6 range", bytes[pos]),
        ));
    }
    let (n, mut pos) = decode_order(bytes, base)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(parse_err(
            base + bytes.len(),
            format!(
                "expected {need} adjacency bytes for {n} vertices, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(base + bytes.len() - 1, "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Graph::new(n, edges)
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let fold = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    match bytes {
        [] => Err(parse_err(base, "missing vertex count")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err(
                    base + bytes.len(),
                    "truncated 8-byte vertex count",
                ));
            }
            Ok((fold(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(
                    base + bytes.len(),
                    "truncated 4-byte vertex count",
                ));
            }
            Ok((fold(&rest[..3]), 4))
        }
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let push6 = |out: &mut Vec<u8>, groups: usize| {
        for g in (0..groups).rev() {
            out.push(((n >> (6 * g)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push6(out, 3);
    } else {
        out.extend([126, 126]);
        push6(out, 6);
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses `n` followed by whitespace-separated `u v` pairs. Lines starting with
/// `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim_start().starts_with('#') {
            let mut i = 0;
            let bytes = line.as_bytes();
            while i < bytes.len() {
                if bytes[i].is_ascii_whitespace() {
                    i += 1;
                    continue;
                }
                let j = (i..bytes.len())
                    .find(|&j| bytes[j].is_ascii_whitespace())
                    .unwrap_or(bytes.len());
                tokens.push((offset + i, &line[i..j]));
                i = j;
            }
        }
        offset += line.len();
    }
    let number = |(at, tok): (usize, &str)| {
        tok.parse::<usize>().map_err(|_| {
            parse_err(
                at,
                format!("expected a non-negative integer, found {tok:?}"),
            )
        })
    };
    let mut iter = tokens.into_iter();
    let n = number(
        iter.next()
            .ok_or_else(|| parse_err(0, "missing vertex count"))?,
    )?;
    let rest: Vec<_> = iter.collect();
    if rest.len() % 2 == 1 {
        let (at, _) = rest[rest.len() - 1];
        return Err(parse_err(at, "dangling endpoint without a partner"));
    }
    let mut edges = Vec::with_capacity(rest.len() / 2);
    for pair in rest.chunks(2) {
        edges.push((number(pair[0])?, number(pair[1])?));
    }
    Graph::new(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_graph6() {
        let g = parse_graph("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(to_graph6(&g), "Bw");
    }

    #[test]
    fn edge_list_basic() {
        let g = parse_graph("2\n0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(to_edge_list(&g), "2\n0 1\n");
    }

    #[test]
    fn edge_list_rejects_loop() {
        assert!(matches!(parse_graph("3\n0 0"), Err(Error::Validation(_))));
    }

    #[test]
    fn edge_list_rejects_duplicates() {
        assert!(matches!(
            parse_graph("3\n0 1\n1 0"),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(
            parse_graph("3\n0 x"),
            Err(Error::Parse {
                offset: 4,
                message: "expected a non-negative integer, found \"x\"".into()
            })
        );
        // 'B' then byte 0x20 is out of range.
        match parse_graph6("B w") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("Bww") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        // Padding bits of 'Bw' + 1 is 'x' = 0b111001: last bit set.
        assert!(matches!(
            parse_graph6("Bx"),
            Err(Error::Parse { offset: 1, .. })
        ));
    }

    #[test]
    fn graph6_header_and_edge_cases() {
        let g = parse_graph6(">>graph6<<Bw").unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        // Petersen graph in its standard nauty form.
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn large_order_header() {
        let g = Graph::new(70, (0..69).map(|i| (i, i + 1))).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn stream_of_graph6_lines() {
        let gs = parse_graphs("Bw\n\nA_\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].edges(), &[(0, 1)]);
        match parse_graphs("Bw\nB!\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
    }
}
