//! Interchange formats. The edge-list text format is the project's own:
//! a `n m` header line, then one `u v` line per edge with u < v, strictly
//! sorted, single spaces, LF endings. graph6 follows the public definition
//! bit for bit so external generators can be compared directly.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Serializes in the canonical edge-list text format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list text format, rejecting any deviation from the
/// canonical form: unsorted or duplicate edges, u >= v, wrong counts,
/// stray whitespace.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let (n, m) = parse_pair(header)?;
    if n == 0 || n > 64 {
        return Err(Error::VertexCount(n));
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        let (u, v) = parse_pair(line)?;
        if u >= v {
            return Err(Error::Parse(format!("edge `{u} {v}` must satisfy u < v")));
        }
        if let Some(&last) = edges.last() {
            if last >= (u, v) {
                return Err(Error::Parse(format!("edge `{u} {v}` out of sorted order")));
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "expected {m} edge lines, found {}",
            edges.len()
        )));
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected trailing line `{extra}`")));
    }
    Graph::build(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split(' ');
    let a = it.next().unwrap_or("");
    let b = it
        .next()
        .ok_or_else(|| Error::Parse(format!("expected `a b`, got `{line}`")))?;
    if it.next().is_some() {
        return Err(Error::Parse(format!("too many fields in `{line}`")));
    }
    let a = a
        .parse()
        .map_err(|_| Error::Parse(format!("bad number in `{line}`")))?;
    let b = b
        .parse()
        .map_err(|_| Error::Parse(format!("bad number in `{line}`")))?;
    Ok((a, b))
}

/// Encodes in graph6: N(n), then the upper triangle in column order, six
/// bits per byte, each offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        // 63 <= n <= 64 still uses the 4-byte form: '~' then 18 bits.
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut bit = 0usize;
    let mut cur = 0u8;
    for v in 1..n {
        for u in 0..v {
            cur <<= 1;
            if g.has_edge(u, v) {
                cur |= 1;
            }
            bit += 1;
            if bit.is_multiple_of(6) {
                bytes.push(cur + 63);
                cur = 0;
            }
        }
    }
    if !bit.is_multiple_of(6) {
        cur <<= 6 - bit % 6;
        bytes.push(cur + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes graph6; the optional `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6 byte out of range".into()));
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Parse(
                "graph6 orders beyond 258047 are unsupported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        (bytes[0] as usize - 63, &bytes[1..])
    };
    if n == 0 || n > 64 {
        return Err(Error::VertexCount(n));
    }
    let nbits = n * (n - 1) / 2;
    if rest.len() != nbits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {}",
            rest.len(),
            nbits.div_ceil(6)
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let chunk = rest[bit / 6] - 63;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::build(n, &edges)
}
