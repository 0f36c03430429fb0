//! Bit-exact parsers and writers for graph6, DIMACS coloring, and plain
//! edge-list formats.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: {msg} at byte {offset}")]
    Graph6 { offset: usize, msg: String },
    #[error("dimacs: {msg} at line {line}")]
    Dimacs { line: usize, msg: String },
    #[error("edge list: {msg}")]
    EdgeList { msg: String },
    #[error("io: {0}")]
    Io(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    Dimacs,
    EdgeList,
}

/// A parsed graph together with where it came from.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: Graph,
    pub source: String,
    pub format: GraphFormat,
}

fn g6_err<T>(offset: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Graph6 {
        offset,
        msg: msg.into(),
    })
}

/// Decode one graph6 line. Accepts both the single-byte size header
/// (n <= 62) and the '~'-prefixed long forms.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, ParseError> {
    let line = match line.last() {
        Some(b'\n') => &line[..line.len() - 1],
        _ => line,
    };
    if line.is_empty() {
        return g6_err(0, "empty line");
    }
    for (i, &b) in line.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return g6_err(i, format!("byte {b} outside printable graph6 range 63..=126"));
        }
    }
    let (n, mut offset) = if line[0] != b'~' {
        ((line[0] - 63) as usize, 1)
    } else if line.len() >= 2 && line[1] != b'~' {
        if line.len() < 4 {
            return g6_err(line.len(), "truncated 3-byte size header");
        }
        let n = line[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if line.len() < 8 {
            return g6_err(line.len(), "truncated 8-byte size header");
        }
        let n = line[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };
    let pair_bits = n * n.saturating_sub(1) / 2;
    let body_bytes = pair_bits.div_ceil(6);
    if line.len() < offset + body_bytes {
        return g6_err(line.len(), format!("truncated bit vector: need {body_bytes} body bytes"));
    }
    if line.len() > offset + body_bytes {
        return g6_err(offset + body_bytes, "trailing garbage after bit vector");
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = line[offset + bit_index / 6];
            let bit = (byte - 63) >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                g.add_edge(row, col);
            }
            bit_index += 1;
        }
    }
    // padding bits of the last body byte must be zero
    if body_bytes > 0 {
        let used = pair_bits % 6;
        if used != 0 {
            let last = line[offset + body_bytes - 1] - 63;
            if last & ((1 << (6 - used)) - 1) != 0 {
                return g6_err(offset + body_bytes - 1, "nonzero padding bits");
            }
        }
    }
    offset += body_bytes;
    let _ = offset;
    Ok(g)
}

/// Encode as a canonical graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | g.has_edge(row, col) as u8;
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
    out
}

pub fn write_graph6_string(g: &Graph) -> String {
    String::from_utf8(write_graph6(g)).unwrap()
}

fn dimacs_err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Dimacs {
        line,
        msg: msg.into(),
    })
}

/// DIMACS coloring format: "c" comments, one "p edge n m" header, then
/// "e u v" lines with 1-based endpoints. Duplicate edges collapse,
/// self-loops are rejected.
pub fn parse_dimacs_col(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return dimacs_err(lineno, "duplicate problem header");
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return dimacs_err(lineno, "expected header 'p edge <n> <m>'");
                }
                let n: usize = fields[2]
                    .parse()
                    .map_err(|_| ParseError::Dimacs {
                        line: lineno,
                        msg: format!("bad vertex count '{}'", fields[2]),
                    })?;
                graph = Some(Graph::empty(n));
            }
            "e" => {
                let g = match graph.as_mut() {
                    Some(g) => g,
                    None => return dimacs_err(lineno, "edge before problem header"),
                };
                if fields.len() != 3 {
                    return dimacs_err(lineno, "expected 'e <u> <v>'");
                }
                let parse = |s: &str| -> Result<usize, ParseError> {
                    s.parse().map_err(|_| ParseError::Dimacs {
                        line: lineno,
                        msg: format!("bad vertex '{s}'"),
                    })
                };
                let u = parse(fields[1])?;
                let v = parse(fields[2])?;
                if u == 0 || v == 0 || u > g.vertex_count() || v > g.vertex_count() {
                    return dimacs_err(
                        lineno,
                        format!("vertex out of range 1..={}", g.vertex_count()),
                    );
                }
                if u == v {
                    return dimacs_err(lineno, format!("self-loop at vertex {u}"));
                }
                g.add_edge(u - 1, v - 1);
            }
            other => return dimacs_err(lineno, format!("unknown record '{other}'")),
        }
    }
    graph.ok_or(ParseError::Dimacs {
        line: text.lines().count() + 1,
        msg: "missing problem header".into(),
    })
}

/// Sorted-edge DIMACS writer, inverse of [`parse_dimacs_col`].
pub fn write_dimacs_col(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Whitespace-separated 0-based endpoint pairs, with an optional leading
/// "n=<count>" line to pin the vertex count (for isolated vertices).
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut rest = text;
    let mut declared_n: Option<usize> = None;
    let trimmed = text.trim_start();
    if let Some(first_line) = trimmed.lines().next() {
        if let Some(count) = first_line.trim().strip_prefix("n=") {
            declared_n = Some(count.parse().map_err(|_| ParseError::EdgeList {
                msg: format!("bad vertex count '{count}'"),
            })?);
            let consumed = trimmed.find('\n').map(|i| i + 1).unwrap_or(trimmed.len());
            rest = &trimmed[consumed..];
        }
    }
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    if tokens.len() % 2 != 0 {
        return Err(ParseError::EdgeList {
            msg: format!("odd token count ({})", tokens.len()),
        });
    }
    let mut edges = Vec::with_capacity(tokens.len() / 2);
    for pair in tokens.chunks(2) {
        let parse = |s: &str| -> Result<usize, ParseError> {
            s.parse().map_err(|_| ParseError::EdgeList {
                msg: format!("bad vertex identifier '{s}'"),
            })
        };
        edges.push((parse(pair[0])?, parse(pair[1])?));
    }
    let needed = edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = match declared_n {
        Some(n) if n < needed => {
            return Err(ParseError::EdgeList {
                msg: format!("edge endpoint exceeds declared n={n}"),
            })
        }
        Some(n) => n,
        None => needed,
    };
    Graph::from_edges(n, &edges).map_err(|e| ParseError::EdgeList { msg: e.to_string() })
}

/// Inverse of [`parse_edge_list`]; always emits the "n=" line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

impl GraphFormat {
    /// Guess the format from a file name; defaults to edge list.
    pub fn from_path(path: &str) -> GraphFormat {
        let lower = path.to_lowercase();
        if lower.ends_with(".g6") || lower.ends_with(".graph6") {
            GraphFormat::Graph6
        } else if lower.ends_with(".col") || lower.ends_with(".dimacs") {
            GraphFormat::Dimacs
        } else {
            GraphFormat::EdgeList
        }
    }
}

/// Parse file contents according to `format`.
pub fn parse_as(format: GraphFormat, contents: &str, source: &str) -> Result<GraphDocument, ParseError> {
    let graph = match format {
        GraphFormat::Graph6 => parse_graph6(
            contents
                .lines()
                .next()
                .ok_or_else(|| ParseError::Io("empty graph6 input".into()))?
                .as_bytes(),
        )?,
        GraphFormat::Dimacs => parse_dimacs_col(contents)?,
        GraphFormat::EdgeList => parse_edge_list(contents)?,
    };
    Ok(GraphDocument {
        graph,
        source: source.to_string(),
        format,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn graph6_basics() {
        // "@" = single vertex, "A_" = K_2
        assert_eq!(parse_graph6(b"@").unwrap(), Graph::empty(1));
        assert_eq!(
            parse_graph6(b"A_").unwrap(),
            Graph::from_edges(2, &[(0, 1)]).unwrap()
        );
        assert_eq!(write_graph6(&Graph::empty(1)), b"@");
        assert_eq!(
            write_graph6(&Graph::from_edges(2, &[(0, 1)]).unwrap()),
            b"A_"
        );
        // "D?{": hand-decoded 5-vertex graph. Body bytes '?' = 000000 and
        // '{' = 111100; bit order (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) then
        // (0,4)(1,4)(2,4)(3,4): edges (0,4),(1,4),(2,4),(3,4) = star K_{1,4}
        // centered at 4.
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(
            g,
            Graph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap()
        );
        assert_eq!(write_graph6(&g), b"D?{");
    }

    #[test]
    fn graph6_long_header() {
        let g = generators::gnp(70, 0.3, 5).unwrap();
        let line = write_graph6(&g);
        assert_eq!(line[0], b'~');
        assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert!(matches!(
            parse_graph6(b"D?"),
            Err(ParseError::Graph6 { msg, .. }) if msg.contains("truncated")
        ));
        assert!(matches!(
            parse_graph6(b"D?{{"),
            Err(ParseError::Graph6 { offset: 3, .. })
        ));
        assert!(matches!(
            parse_graph6(&[b'D', 0x20, b'{']),
            Err(ParseError::Graph6 { offset: 1, .. })
        ));
        assert!(parse_graph6(b"").is_err());
    }

    #[test]
    fn dimacs_basics() {
        let g = parse_dimacs_col("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, generators::complete(3));
        let g = parse_dimacs_col("c comment\np edge 3 2\ne 1 2\ne 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            parse_dimacs_col("p edge 3 1\ne 1 1\n"),
            Err(ParseError::Dimacs { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs_col("e 1 2\n"),
            Err(ParseError::Dimacs { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs_col("p edge 2 1\ne 1 5\n"),
            Err(ParseError::Dimacs { line: 2, .. })
        ));
        assert!(parse_dimacs_col("c nothing\n").is_err());
    }

    #[test]
    fn edge_list_basics() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), generators::path(3));
        let g = parse_edge_list("n=4\n0 1").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(parse_edge_list("0"), Err(ParseError::EdgeList { .. })));
        assert!(parse_edge_list("0 -1").is_err());
        assert!(parse_edge_list("n=2\n0 5").is_err());
    }

    #[test]
    fn round_trips_small() {
        for n in 1..=5 {
            for g in generators::enumerate_labeled(n).unwrap() {
                assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
                assert_eq!(parse_dimacs_col(&write_dimacs_col(&g)).unwrap(), g);
                assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn format_detection() {
        assert_eq!(GraphFormat::from_path("x.g6"), GraphFormat::Graph6);
        assert_eq!(GraphFormat::from_path("x.col"), GraphFormat::Dimacs);
        assert_eq!(GraphFormat::from_path("x.txt"), GraphFormat::EdgeList);
    }
}
