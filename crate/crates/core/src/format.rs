//! Plain-text graph, bigraph and matrix files.
//!
//! ```text
//! graph 3          bigraph 2 2      matrix 2 2
//! 1 2              1 1              10
//! 2 3              2 2              01
//! loop 1
//! ```
//!
//! Vertices are 1-based. `#` starts a comment. Serialization emits sorted
//! edges, so `serialize(parse(s))` is the normal form of `s`.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Bigraph, Graph};
use crate::matrix::BinaryMatrix;

/// What a file's header line declares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Graph,
    Bigraph,
    Matrix,
}

/// A parsed file of any of the three kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Graph(Graph),
    Bigraph(Bigraph),
    Matrix(BinaryMatrix),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    arity: usize,
) -> Result<(usize, Vec<usize>)> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| err(0, format!("missing `{keyword}` header")))?;
    let mut words = text.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(err(line, format!("expected `{keyword}` header, found `{text}`")));
    }
    let nums = words
        .map(|w| w.parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| err(line, format!("malformed header `{text}`")))?;
    if nums.len() != arity {
        return Err(err(line, format!("malformed header `{text}`")));
    }
    Ok((line, nums))
}

fn vertex(word: &str, n: usize, line: usize) -> Result<usize> {
    match word.parse::<usize>() {
        Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
        Ok(v) => Err(err(line, format!("vertex {v} out of range 1..={n}"))),
        Err(_) => Err(err(line, format!("malformed vertex `{word}`"))),
    }
}

/// Peeks at the header to tell which kind of file `text` is.
pub fn detect_kind(text: &str) -> Result<FileKind> {
    let (line, first) = content_lines(text)
        .next()
        .ok_or_else(|| err(0, "empty input"))?;
    match first.split_whitespace().next() {
        Some("graph") => Ok(FileKind::Graph),
        Some("bigraph") => Ok(FileKind::Bigraph),
        Some("matrix") => Ok(FileKind::Matrix),
        _ => Err(err(line, format!("unknown header `{first}`"))),
    }
}

pub fn parse_any(text: &str) -> Result<Parsed> {
    Ok(match detect_kind(text)? {
        FileKind::Graph => Parsed::Graph(parse_graph(text)?),
        FileKind::Bigraph => Parsed::Bigraph(parse_bigraph(text)?),
        FileKind::Matrix => Parsed::Matrix(parse_matrix(text)?),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (_, dims) = header(&mut lines, "graph", 1)?;
    let n = dims[0];
    let mut g = Graph::new(n);
    let mut loops: Option<Vec<bool>> = None;
    for (line, text) in lines {
        let words: Vec<&str> = text.split_whitespace().collect();
        match words.as_slice() {
            ["loop", v] => {
                let v = vertex(v, n, line)?;
                let flags = loops.get_or_insert_with(|| vec![false; n]);
                if flags[v] {
                    return Err(err(line, format!("duplicate loop at {}", v + 1)));
                }
                flags[v] = true;
            }
            [u, v] => {
                let (u, v) = (vertex(u, n, line)?, vertex(v, n, line)?);
                if u == v {
                    return Err(err(line, format!("self-edge at {}; use `loop`", u + 1)));
                }
                if g.has_edge(u, v) {
                    return Err(err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                g.add_edge(u, v);
            }
            _ => return Err(err(line, format!("expected an edge `u v`, found `{text}`"))),
        }
    }
    g.set_loops(loops);
    Ok(g)
}

pub fn parse_bigraph(text: &str) -> Result<Bigraph> {
    let mut lines = content_lines(text);
    let (_, dims) = header(&mut lines, "bigraph", 2)?;
    let (nx, ny) = (dims[0], dims[1]);
    let mut b = Bigraph::new(nx, ny);
    for (line, text) in lines {
        let words: Vec<&str> = text.split_whitespace().collect();
        let [x, y] = words.as_slice() else {
            return Err(err(line, format!("expected an edge `x y`, found `{text}`")));
        };
        let (x, y) = (vertex(x, nx, line)?, vertex(y, ny, line)?);
        if b.has_edge(x, y) {
            return Err(err(line, format!("duplicate edge {} {}", x + 1, y + 1)));
        }
        b.add_edge(x, y);
    }
    Ok(b)
}

/// Rows are strings over `{0,1}`. A matrix with zero columns has no row lines.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut lines = content_lines(text);
    let (hline, dims) = header(&mut lines, "matrix", 2)?;
    let (rows, cols) = (dims[0], dims[1]);
    let mut m = BinaryMatrix::zeros(rows, cols);
    let mut seen = 0;
    for (line, text) in lines {
        if seen == rows || cols == 0 {
            return Err(err(line, "more rows than declared"));
        }
        if text.chars().count() != cols {
            return Err(err(line, format!("expected {cols} entries, found `{text}`")));
        }
        for (j, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => m.set(seen, j, true),
                _ => return Err(err(line, format!("entry `{c}` is not 0 or 1"))),
            }
        }
        seen += 1;
    }
    if cols > 0 && seen < rows {
        return Err(err(hline, format!("declared {rows} rows, found {seen}")));
    }
    Ok(m)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    if let Some(loops) = g.loops() {
        for (v, _) in loops.iter().enumerate().filter(|(_, &l)| l) {
            let _ = writeln!(s, "loop {}", v + 1);
        }
    }
    s
}

pub fn serialize_bigraph(b: &Bigraph) -> String {
    let mut s = format!("bigraph {} {}\n", b.nx(), b.ny());
    for (x, y) in b.edges() {
        let _ = writeln!(s, "{} {}", x + 1, y + 1);
    }
    s
}

pub fn serialize_matrix(m: &BinaryMatrix) -> String {
    let mut s = format!("matrix {} {}\n", m.rows(), m.cols());
    if m.cols() > 0 {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                s.push(if m.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
    }
    s
}

/// Splits a multi-object text into `@name` sections.
pub(crate) fn sections(text: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    let mut seen = HashSet::new();
    for raw in text.lines() {
        if let Some(name) = raw.trim().strip_prefix('@') {
            let name = name.trim().to_string();
            assert!(seen.insert(name.clone()), "duplicate section {name}");
            out.push((name, String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(raw);
            body.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smallest_bigraph() {
        let b = parse_bigraph("bigraph 1 1\n1 1\n").unwrap();
        assert_eq!(b.edges(), vec![(0, 0)]);
    }

    #[test]
    fn identity_matrix() {
        let m = parse_matrix("matrix 2 2\n10\n01\n").unwrap();
        assert_eq!(m, BinaryMatrix::from_rows(&[[1, 0], [0, 1]]));
    }

    #[test]
    fn triangle() {
        let g = parse_graph("graph 3\n1 2\n2 3\n1 3\n").unwrap();
        assert!(g.same_structure(&Graph::complete(3)));
        assert_eq!(g.loops(), None);
    }

    #[test]
    fn comments_and_loops() {
        let g = parse_graph("# a path\ngraph 2 # header\n1 2\nloop 2\n").unwrap();
        assert_eq!(g.loops(), Some(&[false, true][..]));
        assert_eq!(serialize_graph(&g), "graph 2\n1 2\nloop 2\n");
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(
            parse_graph("graph 2\n1 3\n"),
            Err(Error::Parse {
                line: 2,
                msg: "vertex 3 out of range 1..=2".into()
            })
        );
        assert!(matches!(
            parse_graph("graph 3\n1 2\n\n2 1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(parse_graph("grph 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("graph x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("graph 2\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_bigraph("bigraph 1 1\n1 1\n1 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("matrix 2 2\n10\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matrix("matrix 1 2\n12\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("matrix 1 2\n101\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn detects_kind() {
        assert_eq!(detect_kind("# c\nmatrix 1 1\n1\n").unwrap(), FileKind::Matrix);
        assert!(detect_kind("").is_err());
    }

    #[test]
    fn serializes_sorted() {
        let g = parse_graph("graph 3\n3 2\n2 1\n").unwrap();
        assert_eq!(serialize_graph(&g), "graph 3\n1 2\n2 3\n");
    }

    proptest! {
        #[test]
        fn graph_round_trip(n in 0usize..9, bits in any::<u64>(), loopbits in proptest::option::of(any::<u16>())) {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> (k % 64) & 1 == 1 { g.add_edge(u, v); }
                    k += 1;
                }
            }
            g.set_loops(loopbits.map(|l| (0..n).map(|v| l >> v & 1 == 1).collect()));
            let text = serialize_graph(&g);
            let back = parse_graph(&text).unwrap();
            // a loop vector with no set flags serializes to no `loop` lines
            let expect_loops = g.loops().filter(|l| l.iter().any(|&b| b));
            prop_assert_eq!(back.edges(), g.edges());
            prop_assert_eq!(back.loops(), expect_loops);
            prop_assert_eq!(serialize_graph(&back), text);
        }

        #[test]
        fn matrix_and_bigraph_round_trip(r in 0usize..6, c in 0usize..6, bits in any::<u64>()) {
            let m = BinaryMatrix::from_mask(r, c, bits);
            prop_assert_eq!(parse_matrix(&serialize_matrix(&m)).unwrap(), m.clone());
            let b = Bigraph::from_matrix(m);
            prop_assert_eq!(parse_bigraph(&serialize_bigraph(&b)).unwrap(), b);
        }
    }
}
