//! Weighted edge-list files.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v w      (m lines, 1-based vertex ids, nonnegative weight)
//! ```
//!
//! Tokens are whitespace separated. Blank lines are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Weighting};
use crate::weight::Weight;

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_token<T: FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

/// Parses an edge list. Edge indices follow file order.
pub fn parse_graph<W: Weight + FromStr>(text: &str) -> Result<(Graph, Weighting<W>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing header `n m`"))?;
    let mut tokens = header.split_whitespace();
    let n: usize = parse_token(tokens.next(), header_line, "vertex count")?;
    let m: usize = parse_token(tokens.next(), header_line, "edge count")?;
    if tokens.next().is_some() {
        return Err(syntax(header_line, "trailing tokens after `n m`"));
    }

    let mut builder = GraphBuilder::new(n).map_err(|e| e.at_line(header_line))?;
    let mut weights = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, content) in lines {
        if weights.len() == m {
            return Err(syntax(line, format!("more than the declared {m} edges")));
        }
        let mut tokens = content.split_whitespace();
        let u: usize = parse_token(tokens.next(), line, "vertex id")?;
        let v: usize = parse_token(tokens.next(), line, "vertex id")?;
        let w: W = parse_token(tokens.next(), line, "weight")?;
        if tokens.next().is_some() {
            return Err(syntax(line, "trailing tokens after `u v w`"));
        }
        for vertex in [u, v] {
            if vertex == 0 || vertex > n {
                return Err(Error::VertexOutOfRange { vertex, n }.at_line(line));
            }
        }
        if !w.is_admissible() {
            return Err(Error::InvalidWeight(w.to_string()).at_line(line));
        }
        builder.add_edge(u - 1, v - 1).map_err(|e| match e {
            // report ids as written in the file
            Error::SelfLoop(_) => Error::SelfLoop(u).at_line(line),
            Error::DuplicateEdge(..) => Error::DuplicateEdge(u, v).at_line(line),
            e => e.at_line(line),
        })?;
        weights.push(w);
        last_line = line;
    }
    if weights.len() != m {
        return Err(syntax(
            last_line,
            format!("expected {m} edges, found {}", weights.len()),
        ));
    }

    let g = builder.finish()?;
    let x = Weighting::new(&g, weights)?;
    Ok((g, x))
}

/// Writes the canonical form: header, then one `u v w` line per edge, no
/// comments, single spaces, trailing newline.
pub fn write_edge_list<W: Weight>(g: &Graph, x: &Weighting<W>) -> String {
    x.assert_fits(g);
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (&(u, v), w) in g.edges().iter().zip(x.values()) {
        writeln!(out, "{} {} {}", u + 1, v + 1, w).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let (g, x) = parse_graph::<f64>("3 3\n1 2 1\n1 3 3\n2 3 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(x.values(), &[1.0, 3.0, 2.0]);
    }

    #[test]
    fn parses_single_edge() {
        let (g, x) = parse_graph::<f64>("2 1\n1 2 0").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(x.values(), &[0.0]);
    }

    #[test]
    fn parses_single_vertex_with_comments() {
        let (g, x) = parse_graph::<f64>("# lonely\n\n1 0\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(x.is_empty());
    }

    #[test]
    fn negative_weight_reports_line() {
        let err = parse_graph::<f64>("3 2\n1 2 1\n1 3 -4").unwrap_err();
        assert_eq!(
            err,
            Error::AtLine {
                line: 3,
                source: Box::new(Error::InvalidWeight("-4".into()))
            }
        );
        assert_eq!(err.to_string(), "line 3: negative or non-finite weight -4");
    }

    #[test]
    fn comment_lines_keep_line_numbers() {
        let err = parse_graph::<f64>("# c\n2 1\n1 x 3\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn error_cases() {
        let cases = [
            ("", "missing header"),
            ("2 1\n1 1 3", "self-loop"),
            ("3 3\n1 2 1\n2 1 4\n2 3 1", "duplicate edge"),
            ("2 1\n1 3 1", "out of range"),
            ("2 1\n0 2 1", "out of range"),
            ("3 1\n1 2 1", "disconnected"),
            ("0 0", "at least one vertex"),
            ("2 2\n1 2 1", "expected 2 edges"),
            ("2 1\n1 2 1\n1 2 1", "more than the declared"),
            ("2 1\n1 2 inf", "non-finite"),
            ("2 1\n1 2", "missing weight"),
            ("2 1 7\n1 2 1", "trailing"),
        ];
        for (text, needle) in cases {
            let err = parse_graph::<f64>(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn integer_weights() {
        let (_, x) = parse_graph::<u64>("2 1\n1 2 17").unwrap();
        assert_eq!(x.values(), &[17]);
        assert!(parse_graph::<u64>("2 1\n1 2 1.5").is_err());
    }

    #[test]
    fn writes_canonical_form() {
        let text = "3 3\n1 2 1\n1 3 3.5\n2 3 2\n";
        let (g, x) = parse_graph::<f64>(text).unwrap();
        assert_eq!(write_edge_list(&g, &x), text);
    }
}
