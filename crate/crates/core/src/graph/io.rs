//! Text formats for graphs and colorings.
//!
//! ```text
//! graph <N>            coloring <N>
//! e <u> <v>            <u> <v> <R|B>
//! ```
//!
//! Pairs satisfy `0 <= u < v < N` and appear at most once. A coloring must list
//! every pair. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use super::{pairs, Color, ColoredCompleteGraph, SimpleGraph};
use crate::error::{ParseError, ParseErrorKind, Result};

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Non-comment, non-blank lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &'static str,
) -> Result<usize, ParseError> {
    let bad = |line| err(line, ParseErrorKind::MalformedHeader { expected: keyword });
    let (line, text) = lines.next().ok_or_else(|| bad(1))?;
    let mut toks = text.split_whitespace();
    if toks.next() != Some(keyword) {
        return Err(bad(line));
    }
    let n = toks
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(|| bad(line))?;
    if toks.next().is_some() {
        return Err(bad(line));
    }
    Ok(n)
}

fn parse_pair(line: usize, u: &str, v: &str, n: usize) -> Result<(usize, usize), ParseError> {
    let (u, v) = match (u.parse::<usize>(), v.parse::<usize>()) {
        (Ok(u), Ok(v)) => (u, v),
        _ => return Err(err(line, ParseErrorKind::MalformedLine)),
    };
    if u >= n || v >= n {
        return Err(err(line, ParseErrorKind::OutOfRange { u, v, n }));
    }
    if u >= v {
        return Err(err(line, ParseErrorKind::Unordered { u, v }));
    }
    Ok((u, v))
}

pub fn read_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "graph")?;
    let mut g = SimpleGraph::new(n);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [tag, u, v] = toks.as_slice() else {
            return Err(err(line, ParseErrorKind::MalformedLine));
        };
        if *tag != "e" {
            return Err(err(line, ParseErrorKind::MalformedLine));
        }
        let (u, v) = parse_pair(line, u, v, n)?;
        if g.has_edge(u, v) {
            return Err(err(line, ParseErrorKind::DuplicatePair { u, v }));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn read_coloring(text: &str) -> Result<ColoredCompleteGraph, ParseError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "coloring")?;
    let mut seen = SimpleGraph::new(n);
    let mut red = SimpleGraph::new(n);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [u, v, c] = toks.as_slice() else {
            return Err(err(line, ParseErrorKind::MalformedLine));
        };
        let (u, v) = parse_pair(line, u, v, n)?;
        let col = Color::from_letter(c).ok_or_else(|| err(line, ParseErrorKind::MalformedLine))?;
        if seen.has_edge(u, v) {
            return Err(err(line, ParseErrorKind::DuplicatePair { u, v }));
        }
        seen.add_edge(u, v);
        if col == Color::Red {
            red.add_edge(u, v);
        }
    }
    if let Some((u, v)) = pairs(n).find(|&(u, v)| !seen.has_edge(u, v)) {
        let last = text.lines().count().max(1);
        return Err(err(last, ParseErrorKind::MissingPair { u, v }));
    }
    Ok(ColoredCompleteGraph::from_red(red))
}

pub fn write_graph(g: &SimpleGraph) -> String {
    write_graph_with_comments(g, &[])
}

/// Graph file with `# <comment>` lines between the header and the edges.
pub fn write_graph_with_comments(g: &SimpleGraph, comments: &[String]) -> String {
    let mut out = format!("graph {}\n", g.n_vertices());
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn write_coloring(c: &ColoredCompleteGraph) -> String {
    let n = c.n_vertices();
    let mut out = format!("coloring {n}\n");
    for (u, v) in pairs(n) {
        let _ = writeln!(out, "{u} {v} {}", c.color(u, v).letter());
    }
    out
}
