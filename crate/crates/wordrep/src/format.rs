//! Text formats for graphs, orientations and words.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines)
//! ```
//!
//! Orientation: the same header, then one `u v >` line per edge meaning
//! `u → v`, in stored edge order. `u v ?` marks an unassigned edge.
//!
//! Word file: the first line that is neither blank nor a `#` comment, in
//! any syntax [`Word`]'s parser accepts.
//!
//! Writers emit no comments, edges in stored order and a single trailing
//! newline, so `write(parse(s)) == s` for any text they produced.

use std::fmt::Write as _;

use wordrep_core::orientation::{Dir, Orientation, OrientationError};
use wordrep_core::{Graph, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { line, column, message: message.into() }
    }
}

/// Non-comment, non-blank lines as `(line number, tokens with columns)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push((line[..s].chars().count() + 1, &line[s..col]));
                    start = None;
                }
                _ => {}
            }
        }
        Some((i + 1, tokens))
    })
}

fn number(line: usize, (col, tok): (usize, &str)) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::new(line, col, format!("expected a number, found {tok:?}")))
}

struct Body<'a> {
    graph: Graph,
    rows: Vec<(usize, Vec<(usize, &'a str)>)>,
}

fn parse_body<'a>(text: &'a str, arity: usize, what: &str) -> Result<Body<'a>, ParseError> {
    let mut lines = content_lines(text);
    let last_line = text.lines().count().max(1);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::new(last_line, 1, "missing \"n m\" header"))?;
    if header.len() != 2 {
        let col = header.get(2).map_or(1, |t| t.0);
        return Err(ParseError::new(hline, col, "header must be \"n m\""));
    }
    let n = number(hline, header[0])?;
    let m = number(hline, header[1])?;
    let rows: Vec<_> = lines.collect();
    if rows.len() != m {
        let line = rows.get(m).map_or(last_line, |r| r.0);
        return Err(ParseError::new(line, 1, format!("header promises {m} {what} lines, found {}", rows.len())));
    }
    let mut pairs = Vec::with_capacity(m);
    for (line, toks) in &rows {
        if toks.len() != arity {
            let col = toks.get(arity).or(toks.last()).map_or(1, |t| t.0);
            return Err(ParseError::new(*line, col, format!("expected {arity} fields")));
        }
        let u = number(*line, toks[0])?;
        let v = number(*line, toks[1])?;
        for (w, tok) in [(u, toks[0]), (v, toks[1])] {
            if w < 1 || w > n {
                return Err(ParseError::new(*line, tok.0, format!("vertex {w} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(ParseError::new(*line, toks[1].0, format!("self-loop at {u}")));
        }
        pairs.push((u, v));
    }
    let graph = Graph::from_edges(n, pairs).map_err(|e| ParseError::new(hline, 1, e.to_string()))?;
    Ok(Body { graph, rows })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    parse_body(text, 2, "edge").map(|b| b.graph)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_orientation(text: &str) -> Result<Orientation, ParseError> {
    let body = parse_body(text, 3, "arc")?;
    let mut o = Orientation::unassigned(&body.graph);
    for (line, toks) in &body.rows {
        let u = number(*line, toks[0])?;
        let v = number(*line, toks[1])?;
        match toks[2].1 {
            ">" => o.orient(u, v).map_err(|e: OrientationError| ParseError::new(*line, 1, e.to_string()))?,
            "?" => {}
            other => return Err(ParseError::new(*line, toks[2].0, format!("expected '>' or '?', found {other:?}"))),
        }
    }
    Ok(o)
}

pub fn write_orientation(o: &Orientation) -> String {
    let g = o.base();
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for e in 0..g.edge_count() {
        match o.arc(e) {
            Some((a, b)) => {
                let _ = writeln!(s, "{a} {b} >");
            }
            None => {
                debug_assert_eq!(o.dir(e), Dir::Unassigned);
                let (u, v) = g.edges()[e];
                let _ = writeln!(s, "{u} {v} ?");
            }
        }
    }
    s
}

/// Parses a word given inline; column numbers are reported on line 1.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    text.parse::<Word>().map_err(|e| word_error(1, e))
}

pub fn parse_word_file(text: &str) -> Result<Word, ParseError> {
    let (i, line) = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .ok_or_else(|| ParseError::new(1, 1, "no word in file"))?;
    line.parse::<Word>().map_err(|e| word_error(i + 1, e))
}

/// Every word in a file, one per non-comment line.
pub fn parse_word_lines(text: &str) -> Result<Vec<Word>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| l.parse::<Word>().map_err(|e| word_error(i + 1, e)))
        .collect()
}

fn word_error(line: usize, e: WordError) -> ParseError {
    let column = match e {
        WordError::ZeroLabel { column }
        | WordError::Syntax { column, .. }
        | WordError::UnclosedParen { column }
        | WordError::LabelOverflow { column } => column,
        _ => 1,
    };
    ParseError::new(line, column, e.to_string())
}
