//! Edge-list and JSON adjacency formats.
//!
//! Edge list: lines starting with `#` are comments, the first other line is
//! `n m`, then exactly `m` lines `u v` with 0-based vertex indices. Blank
//! lines are ignored. JSON: `{"n": 4, "edges": [[0, 1], [1, 2]]}`.

use std::fmt::Write as _;
use std::path::Path;

use metdim_core::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid graph: {0}")]
    Graph(#[from] metdim_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize), FormatError> {
    let mut fields = text.split_whitespace();
    let mut next = || {
        fields
            .next()
            .ok_or_else(|| syntax(line, format!("expected `{what}`, got {text:?}")))?
            .parse::<usize>()
            .map_err(|_| syntax(line, format!("expected two non-negative integers, got {text:?}")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(syntax(line, format!("trailing fields after `{what}`: {text:?}")));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| syntax(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header, "n m")?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref() {
        if edges.len() == m {
            return Err(syntax(line, format!("more than the {m} declared edges")));
        }
        let (u, v) = parse_pair(line, text, "u v")?;
        for x in [u, v] {
            if x >= n {
                return Err(syntax(line, format!("vertex {x} out of range for n = {n}")));
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(syntax(header_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes `g` as an edge list, preceded by `comment` lines if given.
pub fn write_edge_list(g: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    for line in comment.iter().flat_map(|c| c.lines()) {
        writeln!(out, "# {line}").unwrap();
    }
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Adjacency {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn parse_json(text: &str) -> Result<Graph, FormatError> {
    let adj: Adjacency = serde_json::from_str(text)?;
    Ok(Graph::new(adj.n, adj.edges.into_iter().map(|[u, v]| (u, v)))?)
}

pub fn write_json(g: &Graph) -> String {
    let adj = Adjacency { n: g.order(), edges: g.edges().map(|(u, v)| [u, v]).collect() };
    serde_json::to_string(&adj).expect("plain integers serialize")
}

/// Parses either format; JSON is recognized by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, FormatError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    parse_graph(&text)
}
