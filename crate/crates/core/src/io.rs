//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! r s
//! i j
//! ...
//! ```
//!
//! The header gives the part sizes; each following non-empty line is one
//! 1-based edge `x_i y_j`. Lines starting with `#` are skipped.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line: lineno,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = next("first integer")?;
    let b = next("second integer")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line: lineno,
            message: format!("unexpected trailing token `{extra}`"),
        });
    }
    Ok((a, b))
}

pub fn from_edge_list(text: &str) -> Result<BipartiteGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `r s` header".into(),
    })?;
    let (r, s) = parse_pair(header, hline)?;

    let mut g = BipartiteGraph::empty(r, s);
    for (lineno, line) in lines {
        let (i, j) = parse_pair(line, lineno)?;
        if g.has_edge(i, j) {
            return Err(Error::DuplicateEdge { i, j });
        }
        g = g.with_edge(i, j)?;
    }
    Ok(g)
}

/// Canonical form: header line then edges in lexicographic order, LF-terminated.
pub fn to_edge_list(g: &BipartiteGraph) -> String {
    let mut out = format!("{} {}\n", g.left_size(), g.right_size());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

pub fn to_json(g: &BipartiteGraph) -> String {
    serde_json::to_string(g).expect("graph serialization is infallible")
}

pub fn from_json(text: &str) -> Result<BipartiteGraph> {
    Ok(serde_json::from_str(text)?)
}
