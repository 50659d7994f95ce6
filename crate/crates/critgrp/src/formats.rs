//! Text formats for graphs, divisors, and matroid representations.
//!
//! Graph: first line `n m`, then `m` lines `u v` with 0-based vertex
//! indices; the line order defines the edge indexing. Divisor: one line of
//! `n` integers. Matroid: first line `r n`, then `r` rows of `n` entries
//! from {-1, 0, 1}. Lines starting with `#` and blank lines are ignored
//! everywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use critgrp_core::linalg::IntMatrix;
use critgrp_core::{Divisor, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<T: FromStr>(line: &str, what: &str) -> Result<Vec<T>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| ParseError(format!("invalid {what} token {tok:?}")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| ParseError("empty graph file".into()))?;
    let head: Vec<usize> = parse_fields(header, "graph header")?;
    let [n, m] = head[..] else {
        return Err(ParseError(format!(
            "graph header must be `n m`, got {header:?}"
        )));
    };
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| ParseError(format!("expected {m} edge lines")))?;
        let pair: Vec<usize> = parse_fields(line, "edge")?;
        let [u, v] = pair[..] else {
            return Err(ParseError(format!("edge line must be `u v`, got {line:?}")));
        };
        edges.push((u, v));
    }
    if lines.next().is_some() {
        return Err(ParseError("trailing content after edge list".into()));
    }
    Multigraph::new(n, edges).map_err(|e| ParseError(e.to_string()))
}

pub fn serialize_graph(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_divisor(text: &str, vertex_count: usize) -> Result<Divisor, ParseError> {
    let mut lines = content_lines(text);
    let line = lines
        .next()
        .ok_or_else(|| ParseError("empty divisor file".into()))?;
    let values: Vec<BigInt> = parse_fields(line, "divisor")?;
    if values.len() != vertex_count {
        return Err(ParseError(format!(
            "divisor has {} entries, graph has {} vertices",
            values.len(),
            vertex_count
        )));
    }
    if lines.next().is_some() {
        return Err(ParseError("trailing content after divisor line".into()));
    }
    Ok(Divisor::new(values))
}

pub fn serialize_divisor(d: &Divisor) -> String {
    d.values()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_matroid(text: &str) -> Result<IntMatrix, ParseError> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| ParseError("empty matroid file".into()))?;
    let head: Vec<usize> = parse_fields(header, "matroid header")?;
    let [r, n] = head[..] else {
        return Err(ParseError(format!(
            "matroid header must be `r n`, got {header:?}"
        )));
    };
    let mut rows = Vec::with_capacity(r);
    for _ in 0..r {
        let line = lines
            .next()
            .ok_or_else(|| ParseError(format!("expected {r} matrix rows")))?;
        let row: Vec<i64> = parse_fields(line, "matrix entry")?;
        if row.len() != n {
            return Err(ParseError(format!(
                "row has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(bad) = row.iter().find(|&&e| !(-1..=1).contains(&e)) {
            return Err(ParseError(format!(
                "matrix entry {bad} is outside {{-1, 0, 1}}"
            )));
        }
        rows.push(row);
    }
    if lines.next().is_some() {
        return Err(ParseError("trailing content after matrix rows".into()));
    }
    Ok(IntMatrix::from_i64_rows(rows))
}

pub fn serialize_matroid(m: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
