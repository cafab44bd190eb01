//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n=4
//! 0 1
//! 1 2
//! ```
//!
//! Without an `n=` header the vertex count is one more than the largest
//! index that appears.

use std::fmt::Write;

use crate::error::{Error, Result};

use super::{Graph, Vertex};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if declared_n.is_some() || !edges.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "the n= header must appear once, before any edge".into(),
                });
            }
            declared_n = Some(parse_index(rest.trim(), line_no)?);
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two vertex indices, found {:?}", line),
            });
        }
        edges.push((
            parse_index(fields[0], line_no)?,
            parse_index(fields[1], line_no)?,
        ));
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared_n {
        Some(n) if n < inferred => {
            return Err(Error::VertexOutOfRange {
                vertex: inferred - 1,
                n,
            })
        }
        Some(n) => n,
        None => inferred,
    };
    Graph::new(n, edges)
}

fn parse_index(field: &str, line: usize) -> Result<Vertex> {
    field.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not a non-negative integer: {field:?}"),
    })
}

/// Writes the graph with an explicit `n=` header, so isolated trailing
/// vertices survive a round trip.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
