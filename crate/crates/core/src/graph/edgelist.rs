//! Plain-text edge lists.
//!
//! One edge per non-empty line as two whitespace-separated non-negative
//! integers. Lines starting with `#` are comments. An optional header line
//! `n <count>` before the first edge fixes the vertex count; without it the
//! count is `max id + 1`.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub declared_n: Option<u64>,
    pub edges: Vec<(u64, u64)>,
}

impl EdgeList {
    /// Dense interpretation: ids are vertex indices directly.
    pub fn to_graph(&self) -> Result<Graph> {
        let n = match self.declared_n {
            Some(n) => n,
            None => self.edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
        };
        let n = usize::try_from(n).map_err(|_| Error::param("vertex count too large"))?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            let conv = |x: u64| usize::try_from(x).unwrap_or(usize::MAX);
            edges.push((conv(u), conv(v)));
        }
        Graph::new(n, edges)
    }
}

pub fn parse(text: &str) -> Result<EdgeList> {
    let mut declared_n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(err(format!("expected two fields, got {line:?}"))),
        };
        if a == "n" {
            if declared_n.is_some() || !edges.is_empty() {
                return Err(err("header `n <count>` must appear once, before any edge".into()));
            }
            let n = b
                .parse::<u64>()
                .map_err(|_| err(format!("invalid vertex count {b:?}")))?;
            declared_n = Some(n);
            continue;
        }
        let id = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| err(format!("invalid vertex id {s:?}")))
        };
        let (u, v) = (id(a)?, id(b)?);
        if let Some(n) = declared_n {
            if u >= n || v >= n {
                return Err(err(format!("vertex id {} not below declared count {n}", u.max(v))));
            }
        }
        if u == v {
            return Err(err(format!("self-loop on {u}")));
        }
        edges.push((u, v));
    }
    Ok(EdgeList { declared_n, edges })
}

/// Canonical form: header, then edges `u v` with `u < v` in ascending order.
pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn parse_with_comments_and_header() {
        let text = "# a path\nn 4\n0 1\n\n1 2\n  2 3  \n";
        let el = parse(text).unwrap();
        assert_eq!(el.declared_n, Some(4));
        assert_eq!(el.to_graph().unwrap(), path(4));
    }

    #[test]
    fn count_defaults_to_max_id() {
        let el = parse("3 1\n").unwrap();
        let g = el.to_graph().unwrap();
        assert_eq!((g.n(), g.m()), (4, 1));
    }

    #[test]
    fn header_keeps_isolated_vertices() {
        let g = parse("n 5\n0 1\n").unwrap().to_graph().unwrap();
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn errors_name_line() {
        assert_eq!(
            parse("0 1\n1 x\n"),
            Err(Error::Parse { line: 2, message: "invalid vertex id \"x\"".into() })
        );
        assert!(matches!(parse("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("0 1\nn 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("n 2\n0 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("# c\n4 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("-1 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn write_is_canonical() {
        let text = write(&cycle(4));
        assert_eq!(text, "n 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse(&text).unwrap().to_graph().unwrap(), cycle(4));
    }
}
