//! Hypergraph text formats.
//!
//! JSON is `{"k":3,"n":5,"edges":[[0,1,2],[2,3,4]]}`. The plain format is a
//! header line `k n m` followed by one edge per line.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub fn to_json(g: &Hypergraph) -> String {
    serde_json::to_string(g).expect("hypergraph serializes")
}

pub fn to_plain(g: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", g.k(), g.n(), g.m());
    for e in g.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_plain(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let numbers = |line: &str| -> Result<Vec<usize>> {
        line.split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("not a vertex id: {t:?}")))
            })
            .collect()
    };
    let header = numbers(
        lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?,
    )?;
    let [k, n, m] = header[..] else {
        return Err(Error::Parse("header must be \"k n m\"".into()));
    };
    let edges: Vec<Vec<usize>> = lines.map(numbers).collect::<Result<_>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Hypergraph::new(k, n, edges)
}

/// JSON when the text starts with `{`, plain format otherwise. Structural
/// problems keep their own error kind; only syntax errors become `Parse`.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Raw {
            k: usize,
            n: usize,
            edges: Vec<Vec<usize>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Hypergraph::new(raw.k, raw.n, raw.edges)
    } else {
        from_plain(text)
    }
}
