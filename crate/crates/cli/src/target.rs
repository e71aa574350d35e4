//! `tpc-decide` targets: named graph families, or else a ring expression.

use anyhow::{anyhow, bail, Context, Result};
use tpcode::graph::{self, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Kmn(usize, usize),
    Star(usize),
    CoronaPath(usize),
    Fig1,
    File(String),
}

fn num(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .with_context(|| format!("{what}: expected a non-negative integer, got '{s}'"))
}

impl GraphSpec {
    /// `None` when `text` is not a graph target.
    pub fn parse(text: &str) -> Option<Result<GraphSpec>> {
        let text = text.trim();
        if text == "fig1" {
            return Some(Ok(GraphSpec::Fig1));
        }
        let (head, rest) = text.split_once(':')?;
        let spec = match head {
            "path" => num(rest, "path").map(GraphSpec::Path),
            "cycle" => num(rest, "cycle").map(GraphSpec::Cycle),
            "complete" => num(rest, "complete").map(GraphSpec::Complete),
            "star" => num(rest, "star").map(GraphSpec::Star),
            "kmn" => match rest.split_once(',') {
                Some((m, n)) => num(m, "kmn").and_then(|m| Ok(GraphSpec::Kmn(m, num(n, "kmn")?))),
                None => Err(anyhow!("kmn: expected 'kmn:m,n', got '{text}'")),
            },
            "corona" => match rest.strip_prefix("path:") {
                Some(n) => num(n, "corona").map(GraphSpec::CoronaPath),
                None => Err(anyhow!("corona: only 'corona:path:n' is supported")),
            },
            "file" if !rest.is_empty() => Ok(GraphSpec::File(rest.to_string())),
            "file" => Err(anyhow!("file: missing path")),
            _ => return None,
        };
        Some(spec)
    }

    pub fn build(&self) -> Result<Graph> {
        Ok(match self {
            GraphSpec::Path(n) => graph::path(*n)?,
            GraphSpec::Cycle(n) => graph::cycle(*n)?,
            GraphSpec::Complete(n) => graph::complete(*n)?,
            GraphSpec::Kmn(m, n) => graph::complete_bipartite(*m, *n)?,
            GraphSpec::Star(n) => graph::star(*n)?,
            GraphSpec::CoronaPath(n) => {
                if *n == 0 {
                    bail!("corona: path length must be >= 1");
                }
                graph::corona(&graph::path(*n)?, &graph::complete(1)?)
            }
            GraphSpec::Fig1 => graph::fig1(),
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
                graph::io::from_json(&text)?
            }
        })
    }
}
