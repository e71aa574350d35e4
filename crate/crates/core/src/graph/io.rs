//! JSON and DOT formats.
//!
//! JSON: `{"n": 4, "edges": [[0,1],[1,2]], "labels": {"0": "2"}}` with edges
//! sorted, each pair sorted, no duplicates. `labels` is optional.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<usize, String>,
}

pub fn to_json(g: &Graph) -> String {
    let file = GraphFile {
        n: g.n(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        labels: g.labels().clone(),
    };
    serde_json::to_string(&file).expect("graph serializes")
}

/// Strict reader: edges must already be in canonical form.
pub fn from_json(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text)?;
    for w in file.edges.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Graph(format!(
                "edges must be sorted without duplicates; {:?} then {:?}",
                w[0], w[1]
            )));
        }
    }
    if let Some(e) = file.edges.iter().find(|e| e[0] >= e[1]) {
        return Err(Error::Graph(format!("edge {e:?} is not a sorted pair")));
    }
    if let Some(k) = file.labels.keys().find(|&&k| k >= file.n) {
        return Err(Error::Graph(format!("label for vertex {k} outside 0..{}", file.n)));
    }
    let g = Graph::new(file.n, file.edges.iter().map(|e| (e[0], e[1])))?;
    Ok(g.with_labels(file.labels))
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let label = g.label(v).replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  {v} [label=\"{label}\"];");
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fig1, path};

    #[test]
    fn json_round_trip() {
        let g = fig1().with_labels(BTreeMap::from([(0, "a".to_string())]));
        let text = to_json(&g);
        let back = from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn json_is_strict() {
        assert!(from_json(r#"{"n":3,"edges":[[1,2],[0,1]]}"#).is_err());
        assert!(from_json(r#"{"n":3,"edges":[[1,0]]}"#).is_err());
        assert!(from_json(r#"{"n":3,"edges":[[0,1],[0,1]]}"#).is_err());
        assert!(from_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(from_json(r#"{"n":2,"edges":[],"labels":{"5":"x"}}"#).is_err());
        assert_eq!(from_json(r#"{"n":2,"edges":[[0,1]]}"#).unwrap(), path(2).unwrap());
    }

    #[test]
    fn dot_shape() {
        let dot = to_dot(&path(3).unwrap());
        assert_eq!(
            dot,
            "graph G {\n  0 [label=\"v1\"];\n  1 [label=\"v2\"];\n  2 [label=\"v3\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }
}
