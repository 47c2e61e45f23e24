//! Text formats: JSON, a plain edge list, and DOT output.
//!
//! Edge list:
//! ```text
//! n m
//! v: a b c        (optional, declares isolated vertices)
//! u v             (m lines)
//! ```
//! When fewer than `n` vertices are named and all names are integers,
//! the missing labels among `1..=n` are added as isolated vertices.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::words::Vertex;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("graph serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = GraphJson {
            vertices: self.vertices().to_vec(),
            edges: self
                .edges()
                .into_iter()
                .map(|(i, j)| (self.vertex(i).clone(), self.vertex(j).clone()))
                .collect(),
        };
        serde_json::to_value(doc).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| {
            Error::parse(line_col_offset(text, e.line(), e.column()), e.to_string())
        })?;
        Graph::new(doc.vertices, doc.edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        let isolated: Vec<&str> = (0..self.order())
            .filter(|&i| self.is_isolated(i))
            .map(|i| self.vertex(i).as_str())
            .collect();
        if !isolated.is_empty() {
            let _ = writeln!(out, "v: {}", isolated.join(" "));
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "{} {}", self.vertex(i), self.vertex(j));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .scan(0usize, |off, line| {
                let start = *off;
                *off += line.len() + 1;
                Some((start, line.trim()))
            })
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hoff, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing `n m` header"))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parse_num = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(hoff, "header must be `n m`"));
        if nums.len() != 2 {
            return Err(Error::parse(hoff, "header must be `n m`"));
        }
        let (n, m) = (parse_num(nums[0])?, parse_num(nums[1])?);
        let mut names: BTreeSet<Vertex> = BTreeSet::new();
        let mut edges = Vec::new();
        for (off, line) in lines {
            if let Some(rest) = line.strip_prefix("v:") {
                for t in rest.split_whitespace() {
                    names.insert(Vertex::new(t).map_err(|e| Error::parse(off, e.to_string()))?);
                }
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(Error::parse(off, "edge lines must be `u v`"));
            }
            let u = Vertex::new(parts[0]).map_err(|e| Error::parse(off, e.to_string()))?;
            let v = Vertex::new(parts[1]).map_err(|e| Error::parse(off, e.to_string()))?;
            names.insert(u.clone());
            names.insert(v.clone());
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::parse(hoff, format!("header announces {m} edges, found {}", edges.len())));
        }
        if names.len() < n && names.iter().all(|v| v.as_str().parse::<usize>().is_ok()) {
            for i in 1..=n {
                if names.len() == n {
                    break;
                }
                let v = Vertex::new(i.to_string()).expect("numeric label");
                names.insert(v);
            }
        }
        if names.len() != n {
            return Err(Error::parse(hoff, format!("header announces {n} vertices, found {}", names.len())));
        }
        Graph::new(names, edges)
    }

    /// Parses JSON when the text starts with `{`, the edge list otherwise.
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::from_edge_list(text)
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.vertex(i), self.vertex(j));
        }
        out.push_str("}\n");
        out
    }
}

fn line_col_offset(text: &str, line: usize, col: usize) -> usize {
    let before: usize = text.lines().take(line.saturating_sub(1)).map(|l| l.len() + 1).sum();
    before + col.saturating_sub(1)
}
