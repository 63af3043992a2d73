//! The plain-text arc-list format.
//!
//! ```text
//! # name: figure1
//! 4
//! 0 2
//! 1 2
//! 1 3
//! ```
//!
//! The first non-comment line holds the vertex count `n`; every following
//! non-comment line holds one arc `u v` with `0 ≤ u, v < n`. A `#` starts a
//! comment that runs to the end of the line, and blank lines are ignored. A
//! comment of the form `# name: <text>` anywhere in the file names the
//! instance. Self-loops, repeated arcs and out-of-range vertices are errors;
//! cycles are not.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: Option<String>,
    pub graph: Digraph,
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut name = None;
    let mut n = None;
    let mut arcs: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let (content, comment) = match raw.split_once('#') {
            Some((c, rest)) => (c, Some(rest)),
            None => (raw, None),
        };
        if let Some(label) = comment.and_then(|c| c.trim().strip_prefix("name:")) {
            name = Some(label.trim().to_string());
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let number = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a non-negative integer, found {tok:?}"),
            })
        };
        match (n, tokens.as_slice()) {
            (None, [count]) => n = Some(number(count)?),
            (None, _) => {
                return Err(Error::Parse {
                    line,
                    message: "expected the vertex count alone on the first line".into(),
                })
            }
            (Some(_), [u, v]) => arcs.push((line, number(u)?, number(v)?)),
            (Some(_), _) => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected an arc \"u v\", found {:?}", content.trim()),
                })
            }
        }
    }

    let n = n.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing vertex count".into(),
    })?;
    let mut seen = BTreeSet::new();
    for &(line, u, v) in &arcs {
        let problem = if u >= n || v >= n {
            Error::VertexOutOfRange {
                vertex: u.max(v),
                n,
            }
        } else if u == v {
            Error::SelfLoop(u)
        } else if !seen.insert((u, v)) {
            Error::DuplicateArc(u, v)
        } else {
            continue;
        };
        return Err(Error::Parse {
            line,
            message: problem.to_string(),
        });
    }
    let graph = Digraph::new(n, seen)?;
    Ok(Instance { name, graph })
}

/// Writes `d` in the arc-list format; arcs come out in lexicographic order.
pub fn serialize_instance(d: &Digraph, name: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        writeln!(out, "# name: {name}").unwrap();
    }
    writeln!(out, "{}", d.vertex_count()).unwrap();
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
