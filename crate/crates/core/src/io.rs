//! Text formats.
//!
//! Graph edge list: first non-comment line `n m`, then `m` lines `u v` with
//! arbitrary string labels; `#` starts a comment. Labels are mapped to dense
//! internal ids in order of first appearance.
//!
//! List assignment: one line per vertex, `label: c1 c2 c3 ...`.
//! Coloring output: one line per vertex, `label = c`.

use std::collections::BTreeSet;
use std::collections::HashMap;

use thiserror::Error;

use crate::coloring::{Color, ListAssignment};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: {source}")]
    BadEdge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("unknown vertex label: {0}")]
    UnknownLabel(String),
}

/// Bidirectional mapping between input labels and internal vertex ids.
#[derive(Debug, Clone, Default)]
pub struct LabelMap {
    labels: Vec<String>,
    ids: HashMap<String, usize>,
}

impl LabelMap {
    /// Internal ids 0..n labeled by their own decimal representation.
    pub fn identity(n: usize) -> Self {
        let mut m = LabelMap::default();
        for v in 0..n {
            m.intern(&v.to_string());
        }
        m
    }

    pub fn intern(&mut self, label: &str) -> usize {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        id
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parses the edge-list format. `subcubic_mode` enforces the degree cap at
/// insertion so the offending line is reported.
pub fn parse_edge_list(text: &str, subcubic_mode: bool) -> Result<(Graph, LabelMap), ParseError> {
    let mut lines = content_lines(text);
    let (hdr_line, header) = lines.next().ok_or(ParseError::Malformed {
        line: 1,
        msg: "missing header line `n m`".into(),
    })?;
    let mut parts = header.split_whitespace();
    let parse_num = |s: Option<&str>, what: &str| -> Result<usize, ParseError> {
        s.and_then(|t| t.parse().ok()).ok_or(ParseError::Malformed {
            line: hdr_line,
            msg: format!("header must be `n m`; bad {what}"),
        })
    };
    let n = parse_num(parts.next(), "vertex count")?;
    let m = parse_num(parts.next(), "edge count")?;
    if parts.next().is_some() {
        return Err(ParseError::Malformed {
            line: hdr_line,
            msg: "header must be exactly `n m`".into(),
        });
    }

    let mut labels = LabelMap::default();
    let mut edges: Vec<(usize, usize, usize)> = Vec::with_capacity(m); // (u, v, line)
    let mut found = 0usize;
    for (lineno, line) in lines {
        let mut p = line.split_whitespace();
        let (u, v) = match (p.next(), p.next(), p.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(ParseError::Malformed {
                    line: lineno,
                    msg: "edge line must be `u v`".into(),
                })
            }
        };
        let ui = labels.intern(u);
        let vi = labels.intern(v);
        if labels.len() > n {
            return Err(ParseError::Malformed {
                line: lineno,
                msg: format!("more than {n} distinct vertex labels"),
            });
        }
        edges.push((ui, vi, lineno));
        found += 1;
        if found > m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                found,
            });
        }
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found,
        });
    }
    // isolated vertices allowed: labels may be fewer than n; pad with
    // synthetic labels so every id < n has one
    let mut next = 0usize;
    while labels.len() < n {
        let candidate = format!("v{next}");
        next += 1;
        if labels.id(&candidate).is_none() {
            labels.intern(&candidate);
        }
    }
    // build incrementally so a bad edge is reported with its line
    let mut g = Graph::empty(n);
    for &(u, v, lineno) in &edges {
        g.add_edge(u, v)
            .map_err(|source| ParseError::BadEdge { line: lineno, source })?;
        if subcubic_mode {
            for w in [u, v] {
                if g.degree(w) > 3 {
                    return Err(ParseError::BadEdge {
                        line: lineno,
                        source: GraphError::DegreeExceeded { vertex: w },
                    });
                }
            }
        }
    }
    Ok((g, labels))
}

/// Parses the per-vertex list format against an existing label map. Every
/// vertex must receive a list.
pub fn parse_lists(text: &str, labels: &LabelMap) -> Result<ListAssignment, ParseError> {
    let mut lists: Vec<Option<BTreeSet<Color>>> = vec![None; labels.len()];
    for (lineno, line) in content_lines(text) {
        let (label, rest) = line.split_once(':').ok_or(ParseError::Malformed {
            line: lineno,
            msg: "list line must be `label: c1 c2 ...`".into(),
        })?;
        let label = label.trim();
        let id = labels
            .id(label)
            .ok_or_else(|| ParseError::UnknownLabel(label.to_string()))?;
        let mut set = BTreeSet::new();
        for tok in rest.split_whitespace() {
            let c: Color = tok.parse().map_err(|_| ParseError::Malformed {
                line: lineno,
                msg: format!("bad color id `{tok}`"),
            })?;
            set.insert(c);
        }
        if lists[id].replace(set).is_some() {
            return Err(ParseError::Malformed {
                line: lineno,
                msg: format!("duplicate list for `{label}`"),
            });
        }
    }
    let lists: Result<Vec<BTreeSet<Color>>, ParseError> = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| {
            l.ok_or_else(|| ParseError::Malformed {
                line: 0,
                msg: format!("no list for vertex `{}`", labels.label(v)),
            })
        })
        .collect();
    Ok(ListAssignment::new(lists?))
}

/// Renders a graph in the edge-list format.
pub fn format_edge_list(g: &Graph, labels: &LabelMap) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", labels.label(u), labels.label(v)));
    }
    out
}

/// Renders a total coloring, one `label = c` line per vertex in id order.
pub fn format_coloring(coloring: &[Color], labels: &LabelMap) -> String {
    coloring
        .iter()
        .enumerate()
        .map(|(v, c)| format!("{} = {c}\n", labels.label(v)))
        .collect()
}
