//! Decision logs. Solvers append one event per decision; the CLI renders
//! them as text, mapping internal vertex ids back to input labels.

use std::fmt;

use crate::coloring::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// A single coloring decision inside a case analysis.
    Decision {
        lemma: String,
        case: String,
        vertex: usize,
        color: Color,
        reason: String,
    },
    /// A configuration removed during decomposition.
    Remove { kind: String, vertices: Vec<usize> },
    /// A configuration colored during rebuilding.
    ColorConfig {
        kind: String,
        assignments: Vec<(usize, Color)>,
    },
    /// Free-form context (selection decisions, asserted facts).
    Note(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub events: Vec<TraceEvent>,
}

impl Trace {
    pub fn new() -> Self {
        Trace::default()
    }

    pub fn decision(
        &mut self,
        lemma: impl Into<String>,
        case: impl Into<String>,
        vertex: usize,
        color: Color,
        reason: impl Into<String>,
    ) {
        self.events.push(TraceEvent::Decision {
            lemma: lemma.into(),
            case: case.into(),
            vertex,
            color,
            reason: reason.into(),
        });
    }

    pub fn remove(&mut self, kind: impl Into<String>, vertices: Vec<usize>) {
        self.events.push(TraceEvent::Remove {
            kind: kind.into(),
            vertices,
        });
    }

    pub fn color_config(&mut self, kind: impl Into<String>, assignments: Vec<(usize, Color)>) {
        self.events.push(TraceEvent::ColorConfig {
            kind: kind.into(),
            assignments,
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.events.push(TraceEvent::Note(text.into()));
    }

    pub fn append(&mut self, other: Trace) {
        self.events.extend(other.events);
    }

    /// Renders all events, one per line, mapping vertex ids through `label`.
    pub fn render(&self, label: &dyn Fn(usize) -> String) -> String {
        let mut out = String::new();
        for e in &self.events {
            match e {
                TraceEvent::Decision {
                    lemma,
                    case,
                    vertex,
                    color,
                    reason,
                } => {
                    out.push_str(&format!(
                        "LEMMA {lemma} CASE {case} vertex {} color {color} reason {reason}\n",
                        label(*vertex)
                    ));
                }
                TraceEvent::Remove { kind, vertices } => {
                    let vs: Vec<String> = vertices.iter().map(|&v| label(v)).collect();
                    out.push_str(&format!("REMOVE {kind} [{}]\n", vs.join(" ")));
                }
                TraceEvent::ColorConfig { kind, assignments } => {
                    let vs: Vec<String> = assignments
                        .iter()
                        .map(|&(v, c)| format!("{}={c}", label(v)))
                        .collect();
                    out.push_str(&format!("COLOR {kind} [{}]\n", vs.join(" ")));
                }
                TraceEvent::Note(text) => {
                    out.push_str(&format!("# {text}\n"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|v| v.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_formats() {
        let mut t = Trace::new();
        t.decision("5", "1", 3, 7, "smallest remaining");
        t.remove("Conf1", vec![0, 1]);
        t.color_config("Conf1", vec![(0, 2), (1, 5)]);
        t.note("selected solver 7");
        let text = t.to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines,
            vec![
                "LEMMA 5 CASE 1 vertex 3 color 7 reason smallest remaining",
                "REMOVE Conf1 [0 1]",
                "COLOR Conf1 [0=2 1=5]",
                "# selected solver 7",
            ]
        );
    }

    #[test]
    fn relabeling() {
        let mut t = Trace::new();
        t.remove("PendantVertex", vec![2]);
        let text = t.render(&|v| format!("x{v}"));
        assert_eq!(text, "REMOVE PendantVertex [x2]\n");
    }
}
