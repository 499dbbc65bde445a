//! The constructive 8-list coloring of squares of connected subcubic graphs
//! (all except the Petersen graph, whose square is K10).
//!
//! The solver detects the highest-priority structural feature — a low-degree
//! vertex, a short cycle, or one of the two-5-cycle patterns — and runs the
//! matching coloring routine. Each routine colors the whole square: the part
//! far from the feature greedily by distance classes, the core by a bounded
//! case analysis.

mod c6;
mod helpers;
mod high_girth;
mod lemmas;

pub use c6::color_c6_square;
pub use high_girth::extend_high_girth;

use thiserror::Error;

use crate::coloring::{Color, ColoringError, ListAssignment, PartialColoring};
use crate::graph::{CycleWitness, Graph};
use crate::trace::Trace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    LowDegreeVertex,
    Triangle,
    FourCycle,
    TwoFiveCyclesSharingPath,
    TwoFiveCyclesSharingEdge,
    FiveCycle,
    SixCycle,
    HighGirthCycle,
}

/// A concrete instantiation of a structure: the cycle (or single vertex)
/// plus any named off-cycle vertices the routine needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureWitness {
    pub kind: StructureKind,
    /// Main vertex tuple: the cycle `v_1..v_k` (or the low-degree vertex).
    pub cycle: Vec<usize>,
    /// Auxiliary vertices: the chord-vertex `v_7` for the shared-path
    /// pattern; empty otherwise.
    pub aux: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("the input is the Petersen graph")]
    PetersenInput,
    #[error("the input graph is disconnected")]
    Disconnected,
    #[error("the input graph has a vertex of degree greater than 3")]
    NotSubcubic,
    #[error("the input graph is empty")]
    EmptyGraph,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("internal case analysis failed: {context}")]
    InternalCaseFailure { context: String, trace: Trace },
}

pub(crate) fn internal(context: impl Into<String>, trace: &Trace) -> SolveError {
    SolveError::InternalCaseFailure {
        context: context.into(),
        trace: trace.clone(),
    }
}

/// The neighbor of `v` outside `set`, for a vertex with exactly one such.
pub(crate) fn third_neighbor(g: &Graph, v: usize, set: &[usize]) -> Option<usize> {
    let mut out = g.neighbors(v).iter().filter(|w| !set.contains(w));
    let first = out.next().copied();
    if out.next().is_some() {
        return None;
    }
    first
}

fn validate_input(g: &Graph) -> Result<(), SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if !g.is_subcubic() {
        return Err(SolveError::NotSubcubic);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if g.is_petersen() {
        return Err(SolveError::PetersenInput);
    }
    Ok(())
}

/// Finds the highest-priority structure: low-degree vertex, then shortest
/// cycle by girth class, with the two-5-cycle patterns taking precedence
/// over a plain 5-cycle. Deterministic (lowest-id witnesses).
pub fn detect_structure(g: &Graph) -> Result<StructureWitness, SolveError> {
    validate_input(g)?;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) <= 2) {
        return Ok(StructureWitness {
            kind: StructureKind::LowDegreeVertex,
            cycle: vec![v],
            aux: vec![],
        });
    }
    // 3-regular from here on; a cycle exists
    let cycle = g.shortest_cycle().expect("3-regular graph has a cycle");
    let witness = match cycle.len() {
        3 => StructureWitness {
            kind: StructureKind::Triangle,
            cycle: cycle.0,
            aux: vec![],
        },
        4 => StructureWitness {
            kind: StructureKind::FourCycle,
            cycle: cycle.0,
            aux: vec![],
        },
        5 => {
            if let Some(w) = find_five_cycles_sharing_path(g) {
                w
            } else if let Some(w) = find_five_cycles_sharing_edge(g) {
                w
            } else {
                StructureWitness {
                    kind: StructureKind::FiveCycle,
                    cycle: cycle.0,
                    aux: vec![],
                }
            }
        }
        6 => StructureWitness {
            kind: StructureKind::SixCycle,
            cycle: cycle.0,
            aux: vec![],
        },
        _ => StructureWitness {
            kind: StructureKind::HighGirthCycle,
            cycle: cycle.0,
            aux: vec![],
        },
    };
    Ok(witness)
}

/// Two 5-cycles sharing three consecutive vertices `a, x, b`: equivalently a
/// 6-cycle `v_1..v_6` plus a seventh vertex adjacent to `v_1` and `v_4`.
/// Returns the 6-cycle in `cycle` and the chord-vertex in `aux`.
fn find_five_cycles_sharing_path(g: &Graph) -> Option<StructureWitness> {
    // girth 5 here, so two distinct length-3 paths between two neighbors of
    // x (avoiding x) are internally disjoint
    for x in g.vertices() {
        let nb = g.neighbors(x);
        for ai in 0..nb.len() {
            for bi in (ai + 1)..nb.len() {
                let (a, b) = (nb[ai], nb[bi]);
                let paths = length3_paths_avoiding(g, a, b, x);
                if paths.len() >= 2 {
                    let p = &paths[0];
                    let q = &paths[1];
                    // 6-cycle a, p1, p2, b, q2, q1 with x adjacent to a and b
                    return Some(StructureWitness {
                        kind: StructureKind::TwoFiveCyclesSharingPath,
                        cycle: vec![a, p[0], p[1], b, q[1], q[0]],
                        aux: vec![x],
                    });
                }
            }
        }
    }
    None
}

/// Internal vertex pairs of all paths `a - p1 - p2 - b` avoiding `x`,
/// in ascending lexicographic order.
fn length3_paths_avoiding(g: &Graph, a: usize, b: usize, x: usize) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    for &p1 in g.neighbors(a) {
        if p1 == x || p1 == b {
            continue;
        }
        for &p2 in g.neighbors(p1) {
            if p2 == x || p2 == a || p2 == b {
                continue;
            }
            if g.has_edge(p2, b) {
                out.push([p1, p2]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Two 5-cycles sharing exactly one edge: an 8-cycle `v_1..v_8` with the
/// chord `v_1 v_5`.
fn find_five_cycles_sharing_edge(g: &Graph) -> Option<StructureWitness> {
    for (x, y) in g.edges() {
        // 5-cycles through edge xy = length-4 paths y -> x
        let mut paths: Vec<[usize; 3]> = Vec::new();
        for &p1 in g.neighbors(x) {
            if p1 == y {
                continue;
            }
            for &p2 in g.neighbors(p1) {
                if p2 == x || p2 == y {
                    continue;
                }
                for &p3 in g.neighbors(p2) {
                    if p3 == x || p3 == y || p3 == p1 {
                        continue;
                    }
                    if g.has_edge(p3, y) {
                        paths.push([p1, p2, p3]);
                    }
                }
            }
        }
        paths.sort_unstable();
        for i in 0..paths.len() {
            for j in (i + 1)..paths.len() {
                let (p, q) = (&paths[i], &paths[j]);
                if p.iter().all(|v| !q.contains(v)) {
                    // 8-cycle x p1 p2 p3 y q3 q2 q1, chord x-y
                    return Some(StructureWitness {
                        kind: StructureKind::TwoFiveCyclesSharingEdge,
                        cycle: vec![x, p[0], p[1], p[2], y, q[2], q[1], q[0]],
                        aux: vec![],
                    });
                }
            }
        }
    }
    None
}

/// Colors `square(g)` from lists of size at least 8.
pub fn solve8(g: &Graph, lists: &ListAssignment) -> Result<Vec<Color>, SolveError> {
    solve8_traced(g, lists).map(|(c, _)| c)
}

/// Like [`solve8`] but also returns the decision trace.
pub fn solve8_traced(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<(Vec<Color>, Trace), SolveError> {
    validate_input(g)?;
    lists.require_size(8)?;
    let mut trace = Trace::new();
    if g.n() == 1 {
        let mut pc = PartialColoring::new(g, lists);
        let c = pc.color_min(0)?;
        trace.decision("3", "-", 0, c, "isolated vertex, smallest list color");
        return Ok((pc.total().unwrap(), trace));
    }
    let w = detect_structure(g)?;
    trace.note(format!("structure: {:?} {:?} aux {:?}", w.kind, w.cycle, w.aux));
    let pc = match w.kind {
        StructureKind::LowDegreeVertex => lemmas::low_degree(g, lists, w.cycle[0], &mut trace)?,
        StructureKind::Triangle => lemmas::triangle(g, lists, &w.cycle, &mut trace)?,
        StructureKind::FourCycle => lemmas::four_cycle(g, lists, &w.cycle, &mut trace)?,
        StructureKind::TwoFiveCyclesSharingPath => {
            lemmas::five_cycles_sharing_path(g, lists, &w.cycle, w.aux[0], &mut trace, 0)?
        }
        StructureKind::TwoFiveCyclesSharingEdge => {
            lemmas::five_cycles_sharing_edge(g, lists, &w.cycle, &mut trace)?
        }
        StructureKind::FiveCycle => lemmas::five_cycle(g, lists, &w.cycle, &mut trace)?,
        StructureKind::SixCycle => c6::six_cycle(g, lists, &w.cycle, &mut trace)?,
        StructureKind::HighGirthCycle => {
            high_girth::extend_high_girth(g, lists, &CycleWitness(w.cycle.clone()), &mut trace)?
        }
    };
    let total = pc
        .total()
        .ok_or_else(|| internal("routine left vertices uncolored", &trace))?;
    if let Err(v) = crate::coloring::verify_square_coloring(g, lists, &total) {
        return Err(internal(format!("output failed verification: {v:?}"), &trace));
    }
    Ok((total, trace))
}

#[cfg(test)]
mod tests;
