//! The 7-list solver (mad < 14/5) and the 6-list solver (girth ≥ 7,
//! mad < 18/7): repeatedly remove a small reducible pattern, then rebuild in
//! reverse, coloring each pattern on re-insertion. Also provides executable
//! audits of the two charge-redistribution arguments that guarantee a
//! pattern always exists under the density preconditions.

mod charges;
mod config;
mod rebuild;

pub use charges::{discharge_check_6, discharge_check_7, ChargeReport};
pub use config::{ConfigInstance, ReducibleKind, SevenKind, SixPrimeKind};
pub use rebuild::{rebuild, recolor_u3, solve6, solve6_traced, solve7, solve7_traced};

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::coloring::ColoringError;
use crate::graph::Graph;
use crate::mad::Rational;
use crate::trace::Trace;

use config::{instances_at, validate, WorkingGraph, SEVEN_PRIORITY, SIX_PRIME_PRIORITY};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Seven,
    SixPrime,
}

#[derive(Debug, Error)]
pub enum DischargeError {
    #[error("the input graph is empty")]
    EmptyGraph,
    #[error("the input graph has a vertex of degree greater than 3")]
    NotSubcubic,
    #[error("maximum average degree is {mad} but the solver requires less than {bound}")]
    MadTooLarge { mad: Rational, bound: Rational },
    #[error("girth is {girth} but the solver requires girth at least 7")]
    GirthTooSmall { girth: usize },
    #[error(
        "no removable pattern found although the density precondition holds; \
         remainder has {} vertices",
        remainder_vertices.len()
    )]
    NoConfigurationFound {
        remainder_vertices: Vec<usize>,
        remainder_edges: Vec<(usize, usize)>,
    },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("internal case analysis failed: {context}")]
    InternalCaseFailure { context: String, trace: Trace },
}

pub(crate) fn internal(context: impl Into<String>, trace: &Trace) -> DischargeError {
    DischargeError::InternalCaseFailure {
        context: context.into(),
        trace: trace.clone(),
    }
}

/// Record of a full decomposition: the removed instances in removal order
/// plus the work counters the linearity audit checks.
#[derive(Debug, Clone)]
pub struct DecomposeTrace {
    /// Stack A: removed instances, in removal order.
    pub a: Vec<ConfigInstance>,
    pub configs_added_to_b: usize,
    pub configs_discarded_as_destroyed: usize,
}

fn priority(mode: Mode) -> &'static [ReducibleKind] {
    match mode {
        Mode::Seven => &SEVEN_PRIORITY,
        Mode::SixPrime => &SIX_PRIME_PRIORITY,
    }
}

fn find_reducible_in(wg: &WorkingGraph, mode: Mode) -> Option<ConfigInstance> {
    for &kind in priority(mode) {
        for v in 0..wg.active.len() {
            if let Some(inst) = instances_at(wg, v, kind).into_iter().next() {
                return Some(inst);
            }
        }
    }
    None
}

/// Lowest-anchor instance of the highest-priority removable pattern for the
/// 7-list solver, or `None`.
pub fn find_7_reducible(g: &Graph) -> Option<ConfigInstance> {
    find_reducible_in(&WorkingGraph::new(g), Mode::Seven)
}

/// Like [`find_7_reducible`] for the 6-list solver's patterns. Errors when
/// the girth is below 7.
pub fn find_6prime_reducible(g: &Graph) -> Result<Option<ConfigInstance>, DischargeError> {
    if let Some(girth) = g.girth() {
        if girth < 7 {
            return Err(DischargeError::GirthTooSmall { girth });
        }
    }
    Ok(find_reducible_in(&WorkingGraph::new(g), Mode::SixPrime))
}

fn check_preconditions(g: &Graph, mode: Mode) -> Result<(), DischargeError> {
    if !g.is_subcubic() {
        return Err(DischargeError::NotSubcubic);
    }
    if g.n() == 0 {
        return Ok(());
    }
    if mode == Mode::SixPrime {
        if let Some(girth) = g.girth() {
            if girth < 7 {
                return Err(DischargeError::GirthTooSmall { girth });
            }
        }
    }
    let bound = match mode {
        Mode::Seven => Rational::new(14, 5),
        Mode::SixPrime => Rational::new(18, 7),
    };
    let mad = crate::mad::mad_exact(g).map_err(|_| DischargeError::EmptyGraph)?;
    if mad >= bound {
        return Err(DischargeError::MadTooLarge { mad, bound });
    }
    Ok(())
}

/// Every vertex within the given distance of `seed` (measured before any
/// removal that follows), ascending.
fn ball(wg: &WorkingGraph, seed: &[usize], radius: usize) -> Vec<usize> {
    // the ball stays constant-sized in a subcubic graph, so use a map
    // instead of an O(n) scratch array
    let mut dist: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    let mut queue = VecDeque::new();
    for &s in seed {
        dist.insert(s, 0);
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == radius {
            continue;
        }
        for &w in wg.g.neighbors(v) {
            if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist.into_keys().collect()
}

/// Removing a pattern must not shortcut the square: any two surviving
/// vertices that were within distance 2 through a removed vertex must stay
/// within distance 2. All templates remove whole neighborhoods, so each
/// removed vertex keeps at most one outside contact and no pair exists.
fn removal_is_square_safe(wg: &WorkingGraph, removed: &[usize], outside: &[Vec<usize>]) -> bool {
    for contacts in outside {
        for i in 0..contacts.len() {
            for j in (i + 1)..contacts.len() {
                let (x, y) = (contacts[i], contacts[j]);
                let near =
                    wg.g.has_edge(x, y)
                        || wg
                            .g
                            .neighbors(x)
                            .iter()
                            .any(|&m| !removed.contains(&m) && wg.g.has_edge(m, y));
                if !near {
                    return false;
                }
            }
        }
    }
    true
}

/// Decomposes `g` to the empty graph by repeatedly removing removable
/// patterns, maintaining a queue of candidate instances with lazy deletion.
pub fn decompose(g: &Graph, mode: Mode) -> Result<DecomposeTrace, DischargeError> {
    check_preconditions(g, mode)?;
    let rescan_radius = match mode {
        Mode::Seven => 4,
        Mode::SixPrime => 6,
    };
    let mut wg = WorkingGraph::new(g);
    let mut trace = DecomposeTrace {
        a: Vec::new(),
        configs_added_to_b: 0,
        configs_discarded_as_destroyed: 0,
    };
    let mut b: VecDeque<ConfigInstance> = VecDeque::new();
    let mut pending: BTreeSet<(ReducibleKind, Vec<usize>)> = BTreeSet::new();
    let mut stamp: u64 = 0;
    let mut push = |b: &mut VecDeque<ConfigInstance>,
                    pending: &mut BTreeSet<(ReducibleKind, Vec<usize>)>,
                    trace: &mut DecomposeTrace,
                    mut inst: ConfigInstance| {
        if pending.insert((inst.kind, inst.vertices.clone())) {
            stamp += 1;
            inst.generation_stamp = stamp;
            trace.configs_added_to_b += 1;
            b.push_back(inst);
        }
    };

    // preprocessing: every instance in the original graph
    for &kind in priority(mode) {
        for v in g.vertices() {
            for inst in instances_at(&wg, v, kind) {
                push(&mut b, &mut pending, &mut trace, inst);
            }
        }
    }

    while wg.n_active > 0 {
        let inst = match b.pop_front() {
            Some(i) => i,
            None => match find_reducible_in(&wg, mode) {
                Some(i) => {
                    push(&mut b, &mut pending, &mut trace, i);
                    continue;
                }
                None => {
                    return Err(DischargeError::NoConfigurationFound {
                        remainder_vertices: wg.active_vertices(),
                        remainder_edges: wg.g.edges(),
                    });
                }
            },
        };
        pending.remove(&(inst.kind, inst.vertices.clone()));
        if !validate(&inst, &wg) {
            trace.configs_discarded_as_destroyed += 1;
            continue;
        }
        let outside: Vec<Vec<usize>> = inst
            .vertices
            .iter()
            .map(|&h| {
                wg.g.neighbors(h)
                    .iter()
                    .copied()
                    .filter(|w| !inst.vertices.contains(w))
                    .collect()
            })
            .collect();
        let scan = ball(&wg, &inst.vertices, rescan_radius);
        wg.remove(&inst.vertices);
        assert!(
            removal_is_square_safe(&wg, &inst.vertices, &outside),
            "removed pattern shortcut the square"
        );
        trace.a.push(inst);
        for &v in &scan {
            if !wg.is_active(v) {
                continue;
            }
            for &kind in priority(mode) {
                for cand in instances_at(&wg, v, kind) {
                    push(&mut b, &mut pending, &mut trace, cand);
                }
            }
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests;
