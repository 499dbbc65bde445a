//! Executable audits of the two charge-redistribution arguments. Each vertex
//! starts with charge equal to its degree; the transfer rules below move
//! charge from 3-vertices toward 2-vertices. When no removable pattern
//! exists, every final charge is at least the density bound, certifying that
//! the decomposition cannot get stuck on graphs below the bound.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::mad::Rational;

use super::config::WorkingGraph;
use super::DischargeError;

/// Final charge of every vertex after redistribution, plus the minimum.
#[derive(Debug, Clone)]
pub struct ChargeReport {
    pub charges: Vec<Rational>,
    pub minimum: Rational,
}

fn report(charges: Vec<Rational>) -> ChargeReport {
    let minimum = charges.iter().copied().min().expect("nonempty graph");
    ChargeReport { charges, minimum }
}

/// 2-vertices at distance exactly 2 from `v`.
fn two_vertices_at_distance_two(wg: &WorkingGraph, v: usize) -> Vec<usize> {
    let mut out = BTreeSet::new();
    for &w in wg.g.neighbors(v) {
        for &x in wg.g.neighbors(w) {
            if x != v && !wg.g.has_edge(v, x) && wg.two(x) {
                out.insert(x);
            }
        }
    }
    out.into_iter().collect()
}

/// Redistribution for the 7-list solver: each 3-vertex gives 1/5 to every
/// adjacent 2-vertex and 1/10 to every 2-vertex at distance two.
pub fn discharge_check_7(g: &Graph) -> Result<ChargeReport, DischargeError> {
    if g.n() == 0 {
        return Err(DischargeError::EmptyGraph);
    }
    if !g.is_subcubic() {
        return Err(DischargeError::NotSubcubic);
    }
    let wg = WorkingGraph::new(g);
    let mut charges: Vec<Rational> = g
        .vertices()
        .map(|v| Rational::from_integer(g.degree(v) as i64))
        .collect();
    for v in g.vertices() {
        if !wg.three(v) {
            continue;
        }
        for &w in g.neighbors(v) {
            if wg.two(w) {
                charges[v] -= Rational::new(1, 5);
                charges[w] += Rational::new(1, 5);
            }
        }
        for w in two_vertices_at_distance_two(&wg, v) {
            charges[v] -= Rational::new(1, 10);
            charges[w] += Rational::new(1, 10);
        }
    }
    Ok(report(charges))
}

/// Redistribution for the 6-list solver (girth at least 7). A 3-vertex's
/// class is its number of 2-neighbors. Rules: every 3-vertex gives 2/7 to
/// each adjacent 2-vertex; each class-0 vertex gives 1/7 to every adjacent
/// 3-vertex; each class-1 vertex gives 1/7 to every adjacent class-2 vertex
/// and to every class-3 vertex at distance two.
pub fn discharge_check_6(g: &Graph) -> Result<ChargeReport, DischargeError> {
    if g.n() == 0 {
        return Err(DischargeError::EmptyGraph);
    }
    if !g.is_subcubic() {
        return Err(DischargeError::NotSubcubic);
    }
    if let Some(girth) = g.girth() {
        if girth < 7 {
            return Err(DischargeError::GirthTooSmall { girth });
        }
    }
    let wg = WorkingGraph::new(g);
    let mut charges: Vec<Rational> = g
        .vertices()
        .map(|v| Rational::from_integer(g.degree(v) as i64))
        .collect();
    for v in g.vertices() {
        let Some(class) = wg.class_of(v) else {
            continue;
        };
        for &w in g.neighbors(v) {
            if wg.two(w) {
                charges[v] -= Rational::new(2, 7);
                charges[w] += Rational::new(2, 7);
            }
        }
        match class {
            0 => {
                for &w in g.neighbors(v) {
                    if wg.three(w) {
                        charges[v] -= Rational::new(1, 7);
                        charges[w] += Rational::new(1, 7);
                    }
                }
            }
            1 => {
                for &w in g.neighbors(v) {
                    if wg.class_of(w) == Some(2) {
                        charges[v] -= Rational::new(1, 7);
                        charges[w] += Rational::new(1, 7);
                    }
                }
                let mut far3 = BTreeSet::new();
                for &w in g.neighbors(v) {
                    for &x in g.neighbors(w) {
                        if x != v && !g.has_edge(v, x) && wg.class_of(x) == Some(3) {
                            far3.insert(x);
                        }
                    }
                }
                for w in far3 {
                    charges[v] -= Rational::new(1, 7);
                    charges[w] += Rational::new(1, 7);
                }
            }
            _ => {}
        }
    }
    Ok(report(charges))
}
