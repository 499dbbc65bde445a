//! Coloring routine for 3-regular graphs whose shortest cycle has length at
//! least 7. Everything outside the cycle and its off-cycle neighbors is
//! colored greedily by distance classes; the remaining core of `2k` vertices
//! is handled by a five-way case analysis over all rotations and both
//! orientations of the cycle.

use crate::coloring::{color_all_except, ListAssignment, PartialColoring};
use crate::graph::{CycleWitness, Graph};
use crate::trace::Trace;

use super::helpers::{
    choose_pair, common_colors, finish_pair, for_each_pair, CycleFrame,
    Constraint::{MinExcess, MinRemaining},
};
use super::{internal, third_neighbor, SolveError};

/// Shared tail: with `u(0)` and `u(1)` already colored, pair `u(-1)` with
/// `v(2)` so `v(0)` keeps excess 2 and `v(1)` keeps excess 1, color `u(2)`
/// greedily, and finish through `v(1)`, `v(0)`.
fn case1_tail(pc: &PartialColoring, f: &CycleFrame) -> Option<PartialColoring> {
    let cons = [MinExcess(f.v(0), 2), MinExcess(f.v(1), 1)];
    let (mut pc2, _, _) = choose_pair(pc, f.u(-1), f.v(2), &cons)?;
    pc2.color_min(f.u(2)).ok()?;
    finish_pair(&pc2, f.v(1), f.v(0)).ok()
}

/// Case 1: adjacent off-cycle neighbors `u(0)`, `u(1)` get colors keeping
/// both `v(0)` and `v(1)` at 5 remaining colors.
fn case1(pc: &PartialColoring, f: &CycleFrame) -> Option<PartialColoring> {
    let cons = [MinRemaining(f.v(0), 5), MinRemaining(f.v(1), 5)];
    for_each_pair(pc, f.u(0), f.u(1), &cons, |pc2, _, _| case1_tail(pc2, f))
}

/// Case 2: some color of `u(0)` leaves `v(0)` with 6 remaining colors; then
/// save a color at `v(-1)` (or fall back to the case-1 tail one step back).
fn case2(pc: &PartialColoring, f: &CycleFrame) -> Option<PartialColoring> {
    for &c1 in pc.remaining(f.u(0)) {
        let mut p = pc.clone();
        if p.set_color(f.u(0), c1).is_err() {
            continue;
        }
        if p.remaining(f.v(0)).len() < 6 {
            continue;
        }
        // (a) u(-1) and v(1) share a color: saves one at v(-1)
        for c in common_colors(&p, f.u(-1), f.v(1)) {
            let mut p2 = p.clone();
            if p2.set_color(f.u(-1), c).is_err() || p2.set_color(f.v(1), c).is_err() {
                continue;
            }
            if p2.color_min(f.u(1)).is_err() {
                continue;
            }
            if let Ok(done) = finish_pair(&p2, f.v(-1), f.v(0)) {
                return Some(done);
            }
        }
        // (b) u(-1) takes a color outside the list of v(-1)
        let outside: Vec<_> = p
            .remaining(f.u(-1))
            .iter()
            .copied()
            .filter(|c| !p.remaining(f.v(-1)).contains(c))
            .collect();
        for c2 in outside {
            let mut p2 = p.clone();
            if p2.set_color(f.u(-1), c2).is_err() {
                continue;
            }
            if let Some(done) = case1_tail(&p2, &f.at(-1, false)) {
                return Some(done);
            }
        }
        // (c) v(1) takes a color outside the list of v(-1)
        let outside: Vec<_> = p
            .remaining(f.v(1))
            .iter()
            .copied()
            .filter(|c| !p.remaining(f.v(-1)).contains(c))
            .collect();
        for c3 in outside {
            let mut p2 = p.clone();
            if p2.set_color(f.v(1), c3).is_err() {
                continue;
            }
            if p2.color_min(f.u(1)).is_err() || p2.color_min(f.u(2)).is_err() {
                continue;
            }
            if let Ok(done) = finish_pair(&p2, f.v(-1), f.v(0)) {
                return Some(done);
            }
            let cons = [MinExcess(f.v(0), 2), MinExcess(f.v(-1), 1)];
            if let Some((p3, _, _)) = choose_pair(&p2, f.u(-1), f.v(2), &cons) {
                if let Ok(done) = finish_pair(&p3, f.v(-1), f.v(0)) {
                    return Some(done);
                }
            }
        }
    }
    None
}

/// Case 3: mirror of case 2 — a color of `u(1)` keeps `v(0)` at 6 options,
/// then save a color at `v(1)`.
fn case3(pc: &PartialColoring, f: &CycleFrame) -> Option<PartialColoring> {
    for &c1 in pc.remaining(f.u(1)) {
        let mut p = pc.clone();
        if p.set_color(f.u(1), c1).is_err() {
            continue;
        }
        if p.remaining(f.v(0)).len() < 6 {
            continue;
        }
        // (a) u(0) and v(2) share a color: saves one at v(1)
        for c in common_colors(&p, f.u(0), f.v(2)) {
            let mut p2 = p.clone();
            if p2.set_color(f.u(0), c).is_err() || p2.set_color(f.v(2), c).is_err() {
                continue;
            }
            if p2.color_min(f.u(2)).is_err() {
                continue;
            }
            if let Ok(done) = finish_pair(&p2, f.v(1), f.v(0)) {
                return Some(done);
            }
        }
        // (b) u(0) takes a color outside the list of v(1)
        let outside: Vec<_> = p
            .remaining(f.u(0))
            .iter()
            .copied()
            .filter(|c| !p.remaining(f.v(1)).contains(c))
            .collect();
        for c2 in outside {
            let mut p2 = p.clone();
            if p2.set_color(f.u(0), c2).is_err() {
                continue;
            }
            if let Some(done) = case1_tail(&p2, f) {
                return Some(done);
            }
        }
        // (c) v(2) takes a color outside the list of v(1)
        let outside: Vec<_> = p
            .remaining(f.v(2))
            .iter()
            .copied()
            .filter(|c| !p.remaining(f.v(1)).contains(c))
            .collect();
        for c3 in outside {
            let mut p2 = p.clone();
            if p2.set_color(f.v(2), c3).is_err() {
                continue;
            }
            if p2.color_min(f.u(2)).is_err() || p2.color_min(f.u(3)).is_err() {
                continue;
            }
            if let Ok(done) = finish_pair(&p2, f.v(0), f.v(1)) {
                return Some(done);
            }
            let cons = [MinExcess(f.v(1), 2), MinExcess(f.v(0), 1)];
            if let Some((p3, _, _)) = choose_pair(&p2, f.u(0), f.v(3), &cons) {
                if let Ok(done) = finish_pair(&p3, f.v(0), f.v(1)) {
                    return Some(done);
                }
            }
        }
    }
    None
}

/// Case 4: `u(-1)` and `u(1)` get colors keeping `v(0)` at 5 options (they
/// are never square-adjacent at girth 7, so they may share a color), then a
/// color is saved at `v(1)` through `u(0)` and `v(2)`.
fn case4(pc: &PartialColoring, f: &CycleFrame) -> Option<PartialColoring> {
    let cons = [MinRemaining(f.v(0), 5)];
    for_each_pair(pc, f.u(-1), f.u(1), &cons, |pc2, _, _| {
        // (a) u(0) and v(2) share a color
        for c in common_colors(pc2, f.u(0), f.v(2)) {
            let mut p = pc2.clone();
            if p.set_color(f.u(0), c).is_err() || p.set_color(f.v(2), c).is_err() {
                continue;
            }
            if let Ok(done) = finish_pair(&p, f.v(1), f.v(0)) {
                return Some(done);
            }
        }
        // (b) u(0) takes a color outside the list of v(1)
        let outside: Vec<_> = pc2
            .remaining(f.u(0))
            .iter()
            .copied()
            .filter(|c| !pc2.remaining(f.v(1)).contains(c))
            .collect();
        for c3 in outside {
            let mut p = pc2.clone();
            if p.set_color(f.u(0), c3).is_err() {
                continue;
            }
            let cons = [MinExcess(f.v(1), 2), MinExcess(f.v(0), 1)];
            if let Some((p2, _, _)) = choose_pair(&p, f.v(-1), f.u(2), &cons) {
                if let Ok(done) = finish_pair(&p2, f.v(0), f.v(1)) {
                    return Some(done);
                }
            }
        }
        // (c) v(2) takes a color outside the list of v(1)
        let outside: Vec<_> = pc2
            .remaining(f.v(2))
            .iter()
            .copied()
            .filter(|c| !pc2.remaining(f.v(1)).contains(c))
            .collect();
        for c4 in outside {
            let mut p = pc2.clone();
            if p.set_color(f.v(2), c4).is_err() {
                continue;
            }
            if p.color_min(f.u(2)).is_err() || p.color_min(f.u(3)).is_err() {
                continue;
            }
            let cons = [MinExcess(f.v(1), 2), MinExcess(f.v(0), 1)];
            if let Some((p2, _, _)) = choose_pair(&p, f.u(0), f.v(3), &cons) {
                if let Ok(done) = finish_pair(&p2, f.v(0), f.v(1)) {
                    return Some(done);
                }
            }
        }
        None
    })
}

/// Case 5: no off-cycle choice helps, which forces every `u(j)` list to
/// nearly coincide with both adjacent cycle lists; color all `u(j)` greedily,
/// then each `v(j)` reuses a color its own `u(j)` list offered on entry.
fn case5(
    pc: &PartialColoring,
    base: &CycleFrame,
    trace: &mut Trace,
) -> Result<PartialColoring, SolveError> {
    let k = base.k() as i64;
    let entry: Vec<Vec<crate::coloring::Color>> = (0..k)
        .map(|j| pc.remaining(base.u(j)).iter().copied().collect())
        .collect();
    let mut p = pc.clone();
    for j in 0..k {
        p.color_min(base.u(j))
            .map_err(|e| internal(format!("high-girth case 5 stuck off-cycle: {e}"), trace))?;
    }
    for j in 0..k {
        let uj = base.u(j);
        let cu = p.color(uj).expect("just colored");
        let c = entry[j as usize]
            .iter()
            .copied()
            .find(|&c| c != cu && p.remaining(base.v(j)).contains(&c))
            .ok_or_else(|| internal("high-girth case 5: no reusable color on the cycle", trace))?;
        p.set_color(base.v(j), c)
            .map_err(|e| internal(format!("high-girth case 5 clashed: {e}"), trace))?;
    }
    Ok(p)
}

/// Colors the whole square of a 3-regular graph around a shortest cycle of
/// length at least 7.
pub fn extend_high_girth(
    g: &Graph,
    lists: &ListAssignment,
    cycle: &CycleWitness,
    trace: &mut Trace,
) -> Result<PartialColoring, SolveError> {
    let c = cycle.vertices();
    let k = c.len();
    if k < 7 {
        return Err(internal("high-girth routine needs a cycle of length at least 7", trace));
    }
    let us: Vec<usize> = c
        .iter()
        .map(|&v| third_neighbor(g, v, c))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| internal("high-girth: missing off-cycle neighbor", trace))?;
    let mut sorted = us.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k || sorted.iter().any(|u| c.contains(u)) {
        return Err(internal("high-girth: off-cycle neighbors not distinct", trace));
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if g.has_edge(us[i], us[j]) {
                return Err(internal(
                    "high-girth: off-cycle neighbors adjacent, contradicting a shortest cycle",
                    trace,
                ));
            }
        }
    }
    let keep: Vec<usize> = c.iter().chain(&us).copied().collect();
    let pc = color_all_except(g, lists, &keep, c[0], c[1])?;
    let base = CycleFrame::new(c, &us);

    let cases: [(&str, fn(&PartialColoring, &CycleFrame) -> Option<PartialColoring>); 4] =
        [("1", case1), ("2", case2), ("3", case3), ("4", case4)];
    for (name, case) in cases {
        for rev in [false, true] {
            for i in 0..k as i64 {
                let f = base.at(i, rev);
                if let Some(done) = case(&pc, &f) {
                    trace.decision(
                        "13",
                        name,
                        f.v(0),
                        done.color(f.v(0)).expect("finished"),
                        "high-girth case applied at this origin",
                    );
                    return Ok(done);
                }
            }
        }
    }
    trace.note("high-girth: falling through to the rigid case");
    case5(&pc, &base, trace)
}
