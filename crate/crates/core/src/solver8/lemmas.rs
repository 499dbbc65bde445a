//! Coloring routines for the small structures: a low-degree vertex, a
//! triangle, a 4-cycle, the two two-5-cycle patterns, and a lone 5-cycle.
//!
//! Each routine colors the square of the whole graph: everything far from
//! the structure greedily by distance classes, then the core by the case
//! analysis specific to the structure. Case conditions are re-checked
//! against actual distances; when a condition fails, control falls through
//! to the next case or symmetric labeling.

use std::collections::BTreeSet;

use crate::coloring::{
    color_all_except, ExtensionOrder, ListAssignment, PartialColoring,
};
use crate::graph::Graph;
use crate::sdr::{sdr_assign, SdrResult};
use crate::trace::Trace;

use super::helpers::{
    choose_pair, common_colors, finish_exhaustive, CycleFrame,
    Constraint::{MinExcess, MinRemaining},
};
use super::{internal, third_neighbor, SolveError};

/// A vertex `u` of degree at most 2: both `u` and any neighbor have enough
/// excess to finish greedily from scratch.
pub(super) fn low_degree(
    g: &Graph,
    lists: &ListAssignment,
    u: usize,
    trace: &mut Trace,
) -> Result<PartialColoring, SolveError> {
    let v = g.neighbors(u)[0];
    trace.note(format!("low-degree vertex {u}, finishing toward neighbor {v}"));
    let pc = PartialColoring::new(g, lists);
    let order = crate::coloring::order_decreasing_distance_to_edge(g, v, u);
    Ok(pc.finish_two_excess(v, u, &order)?)
}

/// A triangle: all three vertices have excess at least 2 from the start.
pub(super) fn triangle(
    g: &Graph,
    lists: &ListAssignment,
    cycle: &[usize],
    trace: &mut Trace,
) -> Result<PartialColoring, SolveError> {
    let (a, b, w) = (cycle[0], cycle[1], cycle[2]);
    trace.note(format!("triangle {a} {b} {w}"));
    let pc = PartialColoring::new(g, lists);
    let dist = g.bfs_distances_multi(&[a, b]);
    let mut rest: Vec<usize> = g
        .vertices()
        .filter(|&x| x != a && x != b && x != w)
        .collect();
    rest.sort_by(|&p, &q| dist[q].cmp(&dist[p]).then(p.cmp(&q)));
    rest.extend([w, a, b]);
    Ok(pc.finish_two_excess(a, b, &ExtensionOrder(rest))?)
}

/// All distinct 4-cycles through `x`, each as its sorted vertex set.
fn four_cycles_through(g: &Graph, x: usize) -> Vec<[usize; 4]> {
    let mut cycles = BTreeSet::new();
    let nb = g.neighbors(x);
    for ai in 0..nb.len() {
        for bi in (ai + 1)..nb.len() {
            let (a, b) = (nb[ai], nb[bi]);
            for &y in g.neighbors(a) {
                if y != x && g.has_edge(y, b) {
                    let mut c = [x, a, y, b];
                    c.sort_unstable();
                    cycles.insert(c);
                }
            }
        }
    }
    cycles.into_iter().collect()
}

/// A 4-cycle in a 3-regular graph with girth 4.
pub(super) fn four_cycle(
    g: &Graph,
    lists: &ListAssignment,
    cycle: &[usize],
    trace: &mut Trace,
) -> Result<PartialColoring, SolveError> {
    // shortcut: a vertex on two 4-cycles has excess 2, an on-cycle neighbor
    // has excess 1, so the whole graph colors greedily from scratch
    for x in g.vertices() {
        let cycles = four_cycles_through(g, x);
        if cycles.len() >= 2 {
            let v2 = *cycles
                .iter()
                .flatten()
                .filter(|&&w| g.has_edge(w, x))
                .min()
                .expect("4-cycle contains neighbors of x");
            trace.note(format!("vertex {x} on two 4-cycles, partner {v2}"));
            let pc = PartialColoring::new(g, lists);
            let order = crate::coloring::order_decreasing_distance_to_edge(g, v2, x);
            return Ok(pc.finish_two_excess(v2, x, &order)?);
        }
    }

    let trace_fail = |msg: &str, trace: &Trace| internal(format!("4-cycle: {msg}"), trace);
    let us: Vec<usize> = cycle
        .iter()
        .map(|&v| third_neighbor(g, v, cycle))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| trace_fail("missing off-cycle neighbor", trace))?;
    let mut sorted = us.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 4 {
        return Err(trace_fail("off-cycle neighbors not distinct", trace));
    }
    let keep: Vec<usize> = cycle.iter().chain(&us).copied().collect();
    let pc = color_all_except(g, lists, &keep, cycle[0], cycle[1])?;
    let base = CycleFrame::new(cycle, &us);

    // Case 1: some labeling has dist(u1, v3) = 3; save a color at v1
    for s in 0..4 {
        for rev in [false, true] {
            let f = base.at(s, rev);
            if g.distance(f.u(0), f.v(2)) != 3 {
                continue;
            }
            let cons = [MinExcess(f.v(0), 2), MinExcess(f.v(1), 1)];
            if let Some((pc2, c1, c2)) = choose_pair(&pc, f.u(0), f.v(2), &cons) {
                trace.decision("7", "1", f.u(0), c1, "paired with far cycle vertex");
                trace.decision("7", "1", f.v(2), c2, "paired with off-cycle vertex");
                let order = ExtensionOrder(vec![
                    f.u(1),
                    f.u(2),
                    f.u(3),
                    f.v(3),
                    f.v(1),
                    f.v(0),
                ]);
                if let Ok(done) = pc2.finish_two_excess(f.v(1), f.v(0), &order) {
                    return Ok(done);
                }
            }
        }
    }

    // Case 2: u1u3 and u2u4 adjacent, dist(u1, u2) = 3; save at v1 via u1, u2
    for s in 0..4 {
        for rev in [false, true] {
            let f = base.at(s, rev);
            if !g.has_edge(f.u(0), f.u(2))
                || !g.has_edge(f.u(1), f.u(3))
                || g.distance(f.u(0), f.u(1)) != 3
            {
                continue;
            }
            let cons = [MinExcess(f.v(0), 2), MinExcess(f.v(1), 1)];
            if let Some((pc2, c1, c2)) = choose_pair(&pc, f.u(0), f.u(1), &cons) {
                trace.decision("7", "2", f.u(0), c1, "paired off-cycle vertices");
                trace.decision("7", "2", f.u(1), c2, "paired off-cycle vertices");
                let order = ExtensionOrder(vec![
                    f.u(2),
                    f.u(3),
                    f.v(3),
                    f.v(2),
                    f.v(1),
                    f.v(0),
                ]);
                if let Ok(done) = pc2.finish_two_excess(f.v(1), f.v(0), &order) {
                    return Ok(done);
                }
            }
        }
    }
    Err(trace_fail("no case applied", trace))
}

/// Relabeling that swaps the roles of the pairs (v2, v5) and (v3, v6) while
/// keeping the same chord vertex.
fn swap_pairs(c: &[usize]) -> Vec<usize> {
    vec![c[3], c[2], c[1], c[0], c[5], c[4]]
}

/// Two 5-cycles sharing three consecutive vertices: a 6-cycle `c` plus a
/// chord vertex `x` adjacent to `c[0]` and `c[3]`. Cases split on how many
/// of the pairs (v2, v5), (v3, v6) are at distance 3.
pub(super) fn five_cycles_sharing_path(
    g: &Graph,
    lists: &ListAssignment,
    c: &[usize],
    x: usize,
    trace: &mut Trace,
    depth: usize,
) -> Result<PartialColoring, SolveError> {
    if depth > 2 {
        return Err(internal("shared-path pattern: relabeling did not terminate", trace));
    }
    let pc = color_all_except(g, lists, &[c[0], c[1], c[2], c[3], c[4], c[5], x], c[0], c[1])?;
    let d25 = g.distance(c[1], c[4]);
    let d36 = g.distance(c[2], c[5]);

    if d25 >= 3 && d36 >= 3 {
        trace.note("shared-path pattern: case 1, both pairs far apart");
        // Subcase 1.1: some pair shares a color
        for lab in [c.to_vec(), swap_pairs(c)] {
            for c1 in common_colors(&pc, lab[1], lab[4]) {
                let mut pc2 = pc.clone();
                if pc2.set_color(lab[1], c1).is_err() || pc2.set_color(lab[4], c1).is_err() {
                    continue;
                }
                let done = choose_pair(&pc2, lab[2], lab[5], &[MinRemaining(x, 3)])
                    .and_then(|(pc3, _, _)| {
                        pc3.greedy_extend(&ExtensionOrder(vec![lab[0], lab[3], x])).ok()
                    });
                if let Some(done) = done {
                    trace.decision("8", "1.1", lab[1], c1, "shared color across the cycle");
                    return Ok(done);
                }
            }
        }
        // Subcase 1.2: color v1, v4, x so no two of {v2, v3, v5, v6} drop to
        // a single color, then exhaust the remaining four
        for strict in [true, false] {
            let sides = [c[1], c[2], c[4], c[5]];
            for &ca in pc.remaining(c[0]) {
                let mut p1 = pc.clone();
                if p1.set_color(c[0], ca).is_err() {
                    continue;
                }
                let cbs: Vec<_> = p1.remaining(c[3]).iter().copied().collect();
                for cb in cbs {
                    let mut p2 = p1.clone();
                    if p2.set_color(c[3], cb).is_err() {
                        continue;
                    }
                    let ccs: Vec<_> = p2.remaining(x).iter().copied().collect();
                    for cc in ccs {
                        let mut p3 = p2.clone();
                        if p3.set_color(x, cc).is_err() {
                            continue;
                        }
                        let singles = sides
                            .iter()
                            .filter(|&&v| p3.remaining(v).len() == 1)
                            .count();
                        let empty = sides.iter().any(|&v| p3.remaining(v).is_empty());
                        if empty || (strict && singles > 1) {
                            continue;
                        }
                        if let Some(done) = finish_exhaustive(&p3) {
                            trace.decision("8", "1.2", c[0], ca, "core triple");
                            return Ok(done);
                        }
                    }
                }
            }
        }
        return Err(internal("shared-path pattern: case 1 exhausted", trace));
    }

    if d25 == 2 && d36 == 2 {
        // Case 3: both pairs have common neighbors v8, v9; switch to another
        // pair of 5-cycles whose pattern falls under case 1 or 2
        trace.note("shared-path pattern: case 3, both pairs at distance 2");
        let common = |a: usize, b: usize| -> Option<usize> {
            g.neighbors(a).iter().copied().find(|&y| g.has_edge(y, b))
        };
        let v8 = common(c[1], c[4])
            .ok_or_else(|| internal("shared-path pattern: missing common neighbor", trace))?;
        let v9 = common(c[2], c[5])
            .ok_or_else(|| internal("shared-path pattern: missing common neighbor", trace))?;
        let chords = [x, v8, v9];
        let anchors = [(c[0], c[3]), (c[1], c[4]), (c[2], c[5])];
        let third = |i: usize| third_neighbor(g, chords[i], &[anchors[i].0, anchors[i].1]);
        let (u7, u8, u9) = match (third(0), third(1), third(2)) {
            (Some(a), Some(b), Some(d)) => (a, b, d),
            _ => return Err(internal("shared-path pattern: chord vertex degree", trace)),
        };
        if u7 == u8 && u8 == u9 {
            return Err(internal(
                "shared-path pattern: chord vertices share a neighbor (Petersen-like)",
                trace,
            ));
        }
        let s = if u7 != u8 {
            0
        } else if u8 != u9 {
            1
        } else {
            2
        };
        let cc: Vec<usize> = (0..6).map(|i| c[(i + s) % 6]).collect();
        let p7 = chords[s];
        let p8 = chords[(s + 1) % 3];
        let new_cycle = [cc[1], cc[0], p7, cc[3], cc[4], p8];
        trace.note(format!("relabeled to 6-cycle {new_cycle:?} with chord vertex {}", cc[2]));
        return five_cycles_sharing_path(g, lists, &new_cycle, cc[2], trace, depth + 1);
    }

    // Case 2: exactly one pair at distance 2; normalize so it is (v3, v6)
    trace.note("shared-path pattern: case 2, one pair at distance 2");
    let l = if d36 == 2 { c.to_vec() } else { swap_pairs(c) };
    let u2 = third_neighbor(g, l[1], &[l[0], l[2]])
        .ok_or_else(|| internal("shared-path pattern: degree at v2", trace))?;
    let u5 = third_neighbor(g, l[4], &[l[3], l[5]])
        .ok_or_else(|| internal("shared-path pattern: degree at v5", trace))?;
    let u7 = third_neighbor(g, x, &[l[0], l[3]])
        .ok_or_else(|| internal("shared-path pattern: degree at chord vertex", trace))?;
    if u2 == u5 || u2 == u7 || u5 == u7 || g.distance(u2, l[3]) != 3 || g.distance(u5, l[0]) != 3 {
        return Err(internal("shared-path pattern: case 2 structure violated", trace));
    }
    let mut pc = pc;
    pc.uncolor(u2)?;
    trace.note(format!("uncolored {u2} next to the far pair"));

    // Subcase 2.1: u2 and v4 share a color
    for c1 in common_colors(&pc, u2, l[3]) {
        let mut pc2 = pc.clone();
        if pc2.set_color(u2, c1).is_err() || pc2.set_color(l[3], c1).is_err() {
            continue;
        }
        let done = choose_pair(&pc2, l[1], l[4], &[MinRemaining(l[2], 4)])
            .and_then(|(pc3, _, _)| {
                pc3.greedy_extend(&ExtensionOrder(vec![x, l[5], l[0], l[2]])).ok()
            });
        if let Some(done) = done {
            trace.decision("8", "2.1", u2, c1, "shared with opposite cycle vertex");
            return Ok(done);
        }
    }
    // Subcase 2.2a: v2 and v5 share a color; then save at v3 via u2, v4
    for c1 in common_colors(&pc, l[1], l[4]) {
        let mut pc2 = pc.clone();
        if pc2.set_color(l[1], c1).is_err() || pc2.set_color(l[4], c1).is_err() {
            continue;
        }
        let Ok((cx, cy)) = pc2.pick_saving_pair(u2, l[3], l[2]) else {
            continue;
        };
        if pc2.set_color(u2, cx).is_err() || pc2.set_color(l[3], cy).is_err() {
            continue;
        }
        if let Ok(done) = pc2.greedy_extend(&ExtensionOrder(vec![x, l[5], l[0], l[2]])) {
            trace.decision("8", "2.2", l[1], c1, "shared across the cycle");
            return Ok(done);
        }
    }
    // Subcase 2.2b: save at v3 first, keep v2 and v5 alive, exhaust the rest
    let attempt = (|| {
        let mut pc2 = pc.clone();
        let (cx, cy) = pc2.pick_saving_pair(u2, l[3], l[2]).ok()?;
        pc2.set_color(u2, cx).ok()?;
        pc2.set_color(l[3], cy).ok()?;
        let cons = [MinRemaining(l[1], 1), MinRemaining(l[4], 1)];
        let (pc3, _, _) = choose_pair(&pc2, l[5], x, &cons)?;
        finish_exhaustive(&pc3)
    })();
    if let Some(done) = attempt {
        trace.note("shared-path pattern: subcase 2.2 finished by exhaustion");
        return Ok(done);
    }
    Err(internal("shared-path pattern: case 2 exhausted", trace))
}

/// Two 5-cycles sharing one edge: an 8-cycle `c` with the chord `c0 c4`.
pub(super) fn five_cycles_sharing_edge(
    g: &Graph,
    lists: &ListAssignment,
    c: &[usize],
    trace: &mut Trace,
) -> Result<PartialColoring, SolveError> {
    if !g.has_edge(c[0], c[4]) || g.distance(c[1], c[5]) != 3 || g.distance(c[3], c[7]) != 3 {
        return Err(internal("shared-edge pattern: structure violated", trace));
    }
    let pc = color_all_except(g, lists, c, c[0], c[1])?;

    // Case 1: v4 and v8 share a color
    for c1 in common_colors(&pc, c[3], c[7]) {
        let mut pc2 = pc.clone();
        if pc2.set_color(c[3], c1).is_err() || pc2.set_color(c[7], c1).is_err() {
            continue;
        }
        let cons = [MinExcess(c[4], 2), MinExcess(c[0], 1)];
        let done = choose_pair(&pc2, c[1], c[5], &cons).and_then(|(pc3, _, _)| {
            let order = ExtensionOrder(vec![c[2], c[6], c[0], c[4]]);
            pc3.finish_two_excess(c[0], c[4], &order).ok()
        });
        if let Some(done) = done {
            trace.decision("9", "1", c[3], c1, "shared across the chord");
            return Ok(done);
        }
    }

    // Case 2: save at v5 via v2, v6, then split on what v4 and v8 retain
    trace.note("shared-edge pattern: case 2");
    let done = super::helpers::for_each_pair(
        &pc,
        c[1],
        c[5],
        &[MinExcess(c[4], 1)],
        |pc2, _, _| {
            let mut pc3 = pc2.clone();
            pc3.color_min(c[2]).ok()?;
            pc3.color_min(c[6]).ok()?;
            if pc3.remaining(c[3]).len() >= 3 {
                let order = ExtensionOrder(vec![c[7], c[0], c[4], c[3]]);
                if let Ok(d) = pc3.finish_two_excess(c[4], c[3], &order) {
                    return Some(d);
                }
            }
            if pc3.remaining(c[7]).len() >= 3 {
                let order = ExtensionOrder(vec![c[3], c[0], c[4], c[7]]);
                if let Ok(d) = pc3.finish_two_excess(c[4], c[7], &order) {
                    return Some(d);
                }
            }
            pc3.color_min(c[0]).ok()?;
            // v4 and v8 had disjoint lists, so v1's color spared one of them
            let order = if pc3.remaining(c[3]).len() >= 2 {
                ExtensionOrder(vec![c[7], c[4], c[3]])
            } else {
                ExtensionOrder(vec![c[3], c[4], c[7]])
            };
            pc3.greedy_extend(&order).ok()
        },
    );
    done.ok_or_else(|| internal("shared-edge pattern: case 2 exhausted", trace))
}

/// A lone 5-cycle in a 3-regular girth-5 graph with neither two-5-cycle
/// pattern present.
pub(super) fn five_cycle(
    g: &Graph,
    lists: &ListAssignment,
    c: &[usize],
    trace: &mut Trace,
) -> Result<PartialColoring, SolveError> {
    let us: Vec<usize> = c
        .iter()
        .map(|&v| third_neighbor(g, v, c))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| internal("5-cycle: missing off-cycle neighbor", trace))?;
    for i in 0..5 {
        if g.distance(us[i], c[(i + 2) % 5]) != 3
            || g.distance(us[i], c[(i + 3) % 5]) != 3
            || g.distance(us[i], us[(i + 1) % 5]) != 3
        {
            return Err(internal("5-cycle: structure violated", trace));
        }
    }
    let keep: Vec<usize> = c.iter().chain(&us).copied().collect();
    let pc = color_all_except(g, lists, &keep, c[0], c[1])?;
    let base = CycleFrame::new(c, &us);

    // Case 1: some u_i shares a color with v_{i+2} (any symmetry)
    for s in 0..5 {
        for rev in [false, true] {
            let f = base.at(s, rev);
            for c1 in common_colors(&pc, f.u(0), f.v(2)) {
                let mut pc2 = pc.clone();
                if pc2.set_color(f.u(0), c1).is_err() || pc2.set_color(f.v(2), c1).is_err() {
                    continue;
                }
                let done = (|| {
                    pc2.color_min(f.u(1)).ok()?;
                    pc2.color_min(f.u(2)).ok()?;
                    pc2.color_min(f.u(3)).ok()?;
                    let (pc3, _, _) =
                        choose_pair(&pc2, f.u(4), f.v(1), &[MinRemaining(f.v(0), 3)])?;
                    pc3.greedy_extend(&ExtensionOrder(vec![f.v(3), f.v(4), f.v(0)])).ok()
                })();
                if let Some(done) = done {
                    trace.decision("10", "1", f.u(0), c1, "shared with far cycle vertex");
                    return Ok(done);
                }
            }
        }
    }

    // Case 2: some adjacent off-cycle pair u_i, u_{i+1} shares a color
    for s in 0..5 {
        for rev in [false, true] {
            let f = base.at(s, rev);
            for c1 in common_colors(&pc, f.u(0), f.u(1)) {
                let mut pc2 = pc.clone();
                if pc2.set_color(f.u(0), c1).is_err() || pc2.set_color(f.u(1), c1).is_err() {
                    continue;
                }
                let done = (|| {
                    let cons = [MinExcess(f.v(1), 2), MinExcess(f.v(0), 1)];
                    let (mut pc3, _, _) = choose_pair(&pc2, f.v(4), f.u(2), &cons)?;
                    pc3.color_min(f.u(4)).ok()?;
                    let order =
                        ExtensionOrder(vec![f.u(3), f.v(3), f.v(2), f.v(0), f.v(1)]);
                    pc3.finish_two_excess(f.v(0), f.v(1), &order).ok()
                })();
                if let Some(done) = done {
                    trace.decision("10", "2", f.u(0), c1, "shared off-cycle pair");
                    return Ok(done);
                }
            }
        }
    }

    // Case 3: all those list pairs are disjoint; distinct representatives
    trace.note("5-cycle: case 3, distinct colors for the whole core");
    let order: Vec<usize> = keep.clone();
    let rem_lists: Vec<BTreeSet<crate::coloring::Color>> =
        order.iter().map(|&v| pc.remaining(v).clone()).collect();
    match sdr_assign(&rem_lists) {
        SdrResult::Assigned(colors) => {
            let mut pc2 = pc.clone();
            for (&v, &col) in order.iter().zip(&colors) {
                pc2.set_color(v, col)
                    .map_err(|e| internal(format!("5-cycle: distinct colors clashed: {e}"), trace))?;
            }
            trace.color_config("FiveCycleCore", order.into_iter().zip(colors).collect());
            Ok(pc2)
        }
        SdrResult::Unsatisfiable(w) => Err(internal(
            format!("5-cycle: no system of distinct representatives, witness {w:?}"),
            trace,
        )),
    }
}
