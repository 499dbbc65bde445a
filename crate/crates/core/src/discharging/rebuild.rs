//! The rebuilding phase: re-insert removed patterns in reverse order and
//! color each one with its scripted greedy order. Every scripted order has a
//! bounded fallback search over the pattern's own vertices, so a failure can
//! only mean the input violated the solver's density precondition.

use crate::coloring::{Color, ColoringError, ListAssignment, PartialColoring};
use crate::graph::Graph;
use crate::trace::Trace;

use super::config::{
    validate, ConfigInstance, ReducibleKind, SevenKind, SixPrimeKind, WorkingGraph,
};
use super::{decompose, internal, DecomposeTrace, DischargeError, Mode};

/// Colors `vertices` exhaustively (ascending colors, given order), leaving
/// `pc` untouched on failure. Intended for pattern cores of at most 8
/// vertices.
fn exhaustive_over(pc: &PartialColoring, vertices: &[usize]) -> Option<PartialColoring> {
    fn go(pc: &PartialColoring, rest: &[usize]) -> Option<PartialColoring> {
        let (&v, tail) = match rest.split_first() {
            Some(s) => s,
            None => return Some(pc.clone()),
        };
        let options: Vec<Color> = pc.remaining(v).iter().copied().collect();
        for c in options {
            let mut p = pc.clone();
            if p.set_color(v, c).is_err() {
                continue;
            }
            if let Some(done) = go(&p, tail) {
                return Some(done);
            }
        }
        None
    }
    go(pc, vertices)
}

fn greedy_in(pc: &mut PartialColoring, order: &[usize]) -> Result<(), ColoringError> {
    for &v in order {
        pc.color_min(v)?;
    }
    Ok(())
}

/// Candidate colors for `lead`: those outside the remaining list of `avoid`
/// first (protecting `avoid` for the end of the order), then the rest.
fn lead_candidates(pc: &PartialColoring, lead: usize, avoid: usize) -> Vec<Color> {
    let mut out: Vec<Color> = pc
        .remaining(lead)
        .iter()
        .copied()
        .filter(|c| !pc.remaining(avoid).contains(c))
        .collect();
    out.extend(
        pc.remaining(lead)
            .iter()
            .copied()
            .filter(|c| pc.remaining(avoid).contains(c)),
    );
    out
}

/// Scripted order with a protected lead vertex: try each lead color
/// (protecting colors first), then greedy the rest.
fn scripted(
    pc: &PartialColoring,
    lead: usize,
    avoid: usize,
    rest: &[usize],
) -> Option<PartialColoring> {
    for c in lead_candidates(pc, lead, avoid) {
        let mut p = pc.clone();
        if p.set_color(lead, c).is_err() {
            continue;
        }
        if greedy_in(&mut p, rest).is_ok() {
            return Some(p);
        }
    }
    None
}

fn assert_far(
    wg: &WorkingGraph,
    pairs: &[(usize, usize)],
    context: &str,
    trace: &Trace,
) -> Result<(), DischargeError> {
    for &(a, b) in pairs {
        if wg.g.distance(a, b) < 3 {
            return Err(internal(
                format!("{context}: vertices {a} and {b} are closer than distance 3"),
                trace,
            ));
        }
    }
    Ok(())
}

/// Colors one re-inserted pattern. Returns the assignments made, for the
/// trace.
fn color_instance(
    pc: &mut PartialColoring,
    wg: &WorkingGraph,
    inst: &ConfigInstance,
    trace: &mut Trace,
) -> Result<(), DischargeError> {
    let vs = &inst.vertices;
    let done = match inst.kind {
        ReducibleKind::Seven(kind) => {
            // with lists of size at least 7 each order below is guaranteed
            // by counting colored square-neighbors, so color in place --
            // cloning the partial coloring here would make rebuilding
            // quadratic
            let order: Vec<usize> = match kind {
                SevenKind::PendantVertex
                | SevenKind::Conf1
                | SevenKind::Conf2
                | SevenKind::Conf3 => vs.clone(),
                // stored (v1,v2,v3,u1,u2,u3,w); color v's, w, then u's
                SevenKind::Conf4 => vec![vs[0], vs[1], vs[2], vs[6], vs[3], vs[4], vs[5]],
            };
            greedy_in(pc, &order)
                .map_err(|e| internal(format!("pattern {kind:?}: {e}"), trace))?;
            let assignments: Vec<(usize, Color)> = vs
                .iter()
                .map(|&v| (v, pc.color(v).expect("pattern vertex colored")))
                .collect();
            trace.color_config(inst.kind.name(), assignments);
            return Ok(());
        }
        ReducibleKind::SixPrime(kind) => match kind {
            SixPrimeKind::PendantVertex | SixPrimeKind::Adjacent2Vertices => {
                let mut p = pc.clone();
                greedy_in(&mut p, vs)
                    .map_err(|e| internal(format!("pattern {kind:?}: {e}"), trace))?;
                p
            }
            SixPrimeKind::AdjacentClass2Pair => {
                let (v1, v2, u1, u2, u3, u4) = (vs[0], vs[1], vs[2], vs[3], vs[4], vs[5]);
                assert_far(wg, &[(u1, u3), (u1, u4), (u2, u3), (u2, u4)], "class-2 pair", trace)?;
                scripted(pc, v1, u1, &[u3, u4, v2, u2, u1])
                    .or_else(|| exhaustive_over(pc, vs))
                    .ok_or_else(|| internal("class-2 pair: no extension", trace))?
            }
            SixPrimeKind::Class3NearClass23 => {
                let (v1, v2, u1, u2, u3, u4) = (vs[0], vs[1], vs[2], vs[3], vs[4], vs[5]);
                assert_far(wg, &[(u4, u1), (u4, u2), (u4, v1)], "shared 2-vertex pattern", trace)?;
                scripted(pc, v1, u1, &[v2, u4, u3, u2, u1])
                    .or_else(|| exhaustive_over(pc, vs))
                    .ok_or_else(|| internal("shared 2-vertex pattern: no extension", trace))?
            }
            SixPrimeKind::HConfiguration => {
                let (v1, v2, v3) = (vs[0], vs[1], vs[2]);
                let (u1, u2, u3, u4, u5) = (vs[3], vs[4], vs[5], vs[6], vs[7]);
                scripted(pc, v2, u5, &[u1, u2, v1, u3, v3, u4, u5])
                    .or_else(|| exhaustive_over(pc, vs))
                    .ok_or_else(|| internal("H pattern: no extension", trace))?
            }
            SixPrimeKind::YConfiguration => color_y_configuration(pc, wg, inst, trace)?,
        },
    };
    let assignments: Vec<(usize, Color)> = vs
        .iter()
        .map(|&v| (v, done.color(v).expect("pattern vertex colored")))
        .collect();
    trace.color_config(inst.kind.name(), assignments);
    *pc = done;
    Ok(())
}

/// The Y pattern: greedy usually works; when every color clashes, recolor
/// the overlapping shared-2-vertex pattern in the already-built part (its
/// recolorable vertex is the class-1 vertex behind u3), then retry.
fn color_y_configuration(
    pc: &PartialColoring,
    wg: &WorkingGraph,
    inst: &ConfigInstance,
    trace: &mut Trace,
) -> Result<PartialColoring, DischargeError> {
    let vs = &inst.vertices;
    let (v1, u1, u2, u3) = (vs[0], vs[1], vs[2], vs[3]);
    let order = [v1, u1, u2, u3];
    {
        let mut p = pc.clone();
        if greedy_in(&mut p, &order).is_ok() {
            return Ok(p);
        }
    }
    if let Some(p) = exhaustive_over(pc, &order) {
        return Ok(p);
    }
    trace.note("Y pattern blocked; recoloring the overlapping pattern");

    // the already-built part is the current graph minus this pattern
    let mut hg = wg.clone();
    hg.remove(vs);
    for &u in [u3, u1, u2].iter() {
        // the class-1 vertex behind u is a 2-vertex of the built part
        let Some(&m) = wg.g.neighbors(u).iter().find(|&&w| w != v1) else {
            continue;
        };
        if !hg.two(m) {
            continue;
        }
        let nb: Vec<usize> = hg.g.neighbors(m).to_vec();
        if nb.len() != 2 {
            continue;
        }
        for (a, b) in [(nb[0], nb[1]), (nb[1], nb[0])] {
            if hg.class_of(a) != Some(3) || hg.class_of(b).unwrap_or(0) < 2 {
                continue;
            }
            let others: Vec<usize> = hg
                .two_neighbors(a)
                .into_iter()
                .filter(|&x| x != m)
                .collect();
            let Some(u4c) = hg.two_neighbors(b).into_iter().find(|&x| x != m) else {
                continue;
            };
            let cand = ConfigInstance {
                kind: ReducibleKind::SixPrime(SixPrimeKind::Class3NearClass23),
                vertices: vec![a, b, others[0], others[1], m, u4c],
                generation_stamp: 0,
            };
            if !validate(&cand, &hg) {
                continue;
            }
            let Ok((phi, psi)) = recolor_with(&hg, pc, &cand) else {
                continue;
            };
            for alt in [phi, psi] {
                let mut p = pc.clone();
                let mut ok = true;
                for &(v, _) in &alt {
                    if p.is_colored(v) && p.uncolor(v).is_err() {
                        ok = false;
                    }
                }
                for &(v, c) in &alt {
                    if p.set_color(v, c).is_err() {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                let mut q = p.clone();
                if greedy_in(&mut q, &order).is_ok() {
                    trace.color_config("Class3NearClass23", alt.clone());
                    return Ok(q);
                }
                if let Some(q) = exhaustive_over(&p, &order) {
                    trace.color_config("Class3NearClass23", alt.clone());
                    return Ok(q);
                }
            }
        }
    }
    Err(internal(
        "Y pattern: recoloring did not unblock the extension",
        trace,
    ))
}

/// Two extensions of the shared-2-vertex pattern differing at the shared
/// 2-vertex (tuple position 4). `pc` must have the rest of the square
/// properly colored; the six pattern vertices are (re)colored from scratch.
pub fn recolor_u3(
    pc: &PartialColoring,
    inst: &ConfigInstance,
) -> Result<(Vec<(usize, Color)>, Vec<(usize, Color)>), DischargeError> {
    recolor_with(&WorkingGraph::new(pc.base()), pc, inst)
}

fn recolor_with(
    wg: &WorkingGraph,
    pc: &PartialColoring,
    inst: &ConfigInstance,
) -> Result<(Vec<(usize, Color)>, Vec<(usize, Color)>), DischargeError> {
    if inst.kind != ReducibleKind::SixPrime(SixPrimeKind::Class3NearClass23) {
        return Err(DischargeError::InvalidInstance(
            "recoloring requires the shared 2-vertex pattern".into(),
        ));
    }
    if !validate(inst, wg) {
        return Err(DischargeError::InvalidInstance(
            "pattern template does not hold in the graph".into(),
        ));
    }
    let vs = &inst.vertices;
    let u3 = vs[4];
    let rest: Vec<usize> = vec![vs[0], vs[1], vs[5], vs[3], vs[2]];
    let mut base = pc.clone();
    for &v in vs {
        if base.is_colored(v) {
            base.uncolor(v)?;
        }
    }
    let mut found: Vec<Vec<(usize, Color)>> = Vec::new();
    let u3_colors: Vec<Color> = base.remaining(u3).iter().copied().collect();
    for c3 in u3_colors {
        let mut p = base.clone();
        if p.set_color(u3, c3).is_err() {
            continue;
        }
        if let Some(done) = exhaustive_over(&p, &rest) {
            found.push(vs.iter().map(|&v| (v, done.color(v).unwrap())).collect());
            if found.len() == 2 {
                let second = found.pop().unwrap();
                let first = found.pop().unwrap();
                return Ok((first, second));
            }
        }
    }
    Err(internal(
        "shared 2-vertex pattern admits fewer than two extensions",
        &Trace::new(),
    ))
}

fn mode_list_size(mode: Mode) -> usize {
    match mode {
        Mode::Seven => 7,
        Mode::SixPrime => 6,
    }
}

/// Replays the trace in reverse, coloring each pattern as it returns.
pub fn rebuild(
    g: &Graph,
    dtrace: &DecomposeTrace,
    lists: &ListAssignment,
    mode: Mode,
) -> Result<Vec<Color>, DischargeError> {
    rebuild_traced(g, dtrace, lists, mode).map(|(c, _)| c)
}

pub(crate) fn rebuild_traced(
    g: &Graph,
    dtrace: &DecomposeTrace,
    lists: &ListAssignment,
    mode: Mode,
) -> Result<(Vec<Color>, Trace), DischargeError> {
    lists.require_size(mode_list_size(mode))?;
    let mut wg = WorkingGraph::new(g);
    for inst in &dtrace.a {
        if !validate(inst, &wg) {
            return Err(DischargeError::InvalidInstance(
                "trace does not match the graph".into(),
            ));
        }
        wg.remove(&inst.vertices);
    }
    if wg.n_active != 0 {
        return Err(DischargeError::InvalidInstance(
            "trace does not decompose the whole graph".into(),
        ));
    }
    let mut trace = Trace::new();
    for inst in &dtrace.a {
        trace.remove(inst.kind.name(), inst.vertices.clone());
    }
    let mut pc = PartialColoring::new(g, lists);
    for inst in dtrace.a.iter().rev() {
        wg.restore(g, &inst.vertices);
        color_instance(&mut pc, &wg, inst, &mut trace)?;
    }
    let total = pc
        .total()
        .ok_or_else(|| internal("rebuild left vertices uncolored", &trace))?;
    if let Err(v) = crate::coloring::verify_square_coloring(g, lists, &total) {
        return Err(internal(format!("output failed verification: {v:?}"), &trace));
    }
    Ok((total, trace))
}

/// Colors the square from lists of size at least 7 when mad(g) < 14/5.
pub fn solve7(g: &Graph, lists: &ListAssignment) -> Result<Vec<Color>, DischargeError> {
    solve7_traced(g, lists).map(|(c, _)| c)
}

pub fn solve7_traced(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<(Vec<Color>, Trace), DischargeError> {
    let dtrace = decompose(g, Mode::Seven)?;
    rebuild_traced(g, &dtrace, lists, Mode::Seven)
}

/// Colors the square from lists of size at least 6 when girth(g) ≥ 7 and
/// mad(g) < 18/7.
pub fn solve6(g: &Graph, lists: &ListAssignment) -> Result<Vec<Color>, DischargeError> {
    solve6_traced(g, lists).map(|(c, _)| c)
}

pub fn solve6_traced(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<(Vec<Color>, Trace), DischargeError> {
    let dtrace = decompose(g, Mode::SixPrime)?;
    rebuild_traced(g, &dtrace, lists, Mode::SixPrime)
}
