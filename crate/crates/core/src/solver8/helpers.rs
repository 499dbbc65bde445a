//! Shared machinery for the structural coloring routines: bounded
//! deterministic searches for "choose colors such that ..." steps, order
//! builders, and a small exhaustive finisher for terminal cores.

use crate::coloring::{Color, ExtensionOrder, PartialColoring};
use crate::graph::Graph;

/// A requirement checked after tentatively placing colors.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Constraint {
    /// `|remaining(v)| >= bound`
    MinRemaining(usize, usize),
    /// `excess(v) >= bound` (v must still be uncolored)
    MinExcess(usize, i64),
}

pub(crate) fn check(pc: &PartialColoring, cons: &[Constraint]) -> bool {
    cons.iter().all(|c| match *c {
        Constraint::MinRemaining(v, b) => pc.remaining(v).len() >= b,
        Constraint::MinExcess(v, b) => pc.excess(v).map(|e| e >= b).unwrap_or(false),
    })
}

/// Smallest (lexicographic) pair of colors for `x` then `y` satisfying all
/// constraints afterwards. Equal colors are allowed automatically when `x`
/// and `y` are not square-adjacent.
pub(crate) fn choose_pair(
    pc: &PartialColoring,
    x: usize,
    y: usize,
    cons: &[Constraint],
) -> Option<(PartialColoring, Color, Color)> {
    for &c1 in pc.remaining(x) {
        let mut p1 = pc.clone();
        p1.set_color(x, c1).ok()?;
        let candidates: Vec<Color> = p1.remaining(y).iter().copied().collect();
        for c2 in candidates {
            let mut p2 = p1.clone();
            if p2.set_color(y, c2).is_err() {
                continue;
            }
            if check(&p2, cons) {
                return Some((p2, c1, c2));
            }
        }
    }
    None
}

/// Like [`choose_pair`], but instead of returning the first pair meeting the
/// constraints, runs `rest` on each candidate (lexicographic order) and
/// returns its first success. Used where the proof retries a choice when a
/// later step fails.
pub(crate) fn for_each_pair<F>(
    pc: &PartialColoring,
    x: usize,
    y: usize,
    cons: &[Constraint],
    mut rest: F,
) -> Option<PartialColoring>
where
    F: FnMut(&PartialColoring, Color, Color) -> Option<PartialColoring>,
{
    for &c1 in pc.remaining(x) {
        let mut p1 = pc.clone();
        if p1.set_color(x, c1).is_err() {
            continue;
        }
        let candidates: Vec<Color> = p1.remaining(y).iter().copied().collect();
        for c2 in candidates {
            let mut p2 = p1.clone();
            if p2.set_color(y, c2).is_err() {
                continue;
            }
            if check(&p2, cons) {
                if let Some(done) = rest(&p2, c1, c2) {
                    return Some(done);
                }
            }
        }
    }
    None
}

/// The colors currently available at both `x` and `y`, ascending.
pub(crate) fn common_colors(pc: &PartialColoring, x: usize, y: usize) -> Vec<Color> {
    pc.remaining(x)
        .intersection(pc.remaining(y))
        .copied()
        .collect()
}

/// Orders all uncolored vertices by decreasing BFS distance (within the
/// subgraph they induce in the base graph) from the pair `{a, b}`, ending
/// with `a` then `b`. Ties broken by ascending id; vertices unreachable
/// within the subgraph come first.
pub(crate) fn order_within_uncolored(
    pc: &PartialColoring,
    a: usize,
    b: usize,
) -> ExtensionOrder {
    let g: &Graph = pc.base();
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in [a, b] {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !pc.is_colored(w) && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut rest: Vec<usize> = pc
        .uncolored()
        .into_iter()
        .filter(|&v| v != a && v != b)
        .collect();
    rest.sort_by(|&p, &q| dist[q].cmp(&dist[p]).then(p.cmp(&q)));
    rest.push(a);
    rest.push(b);
    ExtensionOrder(rest)
}

/// Finishes with the two-excess lemma using the within-subgraph order.
pub(crate) fn finish_pair(
    pc: &PartialColoring,
    u: usize,
    v: usize,
) -> Result<PartialColoring, crate::coloring::ColoringError> {
    let order = order_within_uncolored(pc, u, v);
    pc.finish_two_excess(u, v, &order)
}

/// Exhaustively colors the remaining (few) uncolored vertices; smallest
/// colors first, vertices in ascending id order. Intended for terminal cores
/// of at most ~6 vertices.
pub(crate) fn finish_exhaustive(pc: &PartialColoring) -> Option<PartialColoring> {
    let uncolored = pc.uncolored();
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
    go(pc, &uncolored)
}

/// Cyclic index helper for routines that work around a cycle `v_1..v_k`
/// with off-cycle neighbors `u_1..u_k`, supporting both orientations.
#[derive(Clone, Copy)]
pub(crate) struct CycleFrame<'a> {
    pub cycle: &'a [usize],
    pub off: &'a [usize],
    pub base: i64,
    pub dir: i64,
}

impl<'a> CycleFrame<'a> {
    pub fn new(cycle: &'a [usize], off: &'a [usize]) -> Self {
        CycleFrame {
            cycle,
            off,
            base: 0,
            dir: 1,
        }
    }

    pub fn k(&self) -> usize {
        self.cycle.len()
    }

    fn idx(&self, offset: i64) -> usize {
        let k = self.cycle.len() as i64;
        (((self.base + self.dir * offset) % k) + k) as usize % k as usize
    }

    /// On-cycle vertex at signed offset from the frame origin.
    pub fn v(&self, offset: i64) -> usize {
        self.cycle[self.idx(offset)]
    }

    /// Off-cycle neighbor of `v(offset)`.
    pub fn u(&self, offset: i64) -> usize {
        self.off[self.idx(offset)]
    }

    /// Same cycle viewed from `origin`, optionally reversed.
    pub fn at(&self, origin: i64, reversed: bool) -> Self {
        CycleFrame {
            cycle: self.cycle,
            off: self.off,
            base: self.idx(origin) as i64,
            dir: if reversed { -self.dir } else { self.dir },
        }
    }
}
