//! List assignments and partial proper colorings of a graph square, plus the
//! greedy machinery every solver builds on: the excess function, greedy
//! extension in a given order, the distance-class coloring that leaves one
//! edge uncolored, the two-excess finisher, and color saving.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

pub type Color = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex {0} is already colored")]
    AlreadyColored(usize),
    #[error("vertex {0} is not colored")]
    NotColored(usize),
    #[error("color {color} not available at vertex {vertex}")]
    ColorUnavailable { vertex: usize, color: Color },
    #[error("greedy coloring stuck at vertex {0}: no remaining color")]
    StuckAt(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("list at vertex {vertex} has {len} colors, need at least {need}")]
    ListTooShort { vertex: usize, len: usize, need: usize },
}

/// Per-vertex finite sets of allowed colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<Color>>) -> Self {
        ListAssignment { lists }
    }

    pub fn from_slices(lists: &[&[Color]]) -> Self {
        ListAssignment {
            lists: lists.iter().map(|l| l.iter().copied().collect()).collect(),
        }
    }

    /// Every vertex gets the list `{1, ..., k}`.
    pub fn uniform(n: usize, k: u32) -> Self {
        let list: BTreeSet<Color> = (1..=k).collect();
        ListAssignment {
            lists: vec![list; n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &BTreeSet<Color> {
        &self.lists[v]
    }

    pub fn min_list_size(&self) -> usize {
        self.lists.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    /// Errors with the first offending vertex if some list is below `need`.
    pub fn require_size(&self, need: usize) -> Result<(), ColoringError> {
        for (v, l) in self.lists.iter().enumerate() {
            if l.len() < need {
                return Err(ColoringError::ListTooShort {
                    vertex: v,
                    len: l.len(),
                    need,
                });
            }
        }
        Ok(())
    }
}

/// A sequence of uncolored vertices, each exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionOrder(pub Vec<usize>);

/// A partial proper coloring of `base²` from lists.
///
/// Maintains, for each vertex, the remaining list: the original list minus
/// the colors of its colored square-neighbors.
#[derive(Debug, Clone)]
pub struct PartialColoring {
    base: Graph,
    square: Graph,
    lists: ListAssignment,
    color: Vec<Option<Color>>,
    remaining: Vec<BTreeSet<Color>>,
}

impl PartialColoring {
    pub fn new(base: &Graph, lists: &ListAssignment) -> Self {
        assert_eq!(base.n(), lists.len(), "one list per vertex");
        let square = base.square();
        PartialColoring {
            base: base.clone(),
            square,
            lists: lists.clone(),
            color: vec![None; base.n()],
            remaining: (0..base.n()).map(|v| lists.list(v).clone()).collect(),
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn square(&self) -> &Graph {
        &self.square
    }

    pub fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        self.color[v]
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.color[v].is_some()
    }

    pub fn remaining(&self, v: usize) -> &BTreeSet<Color> {
        &self.remaining[v]
    }

    pub fn uncolored(&self) -> Vec<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v].is_none())
            .collect()
    }

    pub fn uncolored_square_neighbors(&self, v: usize) -> usize {
        self.square
            .neighbors(v)
            .iter()
            .filter(|&&u| self.color[u].is_none())
            .count()
    }

    /// `1 + |remaining(v)| - #uncolored square-neighbors of v`.
    pub fn excess(&self, v: usize) -> Result<i64, ColoringError> {
        if self.color[v].is_some() {
            return Err(ColoringError::AlreadyColored(v));
        }
        Ok(1 + self.remaining[v].len() as i64
            - self.uncolored_square_neighbors(v) as i64)
    }

    /// Assigns `c` to `v`; `c` must be in `remaining(v)`, which enforces both
    /// list membership and properness against colored square-neighbors.
    pub fn set_color(&mut self, v: usize, c: Color) -> Result<(), ColoringError> {
        if self.color[v].is_some() {
            return Err(ColoringError::AlreadyColored(v));
        }
        if !self.remaining[v].contains(&c) {
            return Err(ColoringError::ColorUnavailable { vertex: v, color: c });
        }
        self.color[v] = Some(c);
        for &u in self.square.neighbors(v) {
            self.remaining[u].remove(&c);
        }
        self.debug_check(v);
        Ok(())
    }

    /// Colors `v` with the smallest remaining color.
    pub fn color_min(&mut self, v: usize) -> Result<Color, ColoringError> {
        if self.color[v].is_some() {
            return Err(ColoringError::AlreadyColored(v));
        }
        let c = *self
            .remaining[v]
            .iter()
            .next()
            .ok_or(ColoringError::StuckAt(v))?;
        self.set_color(v, c)?;
        Ok(c)
    }

    /// Removes the color at `v` and restores remaining lists.
    pub fn uncolor(&mut self, v: usize) -> Result<(), ColoringError> {
        if self.color[v].is_none() {
            return Err(ColoringError::NotColored(v));
        }
        self.color[v] = None;
        self.recompute_remaining(v);
        let nbrs: Vec<usize> = self.square.neighbors(v).to_vec();
        for u in nbrs {
            self.recompute_remaining(u);
        }
        self.debug_check(v);
        Ok(())
    }

    fn recompute_remaining(&mut self, v: usize) {
        let mut rem = self.lists.list(v).clone();
        for &u in self.square.neighbors(v) {
            if let Some(c) = self.color[u] {
                rem.remove(&c);
            }
        }
        self.remaining[v] = rem;
    }

    /// Audits the square-neighborhood touched by a change at `root`; a
    /// single assignment can only introduce drift there, and a global audit
    /// here would make coloring quadratic.
    #[cfg(debug_assertions)]
    fn debug_check(&self, root: usize) {
        let mut affected = vec![root];
        affected.extend_from_slice(self.square.neighbors(root));
        for &v in &affected {
            let mut rem = self.lists.list(v).clone();
            for &u in self.square.neighbors(v) {
                if let Some(c) = self.color[u] {
                    rem.remove(&c);
                }
            }
            debug_assert_eq!(rem, self.remaining[v], "remaining-list drift at {v}");
            if let Some(c) = self.color[v] {
                debug_assert!(self.lists.list(v).contains(&c));
                for &u in self.square.neighbors(v) {
                    debug_assert_ne!(Some(c), self.color[u], "square clash {v}-{u}");
                }
            }
        }
    }

    #[cfg(not(debug_assertions))]
    fn debug_check(&self, _root: usize) {}

    /// Greedily colors each vertex of `order` with its smallest remaining
    /// color. Atomic: on failure the original coloring is unchanged and the
    /// first stuck vertex is reported.
    pub fn greedy_extend(&self, order: &ExtensionOrder) -> Result<Self, ColoringError> {
        let mut pc = self.clone();
        for &v in &order.0 {
            pc.color_min(v)?;
        }
        Ok(pc)
    }

    /// Finishes a partial coloring whose uncolored vertices can be ordered so
    /// that every vertex except the final two is succeeded by at least two of
    /// its square-neighbors, with the final pair `(u, v)` having excess at
    /// least 1 and 2 respectively.
    pub fn finish_two_excess(
        &self,
        u: usize,
        v: usize,
        order: &ExtensionOrder,
    ) -> Result<Self, ColoringError> {
        let fail = |s: &str| Err(ColoringError::PreconditionViolated(s.to_string()));
        if self.is_colored(u) || self.is_colored(v) {
            return fail("u and v must be uncolored");
        }
        if !self.square.has_edge(u, v) {
            return fail("u and v must be adjacent in the square");
        }
        if self.excess(u)? < 1 {
            return fail("excess(u) >= 1");
        }
        if self.excess(v)? < 2 {
            return fail("excess(v) >= 2");
        }
        let uncolored = self.uncolored();
        let mut expected: Vec<usize> = order.0.clone();
        expected.sort_unstable();
        let mut actual = uncolored.clone();
        actual.sort_unstable();
        if expected != actual {
            return fail("order must contain each uncolored vertex exactly once");
        }
        let k = order.0.len();
        if k < 2 || order.0[k - 2] != u || order.0[k - 1] != v {
            return fail("order must end with u then v");
        }
        let mut pos = vec![usize::MAX; self.color.len()];
        for (i, &w) in order.0.iter().enumerate() {
            pos[w] = i;
        }
        for (i, &w) in order.0.iter().enumerate().take(k - 2) {
            let later = self
                .square
                .neighbors(w)
                .iter()
                .filter(|&&x| pos[x] != usize::MAX && pos[x] > i)
                .count();
            if later < 2 {
                return fail("every vertex except u, v must be succeeded by >= 2 square-neighbors");
            }
        }
        self.greedy_extend(order)
    }

    /// Colors two non-adjacent square-neighbors `x`, `y` of `v` while
    /// reducing `remaining(v)` by at most one: either a common color, or a
    /// color outside `remaining(v)` on one of them.
    pub fn pick_saving_pair(
        &self,
        x: usize,
        y: usize,
        v: usize,
    ) -> Result<(Color, Color), ColoringError> {
        let fail = |s: &str| Err(ColoringError::PreconditionViolated(s.to_string()));
        if self.is_colored(x) || self.is_colored(y) {
            return fail("x and y must be uncolored");
        }
        if !self.square.has_edge(x, v) || !self.square.has_edge(y, v) {
            return fail("x and y must be square-neighbors of v");
        }
        if self.square.has_edge(x, y) {
            return fail("x and y must not be square-adjacent");
        }
        let rx = &self.remaining[x];
        let ry = &self.remaining[y];
        let rv = &self.remaining[v];
        if let Some(&c) = rx.intersection(ry).next() {
            return Ok((c, c));
        }
        if !rx.is_empty() && !ry.is_empty() {
            if let Some(&c) = rx.difference(rv).next() {
                let cy = *ry.iter().next().unwrap();
                return Ok((c, cy));
            }
            if let Some(&c) = ry.difference(rv).next() {
                let cx = *rx.iter().next().unwrap();
                return Ok((cx, c));
            }
        }
        // No common color and both lists inside remaining(v): disjointness
        // forces |rx| + |ry| <= |rv|, i.e. the size precondition fails.
        fail("|remaining(x)| + |remaining(y)| must exceed |remaining(v)| (no saving pair exists)")
    }

    /// Total coloring if every vertex is colored.
    pub fn total(&self) -> Option<Vec<Color>> {
        self.color.iter().copied().collect()
    }
}

/// Orders all of `g`'s vertices by decreasing distance to edge `(u, v)`,
/// ending with `u` then `v`. Within a distance class, ascending vertex id.
pub fn order_decreasing_distance_to_edge(g: &Graph, u: usize, v: usize) -> ExtensionOrder {
    let dist = g.bfs_distances_multi(&[u, v]);
    let mut rest: Vec<usize> = g.vertices().filter(|&w| w != u && w != v).collect();
    rest.sort_by(|&a, &b| dist[b].cmp(&dist[a]).then(a.cmp(&b)));
    rest.push(u);
    rest.push(v);
    ExtensionOrder(rest)
}

/// Colors `square(g)` leaving exactly `u` and `v` uncolored, greedily in
/// order of decreasing distance class from the edge `uv`.
pub fn color_all_but_edge(
    g: &Graph,
    lists: &ListAssignment,
    u: usize,
    v: usize,
) -> Result<PartialColoring, ColoringError> {
    if !g.has_edge(u, v) {
        return Err(ColoringError::NotAnEdge(u, v));
    }
    if !g.is_connected() {
        return Err(ColoringError::Disconnected);
    }
    lists.require_size(8)?;
    let pc = PartialColoring::new(g, lists);
    let mut order = order_decreasing_distance_to_edge(g, u, v);
    order.0.truncate(order.0.len() - 2); // leave u, v uncolored
    pc.greedy_extend(&order)
}

/// Colors `square(g)` except the vertices of `keep`, greedily by decreasing
/// distance class from the edge `uv` (which must lie inside `keep`). This is
/// the general form the structural lemmas use: a connected kept core around
/// an edge never starves the greedy pass.
pub fn color_all_except(
    g: &Graph,
    lists: &ListAssignment,
    keep: &[usize],
    u: usize,
    v: usize,
) -> Result<PartialColoring, ColoringError> {
    if !g.has_edge(u, v) {
        return Err(ColoringError::NotAnEdge(u, v));
    }
    if !g.is_connected() {
        return Err(ColoringError::Disconnected);
    }
    lists.require_size(8)?;
    let kept: BTreeSet<usize> = keep.iter().copied().collect();
    assert!(kept.contains(&u) && kept.contains(&v), "anchor edge inside keep");
    let pc = PartialColoring::new(g, lists);
    let dist = g.bfs_distances_multi(&[u, v]);
    let mut rest: Vec<usize> = g.vertices().filter(|w| !kept.contains(w)).collect();
    rest.sort_by(|&a, &b| dist[b].cmp(&dist[a]).then(a.cmp(&b)));
    pc.greedy_extend(&ExtensionOrder(rest))
}

/// Violations reported by the total-coloring checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotInList { vertex: usize, color: Color },
    Clash { u: usize, v: usize, color: Color },
}

/// Checks a total coloring of `square(g)`: every color drawn from its list,
/// no equal colors at distance 1 or 2 in `g`.
pub fn verify_square_coloring(
    g: &Graph,
    lists: &ListAssignment,
    coloring: &[Color],
) -> Result<(), Violation> {
    assert_eq!(coloring.len(), g.n(), "coloring must be total");
    for v in g.vertices() {
        if !lists.list(v).contains(&coloring[v]) {
            return Err(Violation::NotInList {
                vertex: v,
                color: coloring[v],
            });
        }
    }
    let sq = g.square();
    for (u, v) in sq.edges() {
        if coloring[u] == coloring[v] {
            return Err(Violation::Clash {
                u,
                v,
                color: coloring[u],
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::petersen_graph;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(&edges, None, true).unwrap()
    }

    #[test]
    fn excess_formula() {
        let p = petersen_graph();
        let lists = ListAssignment::uniform(10, 8);
        let pc = PartialColoring::new(&p, &lists);
        // 3-regular girth-5: |N²(v)| = 9, so excess = 1 + 8 - 9 = 0
        assert_eq!(pc.excess(0).unwrap(), 0);
    }

    #[test]
    fn excess_on_two_vertex_and_triangle() {
        // path a-b-c plus extra: 2-vertex in subcubic graph has excess >= 3
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 3)], None, true).unwrap();
        let lists = ListAssignment::uniform(4, 8);
        let pc = PartialColoring::new(&g, &lists);
        assert!(pc.excess(1).unwrap() >= 3);

        let tri = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0), (0, 3)], None, true).unwrap();
        let pc = PartialColoring::new(&tri, &ListAssignment::uniform(4, 8));
        assert!(pc.excess(1).unwrap() >= 2);
    }

    #[test]
    fn excess_errors_on_colored_vertex() {
        let g = cycle(5);
        let lists = ListAssignment::uniform(5, 8);
        let mut pc = PartialColoring::new(&g, &lists);
        pc.set_color(0, 1).unwrap();
        assert_eq!(pc.excess(0), Err(ColoringError::AlreadyColored(0)));
    }

    #[test]
    fn greedy_single_step_and_stuck() {
        let g = cycle(5);
        let mut lists = ListAssignment::uniform(5, 8);
        let pc = PartialColoring::new(&g, &lists);
        let done = pc.greedy_extend(&ExtensionOrder(vec![3])).unwrap();
        assert_eq!(done.color(3), Some(1));

        // empty list: stuck immediately, atomically
        lists = ListAssignment::new(
            (0..5)
                .map(|v| {
                    if v == 2 {
                        BTreeSet::new()
                    } else {
                        (1..=8).collect()
                    }
                })
                .collect(),
        );
        let pc = PartialColoring::new(&g, &lists);
        let err = pc.greedy_extend(&ExtensionOrder(vec![0, 2])).unwrap_err();
        assert_eq!(err, ColoringError::StuckAt(2));
        assert!(!pc.is_colored(0));
    }

    #[test]
    fn color_all_but_edge_on_petersen_and_c7() {
        for g in [petersen_graph(), cycle(7)] {
            let lists = ListAssignment::uniform(g.n(), 8);
            let (u, v) = g.edges()[0];
            let pc = color_all_but_edge(&g, &lists, u, v).unwrap();
            let unc = pc.uncolored();
            assert_eq!(unc, {
                let mut e = vec![u, v];
                e.sort_unstable();
                e
            });
        }
    }

    #[test]
    fn color_all_but_edge_rejects_disconnected() {
        let two_triangles =
            Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], None, true)
                .unwrap();
        let lists = ListAssignment::uniform(6, 8);
        assert_eq!(
            color_all_but_edge(&two_triangles, &lists, 0, 1).unwrap_err(),
            ColoringError::Disconnected
        );
        assert_eq!(
            color_all_but_edge(&cycle(5), &lists, 0, 2).unwrap_err(),
            ColoringError::NotAnEdge(0, 2)
        );
    }

    #[test]
    fn finish_two_excess_full_graph_from_two_vertex() {
        // subcubic graph with a 2-vertex u: the whole square is colorable
        let g = cycle(9);
        let lists = ListAssignment::uniform(9, 8);
        let pc = PartialColoring::new(&g, &lists);
        let order = order_decreasing_distance_to_edge(&g, 1, 0);
        let done = pc.finish_two_excess(1, 0, &order).unwrap();
        let total = done.total().unwrap();
        assert_eq!(verify_square_coloring(&g, &lists, &total), Ok(()));
    }

    #[test]
    fn finish_two_excess_rejects_bad_preconditions() {
        let g = petersen_graph();
        let lists = ListAssignment::uniform(10, 8);
        let pc = PartialColoring::new(&g, &lists);
        // 3-regular girth 5: excess 0 everywhere, must be rejected
        let order = order_decreasing_distance_to_edge(&g, 0, 1);
        assert!(matches!(
            pc.finish_two_excess(0, 1, &order),
            Err(ColoringError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn saving_pair_branches() {
        // the 5-path 0-1-2-3-4 with x=0, y=4, v=2: both x and y are
        // square-adjacent to v but not to each other
        let path = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 3), (3, 4)], None, true).unwrap();
        let mk2 = |l0: &[Color], l4: &[Color], l2: &[Color]| {
            let mut lists: Vec<BTreeSet<Color>> =
                (0..5).map(|_| (1..=8).collect()).collect();
            lists[0] = l0.iter().copied().collect();
            lists[4] = l4.iter().copied().collect();
            lists[2] = l2.iter().copied().collect();
            ListAssignment::new(lists)
        };
        // common-color branch
        let lists = mk2(&[1, 2], &[1, 3], &[1, 2, 3, 4]);
        let pc = PartialColoring::new(&path, &lists);
        assert_eq!(pc.pick_saving_pair(0, 4, 2).unwrap(), (1, 1));
        // outside-color branch
        let lists = mk2(&[5], &[6], &[1, 2]);
        let pc = PartialColoring::new(&path, &lists);
        let (c1, c2) = pc.pick_saving_pair(0, 4, 2).unwrap();
        assert_eq!((c1, c2), (5, 6));
        // size contract
        let lists = mk2(&[1], &[2], &[1, 2, 3]);
        let pc = PartialColoring::new(&path, &lists);
        assert!(matches!(
            pc.pick_saving_pair(0, 4, 2),
            Err(ColoringError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn saving_pair_postcondition_randomized() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let path = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 3), (3, 4)], None, true).unwrap();
        for _ in 0..500 {
            let rand_list = |rng: &mut rand_chacha::ChaCha8Rng, max: usize| {
                let k = rng.gen_range(1..=max);
                let mut s = BTreeSet::new();
                while s.len() < k {
                    s.insert(rng.gen_range(1..=12) as Color);
                }
                s
            };
            let mut lists: Vec<BTreeSet<Color>> =
                (0..5).map(|_| (1..=12).collect()).collect();
            lists[0] = rand_list(&mut rng, 4);
            lists[4] = rand_list(&mut rng, 4);
            lists[2] = rand_list(&mut rng, 6);
            let la = ListAssignment::new(lists);
            let pc = PartialColoring::new(&path, &la);
            let rv = pc.remaining(2).len();
            if pc.remaining(0).len() + pc.remaining(4).len() <= rv {
                continue;
            }
            let (c1, c2) = pc.pick_saving_pair(0, 4, 2).unwrap();
            let mut kept = pc.remaining(2).clone();
            kept.remove(&c1);
            kept.remove(&c2);
            assert!(kept.len() >= rv - 1, "saving pair must cost at most one color");
            assert!(pc.remaining(0).contains(&c1));
            assert!(pc.remaining(4).contains(&c2));
        }
    }

    #[test]
    fn verify_square_coloring_cases() {
        let g = cycle(6);
        let lists = ListAssignment::uniform(6, 3);
        assert_eq!(verify_square_coloring(&g, &lists, &[1, 2, 3, 1, 2, 3]), Ok(()));
        // distance-2 clash
        assert!(matches!(
            verify_square_coloring(&g, &lists, &[1, 2, 1, 2, 3, 3]),
            Err(Violation::Clash { .. })
        ));
        // color outside list
        assert!(matches!(
            verify_square_coloring(&g, &lists, &[4, 2, 3, 1, 2, 3]),
            Err(Violation::NotInList { vertex: 0, .. })
        ));
    }

    #[test]
    fn remaining_lists_consistent_after_mutations() {
        let g = petersen_graph();
        let lists = ListAssignment::uniform(10, 8);
        let mut pc = PartialColoring::new(&g, &lists);
        pc.set_color(0, 3).unwrap();
        pc.set_color(7, 3).unwrap_err(); // 7 is square-adjacent to 0
        pc.set_color(2, 3).unwrap_err(); // distance 2 from 0
        pc.uncolor(0).unwrap();
        assert!(pc.remaining(7).contains(&3));
        assert_eq!(pc.remaining(0).len(), 8);
    }
}
