//! Templates for the removable local patterns: matching, revalidation, and
//! the bookkeeping graph that the decompose and rebuild phases mutate.

use crate::graph::Graph;

/// Pattern kinds for the 7-list solver (no girth assumption).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SevenKind {
    /// A vertex of degree at most 1 (isolated vertices included).
    PendantVertex,
    /// Two adjacent 2-vertices.
    Conf1,
    /// A 3-vertex with two 2-vertex neighbors.
    Conf2,
    /// Two adjacent 3-vertices, each with its own 2-vertex neighbor.
    Conf3,
    /// A 3-vertex whose three 3-vertex neighbors each have their own
    /// 2-vertex neighbor.
    Conf4,
}

/// Pattern kinds for the 6-list solver (girth at least 7).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SixPrimeKind {
    PendantVertex,
    /// Two adjacent 2-vertices.
    Adjacent2Vertices,
    /// Two adjacent class-2 vertices with their four 2-vertex neighbors.
    AdjacentClass2Pair,
    /// A class-3 vertex sharing a 2-vertex with a class-2-or-3 vertex.
    Class3NearClass23,
    /// A class-1 vertex adjacent to two class-2 vertices.
    HConfiguration,
    /// A class-3 vertex with, through one of its 2-vertices, a class-1
    /// vertex that is adjacent to a class-2 vertex and a class-1 vertex.
    YConfiguration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ReducibleKind {
    Seven(SevenKind),
    SixPrime(SixPrimeKind),
}

impl ReducibleKind {
    /// Number of vertices in the kind's template tuple.
    pub fn arity(&self) -> usize {
        match self {
            ReducibleKind::Seven(k) => match k {
                SevenKind::PendantVertex => 1,
                SevenKind::Conf1 => 2,
                SevenKind::Conf2 => 3,
                SevenKind::Conf3 => 4,
                SevenKind::Conf4 => 7,
            },
            ReducibleKind::SixPrime(k) => match k {
                SixPrimeKind::PendantVertex => 1,
                SixPrimeKind::Adjacent2Vertices => 2,
                SixPrimeKind::AdjacentClass2Pair => 6,
                SixPrimeKind::Class3NearClass23 => 6,
                SixPrimeKind::HConfiguration => 8,
                SixPrimeKind::YConfiguration => 4,
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            ReducibleKind::Seven(k) => format!("{k:?}"),
            ReducibleKind::SixPrime(k) => format!("{k:?}"),
        }
    }
}

/// A concrete occurrence of a pattern. The vertex tuple follows the kind's
/// template order:
/// Conf1 (u1,u2); Conf2 (v,u1,u2); Conf3 (v1,v2,u1,u2);
/// Conf4 (v1,v2,v3,u1,u2,u3,w); Adjacent2Vertices (v1,v2);
/// AdjacentClass2Pair (v1,v2,u1,u2,u3,u4) with u1,u2 on v1;
/// Class3NearClass23 (v1,v2,u1,u2,u3,u4) with u3 the shared 2-vertex;
/// HConfiguration (v1,v2,v3,u1,u2,u3,u4,u5) with v2 the middle vertex;
/// YConfiguration (v1,u1,u2,u3) with u3 leading to the class-1 vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigInstance {
    pub kind: ReducibleKind,
    pub vertices: Vec<usize>,
    pub generation_stamp: u64,
}

/// The mutable graph the decompose/rebuild phases work on: the original
/// graph with some vertices deactivated (all their edges removed).
#[derive(Clone)]
pub(crate) struct WorkingGraph {
    pub g: Graph,
    pub active: Vec<bool>,
    pub n_active: usize,
}

impl WorkingGraph {
    pub fn new(g: &Graph) -> Self {
        WorkingGraph {
            g: g.clone(),
            active: vec![true; g.n()],
            n_active: g.n(),
        }
    }

    pub fn is_active(&self, v: usize) -> bool {
        self.active[v]
    }

    pub fn deg(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    pub fn two(&self, v: usize) -> bool {
        self.active[v] && self.g.degree(v) == 2
    }

    pub fn three(&self, v: usize) -> bool {
        self.active[v] && self.g.degree(v) == 3
    }

    /// For a 3-vertex, the number of its degree-2 neighbors.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        if !self.three(v) {
            return None;
        }
        Some(
            self.g
                .neighbors(v)
                .iter()
                .filter(|&&w| self.two(w))
                .count(),
        )
    }

    /// Degree-2 neighbors of `v`, ascending.
    pub fn two_neighbors(&self, v: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.two(w))
            .collect()
    }

    /// Degree-3 neighbors of `v`, ascending.
    pub fn three_neighbors(&self, v: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.three(w))
            .collect()
    }

    pub fn remove(&mut self, verts: &[usize]) {
        for &v in verts {
            debug_assert!(self.active[v]);
            let nbrs: Vec<usize> = self.g.neighbors(v).to_vec();
            for w in nbrs {
                self.g.remove_edge(v, w);
            }
            self.active[v] = false;
            self.n_active -= 1;
        }
    }

    /// Re-adds `verts` with every original edge whose other endpoint is
    /// active (or also being restored).
    pub fn restore(&mut self, original: &Graph, verts: &[usize]) {
        for &v in verts {
            debug_assert!(!self.active[v]);
            self.active[v] = true;
            self.n_active += 1;
        }
        for &v in verts {
            for &w in original.neighbors(v) {
                if self.active[w] && !self.g.has_edge(v, w) {
                    self.g
                        .add_edge(v, w)
                        .expect("restoring an original edge");
                }
            }
        }
    }

    pub fn active_vertices(&self) -> Vec<usize> {
        (0..self.active.len()).filter(|&v| self.active[v]).collect()
    }
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

fn all_distinct(vs: &[usize]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

fn neighbor_set_is(wg: &WorkingGraph, v: usize, expected: &[usize]) -> bool {
    let mut e = expected.to_vec();
    e.sort_unstable();
    wg.g.neighbors(v) == e.as_slice()
}

/// All instances of `kind` whose canonical anchor is `v`, in deterministic
/// (lexicographic) order. Anchors: the lower vertex for the symmetric pairs,
/// `v` for Conf2, `v1` for Conf3/Conf4-style tuples (Conf4 anchors at `w`),
/// the middle vertex for the H pattern.
pub(crate) fn instances_at(wg: &WorkingGraph, v: usize, kind: ReducibleKind) -> Vec<ConfigInstance> {
    let mut out = Vec::new();
    if !wg.is_active(v) {
        return out;
    }
    let mk = |vertices: Vec<usize>| ConfigInstance {
        kind,
        vertices,
        generation_stamp: 0,
    };
    match kind {
        ReducibleKind::Seven(SevenKind::PendantVertex)
        | ReducibleKind::SixPrime(SixPrimeKind::PendantVertex) => {
            if wg.deg(v) <= 1 {
                out.push(mk(vec![v]));
            }
        }
        ReducibleKind::Seven(SevenKind::Conf1)
        | ReducibleKind::SixPrime(SixPrimeKind::Adjacent2Vertices) => {
            if wg.two(v) {
                for w in wg.two_neighbors(v) {
                    if v < w {
                        out.push(mk(vec![v, w]));
                    }
                }
            }
        }
        ReducibleKind::Seven(SevenKind::Conf2) => {
            if wg.three(v) {
                let t = wg.two_neighbors(v);
                for i in 0..t.len() {
                    for j in (i + 1)..t.len() {
                        out.push(mk(vec![v, t[i], t[j]]));
                    }
                }
            }
        }
        ReducibleKind::Seven(SevenKind::Conf3) => {
            if wg.three(v) {
                for v2 in wg.three_neighbors(v) {
                    if v >= v2 {
                        continue;
                    }
                    for u1 in wg.two_neighbors(v) {
                        for u2 in wg.two_neighbors(v2) {
                            if u1 != u2 {
                                out.push(mk(vec![v, v2, u1, u2]));
                            }
                        }
                    }
                }
            }
        }
        ReducibleKind::Seven(SevenKind::Conf4) => {
            if wg.three(v) {
                let nb = wg.g.neighbors(v).to_vec();
                if nb.iter().all(|&w| wg.three(w)) {
                    let (a, b, c) = (nb[0], nb[1], nb[2]);
                    for u1 in wg.two_neighbors(a) {
                        for u2 in wg.two_neighbors(b) {
                            if u2 == u1 {
                                continue;
                            }
                            for u3 in wg.two_neighbors(c) {
                                if u3 != u1 && u3 != u2 {
                                    out.push(mk(vec![a, b, c, u1, u2, u3, v]));
                                }
                            }
                        }
                    }
                }
            }
        }
        ReducibleKind::SixPrime(SixPrimeKind::AdjacentClass2Pair) => {
            if wg.class_of(v) == Some(2) {
                for v2 in wg.three_neighbors(v) {
                    if v >= v2 || wg.class_of(v2) != Some(2) {
                        continue;
                    }
                    let a = wg.two_neighbors(v);
                    let b = wg.two_neighbors(v2);
                    let tuple = vec![v, v2, a[0], a[1], b[0], b[1]];
                    if all_distinct(&tuple) {
                        out.push(mk(tuple));
                    }
                }
            }
        }
        ReducibleKind::SixPrime(SixPrimeKind::Class3NearClass23) => {
            if wg.class_of(v) == Some(3) {
                let us = wg.two_neighbors(v);
                for &u3 in &us {
                    let Some(&v2) = wg.g.neighbors(u3).iter().find(|&&w| w != v) else {
                        continue;
                    };
                    if v2 == v || !wg.three(v2) || wg.class_of(v2).unwrap_or(0) < 2 {
                        continue;
                    }
                    let others: Vec<usize> =
                        us.iter().copied().filter(|&u| u != u3).collect();
                    for u4 in wg.two_neighbors(v2) {
                        if u4 == u3 || us.contains(&u4) {
                            continue;
                        }
                        let tuple = vec![v, v2, others[0], others[1], u3, u4];
                        if all_distinct(&tuple) {
                            out.push(mk(tuple));
                        }
                    }
                }
            }
        }
        ReducibleKind::SixPrime(SixPrimeKind::HConfiguration) => {
            if wg.class_of(v) == Some(1) {
                let t3 = wg.three_neighbors(v);
                let t2 = wg.two_neighbors(v);
                if t3.len() == 2
                    && t2.len() == 1
                    && wg.class_of(t3[0]) == Some(2)
                    && wg.class_of(t3[1]) == Some(2)
                {
                    let a = wg.two_neighbors(t3[0]);
                    let b = wg.two_neighbors(t3[1]);
                    let tuple = vec![t3[0], v, t3[1], a[0], a[1], b[0], b[1], t2[0]];
                    if all_distinct(&tuple) {
                        out.push(mk(tuple));
                    }
                }
            }
        }
        ReducibleKind::SixPrime(SixPrimeKind::YConfiguration) => {
            if wg.class_of(v) == Some(3) {
                let us = wg.two_neighbors(v);
                for &u in &us {
                    let Some(&v2) = wg.g.neighbors(u).iter().find(|&&w| w != v) else {
                        continue;
                    };
                    if v2 == v || wg.class_of(v2) != Some(1) {
                        continue;
                    }
                    let t3 = wg.three_neighbors(v2);
                    if t3.len() != 2 {
                        continue;
                    }
                    let classes = [wg.class_of(t3[0]), wg.class_of(t3[1])];
                    let ok = (classes[0] == Some(2) && classes[1] == Some(1))
                        || (classes[0] == Some(1) && classes[1] == Some(2));
                    if !ok {
                        continue;
                    }
                    let others: Vec<usize> =
                        us.iter().copied().filter(|&x| x != u).collect();
                    let pair = sorted_pair(others[0], others[1]);
                    out.push(mk(vec![v, pair[0], pair[1], u]));
                }
            }
        }
    }
    out
}

/// Whether the instance's template still holds in the current graph.
pub(crate) fn validate(inst: &ConfigInstance, wg: &WorkingGraph) -> bool {
    let vs = &inst.vertices;
    if vs.len() != inst.kind.arity() || !all_distinct(vs) {
        return false;
    }
    if vs.iter().any(|&v| !wg.is_active(v)) {
        return false;
    }
    match inst.kind {
        ReducibleKind::Seven(SevenKind::PendantVertex)
        | ReducibleKind::SixPrime(SixPrimeKind::PendantVertex) => wg.deg(vs[0]) <= 1,
        ReducibleKind::Seven(SevenKind::Conf1)
        | ReducibleKind::SixPrime(SixPrimeKind::Adjacent2Vertices) => {
            wg.two(vs[0]) && wg.two(vs[1]) && wg.g.has_edge(vs[0], vs[1])
        }
        ReducibleKind::Seven(SevenKind::Conf2) => {
            let (v, u1, u2) = (vs[0], vs[1], vs[2]);
            wg.three(v)
                && wg.two(u1)
                && wg.two(u2)
                && wg.g.has_edge(v, u1)
                && wg.g.has_edge(v, u2)
        }
        ReducibleKind::Seven(SevenKind::Conf3) => {
            let (v1, v2, u1, u2) = (vs[0], vs[1], vs[2], vs[3]);
            wg.three(v1)
                && wg.three(v2)
                && wg.g.has_edge(v1, v2)
                && wg.two(u1)
                && wg.two(u2)
                && wg.g.has_edge(v1, u1)
                && wg.g.has_edge(v2, u2)
        }
        ReducibleKind::Seven(SevenKind::Conf4) => {
            let (v1, v2, v3, u1, u2, u3, w) = (vs[0], vs[1], vs[2], vs[3], vs[4], vs[5], vs[6]);
            wg.three(w)
                && [v1, v2, v3].iter().all(|&x| wg.three(x) && wg.g.has_edge(w, x))
                && wg.two(u1)
                && wg.two(u2)
                && wg.two(u3)
                && wg.g.has_edge(v1, u1)
                && wg.g.has_edge(v2, u2)
                && wg.g.has_edge(v3, u3)
        }
        ReducibleKind::SixPrime(SixPrimeKind::AdjacentClass2Pair) => {
            let (v1, v2, u1, u2, u3, u4) = (vs[0], vs[1], vs[2], vs[3], vs[4], vs[5]);
            [u1, u2, u3, u4].iter().all(|&u| wg.two(u))
                && neighbor_set_is(wg, v1, &[u1, u2, v2])
                && neighbor_set_is(wg, v2, &[u3, u4, v1])
        }
        ReducibleKind::SixPrime(SixPrimeKind::Class3NearClass23) => {
            let (v1, v2, u1, u2, u3, u4) = (vs[0], vs[1], vs[2], vs[3], vs[4], vs[5]);
            [u1, u2, u3, u4].iter().all(|&u| wg.two(u))
                && neighbor_set_is(wg, v1, &[u1, u2, u3])
                && wg.three(v2)
                && wg.g.has_edge(v2, u3)
                && wg.g.has_edge(v2, u4)
        }
        ReducibleKind::SixPrime(SixPrimeKind::HConfiguration) => {
            let (v1, v2, v3) = (vs[0], vs[1], vs[2]);
            let (u1, u2, u3, u4, u5) = (vs[3], vs[4], vs[5], vs[6], vs[7]);
            [u1, u2, u3, u4, u5].iter().all(|&u| wg.two(u))
                && neighbor_set_is(wg, v2, &[v1, v3, u5])
                && neighbor_set_is(wg, v1, &[u1, u2, v2])
                && neighbor_set_is(wg, v3, &[u3, u4, v2])
        }
        ReducibleKind::SixPrime(SixPrimeKind::YConfiguration) => {
            let (v1, u1, u2, u3) = (vs[0], vs[1], vs[2], vs[3]);
            if ![u1, u2, u3].iter().all(|&u| wg.two(u))
                || !neighbor_set_is(wg, v1, &[u1, u2, u3])
            {
                return false;
            }
            let Some(&v2) = wg.g.neighbors(u3).iter().find(|&&w| w != v1) else {
                return false;
            };
            if wg.class_of(v2) != Some(1) {
                return false;
            }
            let t3 = wg.three_neighbors(v2);
            if t3.len() != 2 {
                return false;
            }
            let classes = [wg.class_of(t3[0]), wg.class_of(t3[1])];
            (classes[0] == Some(2) && classes[1] == Some(1))
                || (classes[0] == Some(1) && classes[1] == Some(2))
        }
    }
}

pub(crate) const SEVEN_PRIORITY: [ReducibleKind; 5] = [
    ReducibleKind::Seven(SevenKind::PendantVertex),
    ReducibleKind::Seven(SevenKind::Conf1),
    ReducibleKind::Seven(SevenKind::Conf2),
    ReducibleKind::Seven(SevenKind::Conf3),
    ReducibleKind::Seven(SevenKind::Conf4),
];

pub(crate) const SIX_PRIME_PRIORITY: [ReducibleKind; 6] = [
    ReducibleKind::SixPrime(SixPrimeKind::PendantVertex),
    ReducibleKind::SixPrime(SixPrimeKind::Adjacent2Vertices),
    ReducibleKind::SixPrime(SixPrimeKind::AdjacentClass2Pair),
    ReducibleKind::SixPrime(SixPrimeKind::Class3NearClass23),
    ReducibleKind::SixPrime(SixPrimeKind::HConfiguration),
    ReducibleKind::SixPrime(SixPrimeKind::YConfiguration),
];
