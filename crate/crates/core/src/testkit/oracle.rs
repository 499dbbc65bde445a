//! Brute-force oracles: exact list coloring by backtracking, exact chromatic
//! number by branch-and-bound, and a bounded choosability falsifier. These
//! are the independent checks the constructive solvers are tested against.

use std::collections::BTreeSet;

use crate::coloring::{Color, ListAssignment};
use crate::graph::Graph;

/// Exact proper list coloring of `g` (colored as given — pass a square if a
/// square is wanted). Backtracking with forward checking, most-constrained
/// vertex first. `None` means no proper list coloring exists.
pub fn exact_list_color(g: &Graph, lists: &ListAssignment) -> Option<Vec<Color>> {
    assert_eq!(g.n(), lists.len());
    let n = g.n();
    let mut remaining: Vec<BTreeSet<Color>> = (0..n).map(|v| lists.list(v).clone()).collect();
    let mut colors: Vec<Option<Color>> = vec![None; n];

    fn go(
        g: &Graph,
        remaining: &mut Vec<BTreeSet<Color>>,
        colors: &mut Vec<Option<Color>>,
    ) -> bool {
        // most-constrained uncolored vertex, ties by higher degree then id
        let pick = (0..g.n())
            .filter(|&v| colors[v].is_none())
            .min_by_key(|&v| (remaining[v].len(), usize::MAX - g.degree(v), v));
        let v = match pick {
            Some(v) => v,
            None => return true,
        };
        let options: Vec<Color> = remaining[v].iter().copied().collect();
        for c in options {
            colors[v] = Some(c);
            let mut touched = Vec::new();
            let mut dead = false;
            for &u in g.neighbors(v) {
                if colors[u].is_none() && remaining[u].remove(&c) {
                    touched.push(u);
                    if remaining[u].is_empty() {
                        dead = true;
                    }
                }
            }
            if !dead && go(g, remaining, colors) {
                return true;
            }
            for u in touched {
                remaining[u].insert(c);
            }
            colors[v] = None;
        }
        false
    }

    if go(g, &mut remaining, &mut colors) {
        Some(colors.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

/// Exact chromatic number via iterative deepening from a greedy clique lower
/// bound, deciding k-colorability by backtracking with canonical color use
/// (a vertex may open at most one new color class).
pub fn chromatic_number_exact(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    // greedy clique from the highest-degree vertex
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| usize::MAX - g.degree(v));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    let lower = clique.len().max(1);

    fn colorable(g: &Graph, k: usize, order: &[usize], colors: &mut [usize], i: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let used = order[..i]
            .iter()
            .map(|&u| colors[u])
            .max()
            .map_or(0, |m| m + 1);
        let limit = k.min(used + 1); // at most one fresh class
        for c in 0..limit {
            let clash = g
                .neighbors(v)
                .iter()
                .any(|&u| order[..i].contains(&u) && colors[u] == c);
            if !clash {
                colors[v] = c;
                if colorable(g, k, order, colors, i + 1) {
                    return true;
                }
            }
        }
        false
    }

    // color the clique first, then the rest by descending degree
    let mut rest: Vec<usize> = order
        .iter()
        .copied()
        .filter(|v| !clique.contains(v))
        .collect();
    let mut full = clique.clone();
    full.append(&mut rest);

    for k in lower..=n {
        let mut colors = vec![usize::MAX; n];
        if colorable(g, k, &full, &mut colors, 0) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

/// Bounded choosability falsifier: searches list assignments of `k`-subsets
/// of `{1..universe}`, reduced by color symmetry (fresh colors only ever
/// appear as the next unused id). Returns `None` if no uncolorable
/// assignment exists within the bound, else `Some(witness)`.
///
/// This is NOT a full choosability decision — only assignments drawn from
/// the bounded universe are examined.
pub fn is_k_choosable_bounded(g: &Graph, k: usize, universe: u32) -> Option<ListAssignment> {
    let n = g.n();
    let mut lists: Vec<BTreeSet<Color>> = Vec::with_capacity(n);

    fn subsets(pool: &[Color], k: usize) -> Vec<BTreeSet<Color>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(pool: &[Color], k: usize, start: usize, cur: &mut Vec<Color>, out: &mut Vec<BTreeSet<Color>>) {
            if cur.len() == k {
                out.push(cur.iter().copied().collect());
                return;
            }
            for i in start..pool.len() {
                cur.push(pool[i]);
                rec(pool, k, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(pool, k, 0, &mut cur, &mut out);
        out
    }

    fn go(
        g: &Graph,
        k: usize,
        universe: u32,
        lists: &mut Vec<BTreeSet<Color>>,
        max_seen: Color,
    ) -> Option<ListAssignment> {
        if lists.len() == g.n() {
            let la = ListAssignment::new(lists.clone());
            if exact_list_color(g, &la).is_none() {
                return Some(la);
            }
            return None;
        }
        // candidate pool: colors already seen plus fresh ids, gap-free
        let fresh = ((max_seen + 1)..=universe.min(max_seen + k as u32)).collect::<Vec<Color>>();
        let mut pool: Vec<Color> = (1..=max_seen).collect();
        pool.extend(fresh);
        for s in subsets(&pool, k) {
            // enforce gap-free introduction of fresh colors
            let new: Vec<Color> = s.iter().copied().filter(|&c| c > max_seen).collect();
            let contiguous = new
                .iter()
                .enumerate()
                .all(|(i, &c)| c == max_seen + 1 + i as u32);
            if !contiguous {
                continue;
            }
            let new_max = s.iter().copied().max().unwrap().max(max_seen);
            lists.push(s);
            if let Some(w) = go(g, k, universe, lists, new_max) {
                return Some(w);
            }
            lists.pop();
        }
        None
    }

    go(g, k, universe, &mut lists, 0)
}
