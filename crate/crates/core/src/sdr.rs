//! Systems of distinct representatives: assign each vertex a color from its
//! list so that all assigned colors are distinct, or exhibit a Hall-violating
//! set of vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::coloring::Color;

/// Result of an SDR attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SdrResult {
    /// One distinct color per input list, in input order.
    Assigned(Vec<Color>),
    /// Indices of a set of lists whose union is smaller than the set.
    Unsatisfiable(Vec<usize>),
}

/// Augmenting-path bipartite matching between lists and colors. Ties broken
/// by smallest color id. On failure returns a Hall violator: the unmatched
/// list together with everything reachable by alternating paths.
pub fn sdr_assign(lists: &[BTreeSet<Color>]) -> SdrResult {
    let n = lists.len();
    // compact color universe, ascending so augmenting prefers small colors
    let universe: BTreeSet<Color> = lists.iter().flatten().copied().collect();
    let colors: Vec<Color> = universe.into_iter().collect();
    let index: BTreeMap<Color, usize> = colors
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    let adj: Vec<Vec<usize>> = lists
        .iter()
        .map(|l| l.iter().map(|c| index[c]).collect())
        .collect();

    let mut match_color: Vec<Option<usize>> = vec![None; colors.len()]; // color -> list
    let mut match_list: Vec<Option<usize>> = vec![None; n]; // list -> color

    fn augment(
        v: usize,
        adj: &[Vec<usize>],
        match_color: &mut [Option<usize>],
        match_list: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &c in &adj[v] {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            if match_color[c].is_none()
                || augment(match_color[c].unwrap(), adj, match_color, match_list, seen)
            {
                match_color[c] = Some(v);
                match_list[v] = Some(c);
                return true;
            }
        }
        false
    }

    for v in 0..n {
        let mut seen = vec![false; colors.len()];
        if !augment(v, &adj, &mut match_color, &mut match_list, &mut seen) {
            // Hall violator: v plus all lists reachable via alternating paths
            // (exactly the lists whose colors were all marked seen).
            let mut witness: Vec<usize> = vec![v];
            for u in 0..n {
                if u != v && adj[u].iter().all(|&c| seen[c]) && !adj[u].is_empty() {
                    witness.push(u);
                }
            }
            // lists that are empty violate Hall on their own
            if lists[v].is_empty() {
                witness = vec![v];
            }
            witness.sort_unstable();
            return SdrResult::Unsatisfiable(witness);
        }
    }
    SdrResult::Assigned(
        match_list
            .into_iter()
            .map(|c| colors[c.expect("all matched")])
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mk(lists: &[&[Color]]) -> Vec<BTreeSet<Color>> {
        lists.iter().map(|l| l.iter().copied().collect()).collect()
    }

    fn check_assigned(lists: &[BTreeSet<Color>], colors: &[Color]) {
        assert_eq!(lists.len(), colors.len());
        let distinct: BTreeSet<_> = colors.iter().collect();
        assert_eq!(distinct.len(), colors.len(), "colors must be distinct");
        for (l, c) in lists.iter().zip(colors) {
            assert!(l.contains(c));
        }
    }

    #[test]
    fn three_cycle_of_lists() {
        let lists = mk(&[&[1, 2], &[2, 3], &[3, 1]]);
        match sdr_assign(&lists) {
            SdrResult::Assigned(c) => check_assigned(&lists, &c),
            other => panic!("expected assignment, got {other:?}"),
        }
    }

    #[test]
    fn hall_violation_witness() {
        let lists = mk(&[&[1, 2], &[1, 2], &[1, 2]]);
        match sdr_assign(&lists) {
            SdrResult::Unsatisfiable(w) => {
                // union of witness lists smaller than witness
                let union: BTreeSet<Color> = w.iter().flat_map(|&i| lists[i].clone()).collect();
                assert!(union.len() < w.len());
                assert_eq!(w, vec![0, 1, 2]);
            }
            other => panic!("expected Hall violation, got {other:?}"),
        }
    }

    #[test]
    fn empty_list_is_its_own_witness() {
        let lists = mk(&[&[1], &[]]);
        assert_eq!(sdr_assign(&lists), SdrResult::Unsatisfiable(vec![1]));
    }

    #[test]
    fn interleaved_small_and_large_lists() {
        // five 2-lists with consecutive ones disjoint, five 6-lists each
        // disjoint from the 2-list two steps ahead
        let u: Vec<BTreeSet<Color>> = vec![
            [1, 2].into(),
            [3, 4].into(),
            [5, 6].into(),
            [7, 8].into(),
            [9, 10].into(),
        ];
        let mut lists: Vec<BTreeSet<Color>> = u.clone();
        for i in 0..5 {
            let avoid = &u[(i + 2) % 5];
            // six largest colors of {1..12} outside the avoided pair
            let big: BTreeSet<Color> = (1..=12u32)
                .rev()
                .filter(|c| !avoid.contains(c))
                .take(6)
                .collect();
            lists.push(big);
        }
        match sdr_assign(&lists) {
            SdrResult::Assigned(c) => check_assigned(&lists, &c),
            other => panic!("expected assignment, got {other:?}"),
        }
    }

    #[test]
    fn agrees_with_exhaustive_search_small() {
        use rand::Rng;
        use rand::SeedableRng;

        fn exhaustive(lists: &[BTreeSet<Color>], used: &mut BTreeSet<Color>, i: usize) -> bool {
            if i == lists.len() {
                return true;
            }
            for &c in &lists[i] {
                if used.insert(c) {
                    if exhaustive(lists, used, i + 1) {
                        return true;
                    }
                    used.remove(&c);
                }
            }
            false
        }

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..400 {
            let n = rng.gen_range(1..=8);
            let lists: Vec<BTreeSet<Color>> = (0..n)
                .map(|_| {
                    let k = rng.gen_range(0..=4);
                    (0..k).map(|_| rng.gen_range(1..=10) as Color).collect()
                })
                .collect();
            let sat = {
                let mut used = BTreeSet::new();
                exhaustive(&lists, &mut used, 0)
            };
            match sdr_assign(&lists) {
                SdrResult::Assigned(c) => {
                    assert!(sat);
                    check_assigned(&lists, &c);
                }
                SdrResult::Unsatisfiable(w) => {
                    assert!(!sat);
                    let union: BTreeSet<Color> =
                        w.iter().flat_map(|&i| lists[i].clone()).collect();
                    assert!(union.len() < w.len(), "witness must violate Hall");
                }
            }
        }
    }
}
