//! Coloring the square of a 6-cycle from lists of size 3. In the square of
//! `C6`, every vertex is adjacent to all others except its antipode, so a
//! proper coloring repeats a color only on antipodal pairs.

use std::collections::BTreeSet;

use crate::coloring::{
    color_all_except, Color, ColoringError, ListAssignment, PartialColoring,
};
use crate::graph::Graph;
use crate::trace::Trace;

use super::{internal, SolveError};

/// Colors the whole square when the shortest cycle has length 6: everything
/// off the cycle greedily, leaving each cycle vertex a list of at least 3
/// (its square-neighborhood off the cycle has at most 5 vertices), then the
/// cycle core via [`color_c6_square`].
pub(super) fn six_cycle(
    g: &Graph,
    lists: &ListAssignment,
    cycle: &[usize],
    trace: &mut Trace,
) -> Result<PartialColoring, SolveError> {
    let mut pc = color_all_except(g, lists, cycle, cycle[0], cycle[1])?;
    let rems: Vec<BTreeSet<Color>> = cycle.iter().map(|&v| pc.remaining(v).clone()).collect();
    let colors = color_c6_square(&rems)
        .map_err(|e| internal(format!("6-cycle core: {e}"), trace))?;
    for (&v, &c) in cycle.iter().zip(&colors) {
        pc.set_color(v, c)
            .map_err(|e| internal(format!("6-cycle core clashed: {e}"), trace))?;
    }
    trace.color_config("SixCycleCore", cycle.iter().copied().zip(colors).collect());
    Ok(pc)
}

/// Smallest color of `lists[j]` distinct from every assigned vertex except
/// the antipode of `j`, written into `out[j]`.
fn greedy_at(
    lists: &[BTreeSet<Color>],
    out: &mut [Option<Color>],
    j: usize,
) -> Result<(), ColoringError> {
    let c = lists[j]
        .iter()
        .copied()
        .find(|&c| {
            (0..6).all(|i| i == j || i == (j + 3) % 6 || out[i] != Some(c))
        })
        .ok_or_else(|| ColoringError::PreconditionViolated("exhausted a 3-list".into()))?;
    out[j] = Some(c);
    Ok(())
}

/// Colors the square of the 6-cycle `v0..v5` from six lists of size at least
/// 3. Vertices `vi` and `vj` may share a color only when `j = i + 3 (mod 6)`.
/// This never fails on valid input.
pub fn color_c6_square(lists: &[BTreeSet<Color>]) -> Result<Vec<Color>, ColoringError> {
    if lists.len() != 6 {
        return Err(ColoringError::PreconditionViolated(format!(
            "expected 6 lists, got {}",
            lists.len()
        )));
    }
    for (v, l) in lists.iter().enumerate() {
        if l.len() < 3 {
            return Err(ColoringError::ListTooShort {
                vertex: v,
                len: l.len(),
                need: 3,
            });
        }
    }
    let mut out: [Option<Color>; 6] = [None; 6];
    let finish = |out: [Option<Color>; 6]| {
        out.into_iter().map(|c| c.expect("all assigned")).collect()
    };

    // Case 1: some antipodal pair shares a color; repeat it there, try to
    // repeat on a second pair, otherwise sacrifice one vertex of that pair.
    for r in 0..3 {
        let idx = |i: usize| (r + i) % 6;
        let Some(&c1) = lists[idx(0)].intersection(&lists[idx(3)]).next() else {
            continue;
        };
        out[idx(0)] = Some(c1);
        out[idx(3)] = Some(c1);

        let second: Option<Color> = lists[idx(1)]
            .intersection(&lists[idx(4)])
            .copied()
            .find(|&c| c != c1);
        if let Some(c2) = second {
            out[idx(1)] = Some(c2);
            out[idx(4)] = Some(c2);
            greedy_at(lists, &mut out, idx(2))?;
            greedy_at(lists, &mut out, idx(5))?;
            return Ok(finish(out));
        }

        // no second repeat: color v2 next; if v1 keeps two options finish
        // with v4, v5, v1, otherwise v1's only spare color misses L(v4),
        // so v1, v5, v4 succeeds
        greedy_at(lists, &mut out, idx(2))?;
        let c3 = out[idx(2)].unwrap();
        let tail: [usize; 3] = if lists[idx(1)]
            .iter()
            .filter(|&&c| c != c1 && c != c3)
            .count()
            >= 2
        {
            [4, 5, 1]
        } else {
            [1, 5, 4]
        };
        for i in tail {
            greedy_at(lists, &mut out, idx(i))?;
        }
        return Ok(finish(out));
    }

    // Case 2: all three antipodal pairs have disjoint lists, so the colors
    // are pairwise distinct. Color v0, then pick the color of v3 keeping at
    // most one of v1, v2, v4, v5 down to a single option.
    let c1 = *lists[0].iter().next().expect("3-list nonempty");
    let sides = [1usize, 2, 4, 5];
    let squeezed = |c2: Color| -> Vec<usize> {
        sides
            .iter()
            .copied()
            .filter(|&j| {
                lists[j]
                    .iter()
                    .filter(|&&c| c != c1 && c != c2)
                    .count()
                    <= 1
            })
            .collect()
    };
    let c2 = lists[3]
        .iter()
        .copied()
        .min_by_key(|&c| (squeezed(c).len(), c))
        .expect("3-list nonempty");
    out[0] = Some(c1);
    out[3] = Some(c2);
    if squeezed(c2).len() >= 2 {
        return Err(ColoringError::PreconditionViolated(
            "two side lists reduced to singletons".into(),
        ));
    }
    // with at most one side list down to one option, the four reduced lists
    // satisfy Hall's condition (each disjoint antipodal pair contributes its
    // summed sizes), so distinct representatives exist
    let reduced: Vec<BTreeSet<Color>> = sides
        .iter()
        .map(|&j| {
            lists[j]
                .iter()
                .copied()
                .filter(|&c| c != c1 && c != c2)
                .collect()
        })
        .collect();
    match crate::sdr::sdr_assign(&reduced) {
        crate::sdr::SdrResult::Assigned(cs) => {
            for (&j, c) in sides.iter().zip(cs) {
                out[j] = Some(c);
            }
            Ok(finish(out))
        }
        crate::sdr::SdrResult::Unsatisfiable(_) => Err(ColoringError::PreconditionViolated(
            "side lists admit no distinct representatives".into(),
        )),
    }
}
