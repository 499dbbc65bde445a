use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coloring::verify_square_coloring;
use crate::testkit::{
    exact_list_color, gen_named, gen_random_cubic, random_lists, subdivide,
};

fn detect(name: &str) -> StructureWitness {
    detect_structure(&gen_named(name).unwrap()).unwrap()
}

#[test]
fn structure_detection_on_fixtures() {
    assert_eq!(detect("petersen-minus-edge").kind, StructureKind::LowDegreeVertex);
    assert_eq!(detect("figure1b").kind, StructureKind::Triangle);
    assert_eq!(detect("prism").kind, StructureKind::Triangle);
    assert_eq!(detect("k4").kind, StructureKind::Triangle);
    assert_eq!(detect("figure1a").kind, StructureKind::FourCycle);
    assert_eq!(detect("heawood").kind, StructureKind::SixCycle);
    assert_eq!(detect("mcgee").kind, StructureKind::HighGirthCycle);
    assert!(matches!(
        detect_structure(&gen_named("petersen").unwrap()),
        Err(SolveError::PetersenInput)
    ));
}

#[test]
fn witness_is_structurally_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen_girth5 = 0;
    for seed in 0..200u64 {
        let n = 10 + 2 * (seed as usize % 30);
        let Ok(g) = gen_random_cubic(n, seed) else {
            continue;
        };
        let w = match detect_structure(&g) {
            Ok(w) => w,
            Err(SolveError::PetersenInput) => continue,
            Err(e) => panic!("unexpected detection error: {e}"),
        };
        match w.kind {
            StructureKind::LowDegreeVertex => {
                assert!(g.degree(w.cycle[0]) <= 2);
            }
            StructureKind::TwoFiveCyclesSharingPath => {
                seen_girth5 += 1;
                let c = &w.cycle;
                assert_eq!(c.len(), 6);
                for i in 0..6 {
                    assert!(g.has_edge(c[i], c[(i + 1) % 6]));
                }
                let x = w.aux[0];
                assert!(g.has_edge(x, c[0]) && g.has_edge(x, c[3]));
            }
            StructureKind::TwoFiveCyclesSharingEdge => {
                seen_girth5 += 1;
                let c = &w.cycle;
                assert_eq!(c.len(), 8);
                for i in 0..8 {
                    assert!(g.has_edge(c[i], c[(i + 1) % 8]));
                }
                assert!(g.has_edge(c[0], c[4]));
            }
            StructureKind::FiveCycle => {
                seen_girth5 += 1;
                let c = &w.cycle;
                assert_eq!(c.len(), 5);
                for i in 0..5 {
                    assert!(g.has_edge(c[i], c[(i + 1) % 5]));
                }
            }
            _ => {
                let c = &w.cycle;
                let k = c.len();
                for i in 0..k {
                    assert!(g.has_edge(c[i], c[(i + 1) % k]));
                }
                assert_eq!(g.girth(), Some(k));
            }
        }
        let _ = &mut rng;
    }
    assert!(seen_girth5 > 0, "random graphs never hit girth 5");
}

fn solve_and_check(g: &Graph, lists: &ListAssignment) {
    match solve8(g, lists) {
        Ok(colors) => {
            verify_square_coloring(g, lists, &colors).unwrap();
        }
        Err(e) => panic!("solve8 failed: {e}"),
    }
}

#[test]
fn fixtures_with_uniform_and_random_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in [
        "petersen-minus-edge",
        "figure1a",
        "figure1b",
        "prism",
        "prism-subdivided",
        "heawood",
        "mcgee",
        "k4",
        "cycle(7)",
        "cycle(12)",
    ] {
        let g = gen_named(name).unwrap();
        solve_and_check(&g, &ListAssignment::uniform(g.n(), 8));
        for _ in 0..5 {
            let lists = random_lists(g.n(), 8, 24, &mut rng);
            solve_and_check(&g, &lists);
        }
    }
}

#[test]
fn random_cubic_graphs_random_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut solved = 0;
    for seed in 0..120u64 {
        let n = 10 + 2 * (seed as usize % 25);
        let Ok(g) = gen_random_cubic(n, seed) else {
            continue;
        };
        if g.is_petersen() {
            continue;
        }
        let lists = random_lists(g.n(), 8, 20, &mut rng);
        solve_and_check(&g, &lists);
        solved += 1;
    }
    assert!(solved >= 100);
}

#[test]
fn girth_five_structures_get_solved() {
    // subcubic girth-5 graphs are rare at random; force girth 5 by filtering
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut hits = 0;
    for seed in 0..4000u64 {
        let n = 12 + 2 * (seed as usize % 10);
        let Ok(g) = gen_random_cubic(n, seed) else {
            continue;
        };
        if g.girth() != Some(5) || g.is_petersen() {
            continue;
        }
        let lists = random_lists(g.n(), 8, 16, &mut rng);
        solve_and_check(&g, &lists);
        hits += 1;
        if hits >= 30 {
            break;
        }
    }
    assert!(hits >= 5, "only {hits} girth-5 graphs found");
}

#[test]
fn high_girth_structures_get_solved() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    // subdividing every edge doubles the girth, guaranteeing girth >= 7
    // inputs with plenty of degree-2 vertices removed by taking cages too
    for name in ["mcgee", "heawood"] {
        let g = gen_named(name).unwrap();
        let g2 = subdivide(&g, 1);
        for _ in 0..3 {
            let lists = random_lists(g2.n(), 8, 24, &mut rng);
            solve_and_check(&g2, &lists);
        }
    }
}

#[test]
fn single_vertex_and_tiny_graphs() {
    let g = Graph::empty(1);
    let lists = ListAssignment::uniform(1, 8);
    assert_eq!(solve8(&g, &lists).unwrap(), vec![1]);

    let g = Graph::from_edge_list(&[(0, 1)], None, true).unwrap();
    solve_and_check(&g, &ListAssignment::uniform(2, 8));

    let g = gen_named("cycle(3)").unwrap();
    solve_and_check(&g, &ListAssignment::uniform(3, 8));
}

#[test]
fn rejects_bad_inputs() {
    let g = Graph::empty(0);
    assert!(matches!(
        solve8(&g, &ListAssignment::uniform(0, 8)),
        Err(SolveError::EmptyGraph)
    ));

    let mut g = Graph::empty(4);
    g.add_edge(0, 1).unwrap();
    // vertices 2, 3 isolated from component of 0
    g.add_edge(2, 3).unwrap();
    assert!(matches!(
        solve8(&g, &ListAssignment::uniform(4, 8)),
        Err(SolveError::Disconnected)
    ));

    let g = gen_named("petersen").unwrap();
    assert!(matches!(
        solve8(&g, &ListAssignment::uniform(10, 8)),
        Err(SolveError::PetersenInput)
    ));

    let g = gen_named("heawood").unwrap();
    assert!(matches!(
        solve8(&g, &ListAssignment::uniform(14, 7)),
        Err(SolveError::Coloring(ColoringError::ListTooShort { .. }))
    ));
}

#[test]
fn c6_square_trivial_lists() {
    let lists: Vec<std::collections::BTreeSet<Color>> =
        (0..6).map(|_| [1, 2, 3].into()).collect();
    assert_eq!(color_c6_square(&lists).unwrap(), vec![1, 2, 3, 1, 2, 3]);
}

#[test]
fn c6_square_small_list_rejected() {
    let mut lists: Vec<std::collections::BTreeSet<Color>> =
        (0..6).map(|_| [1, 2, 3].into()).collect();
    lists[4] = [1, 2].into();
    assert!(matches!(
        color_c6_square(&lists),
        Err(ColoringError::ListTooShort { vertex: 4, len: 2, need: 3 })
    ));
}

fn verify_c6(lists: &[std::collections::BTreeSet<Color>], colors: &[Color]) {
    assert_eq!(colors.len(), 6);
    for j in 0..6 {
        assert!(lists[j].contains(&colors[j]), "color not from list at {j}");
        for i in 0..6 {
            if i != j && i != (j + 3) % 6 {
                assert_ne!(colors[i], colors[j], "clash between {i} and {j}");
            }
        }
    }
}

#[test]
fn c6_square_agrees_with_exhaustive_oracle() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let c6 = gen_named("cycle(6)").unwrap();
    let sq = c6.square();
    for _ in 0..2000 {
        let lists: Vec<std::collections::BTreeSet<Color>> = (0..6)
            .map(|_| {
                let mut s = std::collections::BTreeSet::new();
                while s.len() < 3 {
                    s.insert(rng.gen_range(1..=9) as Color);
                }
                s
            })
            .collect();
        let colors = color_c6_square(&lists).expect("3-lists always colorable");
        verify_c6(&lists, &colors);
        // the exhaustive oracle must agree the instance is satisfiable
        let la = ListAssignment::new(lists.clone());
        assert!(exact_list_color(&sq, &la).is_some());
    }
}

#[test]
fn traces_record_the_structure() {
    let g = gen_named("figure1b").unwrap();
    let (_, trace) = solve8_traced(&g, &ListAssignment::uniform(g.n(), 8)).unwrap();
    let rendered = format!("{trace}");
    assert!(rendered.contains("Triangle"), "trace missing structure note:\n{rendered}");
}
