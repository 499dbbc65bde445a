use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{verify_square_coloring, ListAssignment, PartialColoring};
use crate::mad::Rational;
use crate::testkit::{gen_named, gen_random_cubic, gen_random_subcubic, random_lists, subdivide};

use super::*;

#[test]
fn find_7_on_small_graphs() {
    let c9 = gen_named("cycle(9)").unwrap();
    let inst = find_7_reducible(&c9).unwrap();
    assert_eq!(inst.kind, ReducibleKind::Seven(SevenKind::Conf1));
    assert_eq!(inst.vertices, vec![0, 1]);

    let k4s = subdivide(&gen_named("k4").unwrap(), 1);
    let inst = find_7_reducible(&k4s).unwrap();
    assert_eq!(inst.kind, ReducibleKind::Seven(SevenKind::Conf2));

    let petersen = gen_named("petersen").unwrap();
    assert!(find_7_reducible(&petersen).is_none());
}

#[test]
fn find_6_on_small_graphs() {
    let k4ss = subdivide(&gen_named("k4").unwrap(), 2);
    let inst = find_6prime_reducible(&k4ss).unwrap().unwrap();
    assert_eq!(
        inst.kind,
        ReducibleKind::SixPrime(SixPrimeKind::Adjacent2Vertices)
    );

    let ps = subdivide(&gen_named("petersen").unwrap(), 1);
    let inst = find_6prime_reducible(&ps).unwrap().unwrap();
    assert_eq!(
        inst.kind,
        ReducibleKind::SixPrime(SixPrimeKind::Class3NearClass23)
    );

    let mcgee = gen_named("mcgee").unwrap();
    assert!(find_6prime_reducible(&mcgee).unwrap().is_none());

    let c6 = gen_named("cycle(6)").unwrap();
    match find_6prime_reducible(&c6) {
        Err(DischargeError::GirthTooSmall { girth: 6 }) => {}
        other => panic!("expected girth error, got {other:?}"),
    }
}

#[test]
fn decompose_empties_sparse_graphs() {
    let c9 = gen_named("cycle(9)").unwrap();
    let t = decompose(&c9, Mode::Seven).unwrap();
    let removed: usize = t.a.iter().map(|i| i.vertices.len()).sum();
    assert_eq!(removed, 9);

    let ps = subdivide(&gen_named("petersen").unwrap(), 1);
    let t = decompose(&ps, Mode::SixPrime).unwrap();
    let removed: usize = t.a.iter().map(|i| i.vertices.len()).sum();
    assert_eq!(removed, ps.n());
    assert!(
        t.configs_added_to_b <= 10 * ps.n(),
        "queue additions {} exceed the linear budget",
        t.configs_added_to_b
    );
}

#[test]
fn decompose_rejects_dense_graphs() {
    let g = gen_named("petersen-minus-edge").unwrap();
    match decompose(&g, Mode::Seven) {
        Err(DischargeError::MadTooLarge { mad, bound }) => {
            assert_eq!(mad, Rational::new(14, 5));
            assert_eq!(bound, Rational::new(14, 5));
        }
        other => panic!("expected density rejection, got {other:?}"),
    }
    let c6 = gen_named("cycle(6)").unwrap();
    assert!(matches!(
        decompose(&c6, Mode::SixPrime),
        Err(DischargeError::GirthTooSmall { girth: 6 })
    ));
}

#[test]
fn decompose_is_deterministic() {
    let ps = subdivide(&gen_named("petersen").unwrap(), 1);
    let t1 = decompose(&ps, Mode::SixPrime).unwrap();
    let t2 = decompose(&ps, Mode::SixPrime).unwrap();
    assert_eq!(t1.a, t2.a);
}

#[test]
fn solve7_colors_sparse_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(701);
    let mut cases: Vec<crate::graph::Graph> = vec![
        gen_named("cycle(9)").unwrap(),
        subdivide(&gen_named("k4").unwrap(), 1),
        subdivide(&gen_named("petersen").unwrap(), 1),
    ];
    for seed in 0..5 {
        cases.push(subdivide(&gen_random_cubic(12, seed).unwrap(), 1));
    }
    for g in &cases {
        for _ in 0..3 {
            let lists = random_lists(g.n(), 7, 14, &mut rng);
            let coloring = solve7(g, &lists).unwrap();
            verify_square_coloring(g, &lists, &coloring).unwrap();
        }
        let lists = ListAssignment::uniform(g.n(), 7);
        let coloring = solve7(g, &lists).unwrap();
        verify_square_coloring(g, &lists, &coloring).unwrap();
    }
}

#[test]
fn solve7_rejects_dense_input() {
    let g = gen_named("petersen-minus-edge").unwrap();
    let lists = ListAssignment::uniform(g.n(), 7);
    assert!(matches!(
        solve7(&g, &lists),
        Err(DischargeError::MadTooLarge { .. })
    ));
}

#[test]
fn solve6_colors_high_girth_sparse_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(601);
    let mut cases: Vec<crate::graph::Graph> = vec![
        subdivide(&gen_named("k4").unwrap(), 2),
        subdivide(&gen_named("petersen").unwrap(), 1),
        gen_named("cycle(9)").unwrap(),
    ];
    for seed in 0..5 {
        cases.push(subdivide(&gen_random_cubic(10, seed).unwrap(), 2));
    }
    for g in &cases {
        for _ in 0..3 {
            let lists = random_lists(g.n(), 6, 12, &mut rng);
            let coloring = solve6(g, &lists).unwrap();
            verify_square_coloring(g, &lists, &coloring).unwrap();
        }
        let lists = ListAssignment::uniform(g.n(), 6);
        let coloring = solve6(g, &lists).unwrap();
        verify_square_coloring(g, &lists, &coloring).unwrap();
    }
}

#[test]
fn solve6_rejects_small_girth() {
    let c6 = gen_named("cycle(6)").unwrap();
    let lists = ListAssignment::uniform(c6.n(), 6);
    assert!(matches!(
        solve6(&c6, &lists),
        Err(DischargeError::GirthTooSmall { girth: 6 })
    ));
}

#[test]
fn rebuild_rejects_tampered_traces() {
    let ps = subdivide(&gen_named("petersen").unwrap(), 1);
    let mut t = decompose(&ps, Mode::SixPrime).unwrap();
    let lists = ListAssignment::uniform(ps.n(), 6);
    assert!(rebuild(&ps, &t, &lists, Mode::SixPrime).is_ok());
    t.a[0].vertices.swap(0, 4);
    assert!(matches!(
        rebuild(&ps, &t, &lists, Mode::SixPrime),
        Err(DischargeError::InvalidInstance(_))
    ));
    let mut t2 = decompose(&ps, Mode::SixPrime).unwrap();
    t2.a.pop();
    assert!(matches!(
        rebuild(&ps, &t2, &lists, Mode::SixPrime),
        Err(DischargeError::InvalidInstance(_))
    ));
}

#[test]
fn recolor_shared_vertex_gives_two_extensions() {
    let ps = subdivide(&gen_named("petersen").unwrap(), 1);
    let inst = find_6prime_reducible(&ps).unwrap().unwrap();
    assert_eq!(
        inst.kind,
        ReducibleKind::SixPrime(SixPrimeKind::Class3NearClass23)
    );
    let lists = ListAssignment::uniform(ps.n(), 6);
    let full = solve6(&ps, &lists).unwrap();
    let mut pc = PartialColoring::new(&ps, &lists);
    for (v, &c) in full.iter().enumerate() {
        pc.set_color(v, c).unwrap();
    }
    let (phi, psi) = recolor_u3(&pc, &inst).unwrap();
    let shared = inst.vertices[4];
    let at = |ext: &[(usize, u32)], v: usize| ext.iter().find(|&&(w, _)| w == v).unwrap().1;
    assert_ne!(at(&phi, shared), at(&psi, shared));
    for ext in [&phi, &psi] {
        let mut recolored = full.clone();
        for &(v, c) in ext.iter() {
            recolored[v] = c;
        }
        verify_square_coloring(&ps, &lists, &recolored).unwrap();
    }

    let mut bad = inst.clone();
    bad.vertices.swap(0, 1);
    assert!(matches!(
        recolor_u3(&pc, &bad),
        Err(DischargeError::InvalidInstance(_))
    ));
    let mut wrong_kind = inst.clone();
    wrong_kind.kind = ReducibleKind::SixPrime(SixPrimeKind::HConfiguration);
    assert!(matches!(
        recolor_u3(&pc, &wrong_kind),
        Err(DischargeError::InvalidInstance(_))
    ));
}

#[test]
fn charges_on_known_graphs() {
    let petersen = gen_named("petersen").unwrap();
    let r = discharge_check_7(&petersen).unwrap();
    assert!(r.charges.iter().all(|&c| c == Rational::from_integer(3)));
    assert_eq!(r.minimum, Rational::from_integer(3));

    let c9 = gen_named("cycle(9)").unwrap();
    let r = discharge_check_7(&c9).unwrap();
    assert!(r.charges.iter().all(|&c| c == Rational::from_integer(2)));

    let mcgee = gen_named("mcgee").unwrap();
    let r = discharge_check_6(&mcgee).unwrap();
    assert!(r.charges.iter().all(|&c| c == Rational::from_integer(3)));
    assert!(r.minimum >= Rational::new(18, 7));

    // once-subdivided Petersen: every 2-vertex collects 2/7 from each side;
    // every 3-vertex pays 2/7 to each of its three 2-neighbors and, having
    // no class-1 vertex anywhere near, receives nothing.
    let ps = subdivide(&petersen, 1);
    let r = discharge_check_6(&ps).unwrap();
    for v in ps.vertices() {
        let expected = if ps.degree(v) == 2 {
            Rational::new(18, 7)
        } else {
            Rational::new(15, 7)
        };
        assert_eq!(r.charges[v], expected, "vertex {v}");
    }

    assert!(matches!(
        discharge_check_6(&gen_named("cycle(6)").unwrap()),
        Err(DischargeError::GirthTooSmall { girth: 6 })
    ));
}

#[test]
fn no_pattern_implies_min_charge_at_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut none_hits_7 = 0;
    for i in 0..200 {
        // cubic graphs have no 2-vertices, so they exercise the
        // pattern-free branch; the subcubic ones exercise the matcher
        let g = if i % 2 == 0 {
            gen_random_cubic(20, i as u64).unwrap()
        } else {
            gen_random_subcubic(20, 0.10 + (i % 5) as f64 * 0.02, &mut rng)
        };
        if g.n() == 0 {
            continue;
        }
        if find_7_reducible(&g).is_none() {
            none_hits_7 += 1;
            let r = discharge_check_7(&g).unwrap();
            assert!(
                r.minimum >= Rational::new(14, 5),
                "pattern-free graph with min charge {}",
                r.minimum
            );
        }
        if g.girth().map_or(true, |c| c >= 7) {
            if let Ok(None) = find_6prime_reducible(&g) {
                let r = discharge_check_6(&g).unwrap();
                assert!(r.minimum >= Rational::new(18, 7));
            }
        }
    }
    let petersen = gen_named("petersen").unwrap();
    assert!(find_7_reducible(&petersen).is_none());
    assert!(
        discharge_check_7(&petersen).unwrap().minimum >= Rational::new(14, 5)
    );
    assert!(none_hits_7 > 0, "audit never exercised the pattern-free case");
}

#[test]
fn traced_solvers_report_removals_then_colors() {
    let ps = subdivide(&gen_named("petersen").unwrap(), 1);
    let lists = ListAssignment::uniform(ps.n(), 6);
    let (coloring, trace) = solve6_traced(&ps, &lists).unwrap();
    verify_square_coloring(&ps, &lists, &coloring).unwrap();
    let text = trace.to_string();
    let first_color = text.find("COLOR").expect("trace has coloring events");
    let last_remove = text.rfind("REMOVE").expect("trace has removal events");
    assert!(last_remove < first_color, "removals must precede colorings");
}
