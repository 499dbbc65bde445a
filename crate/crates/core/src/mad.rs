//! Exact maximum average degree: `mad(G)` is the maximum of `2|E(H)|/|V(H)|`
//! over nonempty induced subgraphs `H`.
//!
//! Two routes, both exact: exhaustive subset enumeration for small graphs
//! (which doubles as the oracle for the second route) and an iterated
//! maximum-density-subgraph computation via max-flow for larger ones.

use crate::graph::{Graph, GraphError};

/// Exact rational, always in lowest terms.
pub type Rational = num_rational::Ratio<i64>;

const BRUTE_LIMIT: usize = 24;

/// Exact maximum average degree. Errors on the empty graph.
pub fn mad_exact(g: &Graph) -> Result<Rational, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.edge_count() == 0 {
        // all induced subgraphs are edgeless
        return Ok(Rational::new(0, 1));
    }
    if g.n() <= BRUTE_LIMIT {
        Ok(mad_exact_brute(g)?)
    } else {
        Ok(mad_exact_flow(g))
    }
}

/// Exhaustive route: enumerates every nonempty vertex subset. Exponential;
/// serves as the independent oracle for the flow route.
pub fn mad_exact_brute(g: &Graph) -> Result<Rational, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    assert!(n <= 30, "brute-force mad limited to small graphs");
    // recursive subset walk with incremental edge counts
    let mut best_num: i64 = 0; // 2E
    let mut best_den: i64 = 1; // |V|
    let mut chosen: Vec<usize> = Vec::new();
    let mut in_set = vec![false; n];
    fn rec(
        g: &Graph,
        v: usize,
        edges: i64,
        chosen: &mut Vec<usize>,
        in_set: &mut [bool],
        best_num: &mut i64,
        best_den: &mut i64,
    ) {
        if v == g.n() {
            if !chosen.is_empty() {
                let k = chosen.len() as i64;
                if 2 * edges * *best_den > *best_num * k {
                    *best_num = 2 * edges;
                    *best_den = k;
                }
            }
            return;
        }
        rec(g, v + 1, edges, chosen, in_set, best_num, best_den);
        let added = g.neighbors(v).iter().filter(|&&u| in_set[u]).count() as i64;
        chosen.push(v);
        in_set[v] = true;
        rec(g, v + 1, edges + added, chosen, in_set, best_num, best_den);
        in_set[v] = false;
        chosen.pop();
    }
    rec(g, 0, 0, &mut chosen, &mut in_set, &mut best_num, &mut best_den);
    Ok(Rational::new(best_num, best_den))
}

/// Flow route: repeatedly tests "is there an induced subgraph denser than the
/// current best?" with a max-flow min-cut construction, improving the best
/// density until no denser subgraph exists. All arithmetic is exact.
pub fn mad_exact_flow(g: &Graph) -> Rational {
    let n = g.n();
    let m = g.edge_count() as i64;
    let mut best = Rational::new(2 * m, n as i64); // average degree of G
    loop {
        match denser_subgraph(g, best) {
            Some(subset) => {
                let k = subset.len() as i64;
                let e = induced_edges(g, &subset) as i64;
                let density = Rational::new(2 * e, k);
                assert!(density > best, "flow step must strictly improve");
                best = density;
            }
            None => return best,
        }
    }
}

fn induced_edges(g: &Graph, subset: &[usize]) -> usize {
    let mut in_set = vec![false; g.n()];
    for &v in subset {
        in_set[v] = true;
    }
    subset
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&u| in_set[u] && u > v).count())
        .sum()
}

/// Returns a vertex set with density strictly above `threshold`, if any.
/// Min-cut construction: source -> v with capacity q*m, v -> sink with
/// capacity q*m + p - q*d(v), each edge as two arcs of capacity q, where
/// threshold = p/q. The cut value for source side S is
/// q*m*n + p|S| - 2q*E(S), so a cut below q*m*n certifies density > p/q.
fn denser_subgraph(g: &Graph, threshold: Rational) -> Option<Vec<usize>> {
    let n = g.n();
    let m = g.edge_count() as i64;
    let p = *threshold.numer();
    let q = *threshold.denom();
    let source = n;
    let sink = n + 1;
    let mut net = Dinic::new(n + 2);
    for v in 0..n {
        net.add_edge(source, v, q * m);
        let cap = q * m + p - q * (g.degree(v) as i64);
        assert!(cap >= 0);
        net.add_edge(v, sink, cap);
    }
    for (u, v) in g.edges() {
        net.add_edge(u, v, q);
        net.add_edge(v, u, q);
    }
    let full = q * m * (n as i64);
    let flow = net.max_flow(source, sink);
    if flow >= full {
        return None;
    }
    let side = net.min_cut_source_side(source);
    let subset: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    assert!(!subset.is_empty());
    Some(subset)
}

struct Dinic {
    to: Vec<usize>,
    cap: Vec<i64>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); n],
            level: vec![-1; n],
            iter: vec![0; n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        let idx = self.to.len();
        self.to.push(v);
        self.cap.push(c);
        self.head[u].push(idx);
        self.to.push(u);
        self.cap.push(0);
        self.head[v].push(idx + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    q.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: i64) -> i64 {
        if u == t {
            return f;
        }
        while self.iter[u] < self.head[u].len() {
            let e = self.head[u][self.iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Vertices reachable from the source in the residual network.
    fn min_cut_source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        seen
    }
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
    fn c5_mad_is_two() {
        assert_eq!(mad_exact(&cycle(5)).unwrap(), Rational::new(2, 1));
    }

    #[test]
    fn petersen_minus_edge_is_14_over_5() {
        let mut g = petersen_graph();
        g.remove_edge(0, 1);
        assert_eq!(mad_exact(&g).unwrap(), Rational::new(14, 5));
    }

    #[test]
    fn k4_plus_pendant_is_three() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)];
        let g = Graph::from_edge_list(&edges, None, false).unwrap();
        assert_eq!(mad_exact(&g).unwrap(), Rational::new(3, 1));
    }

    #[test]
    fn empty_graph_is_error() {
        assert!(mad_exact(&Graph::empty(0)).is_err());
    }

    #[test]
    fn flow_agrees_with_brute_on_small_graphs() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let n = rng.gen_range(2..11);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if g.degree(u) < 3 && g.degree(v) < 3 && rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            if g.edge_count() == 0 {
                continue;
            }
            assert_eq!(mad_exact_brute(&g).unwrap(), mad_exact_flow(&g));
        }
    }

    #[test]
    fn mad_at_least_average_degree_with_equality_on_vertex_transitive() {
        let p = petersen_graph();
        assert_eq!(mad_exact(&p).unwrap(), Rational::new(3, 1));
        for n in [5usize, 6, 9] {
            let g = cycle(n);
            let ad = Rational::new(2 * g.edge_count() as i64, g.n() as i64);
            assert_eq!(mad_exact(&g).unwrap(), ad);
        }
    }
}
