//! Simple undirected graphs with sorted adjacency lists, plus the structural
//! queries the solvers dispatch on: squaring, girth, shortest cycles, vertex
//! classes, and Petersen recognition.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("degree of vertex {vertex} exceeds 3 in subcubic mode")]
    DegreeExceeded { vertex: usize },
    #[error("graph is empty")]
    EmptyGraph,
    #[error("vertex {0} is not a 3-vertex")]
    NotAThreeVertex(usize),
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),
}

/// Simple undirected graph on vertices `0..n`.
///
/// Invariants: no self-loops, no duplicate edges, adjacency lists sorted,
/// and `u ∈ adj(v) ⇔ v ∈ adj(u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Vertex count is
    /// `max id + 1` unless `declared_n` is larger.
    pub fn from_edge_list(
        edges: &[(usize, usize)],
        declared_n: Option<usize>,
        subcubic_mode: bool,
    ) -> Result<Self, GraphError> {
        let mut n = declared_n.unwrap_or(0);
        for &(u, v) in edges {
            n = n.max(u + 1).max(v + 1);
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
            if subcubic_mode {
                if g.degree(u) > 3 {
                    return Err(GraphError::DegreeExceeded { vertex: u });
                }
                if g.degree(v) > 3 {
                    return Err(GraphError::DegreeExceeded { vertex: v });
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u.max(v)));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    /// Removes an existing edge; no-op if absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(pos);
        }
        if let Ok(pos) = self.adj[v].binary_search(&u) {
            self.adj[v].remove(pos);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// The square: same vertices, edges between pairs at distance 1 or 2.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut sq = Graph::empty(n);
        let mut seen = vec![usize::MAX; n];
        for u in 0..n {
            seen[u] = u;
            let mut nbrs = Vec::new();
            for &v in &self.adj[u] {
                if seen[v] != u {
                    seen[v] = u;
                    nbrs.push(v);
                }
                for &w in &self.adj[v] {
                    if w != u && seen[w] != u {
                        seen[w] = u;
                        nbrs.push(w);
                    }
                }
            }
            nbrs.sort_unstable();
            sq.adj[u] = nbrs;
            seen[u] = usize::MAX;
            // reset markers for next round
            for &v in &sq.adj[u] {
                seen[v] = usize::MAX;
            }
        }
        sq
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[src] = 0;
        let mut q = VecDeque::from([src]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// BFS distances from a set of sources (distance to the nearest source).
    pub fn bfs_distances_multi(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut q = VecDeque::new();
        for &s in sources {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                q.push_back(s);
            }
        }
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// Distance between two vertices, `usize::MAX` if disconnected.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        // early-exit BFS
        if u == v {
            return 0;
        }
        let mut dist = vec![usize::MAX; self.n()];
        dist[u] = 0;
        let mut q = VecDeque::from([u]);
        while let Some(x) = q.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return dist[y];
                    }
                    q.push_back(y);
                }
            }
        }
        usize::MAX
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Girth: length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// A shortest cycle, or `None` for forests. Deterministic: among all
    /// shortest cycles the lexicographically smallest canonical vertex
    /// sequence is returned.
    pub fn shortest_cycle(&self) -> Option<CycleWitness> {
        let n = self.n();
        let mut best: Option<Vec<usize>> = None;
        let mut best_len = usize::MAX;
        for root in 0..n {
            // BFS recording parents; a non-tree edge (u, w) with
            // dist[u] + dist[w] + 1 closes a candidate cycle through root.
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut q = VecDeque::from([root]);
            while let Some(u) = q.pop_front() {
                if dist[u] * 2 > best_len {
                    continue;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if w != parent[u] {
                        let cand = dist[u] + dist[w] + 1;
                        if cand <= best_len {
                            if let Some(cycle) =
                                reconstruct_cycle(&parent, u, w)
                            {
                                debug_assert!(self.check_cycle(&cycle));
                                let canon = canonical_cycle(&cycle);
                                if cycle.len() < best_len
                                    || (cycle.len() == best_len
                                        && Some(&canon) < best.as_ref())
                                {
                                    best_len = cycle.len();
                                    best = Some(canon);
                                }
                            }
                        }
                    }
                }
            }
        }
        best.map(CycleWitness)
    }

    fn check_cycle(&self, cycle: &[usize]) -> bool {
        if cycle.len() < 3 {
            return false;
        }
        let mut sorted = cycle.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != cycle.len() {
            return false;
        }
        cycle
            .iter()
            .zip(cycle.iter().cycle().skip(1))
            .all(|(&a, &b)| self.has_edge(a, b))
    }

    /// Number of degree-2 neighbors of a 3-vertex.
    pub fn vertex_class(&self, v: usize) -> Result<VertexClass, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if self.degree(v) != 3 {
            return Err(GraphError::NotAThreeVertex(v));
        }
        let count = self.adj[v].iter().filter(|&&u| self.degree(u) == 2).count();
        Ok(VertexClass(count as u8))
    }

    /// True iff the graph is isomorphic to the Petersen graph.
    pub fn is_petersen(&self) -> bool {
        if self.n() != 10 || self.edge_count() != 15 {
            return false;
        }
        if (0..10).any(|v| self.degree(v) != 3) {
            return false;
        }
        if self.girth() != Some(5) {
            return false;
        }
        isomorphic_small(self, &petersen_graph())
    }
}

/// The canonical Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9,
/// spokes i -- i+5.
pub fn petersen_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edge_list(&edges, Some(10), true).unwrap()
}

/// Degree-refined backtracking isomorphism test for small graphs.
pub fn isomorphic_small(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    da.sort_unstable();
    db.sort_unstable();
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        a: &Graph,
        b: &Graph,
        v: usize,
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = a.n();
        if v == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || a.degree(v) != b.degree(cand) {
                continue;
            }
            let ok = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(mapping[u], cand));
            if ok {
                mapping[v] = cand;
                used[cand] = true;
                if go(a, b, v + 1, mapping, used) {
                    return true;
                }
                used[cand] = false;
                mapping[v] = usize::MAX;
            }
        }
        false
    }
    go(a, b, 0, &mut mapping, &mut used)
}

fn reconstruct_cycle(parent: &[usize], u: usize, w: usize) -> Option<Vec<usize>> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // the two paths must be disjoint except at the root for a genuine cycle
    let su: std::collections::HashSet<usize> = pu.iter().copied().collect();
    let shared: Vec<usize> = pw.iter().copied().filter(|x| su.contains(x)).collect();
    if shared.len() != 1 {
        return None;
    }
    let mut cycle = pu;
    let mut back = pw;
    back.pop(); // drop root, already present
    back.reverse();
    cycle.extend(back);
    if cycle.len() < 3 {
        return None;
    }
    Some(cycle)
}

/// Lexicographically smallest rotation/reflection of a cycle sequence.
fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| cycle[(start + k - i) % k]).collect();
    fwd.min(bwd)
}

/// A 3-vertex's class: the number of its degree-2 neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexClass(pub u8);

/// An ordered vertex sequence forming a cycle in some graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness(pub Vec<usize>);

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Validates the witness against a graph: consecutive vertices adjacent,
    /// all distinct, length at least 3.
    pub fn validate(&self, g: &Graph) -> bool {
        g.check_cycle(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(&edges, None, true).unwrap()
    }

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(&edges, None, true).unwrap()
    }

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0)], None, true).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = Graph::from_edge_list(&[(0, 1), (0, 1)], None, false).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 1));
    }

    #[test]
    fn self_loop_rejected() {
        let err = Graph::from_edge_list(&[(2, 2)], None, false).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop(2));
    }

    #[test]
    fn subcubic_mode_rejects_degree_four() {
        let star = [(0, 1), (0, 2), (0, 3), (0, 4)];
        let err = Graph::from_edge_list(&star, None, true).unwrap_err();
        assert_eq!(err, GraphError::DegreeExceeded { vertex: 0 });
        assert!(Graph::from_edge_list(&star, None, false).is_ok());
    }

    #[test]
    fn petersen_square_is_k10() {
        let sq = petersen_graph().square();
        assert_eq!(sq.edge_count(), 45);
        for u in 0..10 {
            assert_eq!(sq.degree(u), 9);
        }
    }

    #[test]
    fn c6_square_is_4_regular() {
        let sq = cycle_graph(6).square();
        assert!(sq.vertices().all(|v| sq.degree(v) == 4));
    }

    #[test]
    fn girth_of_cycles_and_trees() {
        assert_eq!(cycle_graph(9).girth(), Some(9));
        assert_eq!(path_graph(4).girth(), None);
        assert_eq!(petersen_graph().girth(), Some(5));
    }

    #[test]
    fn shortest_cycle_witness_valid() {
        let g = petersen_graph();
        let c = g.shortest_cycle().unwrap();
        assert_eq!(c.len(), 5);
        assert!(c.validate(&g));
    }

    #[test]
    fn shortest_cycle_of_c7_is_whole_cycle() {
        let g = cycle_graph(7);
        let c = g.shortest_cycle().unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn shortest_cycle_none_for_path() {
        assert!(path_graph(4).shortest_cycle().is_none());
    }

    #[test]
    fn shortest_cycle_deterministic_via_bfs_oracle() {
        // girth by BFS from every vertex must match the witness length
        let g = petersen_graph();
        let mut oracle = usize::MAX;
        for v in g.vertices() {
            // BFS shortest cycle through v
            let dist = g.bfs_distances(v);
            for (u, w) in g.edges() {
                if dist[u] != usize::MAX && dist[w] != usize::MAX {
                    let c = dist[u] + dist[w] + 1;
                    if c >= 3 && c < oracle && dist[u] == dist[w] {
                        oracle = oracle.min(c);
                    }
                }
            }
        }
        assert_eq!(oracle, 5);
    }

    #[test]
    fn vertex_class_cases() {
        // K4 with each edge once-subdivided: originals are class 3
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = Graph::from_edge_list(&k4, None, true).unwrap();
        let sub = crate::testkit::subdivide(&g, 1);
        assert_eq!(sub.vertex_class(0), Ok(VertexClass(3)));
        assert_eq!(
            sub.vertex_class(4),
            Err(GraphError::NotAThreeVertex(4))
        );
        let p = petersen_graph();
        assert_eq!(p.vertex_class(3), Ok(VertexClass(0)));
    }

    #[test]
    fn petersen_recognition() {
        assert!(petersen_graph().is_petersen());
        let mut g = petersen_graph();
        g.remove_edge(0, 1);
        assert!(!g.is_petersen());
    }

    #[test]
    fn petersen_recognition_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            let edges: Vec<_> = petersen_graph()
                .edges()
                .iter()
                .map(|&(u, v)| (perm[u], perm[v]))
                .collect();
            let g = Graph::from_edge_list(&edges, Some(10), true).unwrap();
            assert!(g.is_petersen());
        }
    }

    #[test]
    fn square_contains_original_edges_and_degree_bound() {
        let g = petersen_graph();
        let sq = g.square();
        for (u, v) in g.edges() {
            assert!(sq.has_edge(u, v));
        }
        assert!(sq.max_degree() <= 9);
    }
}
