//! Simple undirected graphs and the metric/structural predicates the theorem
//! checks are built on.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

/// Girth of an acyclic graph.
pub const ACYCLIC: Option<usize> = None;

/// A simple undirected graph on vertices `0..n`.
///
/// Invariants: no self-loops, adjacency is symmetric, and each neighbor list
/// is sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Bound("graph needs at least one vertex".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Bound(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Bound(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Relabels vertices by `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(self.n, &edges).expect("permutation preserves validity")
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("complement is valid")
    }
}

/// All-pairs shortest-path matrix via per-source BFS.
///
/// Errors on disconnected input, naming a vertex pair in different components.
pub fn distance_matrix(g: &Graph) -> Result<IntMatrix> {
    let n = g.n();
    let mut m = IntMatrix::zero(n);
    for u in 0..n {
        let dist = g.bfs_distances(u);
        for v in 0..n {
            match dist[v] {
                Some(d) => m.set(u, v, d as i64),
                None => return Err(Error::Disconnected { u, v }),
            }
        }
    }
    Ok(m)
}

/// Laplacian matrix `L = Delta - A` (degree diagonal minus adjacency).
pub fn laplacian_matrix(g: &Graph) -> IntMatrix {
    let n = g.n();
    let mut m = IntMatrix::zero(n);
    for u in 0..n {
        m.set(u, u, g.degree(u) as i64);
        for &v in g.neighbors(u) {
            m.set(u, v, -1);
        }
    }
    m
}

/// Maximum BFS eccentricity. Errors on disconnected input.
pub fn diameter(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for u in 0..g.n() {
        let dist = g.bfs_distances(u);
        for (v, d) in dist.iter().enumerate() {
            match d {
                Some(d) => best = best.max(*d),
                None => return Err(Error::Disconnected { u, v }),
            }
        }
    }
    Ok(best)
}

/// Length of a shortest cycle, or `None` when the graph is acyclic.
///
/// Per-vertex BFS with parent exclusion: every non-tree edge met during the
/// BFS from `r` closes a walk of length `dist[u] + dist[w] + 1` that contains
/// a cycle, and for any r on a shortest cycle the bound is attained.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for r in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    let cand = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

/// True iff the graph has no C3 and no C4 subgraph (girth >= 5 or acyclic).
pub fn is_c3c4_free(g: &Graph) -> bool {
    match girth(g) {
        None => true,
        Some(gi) => gi >= 5,
    }
}

/// Connected with exactly n-1 edges.
pub fn is_tree(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() == g.n() - 1
}

/// Pendant statistics of a tree: number of degree-1 vertices and number of
/// vertices adjacent to at least one of them.
pub fn pendant_counts(g: &Graph) -> Result<(usize, usize)> {
    if !is_tree(g) || g.n() < 2 {
        return Err(Error::NotATree(
            "pendant counts are defined for trees with n >= 2".into(),
        ));
    }
    let n1 = (0..g.n()).filter(|&v| g.degree(v) == 1).count();
    let n1p = (0..g.n())
        .filter(|&v| g.neighbors(v).iter().any(|&u| g.degree(u) == 1))
        .count();
    Ok((n1, n1p))
}

/// True iff the complement is a disjoint union of cliques.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    let co = g.complement();
    // Each complement component must be a clique.
    let mut seen = vec![false; co.n()];
    for s in 0..co.n() {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &v in co.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        for (i, &u) in comp.iter().enumerate() {
            for &v in comp.iter().skip(i + 1) {
                if !co.has_edge(u, v) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn distance_matrix_p4() {
        let g = families::path(4).unwrap();
        let d = distance_matrix(&g).unwrap();
        let expected = [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.get(i, j), expected[i][j]);
            }
        }
    }

    #[test]
    fn distance_matrix_k3_off_diagonal_ones() {
        let g = families::complete(3).unwrap();
        let d = distance_matrix(&g).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, j), if i == j { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn distance_matrix_petersen_row_sums() {
        let g = families::petersen();
        let d = distance_matrix(&g).unwrap();
        for i in 0..10 {
            let mut row = 0;
            for j in 0..10 {
                let e = d.get(i, j);
                if i != j {
                    assert!(e == 1 || e == 2);
                }
                row += e;
            }
            assert_eq!(row, 15);
        }
    }

    #[test]
    fn distance_matrix_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        match distance_matrix(&g) {
            Err(Error::Disconnected { .. }) => {}
            other => panic!("expected Disconnected, got {other:?}"),
        }
    }

    #[test]
    fn distance_matrix_metric_axioms() {
        for g in [
            families::petersen(),
            families::double_star(3, 2).unwrap(),
            families::cycle(7).unwrap(),
        ] {
            let d = distance_matrix(&g).unwrap();
            let n = g.n();
            for i in 0..n {
                assert_eq!(d.get(i, i), 0);
                for j in 0..n {
                    assert_eq!(d.get(i, j), d.get(j, i));
                    for k in 0..n {
                        assert!(d.get(i, k) <= d.get(i, j) + d.get(j, k));
                    }
                }
            }
        }
    }

    #[test]
    fn tree_distance_ones_are_edges() {
        let g = families::double_star(2, 2).unwrap();
        let d = distance_matrix(&g).unwrap();
        let mut ones = 0;
        for i in 0..g.n() {
            for j in (i + 1)..g.n() {
                if d.get(i, j) == 1 {
                    ones += 1;
                    assert!(g.has_edge(i, j));
                }
            }
        }
        assert_eq!(ones, g.n() - 1);
    }

    #[test]
    fn laplacian_basics() {
        let k2 = families::path(2).unwrap();
        let l = laplacian_matrix(&k2);
        assert_eq!(
            (l.get(0, 0), l.get(0, 1), l.get(1, 0), l.get(1, 1)),
            (1, -1, -1, 1)
        );

        let p3 = families::path(3).unwrap();
        let l3 = laplacian_matrix(&p3);
        assert_eq!((l3.get(0, 0), l3.get(1, 1), l3.get(2, 2)), (1, 2, 1));

        let star = families::star(5).unwrap();
        let ls = laplacian_matrix(&star);
        assert_eq!(ls.get(0, 0), 4);
        for v in 1..5 {
            assert_eq!(ls.get(v, v), 1);
        }
        // row sums vanish
        for i in 0..5 {
            assert_eq!((0..5).map(|j| ls.get(i, j)).sum::<i64>(), 0);
        }
    }

    #[test]
    fn diameter_small_cases() {
        assert_eq!(diameter(&families::complete(5).unwrap()).unwrap(), 1);
        assert_eq!(diameter(&families::path(6).unwrap()).unwrap(), 5);
        assert_eq!(diameter(&families::petersen()).unwrap(), 2);
    }

    #[test]
    fn diameter_matches_max_eccentricity() {
        let g = families::t42_spider(3).unwrap();
        let d = diameter(&g).unwrap();
        let ecc_max = (0..g.n())
            .map(|u| {
                g.bfs_distances(u)
                    .iter()
                    .map(|x| x.unwrap())
                    .max()
                    .unwrap()
            })
            .max()
            .unwrap();
        assert_eq!(d, ecc_max);
    }

    #[test]
    fn girth_cases() {
        assert_eq!(girth(&families::petersen()), Some(5));
        assert_eq!(girth(&families::path(7).unwrap()), None);
        assert_eq!(girth(&families::cycle(4).unwrap()), Some(4));
        assert_eq!(girth(&families::complete(4).unwrap()), Some(3));
        // an edge inside a triangle hanging off a path
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        assert_eq!(girth(&g), Some(3));
    }

    #[test]
    fn c3c4_free_cases() {
        assert!(is_c3c4_free(&families::petersen()));
        assert!(!is_c3c4_free(&families::complete(3).unwrap()));
        assert!(!is_c3c4_free(&families::cycle(4).unwrap()));
        assert!(is_c3c4_free(&families::star(9).unwrap()));
    }

    #[test]
    fn tree_predicate() {
        assert!(is_tree(&families::path(7).unwrap()));
        assert!(!is_tree(&families::cycle(4).unwrap()));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_tree(&two_k2));
    }

    #[test]
    fn pendant_count_cases() {
        assert_eq!(pendant_counts(&families::star(6).unwrap()).unwrap(), (5, 1));
        assert_eq!(pendant_counts(&families::path(4).unwrap()).unwrap(), (2, 2));
        let s22 = families::double_star(2, 2).unwrap();
        assert_eq!(pendant_counts(&s22).unwrap(), (4, 2));
        assert!(pendant_counts(&families::cycle(5).unwrap()).is_err());
    }

    #[test]
    fn complete_multipartite_predicate() {
        assert!(is_complete_multipartite(
            &families::complete_multipartite(&[2, 3]).unwrap()
        ));
        assert!(!is_complete_multipartite(&families::path(4).unwrap()));
        assert!(is_complete_multipartite(&families::complete(5).unwrap()));
        assert!(!is_complete_multipartite(&families::petersen()));
    }
}
