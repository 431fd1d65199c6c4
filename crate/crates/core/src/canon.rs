//! Canonical forms and isomorphism at desk scale.
//!
//! Trees get an exact linear-time canonical form (centroid rooting plus
//! sorted level sequences); everything else goes through a branch-and-bound
//! search for the lexicographically smallest adjacency bitstring, with twin
//! vertices collapsed to keep highly symmetric graphs tractable.

use crate::graph::Graph;

/// Centroid vertices of a tree: the one or two vertices minimizing the
/// largest component left by their removal.
pub fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    let mut size = vec![1usize; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let weight = |v: usize| -> usize {
        let mut w = n - size[v]; // component through the parent
        for &c in g.neighbors(v) {
            if parent[c] == v {
                w = w.max(size[c]);
            }
        }
        w
    };
    let best = (0..n).map(weight).min().unwrap();
    (0..n).filter(|&v| weight(v) == best).collect()
}

/// Canonical level sequence of the tree rooted at `root`: every vertex lists
/// its children's sequences in non-increasing lexicographic order.
pub fn rooted_level_sequence(g: &Graph, root: usize) -> Vec<usize> {
    fn encode(g: &Graph, v: usize, parent: usize, level: usize) -> Vec<usize> {
        let mut child_seqs: Vec<Vec<usize>> = g
            .neighbors(v)
            .iter()
            .filter(|&&c| c != parent)
            .map(|&c| encode(g, c, v, level + 1))
            .collect();
        child_seqs.sort_by(|a, b| b.cmp(a));
        let mut out = vec![level];
        for s in child_seqs {
            out.extend(s);
        }
        out
    }
    encode(g, root, usize::MAX, 0)
}

/// Canonical level sequence of a free tree: root at the centroid, taking the
/// lexicographically larger rooting when there are two centroids.
pub fn tree_canonical_sequence(g: &Graph) -> Vec<usize> {
    centroids(g)
        .into_iter()
        .map(|c| rooted_level_sequence(g, c))
        .max()
        .expect("tree has a centroid")
}

/// Rebuilds a tree from a level sequence: the parent of position i is the
/// closest earlier position one level up.
pub fn tree_from_level_sequence(seq: &[usize]) -> Graph {
    let n = seq.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = (0..i)
            .rev()
            .find(|&j| seq[j] + 1 == seq[i])
            .expect("valid level sequence");
        edges.push((parent, i));
    }
    Graph::from_edges(n, &edges).expect("level sequence describes a tree")
}

/// Canonical relabeling: isomorphic graphs map to identical graphs.
pub fn canonical_labeling(g: &Graph) -> Graph {
    if crate::graph::is_tree(g) {
        tree_from_level_sequence(&tree_canonical_sequence(g))
    } else {
        min_bitstring_labeling(g)
    }
}

/// Union-find for twin classes.
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Groups vertices that are interchangeable by a twin swap (equal open or
/// closed neighborhoods); placing one representative per class is enough
/// during the canonical search.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut dsu = Dsu::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let open_equal = g.neighbors(u) == g.neighbors(v);
            let closed_equal = {
                let mut nu: Vec<usize> = g.neighbors(u).to_vec();
                nu.push(u);
                nu.sort_unstable();
                let mut nv: Vec<usize> = g.neighbors(v).to_vec();
                nv.push(v);
                nv.sort_unstable();
                nu == nv
            };
            if open_equal || closed_equal {
                dsu.union(u, v);
            }
        }
    }
    (0..n).map(|v| dsu.find(v)).collect()
}

/// Lexicographically smallest upper-triangle adjacency bitstring over all
/// vertex orderings, by depth-first search with prefix pruning.
fn min_bitstring_labeling(g: &Graph) -> Graph {
    let n = g.n();
    let classes = twin_classes(g);

    struct Search<'a> {
        g: &'a Graph,
        classes: &'a [usize],
        chosen: Vec<usize>,
        used: Vec<bool>,
        bits: Vec<u8>,
        best_bits: Option<Vec<u8>>,
        best_order: Vec<usize>,
    }

    impl Search<'_> {
        fn dfs(&mut self) {
            let n = self.g.n();
            let k = self.chosen.len();
            if k == n {
                if self
                    .best_bits
                    .as_ref()
                    .map_or(true, |b| self.bits < *b)
                {
                    self.best_bits = Some(self.bits.clone());
                    self.best_order = self.chosen.clone();
                }
                return;
            }
            let mut tried = Vec::new();
            for cand in 0..n {
                if self.used[cand] {
                    continue;
                }
                let class = self.classes[cand];
                if tried.contains(&class) {
                    continue;
                }
                tried.push(class);
                // bits this candidate appends (adjacency to placed vertices)
                let start = self.bits.len();
                for &p in &self.chosen {
                    self.bits.push(u8::from(self.g.has_edge(p, cand)));
                }
                let acceptable = match &self.best_bits {
                    Some(best) => self.bits[..] <= best[..self.bits.len()],
                    None => true,
                };
                if acceptable {
                    self.chosen.push(cand);
                    self.used[cand] = true;
                    self.dfs();
                    self.used[cand] = false;
                    self.chosen.pop();
                }
                self.bits.truncate(start);
            }
        }
    }

    let mut search = Search {
        g,
        classes: &classes,
        chosen: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::with_capacity(n * (n - 1) / 2),
        best_bits: None,
        best_order: Vec::new(),
    };
    search.dfs();
    let order = search.best_order;
    let mut perm = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

/// Finds an isomorphism (perm[a-vertex] = b-vertex) by degree-filtered
/// backtracking; intended for small graphs (n up to about 30).
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    // map a-vertices in an order that keeps the mapped part connected where
    // possible, so adjacency constraints bind early
    let mut order = Vec::with_capacity(n);
    let mut picked = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| {
                let anchored = a
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| picked[u])
                    .count();
                (anchored, da[v])
            })
            .unwrap();
        picked[next] = true;
        order.push(next);
    }

    fn backtrack(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        da: &[usize],
        db: &[usize],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let av = order[depth];
        for bv in 0..b.n() {
            if used[bv] || da[av] != db[bv] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&prev| {
                a.has_edge(av, prev) == b.has_edge(bv, map[prev])
            });
            if !consistent {
                continue;
            }
            map[av] = bv;
            used[bv] = true;
            if backtrack(a, b, order, depth + 1, map, used, da, db) {
                return true;
            }
            used[bv] = false;
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(a, b, &order, 0, &mut map, &mut used, &da, &db) {
        Some(map)
    } else {
        None
    }
}

/// True iff the graphs are isomorphic.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn centroid_cases() {
        let p5 = families::path(5).unwrap();
        assert_eq!(centroids(&p5), vec![2]);
        let p4 = families::path(4).unwrap();
        assert_eq!(centroids(&p4), vec![1, 2]);
        let star = families::star(7).unwrap();
        assert_eq!(centroids(&star), vec![0]);
    }

    #[test]
    fn canonical_sequence_is_labeling_invariant() {
        let spider = families::t42_spider(2).unwrap();
        let p5 = families::path(5).unwrap();
        assert_eq!(tree_canonical_sequence(&spider), tree_canonical_sequence(&p5));
        assert_eq!(tree_canonical_sequence(&p5), vec![0, 1, 2, 1, 2]);
    }

    #[test]
    fn level_sequence_round_trip() {
        for g in [
            families::path(6).unwrap(),
            families::star(6).unwrap(),
            families::double_star(2, 2).unwrap(),
            families::t42_spider(3).unwrap(),
        ] {
            let seq = tree_canonical_sequence(&g);
            let rebuilt = tree_from_level_sequence(&seq);
            assert!(is_isomorphic(&g, &rebuilt));
            assert_eq!(tree_canonical_sequence(&rebuilt), seq);
        }
    }

    #[test]
    fn min_bitstring_agrees_with_brute_force() {
        // brute force: minimize the bit vector over all permutations
        fn brute(g: &Graph) -> Vec<u8> {
            let n = g.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut best: Option<Vec<u8>> = None;
            permute(&mut perm, 0, &mut |p| {
                let mut bits = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        bits.push(u8::from(g.has_edge(p[i], p[j])));
                    }
                }
                if best.as_ref().map_or(true, |b| bits < *b) {
                    best = Some(bits);
                }
            });
            best.unwrap()
        }
        fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
            if k == p.len() {
                f(p);
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                permute(p, k + 1, f);
                p.swap(k, i);
            }
        }
        for g in [
            families::cycle(5).unwrap(),
            families::complete_multipartite(&[2, 3]).unwrap(),
            families::cycle(6).unwrap(),
            crate::graph::Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
        ] {
            let canon = min_bitstring_labeling(&g);
            let n = g.n();
            let mut bits = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    bits.push(u8::from(canon.has_edge(i, j)));
                }
            }
            assert_eq!(bits, brute(&g));
        }
    }

    #[test]
    fn canonical_labeling_merges_isomorphs() {
        let c6a = families::cycle(6).unwrap();
        let c6b = c6a.relabel(&[3, 1, 4, 0, 5, 2]);
        assert_eq!(canonical_labeling(&c6a), canonical_labeling(&c6b));
    }

    #[test]
    fn isomorphism_finder() {
        let spider = families::t42_spider(2).unwrap();
        let p5 = families::path(5).unwrap();
        let map = find_isomorphism(&spider, &p5).unwrap();
        for (u, v) in spider.edges() {
            assert!(p5.has_edge(map[u], map[v]));
        }
        assert!(!is_isomorphic(
            &families::path(6).unwrap(),
            &families::star(6).unwrap()
        ));
        assert!(is_isomorphic(&families::petersen(), &families::petersen()));
    }
}
