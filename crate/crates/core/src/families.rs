//! Deterministic constructors for every graph family the theorem checks use,
//! with documented vertex labelings so eigenvector tests are reproducible.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::graph::Graph;

/// Path on n vertices, labeled consecutively 0-1-...-(n-1).
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Star K_{1,n-1} with center 0.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle on n >= 3 vertices, labeled around the cycle.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Bound(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

/// Complete graph on n vertices.
pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Double star S_{a,b} (a, b >= 1): adjacent centers 0 and 1, with `a`
/// pendants 2..a+1 on center 0 and `b` pendants a+2..a+b+1 on center 1.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::Bound(format!(
            "double star needs a, b >= 1, got ({a},{b})"
        )));
    }
    let mut edges = vec![(0, 1)];
    for leaf in 0..a {
        edges.push((0, 2 + leaf));
    }
    for leaf in 0..b {
        edges.push((1, 2 + a + leaf));
    }
    Graph::from_edges(a + b + 2, &edges)
}

/// Petersen graph via the Kneser K(5,2) construction: vertices are the
/// 2-subsets of {0..4} in lexicographic order, edges join disjoint pairs.
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5u8 {
        for j in (i + 1)..5 {
            pairs.push((i, j));
        }
    }
    let mut edges = Vec::new();
    for (u, &(a, b)) in pairs.iter().enumerate() {
        for (v, &(c, d)) in pairs.iter().enumerate().skip(u + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(10, &edges).expect("Kneser construction is valid")
}

/// Complete multipartite graph; parts keep consecutive labels in input order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 || parts.iter().any(|&p| p == 0) {
        return Err(Error::Bound(
            "complete multipartite needs >= 2 nonempty parts".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (idx, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(idx).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Spider with q >= 2 legs of length 2: center 0, leg midpoints 1..=q, and
/// leaf q+i attached to midpoint i. Order 2q+1, diameter 4.
pub fn t42_spider(q: usize) -> Result<Graph> {
    if q < 2 {
        return Err(Error::Bound(format!("spider needs q >= 2, got {q}")));
    }
    let mut edges = Vec::new();
    for leg in 1..=q {
        edges.push((0, leg));
        edges.push((leg, q + leg));
    }
    Graph::from_edges(2 * q + 1, &edges)
}

/// Blocks (center, midpoints, leaves) of [`t42_spider`], the equitable
/// partition of its distance matrix used throughout the diameter-4 analysis.
pub fn t42_blocks(q: usize) -> Vec<Vec<usize>> {
    vec![
        vec![0],
        (1..=q).collect(),
        (q + 1..=2 * q).collect(),
    ]
}

/// Constructive description of a member of the pendant-path tree family:
/// starting from P2, step i attaches a fresh path w1-w2-w3-w4 by the edge
/// (steps[i], w1), where steps[i] names a vertex of the tree built so far.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeRecipe {
    steps: Vec<usize>,
}

impl TreeRecipe {
    /// Validates the per-step bound steps[i-1] <= 4i - 3 (the largest label
    /// present before step i runs).
    pub fn new(steps: Vec<usize>) -> Result<Self> {
        for (idx, &a) in steps.iter().enumerate() {
            let bound = 4 * (idx + 1) - 3;
            if a > bound {
                return Err(Error::Bound(format!(
                    "recipe step {} attaches to vertex {a}, but only 0..={bound} exist",
                    idx + 1
                )));
            }
        }
        Ok(TreeRecipe { steps })
    }

    /// The empty recipe denotes P2.
    pub fn empty() -> Self {
        TreeRecipe::default()
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertex count of the resulting tree, 4*len + 2.
    pub fn order(&self) -> usize {
        4 * self.steps.len() + 2
    }
}

impl fmt::Display for TreeRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for TreeRecipe {
    type Err = Error;

    /// Comma-separated attachment indices; the empty string is P2.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(TreeRecipe::empty());
        }
        let steps = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Bound(format!("bad recipe index {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        TreeRecipe::new(steps)
    }
}

/// Builds the tree a recipe describes. New path vertices get the next four
/// labels in path order, w1 first.
pub fn build_t_family(recipe: &TreeRecipe) -> Graph {
    let mut edges = vec![(0usize, 1usize)];
    let mut n = 2;
    for &attach in recipe.steps() {
        debug_assert!(attach < n);
        let w1 = n;
        edges.push((attach, w1));
        edges.push((w1, w1 + 1));
        edges.push((w1 + 1, w1 + 2));
        edges.push((w1 + 2, w1 + 3));
        n += 4;
    }
    Graph::from_edges(n, &edges).expect("recipe bounds were validated")
}

/// The 5x5 distance submatrix B_{F1} forced by a girth-4 configuration.
pub fn f1_submatrix() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, 1, 2, 1, 1],
        vec![1, 0, 1, 2, 2],
        vec![2, 1, 0, 1, 2],
        vec![1, 2, 1, 0, 2],
        vec![1, 2, 2, 2, 0],
    ])
}

/// The companion 5x5 distance submatrix B_{F2}.
pub fn f2_submatrix() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, 1, 2, 1, 2],
        vec![1, 0, 1, 2, 1],
        vec![2, 1, 0, 1, 2],
        vec![1, 2, 1, 0, 1],
        vec![2, 1, 2, 1, 0],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, diameter, girth, is_tree};

    #[test]
    fn small_families() {
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
        assert_eq!(star(4).unwrap().edge_count(), 3);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn double_star_shapes() {
        // S_{1,1} is P4 up to labels: degree sequence (2,2,1,1)
        let s11 = double_star(1, 1).unwrap();
        let mut degs: Vec<usize> = (0..4).map(|v| s11.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        assert_eq!(diameter(&s11).unwrap(), 3);

        let s22 = double_star(2, 2).unwrap();
        assert_eq!(s22.n(), 6);
        assert!(is_tree(&s22));

        let s31 = double_star(3, 1).unwrap();
        let mut degs: Vec<usize> = (0..6).map(|v| s31.degree(v)).collect();
        degs.sort_unstable();
        degs.reverse();
        assert_eq!(degs, vec![4, 2, 1, 1, 1, 1]);

        assert!(double_star(0, 2).is_err());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(girth(&g), Some(5));
        assert_eq!(diameter(&g).unwrap(), 2);
    }

    #[test]
    fn multipartite_shapes() {
        assert_eq!(
            complete_multipartite(&[1, 1, 1]).unwrap(),
            complete(3).unwrap()
        );
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(k23.edge_count(), 6);
        let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
        assert!((0..6).all(|v| k222.degree(v) == 4));
        assert!(complete_multipartite(&[3]).is_err());
        assert!(complete_multipartite(&[0, 2]).is_err());
    }

    #[test]
    fn spider_shapes() {
        let p5 = t42_spider(2).unwrap();
        assert!(is_tree(&p5));
        let mut degs: Vec<usize> = (0..5).map(|v| p5.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 2]); // spider(2) is P5

        let s3 = t42_spider(3).unwrap();
        let mut degs: Vec<usize> = (0..7).map(|v| s3.degree(v)).collect();
        degs.sort_unstable();
        degs.reverse();
        assert_eq!(degs, vec![3, 2, 2, 2, 1, 1, 1]);

        assert_eq!(diameter(&t42_spider(4).unwrap()).unwrap(), 4);
        assert!(t42_spider(1).is_err());
    }

    #[test]
    fn recipe_bounds_and_parse() {
        assert!(TreeRecipe::new(vec![1]).is_ok());
        assert!(TreeRecipe::new(vec![2]).is_err()); // P2 has labels 0..=1
        assert!(TreeRecipe::new(vec![1, 5]).is_ok());
        assert!(TreeRecipe::new(vec![1, 6]).is_err());
        let r: TreeRecipe = "1,2".parse().unwrap();
        assert_eq!(r.steps(), &[1, 2]);
        assert_eq!(r.to_string(), "1,2");
        let empty: TreeRecipe = "".parse().unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn build_empty_recipe_is_p2() {
        let g = build_t_family(&TreeRecipe::empty());
        assert_eq!(g, path(2).unwrap());
    }

    #[test]
    fn build_single_step_at_endpoint_is_p6() {
        let g = build_t_family(&TreeRecipe::new(vec![1]).unwrap());
        assert_eq!(g, path(6).unwrap());
    }

    #[test]
    fn build_outputs_are_trees_of_right_order() {
        for steps in [vec![], vec![0], vec![1, 2], vec![1, 4, 7]] {
            let r = TreeRecipe::new(steps).unwrap();
            let g = build_t_family(&r);
            assert_eq!(g.n(), r.order());
            assert_eq!(g.n() % 4, 2);
            assert!(is_tree(&g));
        }
    }

    #[test]
    fn f_submatrices_match_printed_rows() {
        let f1 = f1_submatrix();
        let f2 = f2_submatrix();
        assert_eq!((0..5).map(|j| f1.get(0, j)).collect::<Vec<_>>(), vec![0, 1, 2, 1, 1]);
        assert_eq!((0..5).map(|j| f2.get(0, j)).collect::<Vec<_>>(), vec![0, 1, 2, 1, 2]);
        assert!(f1.is_symmetric());
        assert!(f2.is_symmetric());
        for i in 0..5 {
            assert_eq!(f1.get(i, i), 0);
            assert_eq!(f2.get(i, i), 0);
        }
    }
}
