//! Vertex partitions of matrices, equitability testing, and quotient-matrix
//! extraction, with the two explicit quotient constructions used by the
//! double-star and spider analyses.

use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_int, IntMatrix, RatMatrix, Rational};
use crate::graph::Graph;
use crate::spectra;

/// Disjoint nonempty vertex-index blocks covering 0..n-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut covered = 0;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "label {v} out of range for n={n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!(
                        "label {v} appears in two blocks"
                    )));
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {covered} of {n} labels"
            )));
        }
        Ok(Partition { blocks, n })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            n,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for Partition {
    /// Blocks separated by semicolons, labels by commas: `0,1;2;3,4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut max_label = 0usize;
        for block_str in s.split(';') {
            let mut block = Vec::new();
            for tok in block_str.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok
                    .parse()
                    .map_err(|e| Error::InvalidPartition(format!("bad label {tok:?}: {e}")))?;
                max_label = max_label.max(v);
                block.push(v);
            }
            if !block.is_empty() {
                blocks.push(block);
            }
        }
        Partition::new(blocks, max_label + 1)
    }
}

/// Quotient matrix with its equitability flag.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientResult {
    pub matrix: RatMatrix,
    pub equitable: bool,
}

/// Quotient of a matrix with respect to a partition: entry (i,j) is the exact
/// average row sum of block (i,j). Equitability means every block has constant
/// row sums, tested exactly on the integer row sums.
pub fn quotient(m: &IntMatrix, p: &Partition) -> Result<QuotientResult> {
    if p.n() != m.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} labels but the matrix has order {}",
            p.n(),
            m.order()
        )));
    }
    let k = p.blocks().len();
    let mut q = RatMatrix::zero(k);
    let mut equitable = true;
    for (bi, rows) in p.blocks().iter().enumerate() {
        for (bj, cols) in p.blocks().iter().enumerate() {
            let row_sums: Vec<i64> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m.get(r, c)).sum())
                .collect();
            if row_sums.windows(2).any(|w| w[0] != w[1]) {
                equitable = false;
            }
            let total: i64 = row_sums.iter().sum();
            q.set(bi, bj, Rational::new(total.into(), (rows.len() as i64).into()));
        }
    }
    Ok(QuotientResult {
        matrix: q,
        equitable,
    })
}

/// Partition by vertex degree, blocks in ascending degree order; within a
/// block, labels ascend.
pub fn degree_partition(g: &Graph) -> Partition {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let blocks: Vec<Vec<usize>> = degrees
        .iter()
        .map(|&d| (0..g.n()).filter(|&v| g.degree(v) == d).collect())
        .collect();
    Partition::new(blocks, g.n()).expect("degree blocks partition the vertices")
}

/// The 4x4 quotient matrix of the double star S_{s+1,t+1} with respect to its
/// orbit partition (left leaves, left center, right center, right leaves):
///
/// ```text
/// [ 2s      1  2  3(t+1) ]
/// [ s+1     0  1  2(t+1) ]
/// [ 2(s+1)  1  0  t+1    ]
/// [ 3(s+1)  2  1  2t     ]
/// ```
pub fn double_star_quotient(s: usize, t: usize) -> RatMatrix {
    let (s, t) = (s as i64, t as i64);
    RatMatrix::from_int_rows(&[
        vec![2 * s, 1, 2, 3 * (t + 1)],
        vec![s + 1, 0, 1, 2 * (t + 1)],
        vec![2 * (s + 1), 1, 0, t + 1],
        vec![3 * (s + 1), 2, 1, 2 * t],
    ])
}

/// Orbit partition of [`crate::families::double_star`]`(s+1, t+1)` matching
/// the row order of [`double_star_quotient`].
pub fn double_star_orbit_partition(s: usize, t: usize) -> Partition {
    let a = s + 1;
    let b = t + 1;
    let blocks = vec![
        (2..2 + a).collect(),        // left leaves
        vec![0],                     // left center
        vec![1],                     // right center
        (2 + a..2 + a + b).collect(), // right leaves
    ];
    Partition::new(blocks, a + b + 2).expect("orbit blocks partition the double star")
}

/// Eigenvalues of an equitable quotient of a symmetric matrix.
///
/// The quotient itself is not symmetric, but scaling by the square roots of
/// the block sizes produces a similar symmetric matrix
/// (c_ij = b_ij * sqrt(|B_i| / |B_j|)), which the Jacobi solver handles.
pub fn quotient_eigenvalues(q: &QuotientResult, sizes: &[usize]) -> Result<Vec<f64>> {
    if !q.equitable {
        return Err(Error::NotEquitable);
    }
    let k = q.matrix.order();
    let mut sym = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let b = q.matrix.get(i, j).to_f64().expect("quotient entry fits f64");
            sym[i][j] = b * (sizes[i] as f64 / sizes[j] as f64).sqrt();
        }
    }
    spectra::eig_symmetric(&sym)
}

/// Checks that every eigenvalue of the equitable quotient appears among the
/// eigenvalues of the full matrix within `tol`, and that the largest ones
/// coincide when the matrix is nonnegative and irreducible. Errors when the
/// partition is not equitable (the lemma's hypothesis).
pub fn quotient_eigs_subset_check(m: &IntMatrix, p: &Partition, tol: f64) -> Result<bool> {
    let q = quotient(m, p)?;
    if !q.equitable {
        return Err(Error::NotEquitable);
    }
    let q_eigs = quotient_eigenvalues(&q, &p.block_sizes())?;
    let full_eigs = spectra::eig_symmetric(&m.to_f64())?;
    let all_embedded = q_eigs
        .iter()
        .all(|qe| full_eigs.iter().any(|fe| (qe - fe).abs() <= tol));
    if !all_embedded {
        return Ok(false);
    }
    if nonnegative_irreducible(m) {
        let top_q = q_eigs.last().expect("quotient is nonempty");
        let top_m = full_eigs.last().expect("matrix is nonempty");
        if (top_q - top_m).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

fn nonnegative_irreducible(m: &IntMatrix) -> bool {
    let n = m.order();
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) < 0 {
                return false;
            }
        }
    }
    // irreducible <=> the nonzero pattern is connected (m is symmetric here)
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| {
            (i + 1..n)
                .filter(move |&j| m.get(i, j) != 0)
                .map(move |j| (i, j))
        })
        .collect();
    match Graph::from_edges(n, &edges) {
        Ok(g) => g.is_connected(),
        Err(_) => false,
    }
}

/// Exact identity audit: each quotient row, scaled back up by its block size,
/// recovers the total entry sum of that block row of m.
pub fn quotient_row_identity_holds(m: &IntMatrix, p: &Partition, q: &QuotientResult) -> bool {
    for (bi, rows) in p.blocks().iter().enumerate() {
        let row_total: Rational = (0..p.blocks().len())
            .map(|bj| q.matrix.get(bi, bj) * rat_int(rows.len() as i64))
            .sum();
        let rhs: i64 = rows
            .iter()
            .map(|&r| (0..m.order()).map(|c| m.get(r, c)).sum::<i64>())
            .sum();
        if row_total != rat_int(rhs) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::char_poly_rat;
    use crate::families;
    use crate::graph::distance_matrix;

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(Partition::new(vec![vec![0], vec![0, 1]], 2).is_err());
        assert!(Partition::new(vec![vec![0]], 2).is_err());
        assert!(Partition::new(vec![vec![0], vec![]], 1).is_err());
        assert!(Partition::new(vec![vec![0, 5]], 2).is_err());
    }

    #[test]
    fn partition_string_round_trip() {
        let p: Partition = "0,1;2;3,4".parse().unwrap();
        assert_eq!(p.blocks().len(), 3);
        assert_eq!(p.to_string(), "0,1;2;3,4");
    }

    #[test]
    fn k23_parts_quotient_is_equitable() {
        let g = families::complete_multipartite(&[2, 3]).unwrap();
        let d = distance_matrix(&g).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2, 3, 4]], 5).unwrap();
        let q = quotient(&d, &p).unwrap();
        assert!(q.equitable);
        assert_eq!(q.matrix.order(), 2);
        assert_eq!(*q.matrix.get(0, 0), rat_int(2));
        assert_eq!(*q.matrix.get(0, 1), rat_int(3));
        assert_eq!(*q.matrix.get(1, 0), rat_int(2));
        assert_eq!(*q.matrix.get(1, 1), rat_int(4));
        assert!(quotient_row_identity_holds(&d, &p, &q));
    }

    #[test]
    fn spider_orbit_quotient_matches_printed_matrix() {
        for q_legs in [2usize, 3, 5] {
            let g = families::t42_spider(q_legs).unwrap();
            let d = distance_matrix(&g).unwrap();
            let p = Partition::new(families::t42_blocks(q_legs), 2 * q_legs + 1).unwrap();
            let res = quotient(&d, &p).unwrap();
            assert!(res.equitable);
            let q = q_legs as i64;
            let expected = RatMatrix::from_int_rows(&[
                vec![0, q, 2 * q],
                vec![1, 2 * (q - 1), 3 * (q - 1) + 1],
                vec![2, 3 * (q - 1) + 1, 4 * (q - 1)],
            ]);
            assert_eq!(res.matrix, expected);
        }
    }

    #[test]
    fn degree_partition_matches_spider_orbits_for_q3() {
        // for q >= 3 the degree partition separates leaves, midpoints, center
        let g = families::t42_spider(3).unwrap();
        let p = degree_partition(&g);
        assert_eq!(p.block_sizes(), vec![3, 3, 1]);
        let d = distance_matrix(&g).unwrap();
        assert!(quotient(&d, &p).unwrap().equitable);

        assert_eq!(degree_partition(&families::complete(4).unwrap()).block_sizes(), vec![4]);
        assert_eq!(degree_partition(&families::path(4).unwrap()).block_sizes(), vec![2, 2]);
    }

    #[test]
    fn singleton_partition_quotient_is_the_matrix() {
        let d = distance_matrix(&families::path(4).unwrap()).unwrap();
        let p = Partition::singletons(4);
        let q = quotient(&d, &p).unwrap();
        assert!(q.equitable);
        assert_eq!(q.matrix, d.to_rational());
    }

    #[test]
    fn double_star_quotient_matches_live_computation() {
        for s in 0..=5 {
            for t in 0..=5 {
                let g = families::double_star(s + 1, t + 1).unwrap();
                let d = distance_matrix(&g).unwrap();
                let p = double_star_orbit_partition(s, t);
                let q = quotient(&d, &p).unwrap();
                assert!(q.equitable, "s={s} t={t}");
                assert_eq!(q.matrix, double_star_quotient(s, t), "s={s} t={t}");
            }
        }
    }

    #[test]
    fn double_star_quotient_row_zero_for_s1_t1() {
        let m = double_star_quotient(1, 1);
        let row: Vec<Rational> = (0..4).map(|j| m.get(0, j).clone()).collect();
        assert_eq!(row, vec![rat_int(2), rat_int(1), rat_int(2), rat_int(6)]);
    }

    #[test]
    fn subset_check_on_petersen_coclique_partition() {
        // the four pairs containing element 0 form an independent set
        let g = families::petersen();
        let d = distance_matrix(&g).unwrap();
        let p = Partition::new(vec![vec![0, 1, 2, 3], (4..10).collect()], 10).unwrap();
        assert!(quotient(&d, &p).unwrap().equitable);
        assert!(quotient_eigs_subset_check(&d, &p, 1e-8).unwrap());
    }

    #[test]
    fn subset_check_on_spider_and_singletons() {
        let g = families::t42_spider(3).unwrap();
        let d = distance_matrix(&g).unwrap();
        let p = Partition::new(families::t42_blocks(3), 7).unwrap();
        assert!(quotient_eigs_subset_check(&d, &p, 1e-8).unwrap());

        let d4 = distance_matrix(&families::path(4).unwrap()).unwrap();
        assert!(quotient_eigs_subset_check(&d4, &Partition::singletons(4), 1e-8).unwrap());
    }

    #[test]
    fn subset_check_rejects_inequitable_partition() {
        let d = distance_matrix(&families::path(4).unwrap()).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        // {0,1} vs {2,3} of P4: row sums differ, not equitable
        assert!(matches!(
            quotient_eigs_subset_check(&d, &p, 1e-8),
            Err(Error::NotEquitable)
        ));
    }

    #[test]
    fn quotient_charpoly_roots_divide_full_charpoly() {
        // every rational root of the quotient char poly is a root of the
        // full char poly (equitable case)
        use crate::exact::{char_poly, poly_eval, poly_integer_roots};
        let g = families::petersen();
        let d = distance_matrix(&g).unwrap();
        let p = Partition::new(vec![vec![0, 1, 2, 3], (4..10).collect()], 10).unwrap();
        let q = quotient(&d, &p).unwrap();
        let qp = char_poly_rat(&q.matrix).unwrap();
        let full = char_poly(&d).unwrap();
        for (root, _) in poly_integer_roots(&qp) {
            let val = poly_eval(&full, &Rational::from_integer(root));
            assert!(val.is_zero());
        }
    }
}
