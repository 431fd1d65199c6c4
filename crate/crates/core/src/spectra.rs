//! Numeric symmetric eigensolver and spectrum post-processing.
//!
//! A cyclic-by-row Jacobi solver produces eigenvalues; grouping turns the raw
//! list into distinct values with multiplicities; near-integer values are
//! confirmed or refuted against the exact kernel before being snapped, never
//! assumed. Defaults: grouping tolerance 1e-7, integer-snap tolerance 1e-6.

use crate::error::{Error, Result};
use crate::exact::{self, IntMatrix};
use crate::graph::{self, Graph};

pub const DEFAULT_GROUP_TOL: f64 = 1e-7;
pub const DEFAULT_INT_SNAP_TOL: f64 = 1e-6;
pub const DEFAULT_ZERO_TOL: f64 = 1e-9;

const SYMMETRY_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Distinct eigenvalues with multiplicities, sorted descending by value.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    items: Vec<(f64, usize)>,
    n: usize,
    group_tol: f64,
}

impl Spectrum {
    /// Descending (value, multiplicity) pairs.
    pub fn items(&self) -> &[(f64, usize)] {
        &self.items
    }

    /// Total eigenvalue count, with multiplicity.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group_tol(&self) -> f64 {
        self.group_tol
    }

    /// Largest eigenvalue; panics on an empty spectrum.
    pub fn lambda1(&self) -> f64 {
        self.items[0].0
    }

    /// Smallest eigenvalue; panics on an empty spectrum.
    pub fn lambda_min(&self) -> f64 {
        self.items.last().unwrap().0
    }

    /// Eigenvalues expanded to a descending list of length n.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.n);
        for &(v, m) in &self.items {
            out.extend(std::iter::repeat(v).take(m));
        }
        out
    }

    /// Compact display like `15^1 0^4 -3^5`.
    pub fn to_display(&self) -> String {
        self.items
            .iter()
            .map(|(v, m)| format!("{v:.6}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Eigenvalues of a symmetric matrix, ascending, by cyclic-by-row Jacobi
/// rotations with a fixed sweep order. Errors when the input is asymmetric
/// beyond 1e-12 or when 100 sweeps do not reach convergence.
pub fn eig_symmetric(m: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        for j in 0..n {
            let delta = (m[i][j] - m[j][i]).abs();
            if delta > SYMMETRY_TOL {
                return Err(Error::Asymmetric { i, j, delta });
            }
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let frob: f64 = a
        .iter()
        .flat_map(|r| r.iter().map(|x| x * x))
        .sum::<f64>()
        .sqrt();
    let target = if frob == 0.0 { 0.0 } else { 1e-12 * frob };

    let off = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..a.len() {
            for j in 0..a.len() {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = off(&a) <= target;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = arp - s * (arq + tau * arp);
                    a[p][r] = a[r][p];
                    a[r][q] = arq + s * (arp - tau * arq);
                    a[q][r] = a[r][q];
                }
            }
        }
        converged = off(&a) <= target;
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(f64::total_cmp);
    Ok(eigs)
}

/// Single-linkage grouping of a sorted eigenvalue list: adjacent values within
/// `tol` merge into one item whose value is the group mean.
pub fn group_spectrum(vals: &[f64], tol: f64) -> Spectrum {
    debug_assert!(vals.windows(2).all(|w| w[0] <= w[1]), "input must be sorted");
    let mut items: Vec<(f64, usize)> = Vec::new();
    let mut i = 0;
    while i < vals.len() {
        let mut j = i + 1;
        while j < vals.len() && vals[j] - vals[j - 1] <= tol {
            j += 1;
        }
        let mean = vals[i..j].iter().sum::<f64>() / (j - i) as f64;
        items.push((mean, j - i));
        i = j;
    }
    items.reverse();
    Spectrum {
        items,
        n: vals.len(),
        group_tol: tol,
    }
}

/// Confirms or refutes near-integer groups with the exact kernel and snaps
/// confirmed values to the integer exactly.
fn snap_integers(mut s: Spectrum, m: &IntMatrix, snap_tol: f64) -> Spectrum {
    for item in &mut s.items {
        let rounded = item.0.round();
        if (item.0 - rounded).abs() < snap_tol {
            let mult = exact::eigen_multiplicity_exact(m, rounded as i64);
            if mult >= 1 {
                item.0 = rounded;
            }
        }
    }
    s
}

/// Distance spectrum of a connected graph with default tolerances.
pub fn distance_spectrum(g: &Graph) -> Result<Spectrum> {
    distance_spectrum_with(g, DEFAULT_GROUP_TOL, DEFAULT_INT_SNAP_TOL)
}

pub fn distance_spectrum_with(g: &Graph, group_tol: f64, snap_tol: f64) -> Result<Spectrum> {
    let d = graph::distance_matrix(g)?;
    let eigs = eig_symmetric(&d.to_f64())?;
    Ok(snap_integers(group_spectrum(&eigs, group_tol), &d, snap_tol))
}

/// Laplacian spectrum of a connected graph; the smallest eigenvalue is 0 with
/// multiplicity one.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    laplacian_spectrum_with(g, DEFAULT_GROUP_TOL, DEFAULT_INT_SNAP_TOL)
}

pub fn laplacian_spectrum_with(g: &Graph, group_tol: f64, snap_tol: f64) -> Result<Spectrum> {
    graph::distance_matrix(g)?; // connectivity gate
    let l = graph::laplacian_matrix(g);
    let eigs = eig_symmetric(&l.to_f64())?;
    Ok(snap_integers(group_spectrum(&eigs, group_tol), &l, snap_tol))
}

/// Counts by sign, with |value| <= zero_tol counted as zero.
pub fn inertia(s: &Spectrum, zero_tol: f64) -> (usize, usize, usize) {
    let mut pos = 0;
    let mut zero = 0;
    let mut neg = 0;
    for &(v, m) in s.items() {
        if v.abs() <= zero_tol {
            zero += m;
        } else if v > 0.0 {
            pos += m;
        } else {
            neg += m;
        }
    }
    (pos, zero, neg)
}

/// Number of distinct eigenvalues.
pub fn count_distinct(s: &Spectrum) -> usize {
    s.items().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn eig_2x2_swap() {
        let eigs = eig_symmetric(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_close(eigs[0], -1.0, 1e-12);
        assert_close(eigs[1], 1.0, 1e-12);
    }

    #[test]
    fn eig_k4_distance() {
        let d = graph::distance_matrix(&families::complete(4).unwrap()).unwrap();
        let eigs = eig_symmetric(&d.to_f64()).unwrap();
        for v in &eigs[..3] {
            assert_close(*v, -1.0, 1e-10);
        }
        assert_close(eigs[3], 3.0, 1e-10);
    }

    #[test]
    fn eig_rejects_asymmetric() {
        let r = eig_symmetric(&[vec![0.0, 1.0], vec![0.5, 0.0]]);
        assert!(matches!(r, Err(Error::Asymmetric { .. })));
    }

    #[test]
    fn grouping_merges_and_averages() {
        let s = group_spectrum(&[-3.0000000001, -2.9999999999, 0.0, 15.0], 1e-6);
        assert_eq!(s.items().len(), 3);
        assert_eq!(s.items()[0], (15.0, 1));
        assert_eq!(s.items()[1], (0.0, 1));
        assert_eq!(s.items()[2].1, 2);
        assert_close(s.items()[2].0, -3.0, 1e-9);

        let empty = group_spectrum(&[], 1e-6);
        assert_eq!(empty.n(), 0);
        assert!(empty.items().is_empty());
    }

    #[test]
    fn petersen_distance_spectrum_snaps_exactly() {
        let s = distance_spectrum(&families::petersen()).unwrap();
        assert_eq!(s.items(), &[(15.0, 1), (0.0, 4), (-3.0, 5)]);
    }

    #[test]
    fn star_k14_spectrum_matches_closed_form() {
        // K_{1,4} has n = 5: {3 + sqrt(13), 3 - sqrt(13), (-2)^3}
        let s = distance_spectrum(&families::star(5).unwrap()).unwrap();
        assert_eq!(s.items().len(), 3);
        assert_close(s.items()[0].0, 3.0 + 13f64.sqrt(), 1e-8);
        assert_close(s.items()[1].0, 3.0 - 13f64.sqrt(), 1e-8);
        assert_eq!(s.items()[2], (-2.0, 3));
    }

    #[test]
    fn p4_spectrum_matches_closed_form() {
        let s = distance_spectrum(&families::path(4).unwrap()).unwrap();
        let expected = [
            2.0 + 10f64.sqrt(),
            2f64.sqrt() - 2.0,
            2.0 - 10f64.sqrt(),
            -2.0 - 2f64.sqrt(),
        ];
        assert_eq!(s.items().len(), 4);
        for (item, want) in s.items().iter().zip(expected) {
            assert_close(item.0, want, 1e-8);
            assert_eq!(item.1, 1);
        }
    }

    #[test]
    fn s22_spectrum_matches_remark() {
        let s = distance_spectrum(&families::double_star(2, 2).unwrap()).unwrap();
        let expected = [
            (10.0, 1),
            (-5.0 / 2.0 + 17f64.sqrt() / 2.0, 1),
            (-1.0, 1),
            (-2.0, 2),
            (-5.0 / 2.0 - 17f64.sqrt() / 2.0, 1),
        ];
        assert_eq!(s.items().len(), expected.len());
        for (item, want) in s.items().iter().zip(expected) {
            assert_close(item.0, want.0, 1e-8);
            assert_eq!(item.1, want.1);
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            distance_spectrum(&g),
            Err(Error::Disconnected { .. })
        ));
        assert!(matches!(
            laplacian_spectrum(&g),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn inertia_cases() {
        let pet = distance_spectrum(&families::petersen()).unwrap();
        assert_eq!(inertia(&pet, DEFAULT_ZERO_TOL), (1, 4, 5));
        let k3 = distance_spectrum(&families::complete(3).unwrap()).unwrap();
        assert_eq!(inertia(&k3, DEFAULT_ZERO_TOL), (1, 0, 2));
        for n in [2, 5, 9] {
            let t = distance_spectrum(&families::star(n).unwrap()).unwrap();
            assert_eq!(inertia(&t, DEFAULT_ZERO_TOL), (1, 0, n - 1));
        }
    }

    #[test]
    fn distinct_counts() {
        for n in [2, 4, 7] {
            let s = distance_spectrum(&families::complete(n).unwrap()).unwrap();
            assert_eq!(count_distinct(&s), 2);
        }
        assert_eq!(
            count_distinct(&distance_spectrum(&families::petersen()).unwrap()),
            3
        );
        assert_eq!(
            count_distinct(&distance_spectrum(&families::path(4).unwrap()).unwrap()),
            4
        );
    }

    #[test]
    fn laplacian_spectra() {
        let k2 = laplacian_spectrum(&families::path(2).unwrap()).unwrap();
        assert_eq!(k2.items(), &[(2.0, 1), (0.0, 1)]);
        let p3 = laplacian_spectrum(&families::path(3).unwrap()).unwrap();
        assert_eq!(p3.items(), &[(3.0, 1), (1.0, 1), (0.0, 1)]);
        let star = laplacian_spectrum(&families::star(5).unwrap()).unwrap();
        assert_eq!(star.items(), &[(5.0, 1), (1.0, 3), (0.0, 1)]);
    }
}
