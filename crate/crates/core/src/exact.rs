//! Exact integer/rational linear algebra.
//!
//! Everything here is exact: Bareiss fraction-free elimination for integer
//! determinants, rational Gaussian elimination for ranks and nullspaces, and
//! Faddeev-LeVerrier for characteristic polynomials. Spectral membership
//! questions are decided here with no floating-point doubt.

mod poly;

pub use poly::{char_poly, char_poly_rat, poly_eval, poly_integer_roots, Polynomial};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: arbitrary-precision, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense square integer matrix. Entries stay machine-sized; the exact kernels
/// promote to arbitrary precision internally where intermediates grow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix {
            n,
            entries: rows.concat(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `self + c * I`.
    pub fn add_scalar_diag(&self, c: i64) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.set(i, i, m.get(i, i) + c);
        }
        m
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&e| rat_int(e)).collect(),
        }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as f64).collect())
            .collect()
    }

    /// Exact matrix-vector product over the rationals.
    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| rat_int(self.get(i, j)) * &x[j])
                    .sum::<Rational>()
            })
            .collect()
    }
}

/// Dense square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        RatMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RatMatrix {
            n,
            entries: rows.concat(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        IntMatrix::from_rows(rows).to_rational()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    /// `self - lam * I`.
    pub fn sub_scalar_diag(&self, lam: &Rational) -> RatMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = m.get(i, i) - lam;
            m.set(i, i, v);
        }
        m
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).to_f64().expect("rational fits in f64"))
                    .collect()
            })
            .collect()
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// All intermediate divisions are exact; intermediates are arbitrary-precision
/// because pivots on distance matrices overflow 64 bits already around n = 20.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by Bareiss
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Row echelon form over the rationals, in place. Returns the pivot columns.
///
/// Pivot choice: among nonzero candidates in the current column, take the one
/// with the smallest combined numerator+denominator bit length. Correctness is
/// pivot-independent; this just keeps the arithmetic cheap.
fn echelonize(a: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot_row = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].numer().bits() + a[i][c].denom().bits());
        let Some(p) = pivot_row else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] / &a[r][c];
            for j in c..cols {
                let v = &a[i][j] - &factor * &a[r][j];
                a[i][j] = v;
            }
            a[i][c] = Rational::zero();
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact (rank, nullity) of a square rational matrix.
pub fn rank_nullity(m: &RatMatrix) -> (usize, usize) {
    let n = m.order();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let rank = echelonize(&mut a).len();
    (rank, n - rank)
}

/// Basis of the exact nullspace of a square rational matrix.
pub fn nullspace_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let n = m.order();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let pivots = echelonize(&mut a);
    // back-substitute to reduced form
    for (r, &c) in pivots.iter().enumerate().rev() {
        let inv = a[r][c].clone();
        for j in 0..n {
            let v = &a[r][j] / &inv;
            a[r][j] = v;
        }
        for i in 0..r {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..n {
                let v = &a[i][j] - &f * &a[r][j];
                a[i][j] = v;
            }
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![Rational::zero(); n];
        v[fc] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact multiplicity of the integer `lam` as an eigenvalue of `m`
/// (the nullity of `m - lam I`); zero means `lam` is not an eigenvalue.
pub fn eigen_multiplicity_exact(m: &IntMatrix, lam: i64) -> usize {
    let shifted = m.add_scalar_diag(-lam);
    rank_nullity(&shifted.to_rational()).1
}

/// Exact inertia (positive, zero, negative eigenvalue counts) of a symmetric
/// rational matrix, by Sylvester's law via symmetric congruence elimination.
pub fn inertia_exact(m: &RatMatrix) -> (usize, usize, usize) {
    let n = m.order();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            // try a symmetric swap with a later nonzero diagonal entry
            if let Some(r) = (k + 1..n).find(|&r| !a[r][r].is_zero()) {
                a.swap(k, r);
                for row in a.iter_mut() {
                    row.swap(k, r);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // all remaining diagonal entries are zero: congruence
                // T = I + E_{kj} makes the (k,k) entry 2*a[k][j] != 0
                for col in 0..n {
                    let v = &a[k][col] + &a[j][col];
                    a[k][col] = v;
                }
                for row in a.iter_mut() {
                    let v = &row[k] + &row[j];
                    row[k] = v;
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &a[i][j] - &f * &a[k][j];
                a[i][j] = v;
            }
            // keep symmetry explicitly
            for j in k..n {
                a[j][i] = a[i][j].clone();
            }
        }
    }
    (pos, zero, neg)
}

/// Audit helper: `num-rational` keeps values reduced with positive
/// denominators; tests call this on produced values.
pub fn is_normalized(r: &Rational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
