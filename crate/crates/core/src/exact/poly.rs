//! Polynomials with exact rational coefficients, plus characteristic
//! polynomials via Faddeev-LeVerrier.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat_int, IntMatrix, RatMatrix, Rational};
use crate::error::{Error, Result};

/// Default order bound for the exact characteristic polynomial
/// (Faddeev-LeVerrier costs O(n^4) exact multiplications).
pub const CHAR_POLY_DEFAULT_BOUND: usize = 64;

/// Polynomial with rational coefficients, stored ascending by degree.
///
/// The trailing coefficient is nonzero unless this is the zero polynomial,
/// which is represented by an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::from_ints(&[1]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Horner evaluation, exact. The zero polynomial evaluates to 0.
pub fn poly_eval(p: &Polynomial, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Characteristic polynomial det(lambda I - m) of an integer matrix, exact,
/// by Faddeev-LeVerrier. Monic of degree n with integer coefficients; every
/// division by the step index k is exact.
pub fn char_poly(m: &IntMatrix) -> Result<Polynomial> {
    char_poly_with_bound(m, CHAR_POLY_DEFAULT_BOUND)
}

pub fn char_poly_with_bound(m: &IntMatrix, bound: usize) -> Result<Polynomial> {
    let n = m.order();
    if n > bound {
        return Err(Error::CharPolyBound { order: n, bound });
    }
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect();
    // c[k] is the coefficient of lambda^(n-k); c[0] = 1
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    // work = A * (previous work + c_{k-1} I), starting from work = A
    let mut work = a.clone();
    for k in 1..=n {
        let tr: BigInt = (0..n).map(|i| work[i][i].clone()).sum();
        c[k] = -tr / BigInt::from(k as i64); // exact
        if k == n {
            break;
        }
        let mut shifted = work;
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += &c[k];
        }
        work = mat_mul_bigint(&a, &shifted);
    }
    let coeffs: Vec<Rational> = (0..=n)
        .rev()
        .map(|k| Rational::from_integer(c[k].clone()))
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// Characteristic polynomial of an exact rational matrix (quotient matrices
/// are rational in general).
pub fn char_poly_rat(m: &RatMatrix) -> Result<Polynomial> {
    let n = m.order();
    if n > CHAR_POLY_DEFAULT_BOUND {
        return Err(Error::CharPolyBound {
            order: n,
            bound: CHAR_POLY_DEFAULT_BOUND,
        });
    }
    let a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut c = vec![Rational::zero(); n + 1];
    c[0] = Rational::one();
    let mut work = a.clone();
    for k in 1..=n {
        let tr: Rational = (0..n).map(|i| work[i][i].clone()).sum();
        c[k] = -tr / rat_int(k as i64);
        if k == n {
            break;
        }
        let mut shifted = work;
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += &c[k];
        }
        work = mat_mul_rat(&a, &shifted);
    }
    let coeffs: Vec<Rational> = (0..=n).rev().map(|k| c[k].clone()).collect();
    Ok(Polynomial::new(coeffs))
}

fn mat_mul_bigint(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn mat_mul_rat(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// All integer roots with multiplicities, sorted descending by root.
///
/// Denominators are cleared first (roots are unchanged); candidates come from
/// a divisor search on the trailing nonzero coefficient, and multiplicities
/// from repeated synthetic division.
pub fn poly_integer_roots(p: &Polynomial) -> Vec<(BigInt, usize)> {
    if p.is_zero() {
        return Vec::new();
    }
    // clear denominators
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();

    let mut roots: Vec<(BigInt, usize)> = Vec::new();

    // factor out lambda^k
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        coeffs.drain(..zeros);
        roots.push((BigInt::zero(), zeros));
    }
    if coeffs.len() <= 1 {
        roots.sort_by(|a, b| b.0.cmp(&a.0));
        return roots;
    }

    for d in divisors(&coeffs[0].abs()) {
        for cand in [d.clone(), -d] {
            let mut mult = 0;
            loop {
                match synthetic_div(&coeffs, &cand) {
                    Some(q) => {
                        coeffs = q;
                        mult += 1;
                        if coeffs.len() <= 1 {
                            break;
                        }
                    }
                    None => break,
                }
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
        }
        if coeffs.len() <= 1 {
            break;
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    roots
}

/// Divide by (x - r); `None` if r is not a root.
fn synthetic_div(coeffs: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let mut quot = vec![BigInt::zero(); coeffs.len() - 1];
    let mut carry = BigInt::zero();
    for k in (1..coeffs.len()).rev() {
        carry = &coeffs[k] + r * &carry;
        quot[k - 1] = carry.clone();
    }
    let rem = &coeffs[0] + r * carry;
    if rem.is_zero() {
        Some(quot)
    } else {
        None
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
