//! One operation per theorem, lemma, or remark claim, returning structured
//! verdicts that tests, the CLI, and the searches all share.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{
    self, char_poly, char_poly_rat, poly_eval, IntMatrix, Polynomial, Rational,
};
use crate::families::{self, TreeRecipe};
use crate::graph::{self, Graph};
use crate::quotient::{self, Partition};
use crate::spectra::{self, Spectrum};

/// Structured verdict for one claim; a falsifying witness is attached
/// whenever the claim fails.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub claim_id: String,
    pub holds: bool,
    pub witness: Option<serde_json::Value>,
}

impl Verdict {
    pub fn pass(claim_id: &str) -> Self {
        Verdict {
            claim_id: claim_id.to_string(),
            holds: true,
            witness: None,
        }
    }

    pub fn fail(claim_id: &str, witness: serde_json::Value) -> Self {
        Verdict {
            claim_id: claim_id.to_string(),
            holds: false,
            witness: Some(witness),
        }
    }
}

fn require_tree(t: &Graph, claim: &str) -> Result<()> {
    if !graph::is_tree(t) || t.n() < 2 {
        return Err(Error::NotATree(format!(
            "{claim} needs a tree with n >= 2"
        )));
    }
    Ok(())
}

/// det D(T) = (-1)^(n-1) (n-1) 2^(n-2), exactly.
pub fn graham_pollack_expected(n: usize) -> BigInt {
    let magnitude = BigInt::from(n as i64 - 1) * (BigInt::one() << (n - 2));
    if n % 2 == 0 {
        -magnitude
    } else {
        magnitude
    }
}

pub fn check_graham_pollack(t: &Graph) -> Result<Verdict> {
    require_tree(t, "graham-pollack")?;
    let d = graph::distance_matrix(t)?;
    let det = exact::det_bareiss(&d);
    let expected = graham_pollack_expected(t.n());
    if det == expected {
        Ok(Verdict::pass("graham-pollack"))
    } else {
        Ok(Verdict::fail(
            "graham-pollack",
            json!({"det": det.to_string(), "expected": expected.to_string()}),
        ))
    }
}

/// Interlacing of tree distance eigenvalues with -2/mu over the Laplacian
/// eigenvalues: 0 > -2/mu_1 > lambda_2 >= -2/mu_2 >= ... >= -2/mu_(n-1)
/// >= lambda_n. Weak inequalities get `tol` slack; strict ones none.
pub fn check_merris_interlacing(t: &Graph, tol: f64) -> Result<Verdict> {
    require_tree(t, "merris")?;
    let n = t.n();
    let d = graph::distance_matrix(t)?;
    let mut dist: Vec<f64> = spectra::eig_symmetric(&d.to_f64())?;
    dist.reverse(); // descending
    let l = graph::laplacian_matrix(t);
    let mut lap: Vec<f64> = spectra::eig_symmetric(&l.to_f64())?;
    lap.reverse();

    // interleaved chain: 0, -2/mu_1, lambda_2, -2/mu_2, lambda_3, ...
    let mut chain = vec![0.0f64];
    let mut strict = Vec::new(); // strictness of the step ending at chain[i+1]
    for j in 1..n {
        chain.push(-2.0 / lap[j - 1]);
        strict.push(j == 1); // 0 > -2/mu_1
        chain.push(dist[j]);
        // -2/mu_1 > lambda_2 is strict unless lambda_2 is the final entry
        strict.push(j == 1 && n > 2);
    }
    for (i, &is_strict) in strict.iter().enumerate() {
        let (a, b) = (chain[i], chain[i + 1]);
        let ok = if is_strict { a > b } else { a >= b - tol };
        if !ok {
            return Ok(Verdict::fail(
                "merris",
                json!({"position": i, "left": a, "right": b, "strict": is_strict}),
            ));
        }
    }
    Ok(Verdict::pass("merris"))
}

/// Tree distance matrices have inertia (1, 0, n-1).
pub fn check_tree_inertia(t: &Graph) -> Result<Verdict> {
    require_tree(t, "inertia")?;
    let s = spectra::distance_spectrum(t)?;
    let inertia = spectra::inertia(&s, spectra::DEFAULT_ZERO_TOL);
    if inertia == (1, 0, t.n() - 1) {
        Ok(Verdict::pass("inertia"))
    } else {
        Ok(Verdict::fail(
            "inertia",
            json!({"inertia": inertia, "expected": (1, 0, t.n() - 1)}),
        ))
    }
}

/// lambda_min(D) <= -diameter, with equality exactly for complete
/// multipartite graphs.
pub fn check_smallest_eig_bound(g: &Graph, tol: f64) -> Result<Verdict> {
    let d = graph::diameter(g)? as f64;
    let s = spectra::distance_spectrum(g)?;
    let lam_min = s.lambda_min();
    if lam_min > -d + tol {
        return Ok(Verdict::fail(
            "smallest-bound",
            json!({"lambda_min": lam_min, "diameter": d}),
        ));
    }
    let equality = (lam_min + d).abs() <= tol;
    let multipartite = graph::is_complete_multipartite(g);
    if equality != multipartite {
        return Ok(Verdict::fail(
            "smallest-bound",
            json!({
                "lambda_min": lam_min,
                "diameter": d,
                "equality": equality,
                "complete_multipartite": multipartite,
            }),
        ));
    }
    Ok(Verdict::pass("smallest-bound"))
}

/// A connected graph with diameter d has at least d+1 distinct Laplacian
/// eigenvalues.
pub fn check_laplacian_distinct_bound(g: &Graph) -> Result<Verdict> {
    let d = graph::diameter(g)?;
    let s = spectra::laplacian_spectrum(g)?;
    let distinct = spectra::count_distinct(&s);
    if distinct >= d + 1 {
        Ok(Verdict::pass("laplacian-distinct"))
    } else {
        Ok(Verdict::fail(
            "laplacian-distinct",
            json!({"distinct": distinct, "diameter": d}),
        ))
    }
}

/// Distance spectrum of a k-regular graph with diameter <= 2 from its
/// adjacency spectrum: 2n-2-k, then -(2 + lambda_i) for the rest.
pub fn regular_d2_distance_spectrum(adj_eigs: &[f64], n: usize, k: usize) -> Result<Vec<f64>> {
    if adj_eigs.len() != n {
        return Err(Error::Bound(format!(
            "expected {n} adjacency eigenvalues, got {}",
            adj_eigs.len()
        )));
    }
    if (adj_eigs[0] - k as f64).abs() > 1e-9 {
        return Err(Error::Bound(format!(
            "leading adjacency eigenvalue {} does not match degree {k}",
            adj_eigs[0]
        )));
    }
    let mut out = Vec::with_capacity(n);
    out.push((2 * n - 2 - k) as f64);
    out.extend(adj_eigs[1..].iter().map(|lam| -(2.0 + lam)));
    Ok(out)
}

/// Adjacency eigenvalues of a diameter-2 Moore graph of degree k:
/// k and (-1 +- sqrt(4k-3))/2.
pub fn moore_adjacency_eigs(k: usize) -> (f64, f64, f64) {
    assert!(k >= 2, "Moore graphs of diameter 2 need k >= 2");
    let root = ((4 * k - 3) as f64).sqrt();
    (k as f64, (-1.0 + root) / 2.0, (-1.0 - root) / 2.0)
}

/// One matching class for a graph with exactly three distinct distance
/// eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ThreeDistinctClass {
    CompleteBipartite,
    RegularCompleteMultipartite,
    /// n odd, lambda_1 = c (n-1)/2 with integer c >= 3, m2 = m3 >= 2.
    OddHalf { c: i64 },
    /// All three eigenvalues integral (exact-verified), lambda_2 >= 0,
    /// lambda_3 <= -3.
    Integral { l1: i64, l2: i64, l3: i64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Classification {
    NotThree { distinct: usize },
    Three { classes: Vec<ThreeDistinctClass> },
}

impl Classification {
    /// At least one class matched.
    pub fn holds(&self) -> bool {
        matches!(self, Classification::Three { classes } if !classes.is_empty())
    }
}

/// Part sizes when g is complete multipartite, else None.
fn complete_multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    if !graph::is_complete_multipartite(g) {
        return None;
    }
    let co = g.complement();
    let mut seen = vec![false; co.n()];
    let mut parts = Vec::new();
    for s in 0..co.n() {
        if seen[s] {
            continue;
        }
        let mut size = 0;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            size += 1;
            for &v in co.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        parts.push(size);
    }
    Some(parts)
}

/// Sorts a graph with exactly three distinct distance eigenvalues into the
/// four structural classes; returns every class that matches.
pub fn classify_three_distinct(g: &Graph, tol: f64) -> Result<Classification> {
    let s = spectra::distance_spectrum(g)?;
    if spectra::count_distinct(&s) != 3 {
        return Ok(Classification::NotThree {
            distinct: spectra::count_distinct(&s),
        });
    }
    let items = s.items();
    let (l1, m1) = items[0];
    let (l2, m2) = items[1];
    let (l3, m3) = items[2];
    let n = g.n();
    let mut classes = Vec::new();

    if let Some(parts) = complete_multipartite_parts(g) {
        if parts.len() == 2 {
            classes.push(ThreeDistinctClass::CompleteBipartite);
        }
        if parts.len() >= 2 && parts.windows(2).all(|w| w[0] == w[1]) {
            classes.push(ThreeDistinctClass::RegularCompleteMultipartite);
        }
    }

    if n % 2 == 1 && m1 == 1 && m2 == m3 && m2 >= 2 {
        let half = (n - 1) as f64 / 2.0;
        let c = (l1 / half).round();
        if c >= 3.0 && (l1 - c * half).abs() <= tol {
            classes.push(ThreeDistinctClass::OddHalf { c: c as i64 });
        }
    }

    // integral class: exact nullity at the snapped integer, never numeric
    // closeness alone
    let d = graph::distance_matrix(g)?;
    let integral = |v: f64| -> Option<i64> {
        let r = v.round();
        if (v - r).abs() < spectra::DEFAULT_INT_SNAP_TOL
            && exact::eigen_multiplicity_exact(&d, r as i64) >= 1
        {
            Some(r as i64)
        } else {
            None
        }
    };
    if let (Some(i1), Some(i2), Some(i3)) = (integral(l1), integral(l2), integral(l3)) {
        if i2 >= 0 && i3 <= -3 {
            classes.push(ThreeDistinctClass::Integral {
                l1: i1,
                l2: i2,
                l3: i3,
            });
        }
    }
    Ok(Classification::Three { classes })
}

pub fn classify_verdict(g: &Graph, tol: f64) -> Result<Verdict> {
    let c = classify_three_distinct(g, tol)?;
    if c.holds() {
        Ok(Verdict::pass("three-distinct-class"))
    } else {
        Ok(Verdict::fail(
            "three-distinct-class",
            serde_json::to_value(&c)?,
        ))
    }
}

/// Builds the inductive -1 eigenvector for a pendant-path tree recipe and
/// verifies D x = -x and sum(x) = 0 exactly before returning it.
///
/// Base case (1, -1) on P2; each step appends (x_p, -x_p, -x_p, x_p) for its
/// attachment vertex p.
pub fn build_minus_one_eigenvector(recipe: &TreeRecipe) -> Result<Vec<Rational>> {
    let mut x: Vec<i64> = vec![1, -1];
    for &p in recipe.steps() {
        let xp = x[p];
        x.extend([xp, -xp, -xp, xp]);
    }
    let t = families::build_t_family(recipe);
    let d = graph::distance_matrix(&t)?;
    let xr: Vec<Rational> = x.iter().map(|&v| exact::rat_int(v)).collect();
    let dx = d.mul_vec(&xr);
    for (i, (lhs, rhs)) in dx.iter().zip(&xr).enumerate() {
        if *lhs != -rhs {
            return Err(Error::Internal(format!(
                "eigenvector construction failed at component {i} of recipe {recipe}"
            )));
        }
    }
    let total: i64 = x.iter().sum();
    if total != 0 {
        return Err(Error::Internal(format!(
            "eigenvector for recipe {recipe} has component sum {total}"
        )));
    }
    Ok(xr)
}

/// Exact -1 membership for path distance matrices: present iff k = 2 (mod 4),
/// with multiplicity one when present.
pub fn path_minus_one(k: usize) -> Result<(bool, usize)> {
    if k < 2 {
        return Err(Error::Bound(format!("path_minus_one needs k >= 2, got {k}")));
    }
    let d = graph::distance_matrix(&families::path(k)?)?;
    let mult = exact::eigen_multiplicity_exact(&d, -1);
    Ok((mult >= 1, mult))
}

/// -2 occurs as a tree distance eigenvalue with multiplicity at least
/// n_1 - n_1' (pendant vertices minus pendant neighbors).
pub fn check_collins_bound(t: &Graph) -> Result<Verdict> {
    require_tree(t, "collins")?;
    let (n1, n1p) = graph::pendant_counts(t)?;
    let d = graph::distance_matrix(t)?;
    let mult = exact::eigen_multiplicity_exact(&d, -2);
    if mult >= n1.saturating_sub(n1p) {
        Ok(Verdict::pass("collins"))
    } else {
        Ok(Verdict::fail(
            "collins",
            json!({"multiplicity": mult, "n1": n1, "n1p": n1p}),
        ))
    }
}

/// Star K_{1,t+2} distance characteristic polynomial, factored and expanded:
/// (lambda + 2)^(t+1) * (lambda^2 - (2t+2) lambda - (t+2)).
pub struct StarCharPoly {
    pub linear_power: usize,
    pub quadratic: Polynomial,
    pub expanded: Polynomial,
}

pub fn star_char_poly(t: usize) -> StarCharPoly {
    let ti = t as i64;
    let quadratic = Polynomial::from_ints(&[-(ti + 2), -(2 * ti + 2), 1]);
    let linear = Polynomial::from_ints(&[2, 1]);
    let expanded = linear.pow(t + 1).mul(&quadratic);
    StarCharPoly {
        linear_power: t + 1,
        quadratic,
        expanded,
    }
}

/// The quartic factor of the double-star S_{s+1,t+1} distance characteristic
/// polynomial:
/// f = x^4 - (2t+2s) x^3 - (5st+14s+14t+20) x^2 - (4st+16s+16t+32) x
///     - (4s+4t+12).
pub fn double_star_char_quartic(s: usize, t: usize) -> Polynomial {
    let (s, t) = (s as i64, t as i64);
    Polynomial::from_ints(&[
        -(4 * s + 4 * t + 12),
        -(4 * s * t + 16 * s + 16 * t + 32),
        -(5 * s * t + 14 * s + 14 * t + 20),
        -(2 * t + 2 * s),
        1,
    ])
}

/// Cubic characteristic polynomial of the spider quotient:
/// x^3 - (6q-6) x^2 - (q^2+9q-4) x - 4q.
pub fn t42_cubic(q: usize) -> Polynomial {
    let q = q as i64;
    Polynomial::from_ints(&[-4 * q, -(q * q + 9 * q - 4), -(6 * q - 6), 1])
}

/// Which symmetric-function branch the three-eigenvalue candidates follow:
/// the product lambda_2 * lambda_3 is 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateCase {
    ProductOne,
    ProductTwo,
}

/// Closed-form candidate triple (lambda_1, lambda_2, lambda_3) for an
/// odd-order tree with three distinct distance eigenvalues, per case.
///
/// lambda_2 + lambda_3 and lambda_2 * lambda_3 are verified exactly as
/// integers (no q-th powers are formed); the returned floats compute
/// lambda_2 = product / lambda_3 to dodge the catastrophic cancellation in
/// the textbook formula.
pub fn three_distinct_candidates(q: usize, case: CandidateCase) -> Result<(f64, f64, f64)> {
    if q < 2 {
        return Err(Error::Bound(format!("candidates need q >= 2, got {q}")));
    }
    let (base, product) = match case {
        CandidateCase::ProductOne => (BigInt::from(4), BigInt::from(1)),
        CandidateCase::ProductTwo => (BigInt::from(2), BigInt::from(2)),
    };
    let c = base.pow(q as u32); // 4^q or 2^q
    let lambda1 = BigInt::from(q as i64) * &c;
    let sum = -&c; // lambda_2 + lambda_3
    let disc = &sum * &sum - BigInt::from(4) * &product;

    // Eq-style exact identities: c * product^q = 4^q, and
    // lambda_1 + q (lambda_2 + lambda_3) = 0
    let four_q = BigInt::from(4).pow(q as u32);
    if &c * product.pow(q as u32) != four_q {
        return Err(Error::Internal("candidate product identity failed".into()));
    }
    if &lambda1 + BigInt::from(q as i64) * &sum != BigInt::zero() {
        return Err(Error::Internal("candidate trace identity failed".into()));
    }

    let sum_f = sum.to_f64().expect("sum fits f64 at desk scale");
    let disc_f = disc.to_f64().expect("disc fits f64 at desk scale");
    let l3 = (sum_f - disc_f.sqrt()) / 2.0;
    let l2 = product.to_f64().unwrap() / l3;
    let l1 = lambda1.to_f64().expect("lambda1 fits f64");
    Ok((l1, l2, l3))
}

/// One row of the proof-exclusion table: the four boundary functions at q,
/// with exact sign flags.
#[derive(Debug, Clone, Serialize)]
pub struct FormRow {
    pub q: usize,
    pub h1: f64,
    pub h2: f64,
    pub l1: f64,
    pub l2: f64,
    pub h1_positive: bool,
    pub h2_positive: bool,
    pub l1_positive: bool,
    pub l2_positive: bool,
}

/// Exact sign of I + sqrt(d) for integer I and positive integer d.
fn sign_plus_sqrt(i: &BigInt, d: &BigInt) -> i32 {
    if !i.is_negative() {
        return 1;
    }
    let i2 = i * i;
    match d.cmp(&i2) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => -1,
    }
}

/// Exact sign of I - sqrt(d).
fn sign_minus_sqrt(i: &BigInt, d: &BigInt) -> i32 {
    if !i.is_positive() {
        return -1;
    }
    let i2 = i * i;
    match i2.cmp(d) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => -1,
    }
}

/// Evaluates h1, h2, l1, l2 for q = 2..=q_max.
///
/// h1/l1 = q 4^q - 4^q +- sqrt(16^q - 4) - 6q + 6,
/// h2/l2 = q 2^q - 2^q +- sqrt(4^q - 8) - 6q + 6.
/// Floats carry the displayed values; the sign flags are decided exactly in
/// integer arithmetic (the float path cancels catastrophically near q = 2).
pub fn form_exclusions(q_max: usize) -> Result<Vec<FormRow>> {
    if q_max < 2 {
        return Err(Error::Bound(format!("q_max must be >= 2, got {q_max}")));
    }
    let mut rows = Vec::with_capacity(q_max - 1);
    for q in 2..=q_max {
        let qi = BigInt::from(q as i64);
        let four_q = BigInt::from(4).pow(q as u32);
        let two_q = BigInt::from(2).pow(q as u32);
        let i1 = &qi * &four_q - &four_q - BigInt::from(6 * q as i64) + 6;
        let i2 = &qi * &two_q - &two_q - BigInt::from(6 * q as i64) + 6;
        let d1 = BigInt::from(16).pow(q as u32) - 4;
        let d2 = BigInt::from(4).pow(q as u32) - 8;

        let f = |b: &BigInt| b.to_f64().expect("fits f64 for displayed range");
        let s1 = f(&d1).sqrt();
        let s2 = f(&d2).sqrt();
        rows.push(FormRow {
            q,
            h1: f(&i1) + s1,
            h2: f(&i2) + s2,
            l1: f(&i1) - s1,
            l2: f(&i2) - s2,
            h1_positive: sign_plus_sqrt(&i1, &d1) > 0,
            h2_positive: sign_plus_sqrt(&i2, &d2) > 0,
            l1_positive: sign_minus_sqrt(&i1, &d1) > 0,
            l2_positive: sign_minus_sqrt(&i2, &d2) > 0,
        });
    }
    Ok(rows)
}

/// The sign pattern the diameter-4 exclusion argument needs: h1 > 0 for all
/// q >= 2, h2 and l1 nonzero at q = 2 and positive from q = 3, l2 nonzero at
/// q = 2, 3 and positive from q = 4.
pub fn check_form_exclusions(q_max: usize) -> Result<Verdict> {
    let rows = form_exclusions(q_max)?;
    for row in &rows {
        let q = row.q;
        let ok = row.h1_positive
            && (q < 3 || row.h2_positive)
            && (q < 3 || row.l1_positive)
            && (q < 4 || row.l2_positive)
            && (q != 2 || (!row.h2.is_nan() && row.h2 != 0.0 && row.l1 != 0.0 && row.l2 != 0.0))
            && (q != 3 || row.l2 != 0.0);
        if !ok {
            return Ok(Verdict::fail(
                "form-exclusions",
                serde_json::to_value(row)?,
            ));
        }
    }
    Ok(Verdict::pass("form-exclusions"))
}

/// Second-largest eigenvalues of the two forced girth-4 submatrices.
pub fn remark3_second_eigenvalues() -> Result<(f64, f64)> {
    let second = |m: &IntMatrix| -> Result<f64> {
        let eigs = spectra::eig_symmetric(&m.to_f64())?;
        Ok(eigs[eigs.len() - 2])
    };
    Ok((
        second(&families::f1_submatrix())?,
        second(&families::f2_submatrix())?,
    ))
}

/// Largest path distance eigenvalue: 1/(cosh theta - 1) where theta solves
/// tanh(theta/2) tanh(n theta/2) = 1/n. The two secular families below give
/// the remaining eigenvalues as 1/(cos theta - 1).
fn path_hyperbolic_eigenvalue(n: usize) -> Result<f64> {
    let nf = n as f64;
    let f = |theta: f64| (theta / 2.0).tanh() * (nf * theta / 2.0).tanh() - 1.0 / nf;
    let mut lo = 1e-12;
    let mut hi = 1.0;
    let mut guard = 0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
        guard += 1;
        if guard > 64 {
            return Err(Error::NoBracket(
                "hyperbolic secular equation never changes sign".into(),
            ));
        }
    }
    if f(lo) >= 0.0 {
        return Err(Error::NoBracket(
            "hyperbolic secular equation positive at the left end".into(),
        ));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let theta = 0.5 * (lo + hi);
    Ok(1.0 / (theta.cosh() - 1.0))
}

/// All n eigenvalues of D(P_n) from the secular equations, sorted ascending:
/// one hyperbolic root, floor((n-1)/2) roots of
/// tan(theta/2) tan(n theta/2) = -1/n on (0, pi), and floor(n/2) closed-form
/// angles theta = (2m-1) pi / n.
pub fn path_secular_spectrum(n: usize) -> Result<Vec<f64>> {
    if n <= 2 {
        return Err(Error::Bound(format!(
            "secular spectrum needs n > 2, got {n}"
        )));
    }
    let nf = n as f64;
    let mut out = Vec::with_capacity(n);
    out.push(path_hyperbolic_eigenvalue(n)?);

    // family (I): one root in each interval ((2j-1) pi/n, 2j pi/n), where
    // tan(n theta / 2) runs from -inf up to 0
    let g = |theta: f64| (theta / 2.0).tan() * (nf * theta / 2.0).tan() + 1.0 / nf;
    for j in 1..=(n - 1) / 2 {
        let left = (2.0 * j as f64 - 1.0) * std::f64::consts::PI / nf;
        let right = 2.0 * j as f64 * std::f64::consts::PI / nf;
        let inset = (right - left) * 1e-12;
        let mut lo = left + inset;
        let mut hi = right - inset;
        if !(g(lo) < 0.0 && g(hi) > 0.0) {
            return Err(Error::NoBracket(format!(
                "family-I interval {j} of {n} has no sign change"
            )));
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let theta = 0.5 * (lo + hi);
        out.push(1.0 / (theta.cos() - 1.0));
    }

    // family (II): theta = (2m-1) pi / n
    for m in 1..=n / 2 {
        let theta = (2.0 * m as f64 - 1.0) * std::f64::consts::PI / nf;
        out.push(1.0 / (theta.cos() - 1.0));
    }

    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Grows trees from S_{2,2} by pendant-path attachment, depth levels deep,
/// over every attachment choice, and verifies -1 never appears as a distance
/// eigenvalue (exact nullity test).
pub fn s22_plus_p4_negative_check(depth: usize) -> Result<Verdict> {
    if depth < 1 {
        return Err(Error::Bound("depth must be >= 1".into()));
    }
    let mut level = vec![families::double_star(2, 2)?];
    let mut failures = Vec::new();
    for _ in 0..depth {
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..t.n() {
                let mut edges = t.edges();
                let w1 = t.n();
                edges.push((attach, w1));
                edges.push((w1, w1 + 1));
                edges.push((w1 + 1, w1 + 2));
                edges.push((w1 + 2, w1 + 3));
                let grown = Graph::from_edges(t.n() + 4, &edges)?;
                let d = graph::distance_matrix(&grown)?;
                let mult = exact::eigen_multiplicity_exact(&d, -1);
                if mult != 0 {
                    failures.push(json!({
                        "graph6": crate::graph6::canonical_graph6(&grown),
                        "multiplicity": mult,
                    }));
                }
                next.push(grown);
            }
        }
        level = next;
    }
    if failures.is_empty() {
        Ok(Verdict::pass("s22-plus-p4"))
    } else {
        Ok(Verdict::fail("s22-plus-p4", json!(failures)))
    }
}

/// Convenience: spider quotient matrix, its partition, and its cubic in one
/// place for cross-checks.
pub fn t42_quotient(q: usize) -> Result<quotient::QuotientResult> {
    let g = families::t42_spider(q)?;
    let d = graph::distance_matrix(&g)?;
    let p = Partition::new(families::t42_blocks(q), 2 * q + 1)?;
    quotient::quotient(&d, &p)
}
