//! Generalized Ramanujan polynomials, built exactly and in two ways: the
//! odd-index family from products of classical Bernoulli numbers and the
//! full family from the modified (starred) table. The module verifies the
//! reciprocal functional equations, the special values at 1/2, 1, 2 and
//! at Gaussian-rational points, the vanishing two-point coefficient sum,
//! and computes a high-precision atlas of every root with per-root
//! residual certification.

use rayon::prelude::*;
use rug::{Float, Integer, Rational};
use serde::Serialize;

use crate::bernoulli::{bernoulli, bprime, bstar};
use crate::exactcore::combin::factorial;
use crate::exactcore::{pow2, rat, rat_string, GaussRat, RatPoly};
use crate::hpnum::{eval_poly, float_to_decimal, roots_aberth, seed_ring, HPComplex};
use crate::report::{bool_case, exact_case, Case, CaseStatus, VerificationReport};
use crate::{Error, Result};

/// Parity of the polynomial index r; the two families have different
/// degrees and different real-root structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(r: usize) -> Self {
        if r % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// One polynomial of the family, exactly: only even powers of z occur;
/// for odd index r = 2s+1 the degree is 2s+2, for even index r = 2s the
/// degree drops to 2s because the top coefficients cancel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamanujanPoly {
    pub r: usize,
    pub poly: RatPoly,
    pub parity: Parity,
}

impl RamanujanPoly {
    /// Degree demanded by the index: r+1 for odd r, r for even r.
    pub fn expected_degree(&self) -> usize {
        match self.parity {
            Parity::Odd => self.r + 1,
            Parity::Even => self.r,
        }
    }

    /// Both structural invariants at once: the degree matches the index
    /// and no odd power of z carries a nonzero coefficient.
    pub fn invariants_hold(&self) -> bool {
        let degree_ok = self.poly.degree() == Some(self.expected_degree());
        let even_only = self
            .poly
            .coeffs()
            .iter()
            .skip(1)
            .step_by(2)
            .all(|c| *c == 0);
        degree_ok && even_only
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.poly.eval(z)
    }

    pub fn eval_gauss(&self, z: &GaussRat) -> GaussRat {
        self.poly.eval_gauss(z)
    }
}

/// B_i B_j / (i! j!) from the classical table.
fn bernoulli_product_coeff(i: usize, j: usize) -> Rational {
    let num = bernoulli(i) * &bernoulli(j);
    let den = factorial(i) * &factorial(j);
    num / Rational::from(den)
}

/// B*_i B*_j / (i! j!) from the modified table.
fn bstar_product_coeff(i: usize, j: usize) -> Rational {
    let num = bstar(i) * &bstar(j);
    let den = factorial(i) * &factorial(j);
    num / Rational::from(den)
}

/// Assembles a polynomial in z from the coefficients of its even powers:
/// entry k of `cs` multiplies z^{2k}.
fn poly_from_even(cs: &[Rational]) -> RatPoly {
    let mut full = vec![Rational::new(); 2 * cs.len() - 1];
    for (k, c) in cs.iter().enumerate() {
        full[2 * k] = c.clone();
    }
    RatPoly::new(full)
}

/// The odd-index polynomial of order s built from the classical Bernoulli
/// table: the coefficient of z^{2k} is B_{2k} B_{2s+2-2k} / ((2k)!(2s+2-2k)!)
/// for k = 0..s+1. Degree 2s+2.
pub fn odd_poly(s: usize) -> RamanujanPoly {
    let cs: Vec<Rational> = (0..=s + 1)
        .map(|k| bernoulli_product_coeff(2 * k, 2 * s + 2 - 2 * k))
        .collect();
    RamanujanPoly {
        r: 2 * s + 1,
        poly: poly_from_even(&cs),
        parity: Parity::Odd,
    }
}

/// The generalised polynomial for any positive index r, from the modified
/// table: the coefficient of z^{2k} is B*_{r+1-2k} B*_{2k} / ((r+1-2k)!(2k)!)
/// for k = 0..floor((r+1)/2). For odd r this reproduces the classical
/// construction coefficient for coefficient; for even r it is the
/// definition of the even-index polynomial.
pub fn q_poly(r: usize) -> RamanujanPoly {
    assert!(r >= 1, "polynomial index must be positive");
    let top = (r + 1) / 2;
    let cs: Vec<Rational> = (0..=top)
        .map(|k| bstar_product_coeff(r + 1 - 2 * k, 2 * k))
        .collect();
    RamanujanPoly {
        r,
        poly: poly_from_even(&cs),
        parity: Parity::of(r),
    }
}

/// The even-index polynomial of order s, defined through the modified
/// table. Its degree is 2s: the z^{2s+2} terms of the two defining
/// combinations cancel.
pub fn even_poly(s: usize) -> RamanujanPoly {
    assert!(s >= 1, "even-index polynomials start at order 1");
    q_poly(2 * s)
}

/// Dispatch by index parity: the odd route goes through the classical
/// table, the even route through the modified one.
pub fn ramanujan_poly(r: usize) -> RamanujanPoly {
    assert!(r >= 1, "polynomial index must be positive");
    if r % 2 == 1 {
        odd_poly(r / 2)
    } else {
        even_poly(r / 2)
    }
}

/// The even-index polynomial recovered from the odd one by reflection:
/// 4 z^{2s+2} (R(1/z) - R(1/(2z))) with R of odd index 2s+1. The stored
/// coefficient reversal is exactly multiplication by z^{deg} composed
/// with z -> 1/z, so both terms are reversals.
pub fn even_from_reflection(s: usize) -> RatPoly {
    let r = odd_poly(s).poly;
    let half = rat(1, 2);
    let reflected = r.reversed().sub(&r.scale_arg(&half).reversed());
    reflected.scale(&rat(4, 1))
}

/// The same polynomial from the scaling form 4 (R(z) - 2^{-(2s+2)} R(2z)).
pub fn even_from_scaling(s: usize) -> RatPoly {
    let r = odd_poly(s).poly;
    let scaled = r.scale_arg(&rat(2, 1)).scale(&pow2(-(2 * s as i64 + 2)));
    r.sub(&scaled).scale(&rat(4, 1))
}

/// Multiplies by z^k: prepends k zero coefficients.
fn shift_up(p: &RatPoly, k: usize) -> RatPoly {
    let mut c = vec![Rational::new(); k];
    c.extend(p.coeffs().iter().cloned());
    RatPoly::new(c)
}

/// Case comparing two exact polynomials; on failure the first differing
/// coefficient is reported.
fn poly_case(id: impl Into<String>, identity: impl Into<String>, lhs: &RatPoly, rhs: &RatPoly) -> Case {
    if lhs == rhs {
        let deg = lhs
            .degree()
            .map(|d| d.to_string())
            .unwrap_or_else(|| "none".into());
        bool_case(id, identity, true, format!("degree {deg}"), format!("degree {deg}"))
    } else {
        let n = lhs.coeffs().len().max(rhs.coeffs().len());
        let k = (0..n).find(|&k| lhs.coeff(k) != rhs.coeff(k)).unwrap_or(0);
        bool_case(
            id,
            identity,
            false,
            format!("z^{k}: {}", rat_string(&lhs.coeff(k))),
            format!("z^{k}: {}", rat_string(&rhs.coeff(k))),
        )
    }
}

/// Exact reciprocal-equation checks for one order s: coefficient
/// palindromy of the odd polynomial, agreement of the two construction
/// routes, the two equivalent forms of the even polynomial, the two-term
/// reciprocal relation, and the structural degree facts.
pub fn reciprocal_cases(s: usize) -> Vec<Case> {
    assert!(s >= 1, "orders start at 1");
    let odd = odd_poly(s);
    let even = even_poly(s);
    let half = rat(1, 2);
    let mut cases = Vec::new();

    cases.push(poly_case(
        format!("palindrome-s{s}"),
        "coefficient reversal fixes the odd-index polynomial",
        &odd.poly.reversed(),
        &odd.poly,
    ));
    cases.push(poly_case(
        format!("star-table-agreement-s{s}"),
        "classical-table and modified-table constructions agree at odd index",
        &q_poly(2 * s + 1).poly,
        &odd.poly,
    ));
    cases.push(poly_case(
        format!("even-reflection-route-s{s}"),
        "even-index polynomial equals 4 z^(2s+2) (R(1/z) - R(1/(2z)))",
        &even_from_reflection(s),
        &even.poly,
    ));
    cases.push(poly_case(
        format!("even-scaling-route-s{s}"),
        "even-index polynomial equals 4 (R(z) - 2^-(2s+2) R(2z))",
        &even_from_scaling(s),
        &even.poly,
    ));

    // Two-term reciprocal relation of the even polynomial:
    // E(z) - E(z/2) = z^(2s+2) (E(1/z) - E(1/(2z))).
    let lhs = even.poly.sub(&even.poly.scale_arg(&half));
    let rhs = shift_up(
        &even
            .poly
            .reversed()
            .sub(&even.poly.scale_arg(&half).reversed()),
        2,
    );
    cases.push(poly_case(
        format!("two-term-reciprocal-s{s}"),
        "E(z) - E(z/2) equals z^(2s+2) (E(1/z) - E(1/(2z)))",
        &lhs,
        &rhs,
    ));

    let even_deg = even.poly.degree().unwrap_or(0);
    cases.push(bool_case(
        format!("even-degree-cancellation-s{s}"),
        "top coefficients cancel: even-index degree is 2s",
        even_deg == 2 * s && even.invariants_hold(),
        format!("degree {even_deg}"),
        format!("degree {}", 2 * s),
    ));
    let odd_deg = odd.poly.degree().unwrap_or(0);
    cases.push(bool_case(
        format!("odd-structure-s{s}"),
        "odd-index degree is 2s+2 with only even powers",
        odd_deg == 2 * s + 2 && odd.invariants_hold(),
        format!("degree {odd_deg}"),
        format!("degree {}", 2 * s + 2),
    ));
    cases
}

/// Runs the reciprocal checks for every order 1..=max_s.
pub fn verify_reciprocal(max_s: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("ramanujan-reciprocal");
    for s in 1..=max_s {
        for c in reciprocal_cases(s) {
            rep.push(c);
        }
    }
    rep
}

fn gauss_string(g: &GaussRat) -> String {
    format!("({}, {})", rat_string(&g.re), rat_string(&g.im))
}

/// The exact special values of order s, all computed by direct evaluation
/// of the polynomials.
#[derive(Clone, Debug)]
pub struct SpecialValues {
    pub s: usize,
    pub odd_at_one: Rational,
    pub odd_at_two: Rational,
    pub odd_at_half: Rational,
    pub even_at_one: Rational,
    pub even_at_half: Rational,
    pub odd_at_i: GaussRat,
    pub even_at_i: GaussRat,
    pub even_at_half_i: GaussRat,
}

/// Evaluates both polynomials of order s at the distinguished rational
/// and Gaussian-rational points.
pub fn special_values(s: usize) -> SpecialValues {
    assert!(s >= 1, "orders start at 1");
    let odd = odd_poly(s);
    let even = even_poly(s);
    let i = GaussRat::imaginary(rat(1, 1));
    let half_i = GaussRat::imaginary(rat(1, 2));
    SpecialValues {
        s,
        odd_at_one: odd.eval(&rat(1, 1)),
        odd_at_two: odd.eval(&rat(2, 1)),
        odd_at_half: odd.eval(&rat(1, 2)),
        even_at_one: even.eval(&rat(1, 1)),
        even_at_half: even.eval(&rat(1, 2)),
        odd_at_i: odd.eval_gauss(&i),
        even_at_i: even.eval_gauss(&i),
        even_at_half_i: even.eval_gauss(&half_i),
    }
}

/// The closed form -(2s+1) B_{2s+2} / (2s+2)! shared by the values of the
/// odd polynomial at 1 and at 2.
pub fn odd_at_one_closed(s: usize) -> Rational {
    let num = bernoulli(2 * s + 2) * Rational::from(-(2 * s as i64 + 1));
    num / Rational::from(factorial(2 * s + 2))
}

/// The closed form -B*_{2s+1} / (2s)! for the even polynomial at 1.
pub fn even_at_one_closed(s: usize) -> Rational {
    let num = bstar(2 * s + 1) * Rational::from(-1);
    num / Rational::from(factorial(2 * s))
}

/// The value of the even polynomial at 1/2 written against the primed
/// table: sum over k of B*_{2s+1-2k} B'_{2k} / ((2s+1-2k)!(2k)!). The
/// identity asserts this sum vanishes.
pub fn even_at_half_primed_sum(s: usize) -> Rational {
    let mut sum = Rational::new();
    for k in 0..=s {
        let num = bstar(2 * s + 1 - 2 * k) * &bprime(2 * k);
        let den = factorial(2 * s + 1 - 2 * k) * &factorial(2 * k);
        sum += num / Rational::from(den);
    }
    sum
}

/// Special-value checks for one order s. The Gaussian-point identities
/// hold exactly when s is even and are only asserted there.
pub fn special_cases(s: usize) -> Vec<Case> {
    let v = special_values(s);
    let closed = odd_at_one_closed(s);
    let mut cases = vec![
        exact_case(
            format!("odd-at-one-s{s}"),
            "odd polynomial at 1 equals -(2s+1) B_(2s+2)/(2s+2)!",
            &v.odd_at_one,
            &closed,
        ),
        exact_case(
            format!("odd-two-points-agree-s{s}"),
            "odd polynomial takes the same value at 1 and at 2",
            &v.odd_at_two,
            &v.odd_at_one,
        ),
        exact_case(
            format!("even-at-one-s{s}"),
            "even polynomial at 1 equals -B*_(2s+1)/(2s)!",
            &v.even_at_one,
            &even_at_one_closed(s),
        ),
        exact_case(
            format!("odd-at-half-s{s}"),
            "odd polynomial at 1/2 equals its value at 1 divided by 2^(2s+2)",
            &v.odd_at_half,
            &(v.odd_at_one.clone() * pow2(-(2 * s as i64 + 2))),
        ),
        exact_case(
            format!("even-at-half-s{s}"),
            "even polynomial vanishes at 1/2",
            &v.even_at_half,
            &Rational::new(),
        ),
        exact_case(
            format!("half-sum-primed-table-s{s}"),
            "primed-table sum reproduces the even polynomial at 1/2",
            &even_at_half_primed_sum(s),
            &v.even_at_half,
        ),
    ];
    if s % 2 == 0 {
        cases.push(bool_case(
            format!("odd-vanishes-at-i-s{s}"),
            "odd polynomial vanishes at the imaginary unit for even order",
            v.odd_at_i.is_zero(),
            gauss_string(&v.odd_at_i),
            "(0/1, 0/1)",
        ));
        cases.push(bool_case(
            format!("even-matches-at-i-and-half-i-s{s}"),
            "even polynomial takes equal values at i and at i/2 for even order",
            v.even_at_i == v.even_at_half_i,
            gauss_string(&v.even_at_i),
            gauss_string(&v.even_at_half_i),
        ));
    }
    cases
}

/// Runs the special-value checks for every order 1..=max_s.
pub fn verify_special(max_s: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("ramanujan-special-values");
    for s in 1..=max_s {
        for c in special_cases(s) {
            rep.push(c);
        }
    }
    rep
}

/// The weighted coefficient sum sum_{k=0}^{s+1} (2^{2k}-1) B_{2s+2-2k}
/// B_{2k} / ((2s+2-2k)!(2k)!). It equals the difference of the odd
/// polynomial's values at 2 and at 1, hence vanishes.
pub fn two_point_sum(s: usize) -> Rational {
    let mut sum = Rational::new();
    for k in 0..=s + 1 {
        let weight = Integer::from(Integer::u_pow_u(2, 2 * k as u32)) - 1u32;
        let num = (bernoulli(2 * s + 2 - 2 * k) * &bernoulli(2 * k)) * Rational::from(weight);
        let den = factorial(2 * s + 2 - 2 * k) * &factorial(2 * k);
        sum += num / Rational::from(den);
    }
    sum
}

/// True iff the weighted coefficient sum vanishes exactly at order s.
pub fn two_point_vanishes(s: usize) -> bool {
    two_point_sum(s) == 0
}

/// Checks the vanishing of the weighted sum for every order 1..=max_s.
pub fn verify_two_point(max_s: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("ramanujan-two-point-sum");
    for s in 1..=max_s {
        rep.push(exact_case(
            format!("two-point-sum-s{s}"),
            "weighted coefficient sum (2^(2k)-1)-scaled vanishes",
            &two_point_sum(s),
            &Rational::new(),
        ));
    }
    rep
}

/// Serializable row of the root atlas: one root with its modulus and the
/// certified residual, rendered deterministically from the bits.
#[derive(Clone, Debug, Serialize)]
pub struct RootRecord {
    pub re: String,
    pub im: String,
    pub modulus: String,
    pub residual: String,
}

/// All roots of one polynomial at working precision P: the roots sorted
/// by real then imaginary part, their moduli, and |R_r(root)| measured
/// against the exact coefficients.
#[derive(Clone, Debug)]
pub struct RootAtlasEntry {
    pub r: usize,
    pub prec: u32,
    pub degree: usize,
    pub iterations: usize,
    pub roots: Vec<HPComplex>,
    pub moduli: Vec<Float>,
    pub residuals: Vec<Float>,
}

impl RootAtlasEntry {
    pub fn max_residual(&self) -> Float {
        let mut max = Float::new(self.prec);
        for r in &self.residuals {
            if *r > max {
                max = r.clone();
            }
        }
        max
    }

    /// Tolerance for classifying a root as real and for closure checks:
    /// 2^(20-P) at the entry's precision.
    fn closure_tol(&self) -> Float {
        Float::with_val(self.prec, 1) >> (self.prec - 20)
    }

    /// Indices of the roots whose imaginary part is negligible relative
    /// to their size.
    pub fn real_indices(&self) -> Vec<usize> {
        let tol = self.closure_tol();
        (0..self.roots.len())
            .filter(|&i| {
                let z = &self.roots[i];
                let scale = Float::with_val(self.prec, z.re.clone().abs() + 1u32);
                z.im.clone().abs() <= scale * &tol
            })
            .collect()
    }

    /// The largest real root, if any real root was found; for odd index
    /// this is the distinguished root slightly greater than 2.
    pub fn principal_real_root(&self) -> Option<Float> {
        self.real_indices()
            .into_iter()
            .map(|i| self.roots[i].re.clone())
            .max_by(|a, b| a.partial_cmp(b).unwrap())
    }

    pub fn records(&self) -> Vec<RootRecord> {
        (0..self.roots.len())
            .map(|i| RootRecord {
                re: float_to_decimal(&self.roots[i].re),
                im: float_to_decimal(&self.roots[i].im),
                modulus: float_to_decimal(&self.moduli[i]),
                residual: float_to_decimal(&self.residuals[i]),
            })
            .collect()
    }
}

/// Computes every root of the index-r polynomial at precision P bits:
/// simultaneous iteration from a ring of seeds at radius 1.05 (where
/// almost all roots cluster) plus dedicated seeds for the real roots far
/// from the ring, followed by Newton polishing. Residuals are measured
/// against the exact coefficients at the reported (rounded) roots, so
/// certification does not trust the iteration. Exhausting the iteration
/// budget surfaces the partial estimates inside the error.
pub fn root_atlas(r: usize, prec: u32) -> Result<RootAtlasEntry> {
    assert!(r >= 2, "the atlas starts at index 2");
    if prec < 128 {
        return Err(Error::PrecisionTooLow {
            needed: 128,
            got: prec,
        });
    }
    let rp = ramanujan_poly(r);
    let degree = rp.poly.degree().expect("family polynomials are nonzero");
    let wp = prec + 32;
    let coeffs: Vec<HPComplex> = rp
        .poly
        .coeffs()
        .iter()
        .map(|c| HPComplex::from_real(Float::with_val(wp, c)))
        .collect();
    // Real roots sit near +-2.05 and +-0.48 for odd index and near +-1/2
    // for even index; everything else is close to the unit circle.
    let dedicated: &[(f64, f64)] = if r % 2 == 1 {
        &[(2.05, 0.0), (-2.05, 0.0), (0.48, 0.0), (-0.48, 0.0)]
    } else {
        &[(0.52, 0.0), (-0.52, 0.0)]
    };
    let seeds = seed_ring(degree, dedicated, wp);
    let mut estimates = roots_aberth(&coeffs, &seeds, 800)?;
    estimates.sort_by(|a, b| {
        a.value
            .re
            .partial_cmp(&b.value.re)
            .unwrap()
            .then(a.value.im.partial_cmp(&b.value.im).unwrap())
    });
    let iterations = estimates.iter().map(|e| e.iterations).max().unwrap_or(0);
    let mut roots = Vec::with_capacity(estimates.len());
    let mut moduli = Vec::with_capacity(estimates.len());
    let mut residuals = Vec::with_capacity(estimates.len());
    for e in &estimates {
        let rounded = e.value.with_prec(prec);
        let residual = eval_poly(&coeffs, &rounded.with_prec(wp)).abs();
        moduli.push(Float::with_val(prec, rounded.abs()));
        residuals.push(Float::with_val(prec, residual));
        roots.push(rounded);
    }
    Ok(RootAtlasEntry {
        r,
        prec,
        degree,
        iterations,
        roots,
        moduli,
        residuals,
    })
}

fn min_distance_to(set: &[HPComplex], target: &HPComplex) -> Float {
    let mut best: Option<Float> = None;
    for z in set {
        let d = z.sub(target).abs();
        if best.as_ref().is_none_or(|b| d < *b) {
            best = Some(d);
        }
    }
    best.expect("root set is nonempty")
}

/// Structural checks on one atlas entry: residual certification at
/// 2^(10-P), closure of the root multiset under conjugation and negation,
/// and the parity-specific real-root geometry.
pub fn atlas_cases(entry: &RootAtlasEntry) -> Vec<Case> {
    let r = entry.r;
    let p = entry.prec;
    let cert = Float::with_val(p, 1) >> (p - 10);
    let tol = Float::with_val(p, 1) >> (p - 20);
    let mut cases = Vec::new();

    cases.push(bool_case(
        format!("root-count-r{r}"),
        "the atlas holds exactly degree-many roots",
        entry.roots.len() == entry.degree,
        format!("{} roots", entry.roots.len()),
        format!("degree {}", entry.degree),
    ));
    let max_res = entry.max_residual();
    cases.push(bool_case(
        format!("residual-certified-r{r}"),
        "every |R_r(root)| stays below the certification threshold 2^(10-P)",
        max_res <= cert,
        float_to_decimal(&max_res),
        float_to_decimal(&cert),
    ));

    let mut worst_conj = Float::new(p);
    let mut worst_neg = Float::new(p);
    for z in &entry.roots {
        let dc = min_distance_to(&entry.roots, &z.conj());
        let dn = min_distance_to(&entry.roots, &z.neg());
        if dc > worst_conj {
            worst_conj = dc;
        }
        if dn > worst_neg {
            worst_neg = dn;
        }
    }
    cases.push(bool_case(
        format!("conjugate-closure-r{r}"),
        "the root multiset is invariant under complex conjugation",
        worst_conj <= tol,
        float_to_decimal(&worst_conj),
        float_to_decimal(&tol),
    ));
    cases.push(bool_case(
        format!("negation-closure-r{r}"),
        "the root multiset is invariant under negation",
        worst_neg <= tol,
        float_to_decimal(&worst_neg),
        float_to_decimal(&tol),
    ));

    let real = entry.real_indices();
    let nonreal: Vec<usize> = (0..entry.roots.len()).filter(|i| !real.contains(i)).collect();

    if r % 2 == 1 {
        // Odd index: exactly four real roots z0, 1/z0, -z0, -1/z0 with
        // z0 slightly above 2; all other roots sit on the unit circle.
        let mut pos: Vec<Float> = real
            .iter()
            .map(|&i| entry.roots[i].re.clone())
            .filter(|x| x.is_sign_positive())
            .collect();
        pos.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let quadruple_ok = real.len() == 4 && pos.len() == 2 && {
            let product = Float::with_val(p, &pos[0] * &pos[1]);
            Float::with_val(p, product - 1u32).abs() <= tol
        };
        cases.push(bool_case(
            format!("real-quadruple-r{r}"),
            "exactly four real roots, paired as a reciprocal quadruple",
            quadruple_ok,
            format!("{} real roots", real.len()),
            "4 real roots in reciprocal pairs",
        ));
        let principal = entry.principal_real_root().unwrap_or_else(|| Float::new(p));
        let window_ok =
            principal > Float::with_val(p, 2) && principal < Float::with_val(p, rat(11, 5));
        cases.push(bool_case(
            format!("principal-window-r{r}"),
            "the largest real root lies in (2, 2.2)",
            window_ok,
            float_to_decimal(&principal),
            "(2, 11/5)",
        ));
        let mut worst_unit = Float::new(p);
        for &i in &nonreal {
            let err = Float::with_val(p, &entry.moduli[i] - 1u32).abs();
            if err > worst_unit {
                worst_unit = err;
            }
        }
        cases.push(bool_case(
            format!("unit-moduli-r{r}"),
            "every nonreal root has modulus within 2^(20-P) of 1",
            worst_unit <= tol,
            float_to_decimal(&worst_unit),
            float_to_decimal(&tol),
        ));
    } else {
        // Even index: the real roots are +-1/2 (certified exactly by
        // rational evaluation); the nonreal moduli are reported without
        // any assertion, since the location is only observed.
        let half = Float::with_val(p, rat(1, 2));
        let pair_ok = real.len() == 2 && {
            let mut res: Vec<Float> = real.iter().map(|&i| entry.roots[i].re.clone()).collect();
            res.sort_by(|a, b| a.partial_cmp(b).unwrap());
            Float::with_val(p, &res[0] + &half).abs() <= tol
                && Float::with_val(p, &res[1] - &half).abs() <= tol
        };
        cases.push(bool_case(
            format!("half-pair-r{r}"),
            "the real roots are exactly the pair -1/2, 1/2",
            pair_ok,
            format!("{} real roots", real.len()),
            "roots at -1/2 and 1/2",
        ));
        let exact_val = ramanujan_poly(r).eval(&rat(1, 2));
        cases.push(exact_case(
            format!("half-exact-r{r}"),
            "rational evaluation certifies 1/2 (hence -1/2 by evenness) as a root",
            &exact_val,
            &Rational::new(),
        ));
        let mut min_m: Option<Float> = None;
        let mut max_m: Option<Float> = None;
        for &i in &nonreal {
            let m = entry.moduli[i].clone();
            if min_m.as_ref().is_none_or(|b| m < *b) {
                min_m = Some(m.clone());
            }
            if max_m.as_ref().is_none_or(|b| m > *b) {
                max_m = Some(m);
            }
        }
        let span = match (&min_m, &max_m) {
            (Some(a), Some(b)) => format!("[{}, {}]", float_to_decimal(a), float_to_decimal(b)),
            _ => "none".into(),
        };
        let mut observed = bool_case(
            format!("outside-moduli-r{r}"),
            "nonreal moduli are reported; they appear to sit just outside the unit circle",
            true,
            span,
            "1",
        );
        observed.status = CaseStatus::Observational;
        observed.residual = "unasserted".into();
        cases.push(observed);
    }
    cases
}

/// Computes atlas entries for each index in `rs` (in parallel; each
/// polynomial's iteration is single-threaded) and assembles the combined
/// structural report, including the cross-index comparison of the
/// principal real roots, which approach 2 from above as the index grows.
pub fn verify_atlas(rs: &[usize], prec: u32) -> Result<(Vec<RootAtlasEntry>, VerificationReport)> {
    let entries: Vec<RootAtlasEntry> = rs
        .par_iter()
        .map(|&r| root_atlas(r, prec))
        .collect::<Result<Vec<_>>>()?;
    let mut rep = VerificationReport::new("ramanujan-root-atlas");
    for e in &entries {
        for c in atlas_cases(e) {
            rep.push(c);
        }
    }
    let mut principals: Vec<(usize, Float)> = entries
        .iter()
        .filter(|e| e.r % 2 == 1)
        .filter_map(|e| e.principal_real_root().map(|z| (e.r, z)))
        .collect();
    principals.sort_by_key(|p| p.0);
    let z11 = principals.iter().find(|p| p.0 == 11).map(|p| p.1.clone());
    let z25 = principals.iter().find(|p| p.0 == 25).map(|p| p.1.clone());
    if let (Some(a), Some(b)) = (z11, z25) {
        rep.push(bool_case(
            "principal-approach-11-25",
            "the index-25 principal root is closer to 2 than the index-11 one",
            b < a,
            float_to_decimal(&b),
            float_to_decimal(&a),
        ));
    }
    if principals.len() >= 2 {
        let decreasing = principals.windows(2).all(|w| w[1].1 < w[0].1);
        let seq = principals
            .iter()
            .map(|(r, z)| format!("r={r}: {:.6}", z.to_f64()))
            .collect::<Vec<_>>()
            .join("; ");
        rep.push(bool_case(
            "principal-sequence-decreasing",
            "principal real roots decrease toward 2 as the odd index grows",
            decreasing,
            seq,
            "strictly decreasing",
        ));
    }
    Ok((entries, rep))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs_of(p: &RatPoly) -> Vec<Rational> {
        p.coeffs().to_vec()
    }

    #[test]
    fn lowest_odd_polynomial_matches_hand_expansion() {
        // Order 1: -(1/720)(1 - 5 z^2 + z^4).
        let p = odd_poly(1);
        assert_eq!(
            coeffs_of(&p.poly),
            vec![rat(-1, 720), rat(0, 1), rat(1, 144), rat(0, 1), rat(-1, 720)]
        );
        assert!(p.invariants_hold());
    }

    #[test]
    fn generalised_polynomial_frozen_values() {
        // Index 3: constant coefficient B*_4 B*_0 / 4! = -1/720.
        let q3 = q_poly(3);
        assert_eq!(q3.poly.coeff(0), rat(-1, 720));
        assert_eq!(q3.poly, odd_poly(1).poly);
        // Index 2: -1/192 + z^2/48, and the scaling route reproduces it.
        let q2 = q_poly(2);
        assert_eq!(coeffs_of(&q2.poly), vec![rat(-1, 192), rat(0, 1), rat(1, 48)]);
        let r3 = odd_poly(1).poly;
        let route = r3
            .sub(&r3.scale_arg(&rat(2, 1)).scale(&rat(1, 16)))
            .scale(&rat(4, 1));
        assert_eq!(route, q2.poly);
    }

    #[test]
    fn even_polynomial_has_half_as_root_and_drops_degree() {
        for s in 1..=12 {
            let e = even_poly(s);
            assert_eq!(e.poly.degree(), Some(2 * s), "order {s}");
            assert_eq!(e.eval(&rat(1, 2)), rat(0, 1), "order {s}");
            assert_eq!(e.eval(&rat(-1, 2)), rat(0, 1), "order {s}");
        }
    }

    #[test]
    fn reciprocal_checks_pass_at_spot_orders() {
        for s in [1, 3, 20] {
            for c in reciprocal_cases(s) {
                assert_eq!(c.status, CaseStatus::Pass, "{}: {} vs {}", c.id, c.lhs, c.rhs);
            }
        }
    }

    #[test]
    fn two_term_reciprocal_hand_example() {
        // Order 1: E(z) - E(z/2) = z^2/64 on both sides.
        let e = even_poly(1).poly;
        let lhs = e.sub(&e.scale_arg(&rat(1, 2)));
        assert_eq!(coeffs_of(&lhs), vec![rat(0, 1), rat(0, 1), rat(1, 64)]);
    }

    #[test]
    fn special_values_frozen_at_low_orders() {
        let v1 = special_values(1);
        assert_eq!(v1.odd_at_one, rat(1, 240));
        assert_eq!(v1.odd_at_two, rat(1, 240));
        assert_eq!(v1.odd_at_half, rat(1, 3840));
        assert_eq!(v1.even_at_one, rat(1, 64));
        assert_eq!(v1.even_at_half, rat(0, 1));
        let v2 = special_values(2);
        assert!(v2.odd_at_i.is_zero(), "{:?}", v2.odd_at_i);
        assert_eq!(v2.even_at_i, v2.even_at_half_i);
    }

    #[test]
    fn special_value_cases_pass_over_a_range() {
        for s in 1..=20 {
            for c in special_cases(s) {
                assert_eq!(c.status, CaseStatus::Pass, "{}: {} vs {}", c.id, c.lhs, c.rhs);
            }
        }
    }

    #[test]
    fn two_point_sum_vanishes_including_hand_order() {
        // Order 1 by hand: 0 + 3/144 - 15/720 = 0.
        assert_eq!(two_point_sum(1), rat(0, 1));
        for s in [2, 3, 10, 50] {
            assert!(two_point_vanishes(s), "order {s}");
        }
    }

    #[test]
    fn gauss_evaluation_vanishes_exactly_for_even_orders() {
        let i = GaussRat::imaginary(rat(1, 1));
        for s in (2..=40).step_by(2) {
            assert!(odd_poly(s).eval_gauss(&i).is_zero(), "order {s}");
        }
    }

    #[test]
    fn palindromes_and_degrees_hold_to_order_sixty() {
        for s in 1..=60 {
            let odd = odd_poly(s);
            assert_eq!(odd.poly.reversed(), odd.poly, "order {s}");
            assert!(odd.invariants_hold(), "order {s}");
            let even = even_poly(s);
            assert_eq!(even.poly.degree(), Some(2 * s), "order {s}");
            assert!(even.invariants_hold(), "order {s}");
        }
    }

    #[test]
    fn atlas_quartic_has_the_documented_real_quadruple() {
        let entry = root_atlas(3, 192).unwrap();
        assert_eq!(entry.degree, 4);
        assert_eq!(entry.real_indices().len(), 4);
        // z0^2 = (5 + sqrt 21)/2, so z0 = 2.18890...
        let z0 = entry.principal_real_root().unwrap().to_f64();
        assert!((z0 - 2.188_901_059_316_85).abs() < 1e-10, "z0 = {z0}");
        for c in atlas_cases(&entry) {
            assert_eq!(c.status, CaseStatus::Pass, "{}: {} vs {}", c.id, c.lhs, c.rhs);
        }
    }

    #[test]
    fn atlas_lowest_even_index_finds_half_pair() {
        let entry = root_atlas(2, 192).unwrap();
        assert_eq!(entry.degree, 2);
        let mut res: Vec<f64> = entry.roots.iter().map(|z| z.re.to_f64()).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((res[0] + 0.5).abs() < 1e-40);
        assert!((res[1] - 0.5).abs() < 1e-40);
        for c in atlas_cases(&entry) {
            assert_ne!(c.status, CaseStatus::Fail, "{}: {} vs {}", c.id, c.lhs, c.rhs);
        }
    }

    #[test]
    fn atlas_even_order_odd_index_puts_roots_at_i() {
        // Index 5 has order 2: the nonreal roots are exactly +-i.
        let entry = root_atlas(5, 192).unwrap();
        assert_eq!(entry.degree, 6);
        let real = entry.real_indices();
        assert_eq!(real.len(), 4);
        let nonreal: Vec<&HPComplex> = (0..entry.roots.len())
            .filter(|i| !real.contains(i))
            .map(|i| &entry.roots[i])
            .collect();
        for z in nonreal {
            assert!(z.re.clone().abs().to_f64() < 1e-50);
            assert!((z.im.clone().abs().to_f64() - 1.0).abs() < 1e-50);
        }
    }

    #[test]
    fn atlas_report_covers_mixed_indices_and_monotone_principals() {
        let (entries, rep) = verify_atlas(&[2, 3, 5, 8, 11, 25], 192).unwrap();
        assert_eq!(entries.len(), 6);
        assert!(rep.passed(), "first failure: {:?}", rep.first_failure());
        assert!(rep.cases.iter().any(|c| c.id == "principal-approach-11-25"));
        assert!(rep
            .cases
            .iter()
            .any(|c| c.id == "principal-sequence-decreasing"));
    }

    #[test]
    fn atlas_rejects_low_precision() {
        match root_atlas(3, 64) {
            Err(Error::PrecisionTooLow { needed, got }) => {
                assert_eq!(needed, 128);
                assert_eq!(got, 64);
            }
            other => panic!("expected precision error, got {other:?}"),
        }
    }

    #[test]
    fn atlas_records_render_all_columns() {
        let entry = root_atlas(2, 128).unwrap();
        let records = entry.records();
        assert_eq!(records.len(), 2);
        for rec in records {
            assert!(!rec.re.is_empty());
            assert!(!rec.im.is_empty());
            assert!(rec.modulus.starts_with("5.000000") || rec.modulus.starts_with("5.0000"));
            assert!(!rec.residual.is_empty());
        }
    }

    #[test]
    fn report_suites_pass_at_moderate_order() {
        let rep = verify_reciprocal(12);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let rep = verify_special(12);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let rep = verify_two_point(12);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn reciprocal_cases_pass(s in 1usize..30) {
                for c in reciprocal_cases(s) {
                    prop_assert_eq!(c.status, CaseStatus::Pass);
                }
            }

            #[test]
            fn special_cases_pass(s in 1usize..30) {
                for c in special_cases(s) {
                    prop_assert_eq!(c.status, CaseStatus::Pass);
                }
            }

            #[test]
            fn two_point_sum_is_zero(s in 1usize..40) {
                prop_assert!(two_point_vanishes(s));
            }

            #[test]
            fn even_polynomial_value_at_one_matches_table(s in 1usize..30) {
                prop_assert_eq!(even_poly(s).eval(&rat(1, 1)), even_at_one_closed(s));
            }
        }
    }
}
