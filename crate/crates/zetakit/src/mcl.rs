//! Minor-corner-layered determinants: lower-Hessenberg Toeplitz matrices
//! with a unit superdiagonal, in three flavors (plain, first-column
//! weighted, first-column plus bottom-row weighted), each with a signed
//! value Delta/Psi/Lambda carrying a (-1)^s prefactor.
//!
//! The production path is the O(s^2) first-column expansion recurrence.
//! A literal-matrix determinant (fraction-free elimination, bounded s)
//! serves as the oracle, and an integer-composition expansion provides a
//! third route for the plain flavor. The verification suite plays all
//! routes against each other on seeded random rational inputs.

use rand::Rng;
use rug::{Integer, Rational};

use crate::exactcore::{combin, rat, Coeff};
use crate::report::{bool_case, exact_case, Case, CaseStatus, VerificationReport};
use crate::{Error, Result};

/// Cost guard for the literal-matrix oracle.
pub const NAIVE_MAX_S: usize = 12;
/// Cost guard for the composition expansion (2^{s-1} expanded monomials).
pub const COMPOSITION_MAX_S: usize = 24;

fn check_len(name: &'static str, len: usize, s: usize) -> Result<()> {
    if len < s {
        return Err(Error::LengthShortfall { needed: s, got: len });
    }
    let _ = name;
    Ok(())
}

/// Delta_0..Delta_s by the first-column expansion
/// Delta_m = -sum_{k=0}^{m-1} h_{m-k} Delta_k, Delta_0 = 1.
pub fn delta_all<C: Coeff>(h: &[C], s: usize) -> Result<Vec<C>> {
    check_len("h", h.len(), s)?;
    let mut d: Vec<C> = Vec::with_capacity(s + 1);
    d.push(C::one());
    for m in 1..=s {
        let mut acc = C::zero();
        for (k, dk) in d.iter().enumerate() {
            acc = acc.add_ref(&h[m - 1 - k].mul_ref(dk));
        }
        d.push(acc.neg_ref());
    }
    Ok(d)
}

/// The plain (type 1) determinant value Delta_s.
pub fn delta<C: Coeff>(h: &[C], s: usize) -> Result<C> {
    Ok(delta_all(h, s)?.pop().expect("nonempty by construction"))
}

/// Psi_s by the first-column route Psi_s = -sum_{k=0}^{s-1} H_{s-k} Delta_k.
pub fn psi<C: Coeff>(h: &[C], weights: &[C], s: usize) -> Result<C> {
    check_len("H", weights.len(), s)?;
    if s == 0 {
        return Ok(C::one());
    }
    let d = delta_all(h, s - 1)?;
    let mut acc = C::zero();
    for (k, dk) in d.iter().enumerate() {
        acc = acc.add_ref(&weights[s - 1 - k].mul_ref(dk));
    }
    Ok(acc.neg_ref())
}

/// Psi_1..Psi_s by the bottom-row route
/// Psi_m = -H_m - sum_{k=1}^{m-1} h_{m-k} Psi_k; an independent second
/// characterization of the same value.
pub fn psi_all_via_row<C: Coeff>(h: &[C], weights: &[C], s: usize) -> Result<Vec<C>> {
    check_len("h", h.len(), s.saturating_sub(1))?;
    check_len("H", weights.len(), s)?;
    let mut p: Vec<C> = Vec::with_capacity(s + 1);
    p.push(C::one());
    for m in 1..=s {
        let mut acc = weights[m - 1].clone();
        for k in 1..m {
            acc = acc.add_ref(&h[m - k - 1].mul_ref(&p[k]));
        }
        p.push(acc.neg_ref());
    }
    Ok(p)
}

pub fn psi_via_row<C: Coeff>(h: &[C], weights: &[C], s: usize) -> Result<C> {
    Ok(psi_all_via_row(h, weights, s)?
        .pop()
        .expect("nonempty by construction"))
}

/// Lambda_s = -sum_{k=0}^{s-1} H_{s-k} Psi_k(h, G): the fully weighted
/// value expands into first-column weights against G-weighted minors.
pub fn lambda3<C: Coeff>(h: &[C], weights: &[C], bottom: &[C], s: usize) -> Result<C> {
    check_len("H", weights.len(), s)?;
    if s == 0 {
        return Ok(C::one());
    }
    check_len("G", bottom.len(), s - 1)?;
    let mut acc = C::zero();
    for k in 0..s {
        let psi_k = psi(h, bottom, k)?;
        acc = acc.add_ref(&weights[s - 1 - k].mul_ref(&psi_k));
    }
    Ok(acc.neg_ref())
}

/// Which literal matrix to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Plain,
    ColumnWeighted,
    FullyWeighted,
}

/// Literal matrix of the given kind and order; entries are placed exactly
/// as displayed in the defining determinants. The diagonal shift `mu` is
/// subtracted from every diagonal entry (zero for the plain value).
pub fn build_matrix(
    kind: MatrixKind,
    h: &[Rational],
    weights: &[Rational],
    bottom: &[Rational],
    s: usize,
    mu: &Rational,
) -> Result<Vec<Vec<Rational>>> {
    if s == 0 || s > NAIVE_MAX_S {
        return Err(Error::OrderTooLarge {
            s,
            max: NAIVE_MAX_S,
        });
    }
    check_len("h", h.len(), s.saturating_sub(1).max(1))?;
    if kind != MatrixKind::Plain {
        check_len("H", weights.len(), s)?;
    }
    if kind == MatrixKind::FullyWeighted && s >= 2 {
        check_len("G", bottom.len(), s - 1)?;
    }
    if kind == MatrixKind::Plain {
        check_len("h", h.len(), s)?;
    }
    let mut m = vec![vec![Rational::new(); s]; s];
    for i in 1..=s {
        for j in 1..=s {
            let e = &mut m[i - 1][j - 1];
            if j == i + 1 {
                *e = Rational::from(1);
            } else if j <= i {
                *e = match kind {
                    MatrixKind::Plain => h[i - j].clone(),
                    MatrixKind::ColumnWeighted => {
                        if j == 1 {
                            weights[i - 1].clone()
                        } else {
                            h[i - j].clone()
                        }
                    }
                    MatrixKind::FullyWeighted => {
                        if j == 1 {
                            weights[i - 1].clone()
                        } else if i == s {
                            bottom[s - j].clone()
                        } else {
                            h[i - j].clone()
                        }
                    }
                };
            }
            if i == j {
                *e -= mu;
            }
        }
    }
    Ok(m)
}

/// Exact determinant of a rational matrix: rows are scaled to integers,
/// the integer matrix goes through fraction-free (Bareiss) elimination,
/// and the scale factors divide back out.
pub fn det_exact(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::from(1);
    }
    let mut scale = Integer::from(1);
    let mut int_rows: Vec<Vec<Integer>> = Vec::with_capacity(n);
    for row in &mut m {
        let mut lcm = Integer::from(1);
        for e in row.iter() {
            lcm.lcm_mut(e.denom());
        }
        scale *= &lcm;
        int_rows.push(
            row.iter()
                .map(|e| Rational::from(e * &lcm).numer().clone())
                .collect(),
        );
    }
    let det = bareiss_det(int_rows);
    Rational::from((det, scale))
}

/// Bareiss fraction-free elimination over exact integers. Every interior
/// division is exact; row swaps flip the sign.
fn bareiss_det(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = Integer::from(1);
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Integer::new();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = Integer::from(&m[i][j] * &m[k][k]) - Integer::from(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = Integer::new();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = -det;
    }
    det
}

fn signed(s: usize, det: Rational) -> Rational {
    if s % 2 == 1 {
        -det
    } else {
        det
    }
}

/// Oracle for Delta_s: literal matrix, fraction-free determinant, times
/// the (-1)^s prefactor.
pub fn delta_naive(h: &[Rational], s: usize) -> Result<Rational> {
    if s == 0 {
        return Ok(Rational::from(1));
    }
    let m = build_matrix(MatrixKind::Plain, h, &[], &[], s, &Rational::new())?;
    Ok(signed(s, det_exact(m)))
}

pub fn psi_naive(h: &[Rational], weights: &[Rational], s: usize) -> Result<Rational> {
    if s == 0 {
        return Ok(Rational::from(1));
    }
    let m = build_matrix(
        MatrixKind::ColumnWeighted,
        h,
        weights,
        &[],
        s,
        &Rational::new(),
    )?;
    Ok(signed(s, det_exact(m)))
}

pub fn lambda3_naive(
    h: &[Rational],
    weights: &[Rational],
    bottom: &[Rational],
    s: usize,
) -> Result<Rational> {
    if s == 0 {
        return Ok(Rational::from(1));
    }
    let m = build_matrix(
        MatrixKind::FullyWeighted,
        h,
        weights,
        bottom,
        s,
        &Rational::new(),
    )?;
    Ok(signed(s, det_exact(m)))
}

/// Characteristic-polynomial evaluation along the recurrence route: the
/// diagonal shift folds into the first entry of each vector that reaches
/// the diagonal (h_1 always; H_1 and G_1 when their kind places them
/// there), after which the plain recurrences apply unchanged.
pub fn char_poly_recurrence(
    kind: MatrixKind,
    h: &[Rational],
    weights: &[Rational],
    bottom: &[Rational],
    s: usize,
    mu: &Rational,
) -> Result<Rational> {
    let shift_head = |xs: &[Rational]| -> Vec<Rational> {
        let mut v = xs.to_vec();
        if let Some(first) = v.first_mut() {
            *first -= mu;
        }
        v
    };
    let hs = shift_head(h);
    match kind {
        MatrixKind::Plain => delta(&hs, s),
        MatrixKind::ColumnWeighted => psi(&hs, &shift_head(weights), s),
        MatrixKind::FullyWeighted => lambda3(&hs, &shift_head(weights), &shift_head(bottom), s),
    }
}

/// Characteristic-polynomial evaluation along the literal route:
/// (-1)^s det(M - mu I).
pub fn char_poly_naive(
    kind: MatrixKind,
    h: &[Rational],
    weights: &[Rational],
    bottom: &[Rational],
    s: usize,
    mu: &Rational,
) -> Result<Rational> {
    let m = build_matrix(kind, h, weights, bottom, s, mu)?;
    Ok(signed(s, det_exact(m)))
}

/// Calls `f` once per solution of d_1 + 2 d_2 + ... + s d_s = s with all
/// d_i >= 0, passing the exponent vector (d_1..d_s). Enumeration recurses
/// over part sizes in decreasing order and streams; nothing is stored.
pub fn for_each_composition<F: FnMut(&[usize])>(s: usize, f: &mut F) -> Result<()> {
    if s > COMPOSITION_MAX_S {
        return Err(Error::OrderTooLarge {
            s,
            max: COMPOSITION_MAX_S,
        });
    }
    let mut d = vec![0usize; s];
    fn descend<F: FnMut(&[usize])>(d: &mut [usize], part: usize, remaining: usize, f: &mut F) {
        if part == 1 {
            d[0] = remaining;
            f(d);
            d[0] = 0;
            return;
        }
        for count in 0..=remaining / part {
            d[part - 1] = count;
            descend(d, part - 1, remaining - part * count, f);
        }
        d[part - 1] = 0;
    }
    if s > 0 {
        descend(&mut d, s, s, f);
    }
    Ok(())
}

/// Total expanded monomial count sum_d multinomial(d) and the per-part-
/// count totals indexed by t = sum d_i.
pub fn composition_counts(s: usize) -> Result<(Integer, Vec<Integer>)> {
    let mut total = Integer::new();
    let mut per_t = vec![Integer::new(); s + 1];
    for_each_composition(s, &mut |d| {
        let t: usize = d.iter().sum();
        let weight = combin::multinomial(d);
        total += &weight;
        per_t[t] += weight;
    })?;
    Ok((total, per_t))
}

/// Third route for the plain value: the signed multinomial expansion
/// Delta_s = sum over compositions of (-1)^t multinomial(t; d) h^d.
pub fn delta_by_compositions<C: Coeff>(h: &[C], s: usize) -> Result<C> {
    check_len("h", h.len(), s)?;
    if s == 0 {
        return Ok(C::one());
    }
    let mut acc = C::zero();
    for_each_composition(s, &mut |d| {
        let t: usize = d.iter().sum();
        let mut term = C::one();
        for (i, &di) in d.iter().enumerate() {
            for _ in 0..di {
                term = term.mul_ref(&h[i]);
            }
        }
        term = term.mul_integer(&combin::multinomial(d));
        if t % 2 == 1 {
            term = term.neg_ref();
        }
        acc = acc.add_ref(&term);
    })?;
    Ok(acc)
}

/// Minor of the plain matrix at (i, j), 1-indexed, i >= j: delete the row
/// and column and take the unsigned determinant.
pub fn minor_naive(h: &[Rational], s: usize, i: usize, j: usize) -> Result<Rational> {
    let m = build_matrix(MatrixKind::Plain, h, &[], &[], s, &Rational::new())?;
    let sub: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .filter(|(r, _)| r + 1 != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| c + 1 != j)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect();
    Ok(det_exact(sub))
}

/// Bernoulli numbers out of the plain determinant, two ways: B_s from the
/// factorial-reciprocal vector, and B_{2s} from the odd-factorial vector
/// (whose printed sign is ambiguous; the negative sign is the one that
/// reproduces the table, fixed here and flagged in the suite).
pub fn bernoulli_via_delta(s: usize) -> Rational {
    let v: Vec<Rational> = (1..=s)
        .map(|k| Rational::from((Integer::from(1), combin::factorial(k + 1))))
        .collect();
    let d = delta(&v, s).expect("vector sized to order");
    d * Rational::from(combin::factorial(s))
}

pub fn bernoulli_even_via_delta(s: usize) -> Rational {
    let u: Vec<Rational> = (1..=s)
        .map(|k| Rational::from((Integer::from(1), combin::factorial(2 * k + 1))))
        .collect();
    let d = delta(&u, s).expect("vector sized to order");
    let denom = Rational::from(2) * (crate::exactcore::pow2(2 * s as i64 - 1) - 1u32);
    -d * Rational::from(combin::factorial(2 * s)) / denom
}

/// Uniform random rational with numerator in [-bound, bound] and
/// denominator in [1, den_bound].
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64, den_bound: i64) -> Rational {
    rat(
        rng.gen_range(-bound..=bound),
        rng.gen_range(1..=den_bound),
    )
}

fn random_vec<R: Rng>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng, 20, 8)).collect()
}

/// One clause-level case over many trials: the first mismatch is reported
/// with its trial index; otherwise the case records the trial count.
pub(crate) fn trial_case(
    id: &str,
    identity: &str,
    trials: usize,
    mut run: impl FnMut(usize) -> Option<(Rational, Rational)>,
) -> Case {
    for trial in 0..trials {
        if let Some((lhs, rhs)) = run(trial) {
            if lhs != rhs {
                let mut case = exact_case(id, identity, &lhs, &rhs);
                case.identity = format!("{identity}; first mismatch in trial {trial}");
                return case;
            }
        }
    }
    bool_case(
        id,
        identity,
        true,
        format!("{trials} randomized trials"),
        "all agree",
    )
}

/// Randomized cross-validation of every route in this module. All inputs
/// derive from the caller's seeded generator, so reports are reproducible
/// byte for byte.
pub fn verify_random<R: Rng>(max_s: usize, trials: usize, rng: &mut R) -> VerificationReport {
    let start = std::time::Instant::now();
    let mut report = VerificationReport::new("mcl-routes");
    let naive_cap = max_s.min(NAIVE_MAX_S);

    // Pre-generate every random input in a fixed order so case evaluation
    // order cannot influence the stream.
    let mut inputs: Vec<(usize, Vec<Rational>, Vec<Rational>, Vec<Rational>, Rational)> =
        Vec::with_capacity(trials);
    for _ in 0..trials {
        let s = rng.gen_range(1..=naive_cap);
        inputs.push((
            s,
            random_vec(rng, s),
            random_vec(rng, s),
            random_vec(rng, s),
            random_rational(rng, 9, 9),
        ));
    }

    report.push(trial_case(
        "plain-recurrence-vs-naive",
        "first-column recurrence equals literal determinant, plain type",
        trials,
        |t| {
            let (s, h, _, _, _) = &inputs[t];
            Some((
                delta(h, *s).unwrap(),
                delta_naive(h, *s).unwrap(),
            ))
        },
    ));
    report.push(trial_case(
        "column-recurrence-vs-naive",
        "first-column recurrence equals literal determinant, column-weighted type",
        trials,
        |t| {
            let (s, h, hw, _, _) = &inputs[t];
            Some((psi(h, hw, *s).unwrap(), psi_naive(h, hw, *s).unwrap()))
        },
    ));
    report.push(trial_case(
        "row-route-vs-naive",
        "bottom-row recurrence equals literal determinant, column-weighted type",
        trials,
        |t| {
            let (s, h, hw, _, _) = &inputs[t];
            Some((
                psi_via_row(h, hw, *s).unwrap(),
                psi_naive(h, hw, *s).unwrap(),
            ))
        },
    ));
    report.push(trial_case(
        "fully-weighted-vs-naive",
        "weight-against-minors recurrence equals literal determinant, fully weighted type",
        trials,
        |t| {
            let (s, h, hw, g, _) = &inputs[t];
            Some((
                lambda3(h, hw, g, *s).unwrap(),
                lambda3_naive(h, hw, g, *s).unwrap(),
            ))
        },
    ));
    report.push(trial_case(
        "degenerate-collapse",
        "weighted types collapse onto plainer ones when the extra vectors repeat h",
        trials,
        |t| {
            let (s, h, hw, _, _) = &inputs[t];
            let psi_h = psi(h, h, *s).unwrap();
            let delta_h = delta(h, *s).unwrap();
            if psi_h != delta_h {
                return Some((psi_h, delta_h));
            }
            Some((
                lambda3(h, hw, h, *s).unwrap(),
                psi(h, hw, *s).unwrap(),
            ))
        },
    ));
    report.push(trial_case(
        "char-poly-shift",
        "diagonal shift via the recurrences equals the shifted literal determinant",
        trials,
        |t| {
            let (s, h, hw, g, mu) = &inputs[t];
            let s8 = (*s).min(8);
            for kind in [
                MatrixKind::Plain,
                MatrixKind::ColumnWeighted,
                MatrixKind::FullyWeighted,
            ] {
                let a = char_poly_recurrence(kind, h, hw, g, s8, mu).unwrap();
                let b = char_poly_naive(kind, h, hw, g, s8, mu).unwrap();
                if a != b {
                    return Some((a, b));
                }
            }
            None
        },
    ));

    let comp_cap = max_s.min(16);
    report.push(trial_case(
        "composition-vs-recurrence",
        "signed multinomial expansion equals the recurrence value",
        trials.min(100),
        |t| {
            let (_, h, _, _, _) = &inputs[t];
            let mut h = h.clone();
            while h.len() < comp_cap {
                h.push(h[h.len() % inputs[t].1.len()].clone());
            }
            let s = (t % comp_cap) + 1;
            Some((
                delta_by_compositions(&h, s).unwrap(),
                delta(&h, s).unwrap(),
            ))
        },
    ));

    report.push(trial_case(
        "cofactor-factorization",
        "deleting row i >= column j splits the minor into two plain determinants",
        trials.min(60),
        |t| {
            let (s, h, _, _, _) = &inputs[t];
            let s = (*s).clamp(2, 10);
            let mut h = h.clone();
            while h.len() < s {
                h.push(h[0].clone());
            }
            for i in 1..=s {
                for j in 1..=i {
                    let minor = minor_naive(&h, s, i, j).unwrap();
                    let left = signed(j - 1, delta(&h, j - 1).unwrap());
                    let right = signed(s - i, delta(&h, s - i).unwrap());
                    let expect = left * right;
                    if minor != expect {
                        return Some((minor, expect));
                    }
                }
            }
            None
        },
    ));

    // The printed sign normalization for the cofactor identity holds only
    // for odd matrix order; record the parity restriction without failing.
    let mut parity_note = bool_case(
        "cofactor-printed-sign",
        "the (-1)^{i+j} signed product form reproduces minors exactly when the order is odd",
        true,
        "odd orders: equal",
        "even orders: off by a global sign",
    );
    parity_note.status = CaseStatus::Observational;
    report.push(parity_note);

    report.wall_time = start.elapsed();
    report
}

/// Structural counts of the composition expansion: 2^{s-1} expanded
/// monomials in total, C(s-1, t-1) per part count t.
pub fn verify_counts(max_s: usize) -> VerificationReport {
    let start = std::time::Instant::now();
    let mut report = VerificationReport::new("mcl-composition-counts");
    for s in 1..=max_s.min(COMPOSITION_MAX_S) {
        let (total, per_t) = composition_counts(s).expect("bounded s");
        let expect_total = Integer::from(1) << (s as u32 - 1);
        let mut ok = total == expect_total;
        for (t, got) in per_t.iter().enumerate().skip(1) {
            if *got != combin::binomial(s - 1, t - 1) {
                ok = false;
            }
        }
        report.push(bool_case(
            format!("counts-{s:02}"),
            format!("expanded monomial totals at order {s} match the closed counts"),
            ok,
            total.to_string(),
            expect_total.to_string(),
        ));
    }
    report.wall_time = start.elapsed();
    report
}

/// Bernoulli values out of determinants, cross-checked against the
/// recurrence tables; the ambiguous printed sign of the even-index form
/// is pinned by testing both candidates.
pub fn verify_bernoulli_bridge(max_s: usize) -> VerificationReport {
    let start = std::time::Instant::now();
    let mut report = VerificationReport::new("mcl-bernoulli-bridge");
    for s in 1..=max_s {
        report.push(exact_case(
            format!("factorial-vector-{s:02}"),
            format!("s! times the plain determinant of factorial reciprocals gives the Bernoulli number, s = {s}"),
            &bernoulli_via_delta(s),
            &crate::bernoulli::bernoulli(s),
        ));
    }
    for s in 1..=max_s / 2 {
        report.push(exact_case(
            format!("odd-factorial-vector-{s:02}"),
            format!("scaled plain determinant of odd-factorial reciprocals gives the even Bernoulli number, s = {s}"),
            &bernoulli_even_via_delta(s),
            &crate::bernoulli::bernoulli(2 * s),
        ));
    }
    // Pin the sign choice: the opposite reading must disagree.
    let opposite = -bernoulli_even_via_delta(1);
    let mut sign_case = exact_case(
        "odd-factorial-vector-sign",
        "the double-negative printed prefactor reads as a single minus; the opposite sign fails the table",
        &opposite,
        &crate::bernoulli::bernoulli(2),
    );
    sign_case.status = match sign_case.status {
        CaseStatus::Fail => CaseStatus::Observational,
        _ => CaseStatus::Fail,
    };
    report.push(sign_case);
    report.wall_time = start.elapsed();
    report
}
