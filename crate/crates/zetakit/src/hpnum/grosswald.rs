//! Lambert-type series F_s(z) = sum sigma_{-s}(n) e^{2 pi i n z} on the
//! upper half-plane, and numeric verification of the modular shift
//! identities that tie F at reciprocal points to the reciprocal
//! polynomials and odd zeta values.
//!
//! Every identity is checked through at least two computational routes:
//! the series itself is summed both as a q-expansion over prime powers of
//! q = e^{2 pi i z} and as a divisor-function sieve, polynomial values
//! enter both as exact Gaussian-rational evaluations and as recovered
//! floats from the series side, and truncation points are certified by
//! re-summing with twice the cutoff.

use rug::{Float, Integer};

use crate::bernoulli::bernoulli;
use crate::exactcore::combin::factorial;
use crate::exactcore::{GaussRat, Rational};
use crate::hpnum::{float_pow, pi, HPComplex};
use crate::ramanujan::{ramanujan_poly, RamanujanPoly};
use crate::report::{bool_case, exact_case, float_case, Case, VerificationReport};
use crate::{Error, Result};

/// One evaluation of the Lambert series: the index s, the evaluation
/// point, the value, and how many series terms the tail bound required.
#[derive(Debug, Clone)]
pub struct GrosswaldValue {
    pub s_index: u32,
    pub z: HPComplex,
    pub value: HPComplex,
    pub terms_used: usize,
}

/// n^s as an exact integer; series indices stay small enough that this is
/// always cheap.
fn int_pow(n: u32, s: u32) -> Integer {
    Integer::from(Integer::u_pow_u(n, s))
}

/// z^k by repeated multiplication; exponents here never exceed a few
/// hundred, so no squaring ladder is needed.
fn cpow(z: &HPComplex, k: u32) -> HPComplex {
    let mut acc = HPComplex::from_real(Float::with_val(z.prec(), 1));
    for _ in 0..k {
        acc = acc.mul(z);
    }
    acc
}

/// Evaluates a rational-coefficient polynomial at a complex float by
/// Horner's rule at the argument's precision.
fn eval_poly_complex(p: &RamanujanPoly, z: &HPComplex) -> HPComplex {
    let wp = z.prec();
    let mut acc = HPComplex::zero(wp);
    for c in p.poly.coeffs().iter().rev() {
        acc = acc.mul(z).add_real(&Float::with_val(wp, c));
    }
    acc
}

/// Hard cap on series length; reaching it means the requested point is so
/// close to the real axis that the target precision is not attainable in
/// reasonable work, which is reported as a precision error.
const MAX_TERMS: usize = 2_000_000;

/// Core summation of F_s(z) = sum_n n^{-s} q^n / (1 - q^n), q = e^{2 pi i z},
/// truncated when the term bound e^{-2 pi n Im z} / n^s, inflated by the
/// geometric factor 1/(1-|q|), falls below 2^{stop_exp}. `min_terms` forces
/// a longer run so a caller can certify the cutoff by doubling it.
fn f_series(
    s: u32,
    z: &HPComplex,
    wp: u32,
    stop_exp: i32,
    min_terms: usize,
) -> Result<(HPComplex, usize)> {
    if !z.im.is_sign_positive() || z.im.is_zero() || !z.is_finite() {
        return Err(Error::NonPositiveImag);
    }
    let two_pi = Float::with_val(wp, pi(wp)) * 2u32;
    // q = e^{2 pi i z}; |q| = e^{-2 pi Im z} < 1 on the upper half-plane.
    let q = z.with_prec(wp).mul_i().mul_real(&two_pi).exp();
    let qmag = q.abs();
    let geometric = Float::with_val(wp, 1 - &qmag);
    let threshold = Float::with_val(wp, &geometric) << stop_exp;
    let mut qn = HPComplex::from_real(Float::with_val(wp, 1));
    let mut qn_mag = Float::with_val(wp, 1);
    let mut acc = HPComplex::zero(wp);
    let mut n: u32 = 0;
    loop {
        n += 1;
        qn = qn.mul(&q);
        qn_mag *= &qmag;
        let ns = Float::with_val(wp, int_pow(n, s));
        let denom = HPComplex::from_real(Float::with_val(wp, 1)).sub(&qn);
        let term = qn.div(&denom).mul_real(&Float::with_val(wp, 1 / &ns));
        acc = acc.add(&term);
        let bound = Float::with_val(wp, &qn_mag / &ns);
        if bound < threshold && n as usize >= min_terms {
            return Ok((acc, n as usize));
        }
        if n as usize >= MAX_TERMS {
            return Err(Error::PrecisionTooLow { needed: wp + 64, got: wp });
        }
    }
}

/// Same sum arranged by the divisor function: F_s(z) = sum_n sigma_{-s}(n) q^n
/// with sigma_{-s}(n) = sum_{d | n} d^{-s}, sieved up to the cutoff. An
/// independent route used to cross-check `f_series`.
fn f_divisor(s: u32, z: &HPComplex, wp: u32, cutoff: usize) -> Result<HPComplex> {
    if !z.im.is_sign_positive() || z.im.is_zero() || !z.is_finite() {
        return Err(Error::NonPositiveImag);
    }
    let mut sigma = vec![Float::new(wp); cutoff + 1];
    for d in 1..=cutoff {
        let dpow = Float::with_val(wp, int_pow(d as u32, s));
        let drec = Float::with_val(wp, 1 / dpow);
        let mut m = d;
        while m <= cutoff {
            sigma[m] += &drec;
            m += d;
        }
    }
    let two_pi = Float::with_val(wp, pi(wp)) * 2u32;
    let q = z.with_prec(wp).mul_i().mul_real(&two_pi).exp();
    let mut qn = HPComplex::from_real(Float::with_val(wp, 1));
    let mut acc = HPComplex::zero(wp);
    for coeff in sigma.iter().skip(1) {
        qn = qn.mul(&q);
        acc = acc.add(&qn.mul_real(coeff));
    }
    Ok(acc)
}

/// F_s(z) on the upper half-plane, truncated once the certified term bound
/// drops below 2^{-prec-20}; points at or below the real axis are rejected.
pub fn grosswald_f(s_index: u32, z: &HPComplex, prec: u32) -> Result<GrosswaldValue> {
    if prec < 64 {
        return Err(Error::PrecisionTooLow { needed: 64, got: prec });
    }
    let wp = prec + 64;
    let (value, terms_used) = f_series(s_index, z, wp, -((prec + 20) as i32), 0)?;
    Ok(GrosswaldValue {
        s_index,
        z: z.clone(),
        value: value.with_prec(prec),
        terms_used,
    })
}

/// zeta(m) for an integer argument m >= 2 as a real float at `wp` bits.
fn zeta_int(m: u32, wp: u32) -> Result<Float> {
    let z = super::zeta_hp(&HPComplex::from_real(Float::with_val(wp, m)), wp)?;
    Ok(z.re)
}

/// Residual case comparing a complex identity's two sides by the modulus
/// of their difference against 2^{tol_log2}.
fn residual_case(
    id: impl Into<String>,
    identity: impl Into<String>,
    lhs: &HPComplex,
    rhs: &HPComplex,
    tol_log2: i32,
) -> Case {
    let prec = lhs.prec();
    let diff = lhs.sub(rhs).abs();
    float_case(id, identity, &diff, &Float::new(prec), tol_log2)
}

/// One modular-shift check: F_{2s+1}(z) - z^{2s} F_{2s+1}(-1/z) against
/// (1/2) zeta(2s+1) (z^{2s} - 1) + (2 pi i)^{2s+1} / (2z) R_{2s+1}(z).
fn modular_shift_case(
    s: u32,
    z: &HPComplex,
    label: &str,
    odd: &RamanujanPoly,
    zeta_val: &Float,
    wp: u32,
    tol_log2: i32,
) -> Result<Case> {
    let m = 2 * s + 1;
    let (f_z, _) = f_series(m, z, wp, -(wp as i32) + 20, 0)?;
    let z_flip = z.recip().neg();
    let (f_flip, _) = f_series(m, &z_flip, wp, -(wp as i32) + 20, 0)?;
    let z2s = cpow(z, 2 * s);
    let lhs = f_z.sub(&z2s.mul(&f_flip));
    let half_zeta = Float::with_val(wp, zeta_val / 2u32);
    let one = HPComplex::from_real(Float::with_val(wp, 1));
    let factor = cpow(&HPComplex::new(Float::new(wp), Float::with_val(wp, pi(wp)) * 2u32), m)
        .div(&z.with_prec(wp).mul_real(&Float::with_val(wp, 2)));
    let rhs = z2s
        .sub(&one)
        .mul_real(&half_zeta)
        .add(&factor.mul(&eval_poly_complex(odd, &z.with_prec(wp))));
    Ok(residual_case(
        format!("modular-shift-s{s}-{label}"),
        format!("F({label}) - z^2s F(-1/{label}) matches zeta and polynomial terms"),
        &lhs,
        &rhs,
        tol_log2,
    ))
}

/// Exact rational value of an even-index polynomial at i*b for rational b;
/// the polynomial has even powers only, so the value is real.
fn even_poly_at_imag(even: &RamanujanPoly, b: Rational) -> Rational {
    let v = even.poly.eval_gauss(&GaussRat::imaginary(b));
    debug_assert!(v.im == 0);
    v.re
}

/// Direct summation of sum_n n^{-(2s+1)} (1/(e^{pi n} - 1) -
/// 2^{-2s}/(e^{4 pi n} - 1)), returning the total and whether every term
/// was positive.
fn positivity_sum(s: u32, wp: u32, stop_exp: i32) -> (Float, bool) {
    let p = pi(wp);
    let mut total = Float::new(wp);
    let mut all_positive = true;
    let mut n: u32 = 0;
    loop {
        n += 1;
        let en = Float::with_val(wp, &p * n).exp();
        let e4n = float_pow(&en, 4);
        let small = Float::with_val(wp, &e4n - 1u32).recip() >> (2 * s);
        let big = Float::with_val(wp, &en - 1u32).recip();
        let ns = Float::with_val(wp, int_pow(n, 2 * s + 1));
        let term = Float::with_val(wp, &big - &small) / &ns;
        if !(term.is_sign_positive() && !term.is_zero()) {
            all_positive = false;
        }
        total += &term;
        let bound = Float::with_val(wp, en.recip() / ns);
        if bound < Float::with_val(wp, Float::i_exp(1, stop_exp)) {
            return (total, all_positive);
        }
    }
}

/// Numeric confirmation of the modular shift identity at z in {i, i/2, 2i}
/// and of the four half/unit-point displays tying R_{2s} values to F and
/// zeta(2s+1); even s adds the exact equal-points identity and the
/// positive-term decomposition behind the transcendence dichotomy.
pub fn verify_grosswald_identities(s: u32, prec: u32) -> Result<VerificationReport> {
    if prec < 192 {
        return Err(Error::PrecisionTooLow { needed: 192, got: prec });
    }
    assert!(s >= 1, "identities are indexed from s = 1");
    let wp = prec + 64;
    let tol = -(prec as i32) + 32;
    let m = 2 * s + 1;
    let odd = ramanujan_poly(m as usize);
    let even = ramanujan_poly(2 * s as usize);
    let zeta_val = zeta_int(m, wp)?;
    let mut rep = VerificationReport::new(format!("grosswald-identities-s{s}"));

    let unit = HPComplex::new(Float::new(wp), Float::with_val(wp, 1));
    let half = HPComplex::new(Float::new(wp), Float::with_val(wp, 0.5f64));
    let double = HPComplex::new(Float::new(wp), Float::with_val(wp, 2));
    for (z, label) in [(&unit, "i"), (&half, "i-half"), (&double, "2i")] {
        rep.push(modular_shift_case(s, z, label, &odd, &zeta_val, wp, tol)?);
    }

    // Tail certification: the declared cutoff is re-run doubled and the two
    // sums must agree far below the returned precision. Both runs stay at
    // working precision so the comparison measures truncation alone.
    let (base, base_terms) = f_series(m, &half, wp, -((prec + 20) as i32), 0)?;
    let (doubled, _) = f_series(m, &half, wp, -((prec + 20) as i32), 2 * base_terms)?;
    rep.push(residual_case(
        format!("tail-doubling-s{s}"),
        "series value is stable when the truncation point is doubled",
        &base,
        &doubled,
        -(prec as i32) - 8,
    ));

    // Route agreement: q-expansion versus divisor-function sieve. The
    // sieve tail decays like |q|^n alone (sigma_{-m}(n) stays near 1, with
    // no n^{-m} factor), so its cutoff comes from |q|^C < 2^{-(prec+28)}
    // rather than from the power-tower term count.
    let bits_per_term = 2.0 * std::f64::consts::PI * 0.5 / std::f64::consts::LN_2;
    let sieve_cutoff = ((prec as f64 + 28.0) / bits_per_term).ceil() as usize + 1;
    let sieved = f_divisor(m, &half, wp, sieve_cutoff.max(base_terms + 8))?;
    rep.push(residual_case(
        format!("series-route-agreement-s{s}"),
        "power-tower summation and divisor sieve give the same value",
        &base,
        &sieved,
        -(prec as i32) - 8,
    ));

    let (f_half, _) = f_series(m, &half, wp, -(wp as i32) + 20, 0)?;
    let (f_unit, _) = f_series(m, &unit, wp, -(wp as i32) + 20, 0)?;
    let (f_double, _) = f_series(m, &double, wp, -(wp as i32) + 20, 0)?;
    let two_pi_pow = float_pow(&(Float::with_val(wp, pi(wp)) * 2u32), m);
    let quarter_pow = Float::with_val(wp, &two_pi_pow / 4u32);
    let down = Float::with_val(wp, 1u32) >> (2 * s);
    let r_half = Float::with_val(wp, &even_poly_at_imag(&even, Rational::from((1, 2))));
    let r_unit = Float::with_val(wp, &even_poly_at_imag(&even, Rational::from(1)));

    if s % 2 == 0 {
        // Even index: both displays share one right-hand side built from
        // eta(2s+1) = (1 - 2^{-2s}) zeta(2s+1).
        let eta = Float::with_val(wp, 1 - &down) * &zeta_val;
        let rhs = Float::with_val(wp, &f_half.re - Float::with_val(wp, &down * &f_double.re))
            + Float::with_val(wp, &eta / 2u32);
        let lhs_half = Float::with_val(wp, &quarter_pow * &r_half);
        let lhs_unit = Float::with_val(wp, &quarter_pow * &r_unit);
        rep.push(float_case(
            format!("even-half-point-s{s}"),
            "scaled even polynomial at i/2 matches the F and eta combination",
            &lhs_half,
            &rhs,
            tol,
        ));
        rep.push(float_case(
            format!("even-unit-point-s{s}"),
            "scaled even polynomial at i matches the same combination",
            &lhs_unit,
            &rhs,
            tol,
        ));
        rep.push(exact_case(
            format!("equal-points-exact-s{s}"),
            "even polynomial takes the same exact value at i and i/2",
            &even_poly_at_imag(&even, Rational::from(1)),
            &even_poly_at_imag(&even, Rational::from((1, 2))),
        ));
        // The series side recovers the polynomial value numerically.
        let recovered = Float::with_val(wp, &rhs / &quarter_pow);
        rep.push(float_case(
            format!("series-polynomial-match-s{s}"),
            "polynomial value at i/2 recovered from the series route",
            &recovered,
            &r_half,
            tol,
        ));
        let (direct, all_positive) = positivity_sum(s, wp, -((prec + 20) as i32));
        rep.push(bool_case(
            format!("positive-terms-s{s}"),
            "every term of the dichotomy sum is positive and the total is nonzero",
            all_positive && direct.is_sign_positive() && !direct.is_zero(),
            crate::hpnum::float_to_decimal(&direct),
            "positive",
        ));
        let via_f = Float::with_val(wp, &f_half.re - Float::with_val(wp, &down * &f_double.re));
        rep.push(float_case(
            format!("positivity-route-agreement-s{s}"),
            "direct dichotomy sum equals the difference of the two series values",
            &direct,
            &via_f,
            -(prec as i32) - 8,
        ));
    } else {
        // Odd index: the half and unit points satisfy distinct displays.
        let lhs_half = Float::with_val(wp, -&quarter_pow) * &r_half;
        let rhs_half = Float::with_val(wp, &f_half.re - Float::with_val(wp, &down * &f_unit.re))
            + Float::with_val(wp, &down * &f_double.re)
            + Float::with_val(wp, &zeta_val / 2u32);
        rep.push(float_case(
            format!("odd-half-point-s{s}"),
            "scaled even polynomial at i/2 matches the three-term F combination",
            &lhs_half,
            &rhs_half,
            tol,
        ));
        let lhs_unit = Float::with_val(wp, -&quarter_pow) * &r_unit;
        let three_down = Float::with_val(wp, 3 - &down);
        let rhs_unit = Float::with_val(wp, Float::with_val(wp, 4u32 * &f_unit.re) - &f_half.re)
            - Float::with_val(wp, &down * &f_double.re)
            + Float::with_val(wp, &three_down * &zeta_val) / 2u32;
        rep.push(float_case(
            format!("odd-unit-point-s{s}"),
            "scaled even polynomial at i matches the four-term F combination",
            &lhs_unit,
            &rhs_unit,
            tol,
        ));
    }
    Ok(rep)
}

/// Runs `verify_grosswald_identities` for every index 1 ..= max_s and
/// merges the reports.
pub fn verify_grosswald_upto(max_s: u32, prec: u32) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for s in 1..=max_s {
        reports.push(verify_grosswald_identities(s, prec)?);
    }
    Ok(VerificationReport::merge(reports))
}

/// Both sides of the classical identity for zeta(2s+1): for alpha beta =
/// pi^2,
///
///   alpha^{-s} (zeta(2s+1)/2 + sum_n n^{-(2s+1)}/(e^{2 alpha n} - 1))
///     = (-1)^s beta^{-s} (zeta(2s+1)/2 + sum_n n^{-(2s+1)}/(e^{2 beta n} - 1))
///       - 2^{2s} sum_{k=0}^{s+1} (-1)^k B_{2k} B_{2s+2-2k}
///         / ((2k)! (2s+2-2k)!) alpha^{s+1-k} beta^k,
///
/// which is the z = i beta / pi specialisation of the modular shift
/// identity. The Bernoulli sum is also cross-checked against
/// alpha^{s+1} R_{2s+1}(i beta / pi).
pub fn verify_ramanujan_identity(s: u32, alpha: &Float, prec: u32) -> Result<VerificationReport> {
    if prec < 64 {
        return Err(Error::PrecisionTooLow { needed: 64, got: prec });
    }
    assert!(s >= 1, "identity is indexed from s = 1");
    let wp = prec + 64;
    let tol = -(prec as i32) + 40;
    let m = 2 * s + 1;
    let p = pi(wp);
    let alpha = Float::with_val(wp, alpha);
    let beta = Float::with_val(wp, p.square_ref()) / &alpha;
    let y_alpha = Float::with_val(wp, &alpha / &p);
    let y_beta = Float::with_val(wp, &beta / &p);
    let stop = -((prec + 20) as i32);
    let (f_alpha, _) = f_series(m, &HPComplex::new(Float::new(wp), y_alpha), wp, stop, 0)?;
    let (f_beta, _) = f_series(m, &HPComplex::new(Float::new(wp), y_beta.clone()), wp, stop, 0)?;
    let half_zeta = Float::with_val(wp, zeta_int(m, wp)? / 2u32);

    let alpha_pow = float_pow(&alpha, s);
    let beta_pow = float_pow(&beta, s);
    let lhs = Float::with_val(wp, &half_zeta + &f_alpha.re) / &alpha_pow;
    let sign = if s % 2 == 0 { 1i32 } else { -1i32 };
    let mirrored = Float::with_val(wp, &half_zeta + &f_beta.re) / &beta_pow * sign;

    let mut bern_sum = Float::new(wp);
    for k in 0..=(s as usize + 1) {
        let num = bernoulli(2 * k) * bernoulli(2 * s as usize + 2 - 2 * k);
        let den = factorial(2 * k) * factorial(2 * s as usize + 2 - 2 * k);
        let coeff = num / den;
        let term = Float::with_val(wp, &coeff)
            * float_pow(&alpha, s + 1 - k as u32)
            * float_pow(&beta, k as u32);
        if k % 2 == 0 {
            bern_sum += term;
        } else {
            bern_sum -= term;
        }
    }
    let rhs = mirrored - (Float::with_val(wp, &bern_sum) << (2 * s));

    let label = format!("{:.6}", alpha.to_f64());
    let mut rep = VerificationReport::new("ramanujan-classical-identity");
    rep.push(float_case(
        format!("classical-identity-s{s}-alpha-{label}"),
        "the two weighted series sides differ by the Bernoulli correction",
        &lhs,
        &rhs,
        tol,
    ));

    // Second route for the correction term: it is alpha^{s+1} times the
    // odd-index polynomial at i sqrt(beta/alpha) = i pi / alpha.
    let z0 = HPComplex::new(Float::new(wp), y_beta);
    let poly_route = eval_poly_complex(&ramanujan_poly(m as usize), &z0)
        .mul_real(&Float::with_val(wp, &alpha_pow * &alpha));
    rep.push(float_case(
        format!("bernoulli-polynomial-route-s{s}-alpha-{label}"),
        "Bernoulli correction equals the scaled polynomial value",
        &bern_sum,
        &poly_route.re,
        tol,
    ));
    Ok(rep)
}

/// The classical identity at its three reference configurations: the
/// symmetric point alpha = pi, the quarter period alpha = pi/2 at s = 1,
/// and alpha = 2 pi at s = 3.
pub fn verify_ramanujan_examples(prec: u32) -> Result<Vec<VerificationReport>> {
    let wp = prec + 64;
    let p = pi(wp);
    let reports = vec![
        verify_ramanujan_identity(1, &p, prec)?,
        verify_ramanujan_identity(1, &Float::with_val(wp, &p / 2u32), prec)?,
        verify_ramanujan_identity(3, &Float::with_val(wp, &p * 2u32), prec)?,
    ];
    Ok(VerificationReport::merge(reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 192;

    fn imag(y: f64, prec: u32) -> HPComplex {
        HPComplex::new(Float::new(prec), Float::with_val(prec, y))
    }

    #[test]
    fn lower_half_plane_is_rejected() {
        for y in [0.0, -1.0] {
            match grosswald_f(3, &imag(y, P), P) {
                Err(Error::NonPositiveImag) => {}
                other => panic!("expected rejection at y = {y}, got {other:?}"),
            }
        }
    }

    #[test]
    fn low_precision_is_rejected() {
        match grosswald_f(3, &imag(1.0, 32), 32) {
            Err(Error::PrecisionTooLow { needed: 64, got: 32 }) => {}
            other => panic!("expected precision rejection, got {other:?}"),
        }
        match verify_grosswald_identities(1, 128) {
            Err(Error::PrecisionTooLow { needed: 192, got: 128 }) => {}
            other => panic!("expected precision rejection, got {other:?}"),
        }
    }

    #[test]
    fn first_term_brackets_the_value_at_i() {
        // At z = i the series is dominated by its first term
        // 1/(e^{2 pi} - 1); the whole tail is below zeta(3) times the
        // geometric bound of the first term.
        let v = grosswald_f(3, &imag(1.0, P), P).unwrap();
        assert!(v.value.im.clone().abs() < Float::with_val(P, Float::i_exp(1, -150)));
        let wp = P + 64;
        let e2p = (Float::with_val(wp, pi(wp)) * 2u32).exp();
        let first = Float::with_val(wp, &e2p - 1u32).recip();
        let zeta3 = zeta_int(3, wp).unwrap();
        let cap = Float::with_val(wp, &first / (1u32 - Float::with_val(wp, e2p.recip())));
        let cap = cap * zeta3;
        assert!(v.value.re > first, "value below its first term");
        assert!(v.value.re < cap, "value above the geometric cap");
    }

    #[test]
    fn decay_in_the_imaginary_direction() {
        let hi = grosswald_f(3, &imag(1.0, P), P).unwrap();
        let lo = grosswald_f(3, &imag(2.0, P), P).unwrap();
        assert!(lo.value.re < hi.value.re);
        assert!(lo.terms_used <= hi.terms_used);
    }

    #[test]
    fn doubling_the_cutoff_is_stable_at_256_bits() {
        let z = imag(0.5, 256);
        let v = grosswald_f(5, &z, 256).unwrap();
        let wp = 256 + 64;
        let (again, n) = f_series(5, &z, wp, -(256 + 20), 2 * v.terms_used).unwrap();
        assert!(n >= 2 * v.terms_used);
        let diff = v.value.with_prec(wp).sub(&again).abs();
        assert!(diff < Float::with_val(wp, Float::i_exp(1, -240)), "diff {diff}");
    }

    #[test]
    fn divisor_sieve_matches_power_route() {
        let z = imag(0.5, P);
        let wp = P + 64;
        let (series, n) = f_series(3, &z, wp, -((P + 20) as i32), 0).unwrap();
        let sieved = f_divisor(3, &z, wp, n + 8).unwrap();
        let diff = series.sub(&sieved).abs();
        assert!(diff < Float::with_val(wp, Float::i_exp(1, -((P + 8) as i32))), "diff {diff}");
    }

    #[test]
    fn identity_suite_passes_for_first_indices() {
        for s in 1..=2u32 {
            let rep = verify_grosswald_identities(s, P).unwrap();
            assert!(rep.passed(), "s = {s}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn classical_identity_examples_pass() {
        let reports = verify_ramanujan_examples(P).unwrap();
        for rep in &reports {
            assert!(rep.passed(), "{:?}", rep.first_failure());
        }
    }

    #[test]
    fn symmetric_point_reduces_to_vanishing_polynomial() {
        // At alpha = beta = pi with even s both series sides coincide, so
        // the identity forces the Bernoulli correction itself to vanish,
        // which is the vanishing of the odd polynomial at i.
        let rep = verify_ramanujan_identity(2, &pi(P + 64), P).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(12))]

            #[test]
            fn modular_shift_holds_on_the_imaginary_axis(
                y in 0.4f64..2.5,
                s in 1u32..4,
            ) {
                let wp = 192 + 64;
                let m = 2 * s + 1;
                let odd = ramanujan_poly(m as usize);
                let zeta_val = zeta_int(m, wp).unwrap();
                let z = imag(y, wp);
                let case = modular_shift_case(s, &z, "probe", &odd, &zeta_val, wp, -160).unwrap();
                prop_assert!(
                    matches!(case.status, crate::report::CaseStatus::Pass),
                    "residual {} at y = {y}, s = {s}",
                    case.residual,
                );
            }

            #[test]
            fn series_is_positive_and_decreasing_on_the_axis(
                y in 0.4f64..2.0,
                s in 1u32..5,
            ) {
                let a = grosswald_f(2 * s + 1, &imag(y, 128), 128).unwrap();
                let b = grosswald_f(2 * s + 1, &imag(y + 0.25, 128), 128).unwrap();
                prop_assert!(a.value.re.is_sign_positive());
                prop_assert!(b.value.re < a.value.re);
            }
        }
    }
}
