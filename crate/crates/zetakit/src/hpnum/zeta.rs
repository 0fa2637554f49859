//! Zeta, its pole-free companion (s-1) zeta(s), and the completed xi
//! function, all over complex arguments at arbitrary precision. The
//! evaluation is Euler-Maclaurin with self-tuned parameters: the cutoff
//! grows with the precision and |s|, and the Bernoulli correction order
//! grows until the next term falls below target, erring out if destined
//! to diverge first.

use rug::{Float, Rational};

use super::{gamma_hp, HPComplex};
use crate::bernoulli::bernoulli;
use crate::exactcore::combin::factorial;
use crate::report::{bool_case, float_case, VerificationReport};
use crate::zetafam::zeta_even;
use crate::{Error, Result};

/// Euler-Maclaurin cutoff: about 0.7 bits of precision per summed term,
/// floored so the asymptotic corrections converge, scaled up for
/// self-consistency checks.
fn em_cutoff(s: &HPComplex, prec: u32, scale: u32) -> u64 {
    let s_abs = s.norm_sqr().sqrt().to_f64().max(0.0);
    let from_prec = (0.7 * prec as f64).ceil() as u64;
    let from_s = (3.0 * s_abs).ceil() as u64;
    from_prec.max(from_s).max(8) * scale as u64
}

/// Shared Euler-Maclaurin core. With `pole_free` false this computes
/// zeta(s); with it true, (s-1) zeta(s), where the lone pole term
/// N^(1-s)/(s-1) becomes the entire N^(1-s) and every other piece picks
/// up the factor s-1, so nothing is singular at s = 1.
fn em_core(s: &HPComplex, prec: u32, scale: u32, pole_free: bool) -> Result<HPComplex> {
    let wp = prec + 64;
    let sw = s.with_prec(wp);
    let n = em_cutoff(s, prec, scale);

    // Head: sum_{n<N} n^-s + N^-s / 2.
    let mut head = HPComplex::zero(wp);
    for k in 1..n {
        head = head.add(&HPComplex::int_pow_neg(k, &sw));
    }
    let n_pow_ms = HPComplex::int_pow_neg(n, &sw);
    head = head.add(&n_pow_ms.mul_real(&Float::with_val(wp, 0.5)));

    // Bernoulli corrections B_2k/(2k)! (s)_(2k-1) N^(1-s-2k), grown until
    // the next term is below the absolute target.
    let target = Float::with_val(wp, 1) >> (prec + 24).min(wp - 8);
    let n_real = Float::with_val(wp, n);
    let inv_n2 = Float::with_val(wp, n_real.square_ref()).recip();
    let mut poch = sw.clone();
    let mut npow = n_pow_ms.mul_real(&n_real.clone().recip());
    let mut prev_mag: Option<Float> = None;
    let mut settled = false;
    for k in 1..=400usize {
        let ratio = bernoulli(2 * k) / Rational::from(factorial(2 * k));
        let term = npow.mul(&poch).mul_real(&Float::with_val(wp, &ratio));
        let mag = term.abs();
        head = head.add(&term);
        if mag < target {
            settled = true;
            break;
        }
        if prev_mag.as_ref().is_some_and(|p| mag > *p) {
            // The asymptotic series started diverging above target: the
            // requested accuracy is unreachable at this cutoff.
            return Err(Error::PrecisionTooLow {
                needed: prec + 64,
                got: prec,
            });
        }
        prev_mag = Some(mag);
        let k2 = 2 * k as u32;
        let a = sw.add_real(&Float::with_val(wp, k2 - 1));
        let b = sw.add_real(&Float::with_val(wp, k2));
        poch = poch.mul(&a).mul(&b);
        npow = npow.mul_real(&inv_n2);
    }
    if !settled {
        return Err(Error::PrecisionTooLow {
            needed: prec + 64,
            got: prec,
        });
    }

    // Tail: the only term that sees the pole at s = 1.
    let n_pow_1ms = n_pow_ms.mul_real(&n_real);
    let result = if pole_free {
        let s_minus_1 = sw.add_real(&Float::with_val(wp, -1));
        head.mul(&s_minus_1).add(&n_pow_1ms)
    } else {
        let s_minus_1 = sw.add_real(&Float::with_val(wp, -1));
        head.add(&n_pow_1ms.div(&s_minus_1))
    };
    Ok(result.with_prec(prec))
}

fn require_prec(prec: u32) -> Result<()> {
    if prec < 64 {
        return Err(Error::PrecisionTooLow {
            needed: 64,
            got: prec,
        });
    }
    Ok(())
}

/// zeta(s) for complex s != 1. The pole is rejected, not approximated.
pub fn zeta_hp(s: &HPComplex, prec: u32) -> Result<HPComplex> {
    require_prec(prec)?;
    if s.re == 1u32 && s.im.is_zero() {
        return Err(Error::ZetaPole);
    }
    em_core(s, prec, 1, false)
}

/// zeta(s) with the Euler-Maclaurin cutoff scaled by `scale`; exposed so
/// self-consistency checks can compare independent parameter choices.
pub fn zeta_hp_scaled(s: &HPComplex, prec: u32, scale: u32) -> Result<HPComplex> {
    require_prec(prec)?;
    if s.re == 1u32 && s.im.is_zero() {
        return Err(Error::ZetaPole);
    }
    em_core(s, prec, scale.max(1), false)
}

/// The entire function (s-1) zeta(s), finite at s = 1 where its value
/// is 1. This is the pole-free route into xi.
pub fn zeta1_hp(s: &HPComplex, prec: u32) -> Result<HPComplex> {
    require_prec(prec)?;
    em_core(s, prec, 1, true)
}

fn xi_core(s: &HPComplex, prec: u32, scale: u32) -> Result<HPComplex> {
    require_prec(prec)?;
    let wp = prec + 32;
    let sw = s.with_prec(wp);
    // xi(s) = s(s-1) pi^(-s/2) Gamma(s/2) zeta(s); fold s into the gamma
    // factor, s Gamma(s/2) = 2 Gamma(s/2 + 1), so no factor is singular
    // at s = 0 or s = 1.
    let half_s = sw.mul_real(&Float::with_val(wp, 0.5));
    let g = gamma_hp(&half_s.add_real(&Float::with_val(wp, 1)), wp);
    let pi_ln = super::pi(wp).ln();
    let pi_pow = half_s.neg().mul_real(&pi_ln).exp();
    let z1 = em_core(&sw, wp, scale, true)?;
    let xi = g.mul(&pi_pow).mul(&z1).mul_real(&Float::with_val(wp, 2));
    Ok(xi.with_prec(prec))
}

/// The completed function xi(s) = s(s-1) pi^(-s/2) Gamma(s/2) zeta(s),
/// computed through the pole-free route; xi(0) = xi(1) = 1 and
/// xi(s) = xi(1-s).
pub fn xi_hp(s: &HPComplex, prec: u32) -> Result<HPComplex> {
    xi_core(s, prec, 1)
}

/// Self-consistency and oracle checks for the analytic layer at `prec`
/// bits: exact even-argument values as oracles, the non-elementary value
/// at 0, parameter-doubling stability, the two xi normalizations, the
/// direct-product cross-route at s = 2, and the reflection symmetry on a
/// grid in the critical strip.
pub fn verify_analytic(prec: u32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("hp-analytic");
    let p = prec;
    let oracle_tol = -((p - 16) as i32);

    // Exact pi-graded oracles from the even-argument closed forms.
    for s in [2usize, 14] {
        let want = zeta_even(s / 2).to_float(p);
        let got = zeta_hp(&HPComplex::from_f64(s as f64, 0.0, p), p)?;
        rep.push(float_case(
            format!("zeta-oracle-{s}"),
            format!("zeta({s}) matches its exact rational multiple of pi^{s}"),
            &got.re,
            &want,
            oracle_tol,
        ));
    }
    let got0 = zeta_hp(&HPComplex::zero(p), p)?;
    rep.push(float_case(
        "zeta-at-zero",
        "zeta(0) equals -1/2",
        &got0.re,
        &Float::with_val(p, -0.5f64),
        oracle_tol,
    ));

    // Doubling the Euler-Maclaurin cutoff must not move the value. Both
    // runs carry 32 guard bits so representation rounding cannot eat the
    // margin being asserted.
    for s in [3u32, 5, 7] {
        let z = HPComplex::from_f64(s as f64, 0.0, p + 32);
        let a = zeta_hp_scaled(&z, p + 32, 1)?;
        let b = zeta_hp_scaled(&z, p + 32, 2)?;
        rep.push(float_case(
            format!("zeta-doubling-{s}"),
            format!("doubling the cutoff moves zeta({s}) by less than 2^-{p}"),
            &a.re,
            &b.re,
            -(p as i32),
        ));
    }
    let zc = HPComplex::from_f64(0.5, 14.1, p + 32);
    let a = xi_core(&zc, p + 32, 1)?;
    let b = xi_core(&zc, p + 32, 2)?;
    let diff = a.sub(&b).abs();
    rep.push(bool_case(
        "xi-doubling-complex",
        "doubling the cutoff moves xi(1/2 + 14.1i) by less than 2^-P",
        diff < (Float::with_val(p, 1) >> p),
        super::float_to_decimal(&a.re),
        super::float_to_decimal(&b.re),
    ));

    // Normalization: xi(0) = xi(1) = 1, through the pole-free route.
    for s in [0.0f64, 1.0] {
        let v = xi_hp(&HPComplex::from_f64(s, 0.0, p), p)?;
        rep.push(float_case(
            format!("xi-at-{}", s as u32),
            format!("xi({}) equals 1", s as u32),
            &v.re,
            &Float::with_val(p, 1),
            oracle_tol,
        ));
    }

    // Independent route at s = 2: the literal product s(s-1) pi^(-s/2)
    // Gamma(s/2) zeta(s) against the folded pole-free evaluation.
    let s2 = HPComplex::from_f64(2.0, 0.0, p + 32);
    let direct = {
        let g = gamma_hp(&HPComplex::from_f64(1.0, 0.0, p + 32), p + 32);
        let pi_inv = super::pi(p + 32).recip();
        let z = zeta_hp(&s2, p + 32)?;
        z.mul(&g)
            .mul_real(&pi_inv)
            .mul_real(&Float::with_val(p + 32, 2))
            .with_prec(p)
    };
    let folded = xi_hp(&s2, p)?;
    rep.push(float_case(
        "xi-direct-product-2",
        "xi(2) from the literal product agrees with the pole-free route",
        &folded.re,
        &direct.re,
        oracle_tol,
    ));

    // Reflection symmetry xi(s) = xi(1-s) on a grid in the strip.
    let mut worst = Float::new(p);
    let mut worst_at = String::new();
    for i in 0..5u32 {
        for j in 0..5u32 {
            let sigma = Float::with_val(p, 0.1 + 0.2 * i as f64);
            let t = Float::with_val(p, 0.5 * j as f64);
            // The reflected point must be 1 - sigma in working arithmetic,
            // not an independently rounded constant, or the comparison
            // measures the grid's own rounding instead of the symmetry.
            let z = HPComplex::new(sigma.clone(), t.clone());
            let w = HPComplex::new(Float::with_val(p, 1 - &sigma), Float::with_val(p, -&t));
            let d = xi_hp(&z, p)?.sub(&xi_hp(&w, p)?).abs();
            if d > worst {
                worst = d.clone();
                worst_at = format!("sigma={sigma}, t={t}");
            }
        }
    }
    let bound = Float::with_val(p, 1) >> (p - 12);
    rep.push(bool_case(
        "xi-reflection-grid",
        "xi(s) = xi(1-s) on a 5x5 grid in the critical strip",
        worst < bound,
        format!("worst {} at {worst_at}", super::float_to_decimal(&worst)),
        format!("bound {}", super::float_to_decimal(&bound)),
    ));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 192;

    fn real(x: f64) -> HPComplex {
        HPComplex::from_f64(x, 0.0, P)
    }

    fn assert_close(a: &Float, b: &Float, bits: u32) {
        let d = Float::with_val(P, a - b).abs();
        let bound = Float::with_val(P, 1) >> bits;
        assert!(d < bound, "|{a} - {b}| = {d} exceeds 2^-{bits}");
    }

    #[test]
    fn even_arguments_match_exact_oracles() {
        for s in [2usize, 4, 6, 14] {
            let want = zeta_even(s / 2).to_float(P);
            let got = zeta_hp(&real(s as f64), P).unwrap();
            assert_close(&got.re, &want, P - 12);
            assert!(got.im.clone().abs() < Float::with_val(P, 1) >> (P - 12));
        }
    }

    #[test]
    fn known_decimal_prefixes_at_odd_arguments() {
        let z3 = zeta_hp(&real(3.0), P).unwrap();
        let s = super::super::float_to_decimal(&z3.re);
        assert!(s.starts_with("1.2020569031595942853997"), "{s}");
        let z5 = zeta_hp(&real(5.0), P).unwrap();
        let s = super::super::float_to_decimal(&z5.re);
        assert!(s.starts_with("1.0369277551433699263"), "{s}");
    }

    #[test]
    fn zero_argument_is_exactly_minus_half() {
        // Every Bernoulli correction vanishes at s = 0, so the value is
        // -1/2 to working precision, not merely to target.
        let got = zeta_hp(&HPComplex::zero(P), P).unwrap();
        assert_close(&got.re, &Float::with_val(P, -0.5f64), P - 4);
    }

    #[test]
    fn pole_and_low_precision_are_rejected() {
        match zeta_hp(&real(1.0), P) {
            Err(Error::ZetaPole) => {}
            other => panic!("expected pole rejection, got {other:?}"),
        }
        match zeta_hp(&real(2.0), 32) {
            Err(Error::PrecisionTooLow { needed: 64, got: 32 }) => {}
            other => panic!("expected precision rejection, got {other:?}"),
        }
    }

    #[test]
    fn pole_free_companion_is_one_at_one() {
        let got = zeta1_hp(&real(1.0), P).unwrap();
        assert_close(&got.re, &Float::with_val(P, 1), P - 12);
    }

    #[test]
    fn pole_free_companion_matches_scaled_zeta_away_from_pole() {
        for s in [0.5f64, 2.0, 3.25, -0.5] {
            let z = zeta_hp(&real(s), P).unwrap();
            let z1 = zeta1_hp(&real(s), P).unwrap();
            let want = z.mul_real(&Float::with_val(P, s - 1.0));
            assert_close(&z1.re, &want.re, P - 16);
        }
    }

    #[test]
    fn xi_normalization_and_reflection() {
        let x0 = xi_hp(&real(0.0), P).unwrap();
        let x1 = xi_hp(&real(1.0), P).unwrap();
        assert_close(&x0.re, &Float::with_val(P, 1), P - 12);
        assert_close(&x1.re, &Float::with_val(P, 1), P - 12);
        // Reflect in working precision: 0.3f64 and 0.7f64 do not sum to
        // exactly 1, so the mirror argument must be derived as 1 - sigma.
        let sigma = Float::with_val(P, 0.3f64);
        let mirror = Float::with_val(P, 1 - &sigma);
        let a = xi_hp(&HPComplex::new(sigma, Float::new(P)), P).unwrap();
        let b = xi_hp(&HPComplex::new(mirror, Float::new(P)), P).unwrap();
        assert_close(&a.re, &b.re, P - 14);
    }

    #[test]
    fn analytic_suite_passes_at_192_bits() {
        let rep = verify_analytic(192).unwrap();
        assert!(rep.passed(), "first failure: {:?}", rep.first_failure());
    }

    #[test]
    fn complex_argument_agrees_with_conjugate_symmetry() {
        let z = HPComplex::from_f64(0.5, 14.1, P);
        let a = zeta_hp(&z, P).unwrap();
        let b = zeta_hp(&z.conj(), P).unwrap();
        assert_close(&a.re, &b.re, P - 16);
        let neg_b_im = Float::with_val(P, -&b.im);
        assert_close(&a.im, &neg_b_im, P - 16);
    }
}
