//! Complex gamma function via Spouge's approximation. The parameter a is
//! chosen from the target precision (the error bound is explicit, roughly
//! (2pi)^(-a)), coefficients are cached per (a, working precision), and
//! arguments with small real part are shifted up through the functional
//! equation before the core formula is applied.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::Float;

use super::HPComplex;
use crate::exactcore::combin::factorial;

fn spouge_cache() -> &'static Mutex<BTreeMap<(u32, u32), Arc<Vec<Float>>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<(u32, u32), Arc<Vec<Float>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// x^e for positive real x at the precision of x.
fn real_pow(x: &Float, e: &Float) -> Float {
    let p = x.prec();
    Float::with_val(p, e * Float::with_val(p, x.ln_ref())).exp()
}

/// Spouge coefficients c_0 = sqrt(2 pi), c_k = (-1)^(k-1) (a-k)^(k-1/2)
/// e^(a-k) / (k-1)! for k = 1..a-1, at working precision wp.
fn spouge_coeffs(a: u32, wp: u32) -> Arc<Vec<Float>> {
    let mut cache = spouge_cache().lock().unwrap();
    cache
        .entry((a, wp))
        .or_insert_with(|| {
            let two_pi = super::pi(wp) * 2u32;
            let mut cs = Vec::with_capacity(a as usize);
            cs.push(two_pi.sqrt());
            for k in 1..a {
                let amk = Float::with_val(wp, a - k);
                let expo = Float::with_val(wp, k) - 0.5f64;
                let mag = real_pow(&amk, &expo);
                let ea = Float::with_val(wp, a - k).exp();
                let fact = Float::with_val(wp, factorial(k as usize - 1));
                let mut c = mag * ea / fact;
                if k % 2 == 0 {
                    c = -c;
                }
                cs.push(c);
            }
            Arc::new(cs)
        })
        .clone()
}

/// Core Spouge evaluation, valid for Re(z) >= 1:
/// gamma(z) = (z-1+a)^(z-1/2) e^(-(z-1+a)) (c_0 + sum_k c_k/(z-1+k)).
fn spouge_eval(z: &HPComplex, a: u32, cs: &[Float]) -> HPComplex {
    let wp = z.prec();
    let zm1 = z.add_real(&Float::with_val(wp, -1));
    let base = zm1.add_real(&Float::with_val(wp, a));
    let mut acc = HPComplex::from_real(cs[0].clone());
    for (k, c) in cs.iter().enumerate().skip(1) {
        let den = zm1.add_real(&Float::with_val(wp, k as u32));
        acc = acc.add(&HPComplex::from_real(c.clone()).div(&den));
    }
    let half = Float::with_val(wp, 0.5);
    let expo = z.sub(&HPComplex::from_real(half));
    let power = base.pow(&expo);
    power.mul(&base.neg().exp()).mul(&acc)
}

/// gamma(z) to `prec` bits. Arguments with Re(z) < 1 are shifted into the
/// core formula's domain by the functional equation, so any z away from
/// the poles at 0, -1, -2, ... is accepted; at a pole the division by
/// zero propagates non-finite floats the caller can observe.
pub fn gamma_hp(z: &HPComplex, prec: u32) -> HPComplex {
    let a = ((prec as f64 + 40.0) / 2.65).ceil() as u32;
    let wp = prec + 2 * a + 64;
    let cs = spouge_coeffs(a, wp);
    let zw = z.with_prec(wp);
    let re = zw.re.to_f64();
    let shift = if re < 1.0 { (1.0 - re).ceil() as usize } else { 0 };
    let shifted = zw.add_real(&Float::with_val(wp, shift as u32));
    let mut g = spouge_eval(&shifted, a, &cs);
    for j in 0..shift {
        g = g.div(&zw.add_real(&Float::with_val(wp, j as u32)));
    }
    g.with_prec(prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 192;

    fn close_bits(a: &HPComplex, b: &HPComplex, bits: u32) {
        let d = a.sub(b).abs();
        let scale = a.abs().max(&Float::with_val(P, 1));
        let rel = d / scale;
        let bound = Float::with_val(P, 1) >> bits;
        assert!(rel < bound, "relative distance {rel} exceeds 2^-{bits}");
    }

    #[test]
    fn integer_arguments_give_factorials() {
        for n in 1..=10u32 {
            let z = HPComplex::from_f64(n as f64, 0.0, P);
            let got = gamma_hp(&z, P);
            let want = HPComplex::from_real(Float::with_val(P, factorial(n as usize - 1)));
            close_bits(&got, &want, P - 8);
        }
    }

    #[test]
    fn half_argument_gives_sqrt_pi() {
        let z = HPComplex::from_f64(0.5, 0.0, P);
        let want = HPComplex::from_real(crate::hpnum::pi(P).sqrt());
        close_bits(&gamma_hp(&z, P), &want, P - 8);
    }

    #[test]
    fn agrees_with_direct_real_gamma() {
        // Independent route: MPFR's own real gamma.
        for x in [0.25f64, 0.5, 1.75, 3.2, 7.5, 12.125] {
            let got = gamma_hp(&HPComplex::from_f64(x, 0.0, P), P);
            let want = HPComplex::from_real(Float::with_val(P, x).gamma());
            close_bits(&got, &want, P - 10);
        }
    }

    #[test]
    fn functional_equation_holds_for_complex_arguments() {
        let z = HPComplex::from_f64(1.6, 2.3, P);
        let lhs = gamma_hp(&z.add_real(&Float::with_val(P, 1)), P);
        let rhs = z.mul(&gamma_hp(&z, P));
        close_bits(&lhs, &rhs, P - 10);
    }

    #[test]
    fn duplication_formula_holds() {
        // gamma(z) gamma(z+1/2) = 2^(1-2z) sqrt(pi) gamma(2z).
        let z = HPComplex::from_f64(0.8, 1.1, P);
        let lhs = gamma_hp(&z, P).mul(&gamma_hp(&z.add_real(&Float::with_val(P, 0.5)), P));
        let two = HPComplex::from_f64(2.0, 0.0, P);
        let expo = HPComplex::from_f64(1.0, 0.0, P).sub(&z.mul_real(&Float::with_val(P, 2)));
        let factor = two.pow(&expo).mul_real(&crate::hpnum::pi(P).sqrt());
        let rhs = factor.mul(&gamma_hp(&z.mul_real(&Float::with_val(P, 2)), P));
        close_bits(&lhs, &rhs, P - 12);
    }

    #[test]
    fn conjugation_commutes() {
        let z = HPComplex::from_f64(0.3, -1.7, P);
        let a = gamma_hp(&z, P).conj();
        let b = gamma_hp(&z.conj(), P);
        close_bits(&a, &b, P - 10);
    }

    #[test]
    fn shifted_small_arguments_match_reflection_free_route() {
        // gamma(0.3) through the shift path vs the real-gamma oracle.
        let got = gamma_hp(&HPComplex::from_f64(0.3, 0.0, P), P);
        let want = HPComplex::from_real(Float::with_val(P, 0.3f64).gamma());
        close_bits(&got, &want, P - 10);
    }
}
