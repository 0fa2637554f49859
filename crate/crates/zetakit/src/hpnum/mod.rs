//! High-precision floating-point layer: shared constants, complex
//! arithmetic, and the analytic special functions built on MPFR reals.

mod complex;
mod gamma;
mod grosswald;
mod roots;
mod zeta;

pub use complex::{nearest_integer, HPComplex};
pub use gamma::gamma_hp;
pub use grosswald::{
    grosswald_f, verify_grosswald_identities, verify_grosswald_upto, verify_ramanujan_examples,
    verify_ramanujan_identity, GrosswaldValue,
};
pub use roots::{eval_poly, polish_newton, roots_aberth, seed_ring, RootEstimate};
pub use zeta::{verify_analytic, xi_hp, zeta1_hp, zeta_hp, zeta_hp_scaled};

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use rug::float::Constant;
use rug::Float;

fn pi_cache() -> &'static Mutex<BTreeMap<u32, Float>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Float>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// The constant pi correctly rounded to `prec` bits. Values are cached per
/// precision; MPFR rounds deterministically, so repeated calls agree bit
/// for bit.
pub fn pi(prec: u32) -> Float {
    let mut cache = pi_cache().lock().unwrap();
    cache
        .entry(prec)
        .or_insert_with(|| Float::with_val(prec, Constant::Pi))
        .clone()
}

/// ln 2 correctly rounded to `prec` bits, cached like `pi`.
pub fn ln2(prec: u32) -> Float {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Float>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut cache = cache.lock().unwrap();
    cache
        .entry(prec)
        .or_insert_with(|| Float::with_val(prec, Constant::Log2))
        .clone()
}

/// x^k for a nonnegative integer exponent by plain repeated
/// multiplication; exponents in this crate stay small enough that a
/// squaring ladder would only obscure the rounding story.
pub(crate) fn float_pow(x: &Float, k: u32) -> Float {
    let mut acc = Float::with_val(x.prec(), 1);
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Decimal digit count that pins down a binary precision: any two floats
/// of `prec` bits that print identically with this many digits are equal.
pub fn decimal_digits(prec: u32) -> usize {
    (prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2
}

/// Renders a float with exactly the digit budget for its precision, so the
/// text form is a deterministic function of the bits.
pub fn float_to_decimal(x: &Float) -> String {
    x.to_string_radix(10, Some(decimal_digits(x.prec())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_known_prefix() {
        let p = pi(128);
        let s = float_to_decimal(&p);
        assert!(s.starts_with("3.14159265358979323846264338327950288"), "{s}");
    }

    #[test]
    fn pi_cache_is_per_precision() {
        assert_eq!(pi(64).prec(), 64);
        assert_eq!(pi(256).prec(), 256);
        assert_eq!(pi(64), pi(64));
    }

    #[test]
    fn digit_budget_grows_with_precision() {
        assert!(decimal_digits(64) >= 21);
        assert!(decimal_digits(256) >= 79);
    }
}
