//! Exact numeric kernels: arbitrary-precision rationals, pi-graded scalars,
//! dense rational polynomials, and truncated power series.
//!
//! Everything here is immutable after construction and pure; values are safe
//! to share across any number of workers.

pub mod combin;
mod piscaled;
mod poly;
mod series;

pub use piscaled::PiScaled;
pub use poly::{GaussRat, RatPoly};
pub use series::RatSeries;

pub use rug::{Integer, Rational};

use crate::{Error, Result};

/// Shorthand constructor for a rational from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Canonical "p/q" rendering. The denominator is always written, so integers
/// come out as "n/1"; the sign, if any, sits on the numerator.
/// Exact 2^e as a rational, for any sign of e.
pub fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from(Integer::from(1) << e as u32)
    } else {
        Rational::from((Integer::from(1), Integer::from(1) << (-e) as u32))
    }
}

pub fn rat_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses "p/q" or a bare integer "p".
pub fn rat_parse(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::Parse {
        kind: "rational",
        text: s.to_string(),
    })
}

/// Minimal commutative-ring interface shared by the exact scalar types.
///
/// The determinant and series kernels are generic over this trait so the
/// same recurrences run over plain rationals and over pi-graded scalars.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Scaling by an exact integer (multinomial weights and the like).
    fn mul_integer(&self, n: &Integer) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Rational::from(self + rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Rational::from(self - rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Rational::from(self * rhs)
    }
    fn neg_ref(&self) -> Self {
        Rational::from(-self.clone())
    }
    fn mul_integer(&self, n: &Integer) -> Self {
        Rational::from(self * n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_string_always_carries_denominator() {
        assert_eq!(rat_string(&rat(5, 1)), "5/1");
        assert_eq!(rat_string(&rat(-691, 2730)), "-691/2730");
        assert_eq!(rat_string(&rat(2, -4)), "-1/2");
    }

    #[test]
    fn rat_parse_roundtrip() {
        for s in ["-691/2730", "0/1", "17/1024", "5"] {
            let x = rat_parse(s).unwrap();
            let y = rat_parse(&rat_string(&x)).unwrap();
            assert_eq!(x, y);
        }
        assert!(rat_parse("one half").is_err());
    }

    #[test]
    fn coeff_ring_laws_for_rational() {
        let a = rat(3, 7);
        let b = rat(-2, 5);
        assert_eq!(a.add_ref(&b), rat(1, 35));
        assert_eq!(a.mul_ref(&b), rat(-6, 35));
        assert_eq!(a.sub_ref(&a), Rational::zero());
        assert_eq!(a.neg_ref().neg_ref(), a);
    }
}
