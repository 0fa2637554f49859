use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::Coeff;
use crate::{Error, Result};

/// An exact value q * pi^m with rational q and integer m >= 0.
///
/// Every even-argument zeta-family constant is such a value, so identities
/// between them can be checked without ever evaluating pi. Addition is only
/// defined between equal grades; zero is canonically grade 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiScaled {
    coeff: Rational,
    pi_pow: u32,
}

impl PiScaled {
    pub fn new(coeff: Rational, pi_pow: u32) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Self { coeff, pi_pow }
        }
    }

    pub fn zero() -> Self {
        Self {
            coeff: Rational::new(),
            pi_pow: 0,
        }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_pow(&self) -> u32 {
        self.pi_pow
    }

    pub fn is_zero(&self) -> bool {
        self.coeff == 0
    }

    /// Grade-checked addition. Zero is transparent to any grade; otherwise
    /// both operands must carry the same power of pi.
    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_pow != rhs.pi_pow {
            return Err(Error::GradeMismatch(self.pi_pow, rhs.pi_pow));
        }
        Ok(Self::new(
            Rational::from(&self.coeff + &rhs.coeff),
            self.pi_pow,
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(Rational::from(-self.coeff.clone()), self.pi_pow)
    }

    /// Multiplication adds grades and multiplies coefficients, both exactly.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(
            Rational::from(&self.coeff * &rhs.coeff),
            self.pi_pow + rhs.pi_pow,
        )
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(Rational::from(&self.coeff * q), self.pi_pow)
    }

    /// Numeric image at `prec` bits: coeff * pi^pi_pow.
    pub fn to_float(&self, prec: u32) -> Float {
        if self.is_zero() {
            return Float::with_val(prec, 0);
        }
        let pi = crate::hpnum::pi(prec + 16);
        let graded = Float::with_val(prec + 16, pi.pow(self.pi_pow));
        let mut out = Float::with_val(prec + 16, &self.coeff);
        out *= graded;
        Float::with_val(prec, out)
    }

    /// The JSON encoding {"coeff": "p/q", "pi_pow": m}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeff": super::rat_string(&self.coeff),
            "pi_pow": self.pi_pow,
        })
    }
}

impl std::fmt::Display for PiScaled {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pi_pow == 0 {
            write!(f, "{}", super::rat_string(&self.coeff))
        } else {
            write!(f, "({})*pi^{}", super::rat_string(&self.coeff), self.pi_pow)
        }
    }
}

/// Ring structure for grade-homogeneous computations (MCL determinants over
/// graded vectors). Addition panics on a true grade mismatch: in homogeneous
/// use the grades always agree, so a mismatch is a caller bug, not data.
impl Coeff for PiScaled {
    fn zero() -> Self {
        PiScaled::zero()
    }
    fn one() -> Self {
        PiScaled::new(Rational::from(1), 0)
    }
    fn is_zero(&self) -> bool {
        PiScaled::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.checked_add(rhs)
            .expect("pi-grade mismatch in a homogeneous computation")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs)
            .expect("pi-grade mismatch in a homogeneous computation")
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn mul_integer(&self, n: &Integer) -> Self {
        PiScaled::new(Rational::from(self.coeff() * n), self.pi_pow())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    #[test]
    fn zero_is_canonical() {
        let z = PiScaled::new(rat(0, 5), 7);
        assert_eq!(z, PiScaled::zero());
        assert_eq!(z.pi_pow(), 0);
    }

    #[test]
    fn add_requires_equal_grade() {
        let a = PiScaled::new(rat(1, 6), 2);
        let b = PiScaled::new(rat(1, 90), 4);
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::GradeMismatch(2, 4))
        ));
        let c = a.checked_add(&PiScaled::zero()).unwrap();
        assert_eq!(c, a);
    }

    #[test]
    fn mul_adds_grades() {
        let a = PiScaled::new(rat(1, 6), 2);
        let b = PiScaled::new(rat(1, 90), 4);
        let p = a.mul(&b);
        assert_eq!(p, PiScaled::new(rat(1, 540), 6));
    }

    #[test]
    fn json_shape() {
        let a = PiScaled::new(rat(2, 18243225), 14);
        assert_eq!(
            a.to_json().to_string(),
            r#"{"coeff":"2/18243225","pi_pow":14}"#
        );
    }

    #[test]
    fn float_image_matches_direct_product() {
        let a = PiScaled::new(rat(1, 6), 2);
        let f = a.to_float(128);
        let pi = crate::hpnum::pi(160);
        let direct = Float::with_val(160, pi.square_ref()) / 6u32;
        let diff = Float::with_val(128, &f - &direct).abs();
        assert!(diff < Float::with_val(32, 2f64.powi(-120)));
    }
}
