use rug::float::Round;
use rug::Float;

/// Complex number over MPFR reals. MPFR has no complex layer here, so the
/// few complex operations the workbench needs are spelled out against the
/// real functions; every operation keeps the precision of its operands.
#[derive(Clone, Debug, PartialEq)]
pub struct HPComplex {
    pub re: Float,
    pub im: Float,
}

impl HPComplex {
    pub fn new(re: Float, im: Float) -> Self {
        debug_assert_eq!(re.prec(), im.prec());
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(Float::new(prec), Float::new(prec))
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        Self::new(re, Float::new(prec))
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Self::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    /// Same value carried to a different working precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::new(
            Float::with_val(prec, &self.re),
            Float::with_val(prec, &self.im),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        let p = self.prec();
        Self::new(self.re.clone(), Float::with_val(p, -&self.im))
    }

    pub fn neg(&self) -> Self {
        let p = self.prec();
        Self::new(
            Float::with_val(p, -&self.re),
            Float::with_val(p, -&self.im),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.prec();
        Self::new(
            Float::with_val(p, &self.re + &rhs.re),
            Float::with_val(p, &self.im + &rhs.im),
        )
    }

    pub fn add_real(&self, rhs: &Float) -> Self {
        let p = self.prec();
        Self::new(Float::with_val(p, &self.re + rhs), self.im.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.prec();
        Self::new(
            Float::with_val(p, &self.re - &rhs.re),
            Float::with_val(p, &self.im - &rhs.im),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &rhs.re) - Float::with_val(p, &self.im * &rhs.im);
        let im = Float::with_val(p, &self.re * &rhs.im) + Float::with_val(p, &self.im * &rhs.re);
        Self::new(re, im)
    }

    pub fn mul_real(&self, rhs: &Float) -> Self {
        let p = self.prec();
        Self::new(
            Float::with_val(p, &self.re * rhs),
            Float::with_val(p, &self.im * rhs),
        )
    }

    pub fn mul_i(&self) -> Self {
        let p = self.prec();
        Self::new(Float::with_val(p, -&self.im), self.re.clone())
    }

    /// Squared modulus at working precision.
    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    /// Complex division via the conjugate; rejects nothing, so a zero
    /// divisor propagates non-finite floats the caller can observe.
    pub fn div(&self, rhs: &Self) -> Self {
        let d = rhs.norm_sqr();
        let num = self.mul(&rhs.conj());
        Self::new(num.re / &d, num.im / &d)
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let d = self.norm_sqr();
        Self::new(
            Float::with_val(p, &self.re / &d),
            Float::with_val(p, -&self.im) / &d,
        )
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// exp(a + bi) = e^a (cos b + i sin b).
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let ea = Float::with_val(p, self.re.exp_ref());
        let (sin, cos) = self.im.clone().sin_cos(Float::new(p));
        Self::new(Float::with_val(p, &ea * &cos), ea * sin)
    }

    /// Principal logarithm: ln|z| + i arg(z), arg in (-pi, pi].
    pub fn ln(&self) -> Self {
        let modulus_ln = self.norm_sqr().ln() / 2u32;
        let arg = self.im.clone().atan2(&self.re);
        Self::new(modulus_ln, arg)
    }

    /// Principal power z^w through exp(w ln z).
    pub fn pow(&self, w: &Self) -> Self {
        w.mul(&self.ln()).exp()
    }

    /// z^x for a real exponent, again on the principal branch.
    pub fn pow_real(&self, x: &Float) -> Self {
        self.ln().mul_real(x).exp()
    }

    /// n^(-z) for a positive integer base, the workhorse of Dirichlet
    /// series tails: exp(-z ln n) with ln n taken at working precision.
    pub fn int_pow_neg(n: u64, z: &Self) -> Self {
        let prec = z.prec();
        let ln_n = Float::with_val(prec, n).ln();
        z.neg().mul_real(&ln_n).exp()
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.is_zero() {
            return Self::zero(p);
        }
        let r = self.abs();
        let re = (Float::with_val(p, &r + &self.re) / 2u32).sqrt();
        let mut im = (Float::with_val(p, &r - &self.re) / 2u32).sqrt();
        if self.im.is_sign_negative() {
            im = -im;
        }
        Self::new(re, im)
    }

    /// Relative distance |a - b| / max(|a|, 1), a scale-aware residual for
    /// pass/fail thresholds expressed as powers of two.
    pub fn rel_distance(&self, rhs: &Self) -> Float {
        let p = self.prec();
        let diff = self.sub(rhs).abs();
        let scale = self.abs().max(&Float::with_val(p, 1));
        diff / scale
    }

    /// Decimal rendering "re+im*i" with the digit budget of the precision.
    pub fn to_decimal(&self) -> String {
        let digits = super::decimal_digits(self.prec());
        let re = self.re.to_string_radix(10, Some(digits));
        let im = self.im.to_string_radix(10, Some(digits));
        if self.im.is_sign_negative() {
            format!("{re}{im}i")
        } else {
            format!("{re}+{im}i")
        }
    }
}

/// Rounds a float to the nearest integer and reports how far it had to
/// move; used when an analytic expression is asserted to be an integer.
pub fn nearest_integer(x: &Float) -> (rug::Integer, Float) {
    let p = x.prec();
    let rounded = Float::with_val(p, x.round_ref());
    let dist = Float::with_val(p, x - &rounded).abs();
    let int = rounded
        .to_integer_round(Round::Nearest)
        .map(|(i, _)| i)
        .unwrap_or_default();
    (int, dist)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 192;

    fn c(re: f64, im: f64) -> HPComplex {
        HPComplex::from_f64(re, im, P)
    }

    fn close(a: &HPComplex, b: &HPComplex, bits: i32) {
        let d = a.sub(b).abs();
        let bound = Float::with_val(P, 1) >> (-bits).max(0) as u32;
        assert!(d < bound, "distance {d} exceeds 2^{bits}");
    }

    #[test]
    fn multiplication_of_i_squares_to_minus_one() {
        let i = c(0.0, 1.0);
        close(&i.mul(&i), &c(-1.0, 0.0), -180);
    }

    #[test]
    fn division_undoes_multiplication() {
        let a = c(3.5, -2.25);
        let b = c(-1.125, 4.0);
        close(&a.mul(&b).div(&b), &a, -180);
    }

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let ipi = HPComplex::new(Float::new(P), crate::hpnum::pi(P));
        close(&ipi.exp(), &c(-1.0, 0.0), -180);
    }

    #[test]
    fn ln_inverts_exp_on_principal_strip() {
        let z = c(0.75, 2.5);
        close(&z.exp().ln(), &z, -180);
    }

    #[test]
    fn sqrt_squares_back() {
        for (re, im) in [(2.0, 3.0), (-2.0, 3.0), (-2.0, -3.0), (4.0, 0.0)] {
            let z = c(re, im);
            close(&z.sqrt().square(), &z, -180);
        }
    }

    #[test]
    fn int_pow_neg_matches_real_power() {
        let s = HPComplex::from_real(Float::with_val(P, 3));
        let got = HPComplex::int_pow_neg(7, &s);
        let want = HPComplex::from_real(Float::with_val(P, 343).recip());
        close(&got, &want, -180);
    }

    #[test]
    fn nearest_integer_reports_distance() {
        let x = Float::with_val(P, 41.999999);
        let (n, d) = nearest_integer(&x);
        assert_eq!(n, 42);
        assert!(d < 1e-5);
    }
}
