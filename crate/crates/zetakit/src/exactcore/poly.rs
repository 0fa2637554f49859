use rug::Rational;

/// Exact Gaussian rational a + b*i, just enough complex arithmetic for the
/// polynomial evaluations that must stay exact (purely imaginary points and
/// the rational points 1/2, 1, 2 and their negatives).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        Self::new(re, Rational::new())
    }

    /// The purely imaginary point (b)*i.
    pub fn imaginary(b: Rational) -> Self {
        Self::new(Rational::new(), b)
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            Rational::from(&self.re + &rhs.re),
            Rational::from(&self.im + &rhs.im),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let re = Rational::from(&self.re * &rhs.re) - Rational::from(&self.im * &rhs.im);
        let im = Rational::from(&self.re * &rhs.im) + Rational::from(&self.im * &rhs.re);
        Self::new(re, im)
    }
}

/// Dense exact-rational polynomial; index k holds the coefficient of z^k.
/// Trailing zeros are trimmed on construction, so `coeffs.len() - 1` is the
/// degree and the empty vector is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of z^k, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, z: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= z;
            acc += c;
        }
        acc
    }

    /// Exact Horner evaluation at a Gaussian rational point.
    pub fn eval_gauss(&self, z: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::from_real(Rational::new());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z);
            acc.re += c;
        }
        acc
    }

    /// Coefficient reversal: z^deg * p(1/z). A polynomial equals its reversal
    /// exactly when its coefficient sequence is palindromic.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Argument scaling p(c*z): multiplies coefficient k by c^k.
    pub fn scale_arg(&self, c: &Rational) -> Self {
        let mut power = Rational::from(1);
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = Rational::from(a * &power);
                power *= c;
                out
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| Rational::from(self.coeff(k) + rhs.coeff(k)))
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| Rational::from(c * q)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn poly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn eval_square_at_half() {
        let p = poly(&[(0, 1), (0, 1), (1, 1)]);
        assert_eq!(p.eval(&rat(1, 2)), rat(1, 4));
    }

    #[test]
    fn eval_square_at_i() {
        let p = poly(&[(0, 1), (0, 1), (1, 1)]);
        let v = p.eval_gauss(&GaussRat::imaginary(rat(1, 1)));
        assert_eq!(v, GaussRat::from_real(rat(-1, 1)));
    }

    #[test]
    fn eval_one_plus_z4_at_i() {
        let p = poly(&[(1, 1), (0, 1), (0, 1), (0, 1), (1, 1)]);
        let v = p.eval_gauss(&GaussRat::imaginary(rat(1, 1)));
        assert_eq!(v, GaussRat::from_real(rat(2, 1)));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = poly(&[(1, 2), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(poly(&[(0, 1)]).is_zero());
        assert_eq!(RatPoly::zero().degree(), None);
    }

    #[test]
    fn reversal_and_scaling() {
        let p = poly(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(p.reversed(), poly(&[(3, 1), (2, 1), (1, 1)]));
        let q = p.scale_arg(&rat(2, 1));
        assert_eq!(q, poly(&[(1, 1), (4, 1), (12, 1)]));
    }

    #[test]
    fn eval_matches_power_sum_on_random_polys() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for _ in 0..50 {
            let deg = rng.gen_range(0..=64);
            let coeffs: Vec<Rational> = (0..=deg)
                .map(|_| rat(rng.gen_range(-50..=50), rng.gen_range(1..=20)))
                .collect();
            let p = RatPoly::new(coeffs.clone());
            let z = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
            let mut direct = Rational::new();
            let mut zp = Rational::from(1);
            for c in &coeffs {
                direct += Rational::from(c * &zp);
                zp *= &z;
            }
            assert_eq!(p.eval(&z), direct);
        }
    }
}
