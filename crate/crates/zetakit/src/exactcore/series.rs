use rug::Rational;

use crate::{Error, Result};

/// Truncated power series with exact rational coefficients. A series of
/// order n stores the n + 1 coefficients of z^0 .. z^n; every operation
/// treats higher terms as unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<Rational>,
}

impl RatSeries {
    /// Builds a series from its coefficient list, which must be nonempty;
    /// the truncation order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Rational::new(); order + 1];
        coeffs[0] = Rational::from(1);
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch(self.order(), rhs.order()));
        }
        let n = self.order();
        let mut out = vec![Rational::new(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse to the same order. With a = a_0 + a_1 z + ...,
    /// b_0 = 1/a_0 and b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0] == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let a0_inv = Rational::from(self.coeffs[0].recip_ref());
        let mut b = Vec::with_capacity(n + 1);
        b.push(a0_inv.clone());
        for m in 1..=n {
            let mut acc = Rational::new();
            for k in 1..=m {
                acc += Rational::from(&self.coeffs[k] * &b[m - k]);
            }
            acc *= &a0_inv;
            b.push(-acc);
        }
        Ok(Self { coeffs: b })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch(self.order(), rhs.order()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| Rational::from(a + b))
            .collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch(self.order(), rhs.order()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| Rational::from(a - b))
            .collect();
        Ok(Self { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn series(cs: &[(i64, i64)]) -> RatSeries {
        RatSeries::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn inverse_of_one_is_one() {
        let s = series(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(s.inverse().unwrap(), s);
    }

    #[test]
    fn inverse_of_one_plus_z() {
        let s = series(&[(1, 1), (1, 1)]);
        assert_eq!(s.inverse().unwrap(), series(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn inverse_with_nonunit_constant() {
        let s = series(&[(2, 1), (1, 1), (1, 1)]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv, series(&[(1, 2), (-1, 4), (-1, 8)]));
    }

    #[test]
    fn product_truncates() {
        let a = series(&[(1, 1), (1, 2), (1, 6)]);
        // 1/12 - 1/4 + 1/6 cancels exactly, so the order-2 coefficient is 0.
        let b = series(&[(1, 1), (-1, 2), (1, 12)]);
        assert_eq!(a.mul(&b).unwrap(), series(&[(1, 1), (0, 1), (0, 1)]));
        // Flipping the last sign breaks the cancellation.
        let b = series(&[(1, 1), (-1, 2), (-1, 12)]);
        assert_eq!(a.mul(&b).unwrap(), series(&[(1, 1), (0, 1), (-1, 6)]));
    }

    #[test]
    fn zero_constant_term_rejected() {
        let s = series(&[(0, 1), (1, 1)]);
        assert!(matches!(s.inverse(), Err(crate::Error::ZeroConstantTerm)));
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = series(&[(1, 1), (1, 1)]);
        let b = series(&[(1, 1), (1, 1), (1, 1)]);
        assert!(matches!(a.mul(&b), Err(crate::Error::OrderMismatch(1, 2))));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_series(order: usize, nonzero_head: bool) -> impl Strategy<Value = RatSeries> {
            let head = if nonzero_head {
                (1i64..40, 1i64..12).boxed()
            } else {
                (-40i64..40, 1i64..12).boxed()
            };
            (
                head,
                proptest::collection::vec((-40i64..40, 1i64..12), order),
            )
                .prop_map(|((hn, hd), tail)| {
                    let mut coeffs = vec![rat(hn, hd)];
                    coeffs.extend(tail.into_iter().map(|(n, d)| rat(n, d)));
                    RatSeries::new(coeffs)
                })
        }

        proptest! {
            #[test]
            fn series_times_inverse_is_one(s in arb_series(8, true)) {
                let inv = s.inverse().unwrap();
                prop_assert_eq!(s.mul(&inv).unwrap(), RatSeries::one(8));
            }

            #[test]
            fn product_commutes(a in arb_series(6, false), b in arb_series(6, false)) {
                prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            }
        }
    }
}
