//! Exact factorials, binomial coefficients and multinomial coefficients.
//!
//! Determinant expansions sum over integer compositions and touch the same
//! binomial rows millions of times, so rows are cached behind a mutex. The
//! cache only ever grows and every entry is immutable once inserted, which
//! keeps results independent of thread interleaving.

use std::sync::{Arc, Mutex, OnceLock};

use rug::Integer;

fn factorial_cache() -> &'static Mutex<Vec<Integer>> {
    static CACHE: OnceLock<Mutex<Vec<Integer>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Integer::from(1)]))
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> Integer {
    let mut cache = factorial_cache().lock().unwrap();
    while cache.len() <= n {
        let next = Integer::from(&cache[cache.len() - 1] * cache.len());
        cache.push(next);
    }
    cache[n].clone()
}

fn pascal_cache() -> &'static Mutex<Vec<Option<Arc<Vec<Integer>>>>> {
    static CACHE: OnceLock<Mutex<Vec<Option<Arc<Vec<Integer>>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn pascal_row(n: usize) -> Arc<Vec<Integer>> {
    {
        let cache = pascal_cache().lock().unwrap();
        if let Some(Some(row)) = cache.get(n) {
            return Arc::clone(row);
        }
    }
    let mut row = Vec::with_capacity(n + 1);
    let mut c = Integer::from(1);
    row.push(c.clone());
    for k in 0..n {
        c *= (n - k) as u64;
        c /= (k + 1) as u64;
        row.push(c.clone());
    }
    let row = Arc::new(row);
    let mut cache = pascal_cache().lock().unwrap();
    if cache.len() <= n {
        cache.resize(n + 1, None);
    }
    cache[n].get_or_insert_with(|| Arc::clone(&row));
    Arc::clone(cache[n].as_ref().unwrap())
}

/// Binomial coefficient C(n, k), zero for k > n.
pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::new();
    }
    pascal_row(n)[k].clone()
}

/// Multinomial coefficient t! / (d_1! d_2! ... ) where t = sum of parts.
/// Parts are multiplicities, so zero entries contribute nothing.
pub fn multinomial(parts: &[usize]) -> Integer {
    let t: usize = parts.iter().sum();
    let mut denom = Integer::from(1);
    for &d in parts {
        if d > 1 {
            denom *= factorial(d);
        }
    }
    factorial(t) / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(1), 1);
        assert_eq!(factorial(5), 120);
        assert_eq!(factorial(12), 479001600);
    }

    #[test]
    fn factorial_20_exact() {
        assert_eq!(factorial(20).to_string(), "2432902008176640000");
    }

    #[test]
    fn binomial_row_symmetry_and_sums() {
        for n in 0..40usize {
            let mut total = Integer::new();
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
                total += binomial(n, k);
            }
            assert_eq!(total, Integer::from(1) << n as u32);
        }
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        for n in 0..25usize {
            for k in 0..=n {
                let via_fact = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial(n, k), via_fact);
            }
        }
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&[]), 1);
        assert_eq!(multinomial(&[3]), 1);
        assert_eq!(multinomial(&[1, 1]), 2);
        assert_eq!(multinomial(&[2, 1]), 3);
        assert_eq!(multinomial(&[1, 1, 1]), 6);
        assert_eq!(multinomial(&[0, 2, 0, 1]), 3);
        // C(5; 2, 3) = 10, the plain binomial as a special case.
        assert_eq!(multinomial(&[2, 3]), 10);
    }
}
