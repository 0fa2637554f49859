//! Simultaneous polynomial root finding over high-precision complex
//! arithmetic: Ehrlich-Aberth iteration from caller-supplied seeds, a
//! Newton polishing pass, and residuals measured against the original
//! coefficients so certification never trusts the iteration itself.

use rug::Float;

use super::HPComplex;
use crate::{Error, Result};

/// One root of a polynomial as located numerically: the value, the
/// modulus of the polynomial there (computed from the exact input
/// coefficients at working precision), and how many simultaneous
/// iterations ran before the estimate settled.
#[derive(Clone, Debug)]
pub struct RootEstimate {
    pub value: HPComplex,
    pub residual: Float,
    pub iterations: usize,
}

impl RootEstimate {
    pub fn modulus(&self) -> Float {
        self.value.abs()
    }
}

/// Horner evaluation of p and p' in one sweep. Coefficients ascend:
/// `coeffs[k]` multiplies z^k.
fn eval_with_derivative(coeffs: &[HPComplex], z: &HPComplex) -> (HPComplex, HPComplex) {
    let prec = z.prec();
    let mut p = HPComplex::zero(prec);
    let mut dp = HPComplex::zero(prec);
    for c in coeffs.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z).add(c);
    }
    (p, dp)
}

/// Plain Horner evaluation at the precision of `z`.
pub fn eval_poly(coeffs: &[HPComplex], z: &HPComplex) -> HPComplex {
    let prec = z.prec();
    let mut p = HPComplex::zero(prec);
    for c in coeffs.iter().rev() {
        p = p.mul(z).add(c);
    }
    p
}

/// A fixed number of Newton steps from `z`. Steps that would divide by a
/// vanishing derivative, or that stop reducing |p|, leave the iterate
/// alone, so polishing can only improve the residual.
pub fn polish_newton(coeffs: &[HPComplex], z: &HPComplex, steps: usize) -> HPComplex {
    let mut best = z.clone();
    let mut best_abs = eval_poly(coeffs, &best).abs();
    let mut cur = z.clone();
    for _ in 0..steps {
        let (p, dp) = eval_with_derivative(coeffs, &cur);
        if p.is_zero() {
            return cur;
        }
        if dp.is_zero() || !dp.is_finite() {
            break;
        }
        cur = cur.sub(&p.div(&dp));
        if !cur.is_finite() {
            break;
        }
        let abs = eval_poly(coeffs, &cur).abs();
        if abs < best_abs {
            best = cur.clone();
            best_abs = abs;
        }
    }
    best
}

fn residual_of(coeffs: &[HPComplex], z: &HPComplex) -> Float {
    eval_poly(coeffs, z).abs()
}

fn estimates_from(coeffs: &[HPComplex], iterates: &[HPComplex], iters: usize) -> Vec<RootEstimate> {
    iterates
        .iter()
        .map(|z| RootEstimate {
            value: z.clone(),
            residual: residual_of(coeffs, z),
            iterations: iters,
        })
        .collect()
}

/// Ehrlich-Aberth simultaneous iteration for all roots of the polynomial
/// with the given ascending coefficients, started from `seeds` (one seed
/// per root, so `seeds.len() == coeffs.len() - 1`). The leading
/// coefficient must be nonzero. Iteration stops when every correction is
/// below `(1 + |z|) * 2^(16 - prec)`; the budget is `max_iters` full
/// sweeps, and exhausting it returns the partial estimates inside the
/// error. Each converged root receives a short Newton polish before the
/// residual is measured.
pub fn roots_aberth(
    coeffs: &[HPComplex],
    seeds: &[HPComplex],
    max_iters: usize,
) -> Result<Vec<RootEstimate>> {
    let degree = coeffs.len().saturating_sub(1);
    assert!(degree >= 1, "constant polynomials have no roots to find");
    assert!(
        !coeffs[degree].is_zero(),
        "leading coefficient must be nonzero"
    );
    assert_eq!(
        seeds.len(),
        degree,
        "need exactly one seed per root: degree {degree}, got {}",
        seeds.len()
    );
    let prec = coeffs[0].prec();
    // Correction tolerance: a few bits above the representable floor, so
    // the loop terminates at the precision actually carried.
    let tol_shift = prec.saturating_sub(16);
    let one = Float::with_val(prec, 1);

    let mut z: Vec<HPComplex> = seeds.iter().map(|s| s.with_prec(prec)).collect();
    for sweep in 1..=max_iters {
        let mut worst_ok = true;
        for i in 0..z.len() {
            let (p, dp) = eval_with_derivative(coeffs, &z[i]);
            if p.is_zero() {
                continue;
            }
            // Newton direction; a vanishing derivative with nonzero value
            // means the iterate sits on a critical point, so nudge off it.
            if dp.is_zero() {
                z[i] = z[i].add_real(&(Float::with_val(prec, 1) >> (prec / 2)));
                worst_ok = false;
                continue;
            }
            let newton = p.div(&dp);
            // Deflation term: sum of inverse distances to the other iterates.
            let mut s = HPComplex::zero(prec);
            let mut collision = false;
            for (j, zj) in z.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = z[i].sub(zj);
                if diff.is_zero() {
                    collision = true;
                    break;
                }
                s = s.add(&diff.recip());
            }
            if collision {
                // Two iterates landed on the same point; separate them and
                // keep sweeping.
                z[i] = z[i].add_real(&(Float::with_val(prec, 1) >> (prec / 3)));
                worst_ok = false;
                continue;
            }
            let denom = HPComplex::from_real(one.clone()).sub(&newton.mul(&s));
            let w = if denom.is_zero() { newton.clone() } else { newton.div(&denom) };
            if !w.is_finite() {
                worst_ok = false;
                continue;
            }
            let scale = z[i].abs() + &one;
            let bound = scale >> tol_shift;
            if w.abs() > bound {
                worst_ok = false;
            }
            z[i] = z[i].sub(&w);
        }
        if worst_ok {
            let polished: Vec<HPComplex> = z
                .iter()
                .map(|zi| polish_newton(coeffs, zi, 4))
                .collect();
            return Ok(estimates_from(coeffs, &polished, sweep));
        }
    }
    Err(Error::NoConvergence {
        iters: max_iters,
        partial: estimates_from(coeffs, &z, max_iters),
    })
}

/// Default seed layout for a polynomial of the given degree: points on
/// the circle of radius 1.05 at angles offset from the axes, with an
/// optional list of dedicated seeds placed first (for roots known to lie
/// far from the circle). The angle offset keeps seeds off the real axis,
/// where conjugate-symmetric polynomials would otherwise trap iterates.
pub fn seed_ring(degree: usize, dedicated: &[(f64, f64)], prec: u32) -> Vec<HPComplex> {
    assert!(
        dedicated.len() <= degree,
        "more dedicated seeds than roots: {} > {degree}",
        dedicated.len()
    );
    let mut seeds: Vec<HPComplex> = dedicated
        .iter()
        .map(|&(re, im)| HPComplex::from_f64(re, im, prec))
        .collect();
    let remaining = degree - dedicated.len();
    let radius = Float::with_val(prec, 1.05f64);
    let two_pi = super::pi(prec) * 2u32;
    for j in 0..remaining {
        let angle = Float::with_val(prec, &two_pi * Float::with_val(prec, j as f64 + 0.3712))
            / Float::with_val(prec, remaining as u32);
        let (sin, cos) = angle.sin_cos(Float::new(prec));
        seeds.push(HPComplex::new(
            Float::with_val(prec, &radius * &cos),
            Float::with_val(prec, &radius * &sin),
        ));
    }
    seeds
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 192;

    fn real_coeffs(cs: &[f64]) -> Vec<HPComplex> {
        cs.iter().map(|&c| HPComplex::from_f64(c, 0.0, P)).collect()
    }

    fn sorted_moduli(roots: &[RootEstimate]) -> Vec<f64> {
        let mut m: Vec<f64> = roots.iter().map(|r| r.modulus().to_f64()).collect();
        m.sort_by(|a, b| a.partial_cmp(b).unwrap());
        m
    }

    #[test]
    fn quadratic_with_known_roots() {
        // z^2 - 5z + 6 = (z - 2)(z - 3)
        let coeffs = real_coeffs(&[6.0, -5.0, 1.0]);
        let seeds = seed_ring(2, &[], P);
        let roots = roots_aberth(&coeffs, &seeds, 200).unwrap();
        let m = sorted_moduli(&roots);
        assert!((m[0] - 2.0).abs() < 1e-30);
        assert!((m[1] - 3.0).abs() < 1e-30);
        for r in &roots {
            assert!(r.residual < Float::with_val(P, 1) >> 150, "{}", r.residual);
        }
    }

    #[test]
    fn cyclotomic_roots_sit_on_unit_circle() {
        // z^8 - 1: all roots have modulus exactly 1.
        let mut cs = vec![0.0f64; 9];
        cs[0] = -1.0;
        cs[8] = 1.0;
        let coeffs = real_coeffs(&cs);
        let seeds = seed_ring(8, &[], P);
        let roots = roots_aberth(&coeffs, &seeds, 300).unwrap();
        assert_eq!(roots.len(), 8);
        let one = Float::with_val(P, 1);
        for r in &roots {
            let err = Float::with_val(P, r.modulus() - &one).abs();
            assert!(err < Float::with_val(P, 1) >> 150, "modulus error {err}");
        }
        // The eight roots must be distinct: pairwise distances stay away
        // from zero (the nearest pair of eighth roots of unity is at
        // distance 2 sin(pi/8) which is about 0.765).
        for i in 0..8 {
            for j in 0..i {
                let d = roots[i].value.sub(&roots[j].value).abs().to_f64();
                assert!(d > 0.7, "roots {i},{j} collided: distance {d}");
            }
        }
    }

    #[test]
    fn dedicated_seeds_capture_distant_real_roots() {
        // (z^2 - 1/4)(z^2 - 4) = z^4 - 17/4 z^2 + 1: roots at +-2, +-1/2,
        // mirroring the layout of the quartics this engine is built for.
        let coeffs = real_coeffs(&[1.0, 0.0, -4.25, 0.0, 1.0]);
        let seeds = seed_ring(4, &[(2.05, 0.0), (-2.05, 0.0), (0.48, 0.0), (-0.48, 0.0)], P);
        let roots = roots_aberth(&coeffs, &seeds, 200).unwrap();
        let m = sorted_moduli(&roots);
        assert!((m[0] - 0.5).abs() < 1e-40);
        assert!((m[1] - 0.5).abs() < 1e-40);
        assert!((m[2] - 2.0).abs() < 1e-40);
        assert!((m[3] - 2.0).abs() < 1e-40);
    }

    #[test]
    fn newton_polish_improves_a_perturbed_root() {
        let coeffs = real_coeffs(&[6.0, -5.0, 1.0]);
        let rough = HPComplex::from_f64(2.0 + 1e-9, 1e-12, P);
        let polished = polish_newton(&coeffs, &rough, 6);
        let err = polished
            .sub(&HPComplex::from_f64(2.0, 0.0, P))
            .abs()
            .to_f64();
        assert!(err < 1e-50, "error {err}");
    }

    #[test]
    fn budget_exhaustion_reports_partial_state() {
        let coeffs = real_coeffs(&[6.0, -5.0, 1.0]);
        let seeds = seed_ring(2, &[], P);
        let err = roots_aberth(&coeffs, &seeds, 1).unwrap_err();
        match err {
            Error::NoConvergence { iters, partial } => {
                assert_eq!(iters, 1);
                assert_eq!(partial.len(), 2);
                for p in &partial {
                    assert!(p.value.is_finite());
                }
            }
            other => panic!("expected NoConvergence, got {other}"),
        }
    }

    #[test]
    fn residuals_come_from_the_input_coefficients() {
        let coeffs = real_coeffs(&[-1.0, 0.0, 1.0]); // z^2 - 1
        let z = HPComplex::from_f64(1.0, 0.0, P);
        assert!(residual_of(&coeffs, &z).is_zero());
        let off = HPComplex::from_f64(1.5, 0.0, P);
        let r = residual_of(&coeffs, &off).to_f64();
        assert!((r - 1.25).abs() < 1e-12);
    }
}
