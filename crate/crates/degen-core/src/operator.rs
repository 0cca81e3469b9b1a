//! The degenerate operator calculus: the iterated operator
//! ((t-1) d/dt)_{k,λ} and its closed-form expansion through degenerate
//! Stirling numbers, acting on exact polynomials in t.
//!
//! The two routes must agree exactly; the factors (t-1)d/dt - jλ commute for
//! distinct j, so the ascending iteration order is a convention, not a
//! choice.

use crate::lambda_poly::LambdaPoly;
use crate::rational::rat;
use crate::stirling::{shared, StirlingKind};
use crate::tpoly::TPoly;
use once_cell::sync::Lazy;
use std::sync::RwLock;

/// Both routes of one operator application, for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaOperatorResult {
    pub k: usize,
    pub input: TPoly,
    pub iterated: TPoly,
    pub closed_form: TPoly,
}

impl ThetaOperatorResult {
    pub fn compute(f: &TPoly, k: usize) -> Self {
        ThetaOperatorResult {
            k,
            input: f.clone(),
            iterated: apply_theta_iterated(f, k),
            closed_form: apply_theta_closed(f, k),
        }
    }

    pub fn agrees(&self) -> bool {
        self.iterated == self.closed_form
    }
}

/// One factor of the degenerate falling-factorial operator product:
/// f ↦ (t-1) f' - jλ f.
pub fn theta_step(f: &TPoly, j: usize) -> TPoly {
    let lead = &TPoly::t_minus_one() * &f.derivative();
    if j == 0 {
        return lead;
    }
    let shift = f.scale_poly(&LambdaPoly::lambda().scale(&rat(j as i64)));
    &lead - &shift
}

/// Apply ((t-1) d/dt)_{k,λ} by iterating the factors j = 0, 1, .., k-1.
pub fn apply_theta_iterated(f: &TPoly, k: usize) -> TPoly {
    let mut acc = f.clone();
    for j in 0..k {
        acc = theta_step(&acc, j);
    }
    acc
}

static T_MINUS_ONE_POWS: Lazy<RwLock<Vec<TPoly>>> =
    Lazy::new(|| RwLock::new(vec![TPoly::one()]));

/// (t - 1)^m, expanded once into the monomial basis and cached.
pub fn t_minus_one_pow(m: usize) -> TPoly {
    {
        let cache = T_MINUS_ONE_POWS.read().unwrap();
        if cache.len() > m {
            return cache[m].clone();
        }
    }
    let mut cache = T_MINUS_ONE_POWS.write().unwrap();
    while cache.len() <= m {
        let next = &(*cache.last().unwrap()) * &TPoly::t_minus_one();
        cache.push(next);
    }
    cache[m].clone()
}

/// Apply the closed form Σ_{m=0}^{k} S_{2,λ}(k, m) (t-1)^m (d/dt)^m.
pub fn apply_theta_closed(f: &TPoly, k: usize) -> TPoly {
    let triangle = shared(StirlingKind::Degenerate2);
    let mut result = TPoly::zero();
    let mut deriv = f.clone();
    for m in 0..=k {
        let s = triangle.entry(k, m);
        if !s.is_zero() && !deriv.is_zero() {
            let term = (&t_minus_one_pow(m) * &deriv).scale_poly(&s);
            result = &result + &term;
        }
        if m < k {
            deriv = deriv.derivative();
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::stirling::degenerate_falling;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn t_squared() -> TPoly {
        TPoly::from_coeffs(vec![LambdaPoly::zero(), LambdaPoly::zero(), LambdaPoly::one()])
    }

    #[test]
    fn zero_iterations_is_identity() {
        let f = t_squared();
        assert_eq!(apply_theta_iterated(&f, 0), f);
        assert_eq!(apply_theta_closed(&f, 0), f);
    }

    #[test]
    fn single_step_on_t() {
        assert_eq!(apply_theta_iterated(&TPoly::t(), 1), TPoly::t_minus_one());
        assert_eq!(apply_theta_closed(&TPoly::t(), 1), TPoly::t_minus_one());
    }

    #[test]
    fn two_steps_on_t_squared() {
        // step 1: 2t(t-1); step 2: (t-1)(4t-2) - 2λ t(t-1)
        // = 2 + (2λ - 6) t + (4 - 2λ) t^2
        let expect = TPoly::from_coeffs(vec![
            LambdaPoly::constant(rat(2)),
            LambdaPoly::from_coeffs(vec![rat(-6), rat(2)]),
            LambdaPoly::from_coeffs(vec![rat(4), rat(-2)]),
        ]);
        let got = apply_theta_iterated(&t_squared(), 2);
        assert_eq!(got, expect);
        assert_eq!(apply_theta_closed(&t_squared(), 2), expect);
    }

    fn random_tpoly(rng: &mut ChaCha8Rng, deg_max: usize) -> TPoly {
        let deg = rng.gen_range(0..=deg_max);
        TPoly::from_coeffs(
            (0..=deg)
                .map(|_| {
                    LambdaPoly::constant(ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
                })
                .collect(),
        )
    }

    #[test]
    fn iterated_equals_closed_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..8 {
            let f = random_tpoly(&mut rng, 6);
            for k in 0..=5 {
                let r = ThetaOperatorResult::compute(&f, k);
                assert!(r.agrees(), "k = {k}, f = {:?}", r.input);
            }
        }
    }

    #[test]
    fn factors_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..6 {
            let f = random_tpoly(&mut rng, 6);
            for (i, j) in [(0usize, 1usize), (1, 3), (2, 5)] {
                let ij = theta_step(&theta_step(&f, i), j);
                let ji = theta_step(&theta_step(&f, j), i);
                assert_eq!(ij, ji);
            }
        }
    }

    #[test]
    fn powers_of_t_minus_one_are_eigenfunctions() {
        // ((t-1) d/dt)_{k,λ} (t-1)^n = (n)_{k,λ} (t-1)^n
        for n in 0..=6usize {
            let f = t_minus_one_pow(n);
            for k in 0..=6usize {
                let got = apply_theta_iterated(&f, k);
                let expect = f.scale_poly(&degenerate_falling(&rat(n as i64), k));
                assert_eq!(got, expect, "n = {n}, k = {k}");
            }
        }
    }
}
