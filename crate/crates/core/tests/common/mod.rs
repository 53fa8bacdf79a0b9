//! Helpers shared by the integration suites: parse shorthand, the
//! brute-force composition oracle for series coefficients, and the
//! recursion oracles for the coefficient sequences.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

use lgb_core::exactnum::Rational;
use lgb_core::polyring::{Monomial, Polynomial, Ring, Term};

pub fn p(ring: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(ring, s).unwrap()
}

/// Brute-force oracle for the coefficient of `x^{-k}` in `C^n`: enumerates
/// every ordered tuple of factor exponents in `{1, -1, ..., -depth}` summing
/// to `-k` and multiplies the matching coefficients (`1` for the exponent
/// `+1`, the variable `C_j` for `-j`).
pub fn composition_oracle(ring: &Ring, n: usize, k: i64, depth: usize) -> Polynomial {
    let mut options: Vec<i64> = vec![1];
    options.extend((1..=depth as i64).map(|j| -j));
    let mut terms: Vec<Term> = Vec::new();
    let mut tuple = vec![0usize; n];
    loop {
        let sum: i64 = tuple.iter().map(|&idx| options[idx]).sum();
        if sum == -k {
            let mut mono = Monomial::one(ring.len());
            for &idx in &tuple {
                let e = options[idx];
                if e < 0 {
                    let var = ring.c_index((-e) as usize).expect("ring large enough");
                    mono = mono.mul(&Monomial::var(ring.len(), var));
                }
            }
            terms.push(Term { coeff: Rational::one(), mono });
        }
        // odometer over the tuple space
        let mut pos = 0;
        loop {
            if pos == n {
                return Polynomial::from_terms(ring, terms);
            }
            tuple[pos] += 1;
            if tuple[pos] < options.len() {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// Convolution oracle: `c_0 = 1`, `c_r = Σ c_j c_{r-1-j}`.
pub fn catalan_recursion(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for r in 1..=n {
        let mut acc = BigInt::zero();
        for j in 0..r {
            acc += &c[j] * &c[r - 1 - j];
        }
        c.push(acc);
    }
    c
}

/// Recursion oracle: `λ_0 = -1`, `λ_j = (1/2) Σ_{k<j} λ_k λ_{j-1-k}`.
pub fn lambda_recursion(n: usize) -> Vec<Rational> {
    let mut l = vec![Rational::from_int(-1)];
    for j in 1..=n {
        let mut acc = Rational::zero();
        for k in 0..j {
            acc += &(&l[k] * &l[j - 1 - k]);
        }
        l.push(acc * Rational::new(1, 2));
    }
    l
}
