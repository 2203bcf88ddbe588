//! Bernoulli numbers and polynomials with the convention `B_1 = -1/2`,
//! i.e. the expansion of `w e^{Tw} / (e^w - 1)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{binomial, dot, int, Rational};
use super::Poly;

fn table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

fn extend_to(table: &mut Vec<Rational>, k: usize) {
    while table.len() <= k {
        let n = table.len();
        // sum_{j=0}^{n} binom(n+1, j) B_j = 0
        let mut coeffs = Vec::with_capacity(n);
        let mut c = BigInt::one();
        for j in 0..n {
            coeffs.push(c.clone());
            c = c * (n + 1 - j) / (j + 1);
        }
        let s = dot(&coeffs, table);
        table.push(-s / int(n as i64 + 1));
    }
}

/// `B_0, ..., B_k`.
pub fn bernoulli_numbers(k: usize) -> Vec<Rational> {
    {
        let t = table().read().expect("bernoulli table poisoned");
        if t.len() > k {
            return t[..=k].to_vec();
        }
    }
    let mut t = table().write().expect("bernoulli table poisoned");
    extend_to(&mut t, k);
    t[..=k].to_vec()
}

pub fn bernoulli_number(k: usize) -> Rational {
    {
        let t = table().read().expect("bernoulli table poisoned");
        if let Some(b) = t.get(k) {
            return b.clone();
        }
    }
    let mut t = table().write().expect("bernoulli table poisoned");
    extend_to(&mut t, k);
    t[k].clone()
}

/// `B_k(x) = sum_s binom(k, s) B_s x^{k-s}`.
pub fn bernoulli_poly(k: usize, x: &Rational) -> Rational {
    let bs = bernoulli_numbers(k);
    // Scale by den^k so every term is an integer multiple of a B_s.
    let num = x.numer();
    let den = x.denom();
    let mut coeffs = Vec::with_capacity(k + 1);
    let mut num_pows = vec![BigInt::one(); k + 1];
    for i in 1..=k {
        num_pows[i] = &num_pows[i - 1] * num;
    }
    let mut den_pow = BigInt::one();
    for s in 0..=k {
        coeffs.push(binomial(k as u32, s as u32) * &num_pows[k - s] * &den_pow);
        den_pow *= den;
    }
    let den_k = num_traits::pow(den.clone(), k);
    dot(&coeffs, &bs) / Rational::from_integer(den_k)
}

/// `B_k(T)` as a polynomial.
pub fn bernoulli_poly_coeffs(k: usize) -> Poly<Rational> {
    let bs = bernoulli_numbers(k);
    let coeffs = (0..=k)
        .map(|deg| {
            let s = k - deg;
            Rational::from_integer(binomial(k as u32, s as u32)) * &bs[s]
        })
        .collect();
    Poly::new(coeffs)
}

/// Checks `B_k(y + x) = sum_s binom(k, s) B_s(y) x^{k-s}`.
pub fn verify_bernoulli_addition(k: usize, x: &Rational, y: &Rational) -> bool {
    let lhs = bernoulli_poly(k, &(y + x));
    let mut rhs = Rational::zero();
    let mut xp = Rational::one();
    for s in (0..=k).rev() {
        rhs += Rational::from_integer(binomial(k as u32, s as u32)) * bernoulli_poly(s, y) * &xp;
        xp *= x;
    }
    lhs == rhs
}

/// Checks the distribution relation `B_k(x) = p^{k-1} sum_{j<p} B_k((x + j)/p)`.
pub fn verify_distribution(k: usize, p: u64, x: &Rational) -> bool {
    let pr = int(p as i64);
    let rhs: Rational = (0..p)
        .map(|j| bernoulli_poly(k, &((x + int(j as i64)) / &pr)))
        .sum::<Rational>()
        * super::rational::pow(&pr, k as i32 - 1);
    bernoulli_poly(k, x) == rhs
}
