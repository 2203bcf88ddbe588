//! Reference values computed without the library: Bernoulli numbers by
//! the Akiyama-Tanigawa transform, Stirling numbers by their recurrences,
//! `<a p^-1>` by search.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn powq(x: &Q, e: usize) -> Q {
    num_traits::pow(x.clone(), e)
}

/// `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a: Vec<Q> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(q(1, m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = qi(j as i64) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

pub fn binom(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn bernoulli_poly(n: usize, x: &Q) -> Q {
    let b = bernoulli_numbers(n);
    (0..=n).map(|k| Q::from_integer(binom(n, k)) * &b[k] * powq(x, n - k)).sum()
}

/// `(m^(k-1)/k) B_k(a/m) (1 - c^k)`.
pub fn hurwitz_moment(a: i64, m: i64, c: i64, k: usize) -> Q {
    powq(&qi(m), k - 1) / qi(k as i64) * bernoulli_poly(k, &q(a, m)) * (Q::one() - powq(&qi(c), k))
}

pub fn bracket(a: i64, m: i64, p: u64) -> i64 {
    (1..=m).find(|x| (x * p as i64 - a).rem_euclid(m) == 0).expect("p invertible mod m")
}

/// Two-branch interpolation value, without the `(1 - c^k)` factor.
pub fn interpolation(p: u64, a: i64, m: i64, k: usize) -> Q {
    let mk = powq(&qi(m), k - 1) / qi(k as i64);
    let main = &mk * bernoulli_poly(k, &q(a, m));
    if m % p as i64 == 0 {
        main
    } else {
        main - powq(&qi(p as i64), k - 1) * mk * bernoulli_poly(k, &q(bracket(a, m, p), m))
    }
}

/// Signed Stirling numbers of the first kind `s(j, i)`, `0 <= i, j <= n`.
pub fn stirling_first(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for j in 1..=n {
        for i in 1..=j {
            s[j][i] = &s[j - 1][i - 1] - BigInt::from(j - 1) * &s[j - 1][i];
        }
    }
    s
}

pub fn stirling_second(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for j in 1..=n {
        for i in 1..=j {
            s[j][i] = &s[j - 1][i - 1] + BigInt::from(i) * &s[j - 1][i];
        }
    }
    s
}

/// `c_j = (1/j!) sum_i s(j, i) m_i`.
pub fn mahler_from_moments(moments: &[Q]) -> Vec<Q> {
    let n = moments.len() - 1;
    let s = stirling_first(n);
    let mut fact = BigInt::one();
    (0..=n)
        .map(|j| {
            if j > 0 {
                fact *= j;
            }
            let acc: Q = (0..=j).map(|i| Q::from_integer(s[j][i].clone()) * &moments[i]).sum();
            acc / Q::from_integer(fact.clone())
        })
        .collect()
}

pub fn p_integral(x: &Q, p: u64) -> bool {
    !(x.denom() % BigInt::from(p)).is_zero()
}

/// Moments of the image of `mu` under `v -> m v + s`, expanded directly.
pub fn pushforward(mu: &[Q], m: &Q, s: &Q) -> Vec<Q> {
    (0..mu.len())
        .map(|n| {
            (0..=n)
                .map(|i| Q::from_integer(binom(n, i)) * powq(m, i) * powq(s, n - i) * &mu[i])
                .sum()
        })
        .collect()
}
