use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::number::pow_p;
use super::{PadicError, PadicNumber};
use crate::exact::rational::{int_valuation, mod_inverse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructuralConstants {
    pub p: u64,
    pub q: u64,
    pub e: u64,
}

impl StructuralConstants {
    /// `v_p(q)`: 2 for p = 2, else 1.
    pub fn q_valuation(&self) -> u32 {
        if self.p == 2 {
            2
        } else {
            1
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn structural(p: u64) -> Result<StructuralConstants, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    Ok(if p == 2 {
        StructuralConstants { p, q: 4, e: 2 }
    } else {
        StructuralConstants { p, q: p, e: p - 1 }
    })
}

fn require_unit(b: &PadicNumber) -> Result<(), PadicError> {
    if b.is_unit() {
        Ok(())
    } else {
        Err(PadicError::NotUnit(b.to_string()))
    }
}

/// The root of unity congruent to `b` modulo `q`, at the precision of `b`.
pub fn teichmuller(b: &PadicNumber) -> Result<PadicNumber, PadicError> {
    require_unit(b)?;
    let p = b.p();
    let n = b.prec();
    if p == 2 {
        if n < 2 {
            return Err(PadicError::InsufficientPrecision { needed: 2, have: n as i64 });
        }
        let sign = if b.unit().mod_floor(&BigInt::from(4)) == BigInt::one() { 1 } else { -1 };
        return Ok(PadicNumber::from_int(sign, 2, n));
    }
    let modulus = pow_p(p, n);
    let pb = BigInt::from(p);
    let mut x = b.unit().clone();
    loop {
        let next = x.modpow(&pb, &modulus);
        if next == x {
            return Ok(PadicNumber::from_residue(p, 0, x, n as i64));
        }
        x = next;
    }
}

/// `[b] = b / omega(b)`, the component in `1 + qZ_p`.
pub fn angle(b: &PadicNumber) -> Result<PadicNumber, PadicError> {
    let w = teichmuller(b)?;
    b.checked_div(&w)
}

fn require_one_plus_q(u: &PadicNumber) -> Result<u32, PadicError> {
    let sc = structural(u.p())?;
    require_unit(u)?;
    let d = u - &PadicNumber::one(u.p(), u.prec());
    let v = d.valuation().unwrap_or(d.abs_prec());
    if v < sc.q_valuation() as i64 {
        return Err(PadicError::NotInOnePlusQ(u.to_string()));
    }
    Ok(sc.q_valuation())
}

fn ilog(p: u64, n: u64) -> u32 {
    let mut k = 0;
    let mut x = n;
    while x >= p {
        x /= p;
        k += 1;
    }
    k
}

/// `log(u)` for `u` in `1 + qZ_p`.
///
/// The series is summed with enough guard digits that every term is exact
/// modulo `p^N`, `N` the precision of `u`; no digits are lost.
pub fn padic_log(u: &PadicNumber) -> Result<PadicNumber, PadicError> {
    require_one_plus_q(u)?;
    let p = u.p();
    let n_abs = u.abs_prec();
    let x = (u.unit() - BigInt::one()).mod_floor(&pow_p(p, u.prec()));
    if x.is_zero() {
        return Ok(PadicNumber::zero(p, n_abs));
    }
    let vx = int_valuation(&x, p) as i64;
    // terms with n*vx - v_p(n) >= N vanish; n*vx - log_p(n) is increasing
    let mut nmax = 1u64;
    while (nmax as i64) * vx - (ilog(p, nmax) as i64) < n_abs {
        nmax += 1;
    }
    let guard = ilog(p, nmax);
    let w = n_abs as u32 + guard;
    let mw = pow_p(p, w);
    let mn = pow_p(p, n_abs as u32);
    let mut xn = BigInt::one();
    let mut acc = BigInt::zero();
    for n in 1..nmax {
        xn = (xn * &x).mod_floor(&mw);
        let vn = int_valuation(&BigInt::from(n), p);
        let unit_n = BigInt::from(n) / pow_p(p, vn);
        let term = (&xn / pow_p(p, vn)) * mod_inverse(&unit_n, &mw).unwrap();
        if n % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(PadicNumber::from_residue(p, 0, acc.mod_floor(&mn), n_abs))
}

/// `exp(x)` for `x` with `v_p(x) > 1/(p-1)`.
pub fn padic_exp(x: &PadicNumber) -> Result<PadicNumber, PadicError> {
    let p = x.p();
    let sc = structural(p)?;
    let n_abs = x.abs_prec();
    if n_abs <= 0 {
        return Err(PadicError::InsufficientPrecision { needed: 1, have: n_abs });
    }
    if x.is_zero() {
        return Ok(PadicNumber::one(p, n_abs as u32));
    }
    let vx = x.valuation().unwrap();
    if vx < sc.q_valuation() as i64 {
        return Err(PadicError::ExpDivergent(x.to_string()));
    }
    // v(x^n/n!) >= n*vx - (n-1)/(p-1)
    let pm1 = (p - 1) as i64;
    let mut nmax = 1i64;
    while nmax * vx * pm1 - (nmax - 1) < n_abs * pm1 {
        nmax += 1;
    }
    let fact_val = |n: i64| -> u32 {
        let mut s = 0;
        let mut k = n as u64 / p;
        while k > 0 {
            s += k as u32;
            k /= p;
        }
        s
    };
    let guard = fact_val(nmax);
    let w = n_abs as u32 + guard;
    let mw = pow_p(p, w);
    let mn = pow_p(p, n_abs as u32);
    let xr = x.residue(w);
    let mut xn = BigInt::one();
    let mut fact_unit = BigInt::one();
    let mut acc = BigInt::one();
    for n in 1..nmax {
        xn = (xn * &xr).mod_floor(&mw);
        let vn = int_valuation(&BigInt::from(n), p);
        fact_unit = (fact_unit * (BigInt::from(n) / pow_p(p, vn))).mod_floor(&mw);
        let vf = fact_val(n);
        let term = (&xn / pow_p(p, vf)) * mod_inverse(&fact_unit, &mw).unwrap();
        acc += term;
    }
    Ok(PadicNumber::from_residue(p, 0, acc.mod_floor(&mn), n_abs))
}

/// `u^s = exp(s log u)` for `u` in `1 + qZ_p` and `s` in `Z_p`.
pub fn padic_power(u: &PadicNumber, s: &PadicNumber) -> Result<PadicNumber, PadicError> {
    if !s.is_integral() {
        return Err(PadicError::NotIntegral(s.to_string()));
    }
    let l = padic_log(u)?;
    let t = s * &l;
    let t = t.truncate(u.abs_prec());
    padic_exp(&t)
}

/// Least positive `x` with `x p ≡ a (mod m)`.
pub fn ap_inverse_bracket(a: i64, m: i64, p: u64) -> Result<i64, PadicError> {
    if m <= 1 {
        return Err(PadicError::BadModulus(m));
    }
    if (m as u64) % p == 0 {
        return Err(PadicError::PDividesM { p, m });
    }
    if a.rem_euclid(m) == 0 {
        return Err(PadicError::MDividesA { a, m });
    }
    let inv = mod_inverse(&BigInt::from(p), &BigInt::from(m)).unwrap();
    let x = (BigInt::from(a) * inv).mod_floor(&BigInt::from(m));
    Ok(i64::try_from(x).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn pn(n: i64, p: u64, prec: u32) -> PadicNumber {
        PadicNumber::from_int(n, p, prec)
    }

    #[test]
    fn constants() {
        assert_eq!(structural(2).unwrap(), StructuralConstants { p: 2, q: 4, e: 2 });
        assert_eq!(structural(3).unwrap(), StructuralConstants { p: 3, q: 3, e: 2 });
        assert_eq!(structural(7).unwrap(), StructuralConstants { p: 7, q: 7, e: 6 });
        assert!(structural(9).is_err());
        assert!(structural(1).is_err());
    }

    #[test]
    fn teichmuller_values() {
        assert_eq!(teichmuller(&pn(2, 5, 2)).unwrap().residue(2), BigInt::from(7));
        assert_eq!(teichmuller(&pn(1, 7, 6)).unwrap(), pn(1, 7, 6));
        assert_eq!(teichmuller(&pn(7, 2, 8)).unwrap(), pn(-1, 2, 8));
        assert_eq!(teichmuller(&pn(5, 2, 8)).unwrap(), pn(1, 2, 8));
        assert!(teichmuller(&pn(10, 5, 4)).is_err());
        let a = angle(&pn(2, 5, 2)).unwrap();
        let expected = PadicNumber::from_rational(&rat(2, 7), 5, 2);
        assert_eq!(a, expected);
    }

    #[test]
    fn log_matches_naive_series() {
        // log(4) in Z_3 by summing the series over the rationals.
        let n = 6;
        let x = rat(3, 1);
        let mut s = Rational::zero();
        let mut xp = Rational::one();
        for k in 1..80 {
            xp *= &x;
            let t = &xp / Rational::from_integer(BigInt::from(k));
            if k % 2 == 1 {
                s += t;
            } else {
                s -= t;
            }
        }
        let got = padic_log(&pn(4, 3, n)).unwrap();
        assert!(got.eq_mod(&PadicNumber::from_rational(&s, 3, n), n as i64));
        assert!(padic_log(&pn(1, 3, 6)).unwrap().is_zero());
        assert!(padic_log(&pn(2, 3, 6)).is_err());
        assert!(padic_log(&pn(3, 2, 6)).is_err());
    }

    use crate::exact::Rational;

    #[test]
    fn exp_inverts_log() {
        for (p, u) in [(3u64, 4i64), (5, 6), (2, 5), (7, 50), (2, 13)] {
            let u = pn(u, p, 12);
            let back = padic_exp(&padic_log(&u).unwrap()).unwrap();
            assert!(back.eq_mod(&u, 12), "p={p}");
        }
        assert!(padic_exp(&pn(2, 2, 6)).is_err());
    }

    #[test]
    fn powers() {
        let u = pn(6, 5, 10);
        assert_eq!(padic_power(&u, &pn(0, 5, 10)).unwrap(), pn(1, 5, 10));
        let cube = padic_power(&u, &pn(3, 5, 10)).unwrap();
        assert!(cube.eq_mod(&pn(216, 5, 10), 10));
        let half = PadicNumber::from_rational(&rat(1, 2), 5, 10);
        let r = padic_power(&u, &half).unwrap();
        assert!((&r * &r).eq_mod(&u, 10));
    }

    #[test]
    fn bracket() {
        assert_eq!(ap_inverse_bracket(3, 106, 11).unwrap(), 87);
        assert_eq!(ap_inverse_bracket(1, 3, 5).unwrap(), 2);
        assert_eq!(ap_inverse_bracket(1, 2, 3).unwrap(), 1);
        assert!(ap_inverse_bracket(1, 10, 5).is_err());
        assert!(ap_inverse_bracket(6, 3, 5).is_err());
    }
}
