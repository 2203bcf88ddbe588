use num_traits::Zero;

use super::CohenError;
use crate::exact::rational::{int, is_p_integral, valuation};
use crate::exact::{bernoulli_poly, Rational};
use crate::padic::{structural, teichmuller, PadicNumber};

/// `q^(k-1) B_k((x+j)/q)` for `0 <= j < q` with `p ∤ j`.
fn terms(k: usize, x: &Rational, q: u64, p: u64) -> Vec<(u64, Rational)> {
    let qk = num_traits::pow(int(q as i64), k - 1);
    (1..q)
        .filter(|j| j % p != 0)
        .map(|j| {
            let y = (x + int(j as i64)) / int(q as i64);
            (j, &qk * bernoulli_poly(k, &y))
        })
        .collect()
}

fn check(k: usize, x: &Rational, p: u64) -> Result<u64, CohenError> {
    if k == 0 {
        return Err(CohenError::Domain("k >= 1 required".into()));
    }
    if !is_p_integral(x, p) {
        return Err(CohenError::Domain(format!("x = {x} is not in Z_{p}")));
    }
    Ok(structural(p)?.q)
}

/// `B_k(ω̃^-k, x) = q^(k-1) sum_{j<q} ω̃(j)^-k B_k((x+j)/q)`, with `ω̃`
/// the Teichmüller character of conductor `q`, zero on `pZ_p`. Known
/// modulo `p^n`.
pub fn chi_bernoulli_teich(k: usize, x: &Rational, p: u64, n: u32) -> Result<PadicNumber, CohenError> {
    let q = check(k, x, p)?;
    let mut acc = PadicNumber::zero(p, n as i64);
    for (j, r) in terms(k, x, q, p) {
        if r.is_zero() {
            continue;
        }
        let guard = (-valuation(&r, p).unwrap()).max(0) as u32;
        let w = teichmuller(&PadicNumber::from_int(j as i64, p, n + guard))?;
        let t = &w.pow(-(k as i64))? * &PadicNumber::from_rational(&r, p, n + guard);
        acc = &acc + &t;
    }
    Ok(acc.truncate(n as i64))
}

/// The same sum as an exact rational, available when `e | k` so that every
/// `ω̃(j)^-k` with `p ∤ j` is 1.
pub fn chi_bernoulli_exact(k: usize, x: &Rational, p: u64) -> Result<Option<Rational>, CohenError> {
    let q = check(k, x, p)?;
    let e = structural(p)?.e as usize;
    if k % e != 0 {
        return Ok(None);
    }
    Ok(Some(terms(k, x, q, p).into_iter().map(|(_, r)| r).sum()))
}

/// `B_k(x) - p^(k-1) B_k(x/p)`.
pub fn cohen2_closed_form(k: usize, x: &Rational, p: u64) -> Rational {
    let pk = num_traits::pow(int(p as i64), k - 1);
    bernoulli_poly(k, x) - pk * bernoulli_poly(k, &(x / int(p as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn small_value() {
        assert_eq!(chi_bernoulli_exact(2, &int(0), 3).unwrap(), Some(rat(-1, 3)));
        assert_eq!(cohen2_closed_form(2, &int(0), 3), rat(-1, 3));
        let v = chi_bernoulli_teich(2, &int(0), 3, 8).unwrap();
        assert!(v.eq_mod(&PadicNumber::from_rational(&rat(-1, 3), 3, 9), 8));
        assert_eq!(chi_bernoulli_exact(3, &int(0), 3).unwrap(), None);
    }

    #[test]
    fn exact_matches_closed_form() {
        for p in [2u64, 3, 5, 7] {
            let e = structural(p).unwrap().e as usize;
            for x in [rat(0, 1), rat(3, 5), rat(-7, 11), int(6)] {
                if !is_p_integral(&x, p) {
                    continue;
                }
                for k in (e..=12).step_by(e) {
                    assert_eq!(chi_bernoulli_exact(k, &x, p).unwrap().unwrap(), cohen2_closed_form(k, &x, p));
                }
            }
        }
    }
}
