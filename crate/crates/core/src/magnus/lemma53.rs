use num_traits::{One, Zero};

use crate::exact::rational::{binomial, rat};
use crate::exact::{bernoulli_number, bernoulli_poly_coeffs, Poly, Rational, Scalar};

/// Polynomials in `χ` with coefficients in `Q[α]`.
pub type BivarPoly = Poly<Poly<Rational>>;

fn alpha() -> BivarPoly {
    Poly::constant(Poly::x())
}

fn chi() -> BivarPoly {
    Poly::x()
}

fn q(r: Rational) -> BivarPoly {
    BivarPoly::from_rational(&r)
}

/// `J_s = -(1/s)(B_s(-ρ) - B_s χ^s)` with `ρ = α(χ - 1)`.
fn j_term(s: usize, rho: &BivarPoly) -> BivarPoly {
    let bs = bernoulli_poly_coeffs(s).eval_at(&-rho.clone());
    let tail = q(bernoulli_number(s)) * chi().pow_u(s as u32);
    q(rat(-1, s as i64)) * (bs - tail)
}

/// `((1/k) B_k(α)(χ^k - 1), sum_{i<k} binom(k-1, i) α^i χ^i J_(k-i))`.
pub fn lemma53_sides(k: usize) -> (BivarPoly, BivarPoly) {
    assert!(k >= 1, "k >= 1 required");
    let a = alpha();
    let x = chi();
    let rho = a.clone() * (x.clone() - BivarPoly::one());
    let bk = Poly::constant(bernoulli_poly_coeffs(k));
    let lhs = q(rat(1, k as i64)) * bk * (x.pow_u(k as u32) - BivarPoly::one());
    let mut rhs = BivarPoly::zero();
    for i in 0..k {
        let c = q(Rational::from_integer(binomial(k as u32 - 1, i as u32)));
        rhs = rhs + c * (a.clone() * x.clone()).pow_u(i as u32) * j_term(k - i, &rho);
    }
    (lhs, rhs)
}

pub fn lemma53_check(k: usize) -> bool {
    let (l, r) = lemma53_sides(k);
    l == r
}

#[cfg(test)]
fn at_alpha(f: &BivarPoly, a: &Rational) -> Poly<Rational> {
    Poly::new(f.coeffs().iter().map(|c| c.eval(a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn k1_is_explicit() {
        let (l, r) = lemma53_sides(1);
        let want = (alpha() - q(rat(1, 2))) * (chi() - BivarPoly::one());
        assert_eq!(l, want);
        assert_eq!(r, want);
    }

    #[test]
    fn alpha_zero() {
        for k in 1..=6 {
            let (_, r) = lemma53_sides(k);
            let xk = Poly::monomial(int(1), k) - Poly::one();
            let want = xk.scale(&(bernoulli_number(k) / int(k as i64)));
            assert_eq!(at_alpha(&r, &int(0)), want);
        }
    }

    #[test]
    fn holds_for_small_k() {
        assert!((1..=12).all(lemma53_check));
    }
}
