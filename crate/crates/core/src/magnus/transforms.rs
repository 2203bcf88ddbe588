use crate::exact::rational::{factorial, rat};
use crate::exact::{bernoulli_numbers, Rational, Scalar, TruncSeries};

fn inv_factorial<T: Scalar>(n: usize) -> T {
    T::from_rational(&Rational::new(1.into(), factorial(n as u32)))
}

/// `b_k = sum_{i=1..k} (-u0)^(k-i) / (k+1-i)! u_i`. Index 0 holds `k = 1`.
pub fn log_to_flat<T: Scalar>(u0: &T, u: &[T]) -> Vec<T> {
    let x = -u0.clone();
    (1..=u.len())
        .map(|k| {
            (1..=k).fold(T::zero(), |acc, i| {
                acc + x.pow_u((k - i) as u32) * inv_factorial::<T>(k + 1 - i) * u[i - 1].clone()
            })
        })
        .collect()
}

/// `u_k = sum_{s=0..k-1} (B_s / s!) (-u0)^s b_(k-s)`.
pub fn flat_to_log<T: Scalar>(u0: &T, b: &[T]) -> Vec<T> {
    let x = -u0.clone();
    let bn = bernoulli_numbers(b.len());
    let w: Vec<T> = (0..b.len())
        .map(|s| T::from_rational(&bn[s]) * inv_factorial::<T>(s) * x.pow_u(s as u32))
        .collect();
    (1..=b.len())
        .map(|k| (0..k).fold(T::zero(), |acc, s| acc + w[s].clone() * b[k - 1 - s].clone()))
        .collect()
}

/// Checks `sum u_(k+1) T^k = (-u0 T / (e^(-u0 T) - 1)) sum b_(k+1) T^k` for
/// `b = log_to_flat(u0, u)`, in both directions: the Bernoulli factor
/// applied to `B(T)`, and `(e^x - 1)/x` applied to `U(T)`.
pub fn genfunc_identity_holds<T: Scalar>(u0: &T, u: &[T]) -> bool {
    let l = u.len();
    let b = log_to_flat(u0, u);
    let us = TruncSeries::new(u.to_vec(), l);
    let bs = TruncSeries::new(b, l);
    let x = -u0.clone();
    let bn = bernoulli_numbers(l);
    let todd = TruncSeries::new(
        (0..l).map(|n| T::from_rational(&bn[n]) * inv_factorial::<T>(n) * x.pow_u(n as u32)).collect(),
        l,
    );
    let expm1 = TruncSeries::new((0..l).map(|n| inv_factorial::<T>(n + 1) * x.pow_u(n as u32)).collect(), l);
    &todd * &bs == us && &expm1 * &us == bs
}

/// [`genfunc_identity_holds`] on a fixed test sequence of length `l`.
pub fn genfunc_identity_check(u0: &Rational, l: usize) -> bool {
    genfunc_identity_holds(u0, &sample(l))
}

fn sample(l: usize) -> Vec<Rational> {
    (1..=l as i64)
        .map(|k| rat(if k % 2 == 0 { 1 } else { -1 } * (k * k + 1), 2 * k + 3))
        .collect()
}

/// `Li_k = sum_{i=1..k} ρ^(k-i) / (k+1-i)! ℓi_i`.
pub fn li_from_elli<T: Scalar>(rho: &T, elli: &[T]) -> Vec<T> {
    log_to_flat(&-rho.clone(), elli)
}

/// `ℓi_k = sum_{s=0..k-1} (B_s / s!) ρ^s Li_(k-s)`.
pub fn elli_from_li<T: Scalar>(rho: &T, li: &[T]) -> Vec<T> {
    flat_to_log(&-rho.clone(), li)
}

/// Both compositions of the two transforms are the identity on `elli`.
pub fn prop42_roundtrip<T: Scalar>(rho: &T, elli: &[T]) -> bool {
    let li = li_from_elli(rho, elli);
    elli_from_li(rho, &li) == elli && li_from_elli(rho, &elli_from_li(rho, &li)) == li
}

pub fn prop42_check(rho: &Rational, l: usize) -> bool {
    prop42_roundtrip(rho, &sample(l))
}

fn alternate<T: Scalar>(v: &[T]) -> Vec<T> {
    v.iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x.clone() })
        .collect()
}

/// With `u0 = ρ`, `u_k = (-1)^(k-1) ℓi_k` and `b_k = (-1)^(k-1) Li_k`, the
/// flat coordinates of the logarithm agree with the polylogarithms.
pub fn dictionary_check<T: Scalar>(rho: &T, elli: &[T]) -> bool {
    let b = log_to_flat(rho, &alternate(elli));
    alternate(&b) == li_from_elli(rho, elli) && flat_to_log(rho, &b) == alternate(elli)
}
