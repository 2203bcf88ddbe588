//! Finite-level shadows of measures on the profinite integers: tables of
//! masses of the cosets `x + N Ẑ` with values in `Z/M`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::MeasureError;
use crate::exact::rational::{int, rat, reduce_mod};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteLevelMeasure {
    #[serde(rename = "N")]
    pub level: u64,
    #[serde(rename = "M")]
    pub modulus: u64,
    pub masses: Vec<u64>,
}

impl FiniteLevelMeasure {
    /// Sums over the fibres of `Z/N -> Z/n`.
    pub fn coarsen(&self, n: u64) -> Result<Self, MeasureError> {
        if n == 0 || self.level % n != 0 {
            return Err(MeasureError::FiniteLevel(format!("{n} does not divide {}", self.level)));
        }
        let mut masses = vec![0u64; n as usize];
        for (x, v) in self.masses.iter().enumerate() {
            let slot = &mut masses[x % n as usize];
            *slot = ((*slot as u128 + *v as u128) % self.modulus as u128) as u64;
        }
        Ok(Self { level: n, modulus: self.modulus, masses })
    }

    /// Whether `coarser` is this table pushed down to its level.
    pub fn refines(&self, coarser: &Self) -> bool {
        self.modulus == coarser.modulus
            && self.coarsen(coarser.level).is_ok_and(|c| c.masses == coarser.masses)
    }

    pub fn total_mass(&self) -> u64 {
        self.masses
            .iter()
            .fold(0u128, |acc, v| (acc + *v as u128) % self.modulus as u128) as u64
    }
}

/// Values mod `ell^exp` of a measure on the cosets of `level Ẑ`, as seen
/// by one prime of the value ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeComponent {
    pub ell: u64,
    pub exp: u32,
    pub level: u64,
    pub table: Vec<BigInt>,
}

impl PrimeComponent {
    /// Reduces exact masses `f(x)`, `0 <= x < level`, modulo `ell^exp`.
    pub fn from_masses(
        ell: u64,
        exp: u32,
        level: u64,
        f: impl Fn(u64) -> Rational,
    ) -> Result<Self, MeasureError> {
        let modulus = BigInt::from(ell).pow(exp);
        let table = (0..level)
            .map(|x| {
                let q = f(x);
                reduce_mod(&q, &modulus).ok_or_else(|| {
                    MeasureError::FiniteLevel(format!("mass {q} at {x} is not {ell}-integral"))
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { ell, exp, level, table })
    }
}

pub(crate) fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Glues per-prime value tables into one table with values in `Z/M` by the
/// Chinese remainder theorem. Each prime power of `M` needs a component at
/// a level divisible by `N` and with at least that many digits.
pub fn finite_level(
    components: &[PrimeComponent],
    n: u64,
    m: u64,
) -> Result<FiniteLevelMeasure, MeasureError> {
    if n == 0 || m == 0 {
        return Err(MeasureError::FiniteLevel("N and M must be positive".into()));
    }
    let mut masses = vec![BigInt::zero(); n as usize];
    let mut acc_mod = BigInt::from(1);
    for (ell, e) in factor(m) {
        let comp = components
            .iter()
            .find(|c| c.ell == ell && c.exp >= e && c.level % n == 0 && c.table.len() as u64 == c.level)
            .ok_or(MeasureError::MissingPrime(ell))?;
        let q = BigInt::from(ell).pow(e);
        let mut local = vec![BigInt::zero(); n as usize];
        for (x, v) in comp.table.iter().enumerate() {
            let slot = &mut local[x % n as usize];
            *slot = (&*slot + v).mod_floor(&q);
        }
        // x ≡ masses mod acc_mod, x ≡ local mod q
        let inv = crate::exact::rational::mod_inverse(&acc_mod, &q).expect("coprime prime powers");
        for (cur, loc) in masses.iter_mut().zip(&local) {
            let t = ((loc - &*cur) * &inv).mod_floor(&q);
            *cur = &*cur + &acc_mod * t;
        }
        acc_mod *= q;
    }
    Ok(FiniteLevelMeasure {
        level: n,
        modulus: m,
        masses: masses.iter().map(|v| v.to_u64().unwrap()).collect(),
    })
}

/// The regularized Bernoulli distribution:
/// `E(x + L Ẑ) = ({x/L} - 1/2) - c ({c^-1 x / L} - 1/2)`.
pub fn bernoulli_distribution_mass(x: i64, l: u64, c: i64) -> Rational {
    let lb = BigInt::from(l);
    let inv = crate::exact::rational::mod_inverse(&BigInt::from(c), &lb)
        .expect("c must be prime to the level");
    let x0 = BigInt::from(x).mod_floor(&lb);
    let y = (&inv * &x0).mod_floor(&lb);
    let half = rat(1, 2);
    let l_r = Rational::from_integer(lb);
    (Rational::from_integer(x0) / &l_r - &half) - int(c) * (Rational::from_integer(y) / &l_r - &half)
}

/// Masses of `x + N Ẑ`, `0 <= x < N`, for the Hurwitz measure attached to
/// `(a, m, c)`: the regularized Bernoulli distribution restricted to
/// `a + m Ẑ`, plus the point masses that account for `a` lying outside
/// `(0, m)`.
pub fn hurwitz_adelic_masses(a: i64, m: i64, c: i64, n: u64) -> Vec<Rational> {
    let mm = m as u64;
    let l = mm.lcm(&n);
    let a0 = a.rem_euclid(m);
    let mut out = vec![Rational::zero(); n as usize];
    let mut y = a0 as u64;
    while y < l {
        out[(y % n) as usize] += bernoulli_distribution_mass(y as i64, l, c);
        y += mm;
    }
    let shifts = (a - a0) / m;
    let mut point = |y: i64, w: Rational| {
        out[y.rem_euclid(n as i64) as usize] += w;
    };
    let (range, sign) = if shifts >= 0 { (0..shifts, 1) } else { (shifts..0, -1) };
    for i in range {
        let y = a0 + i * m;
        point(y, int(sign));
        point(c * y, int(-sign * c));
    }
    out
}

pub fn hurwitz_adelic_mass(a: i64, m: i64, c: i64, x: u64, n: u64) -> Rational {
    hurwitz_adelic_masses(a, m, c, n)[(x % n) as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_assembly() {
        let two = PrimeComponent { ell: 2, exp: 2, level: 6, table: (0..6).map(BigInt::from).collect() };
        let three = PrimeComponent { ell: 3, exp: 1, level: 6, table: vec![BigInt::from(1); 6] };
        let t = finite_level(&[two.clone(), three.clone()], 6, 12).unwrap();
        for (x, v) in t.masses.iter().enumerate() {
            assert_eq!(v % 4, x as u64 % 4);
            assert_eq!(v % 3, 1);
        }
        let coarse = finite_level(&[two.clone(), three], 3, 12).unwrap();
        assert!(t.refines(&coarse));
        assert!(matches!(finite_level(&[two], 6, 12), Err(MeasureError::MissingPrime(3))));
        let trivial = finite_level(&[], 1, 1).unwrap();
        assert_eq!(trivial.masses, vec![0]);
    }

    #[test]
    fn distribution_is_additive() {
        let c = 7;
        for l in [3u64, 4, 12] {
            for x in 0..l as i64 {
                let fine: Rational = (0..5)
                    .map(|i| bernoulli_distribution_mass(x + i * l as i64, 5 * l, c))
                    .sum();
                assert_eq!(fine, bernoulli_distribution_mass(x, l, c));
            }
        }
    }

    #[test]
    fn shifted_a_changes_only_point_masses() {
        // total mass must be B_1(a/m)(1 - c)
        for a in [-5i64, -2, 1, 4, 7, 10] {
            let masses = hurwitz_adelic_masses(a, 3, 7, 9);
            let total: Rational = masses.iter().cloned().sum();
            let b1 = rat(a, 3) - rat(1, 2);
            assert_eq!(total, b1 * int(1 - 7), "a = {a}");
        }
    }

    #[test]
    fn json_shape() {
        let t = FiniteLevelMeasure { level: 2, modulus: 5, masses: vec![1, 4] };
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"N":2,"M":5,"masses":[1,4]}"#);
    }
}
