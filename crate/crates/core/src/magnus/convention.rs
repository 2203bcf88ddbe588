use std::fmt;
use std::str::FromStr;

use crate::exact::rational::factorial;
use crate::exact::{Rational, Scalar};

use super::transforms::li_from_elli;
use super::MagnusError;

/// How the coefficients in the two path conventions correspond. The left
/// column is the logarithmic/flat normal form, the right the
/// polylogarithmic characters of a path.
pub const SIGN_DICTIONARY: &[(&str, &str)] = &[
    ("u_0", "rho"),
    ("u_k", "(-1)^(k-1) li_k"),
    ("b_k", "(-1)^(k-1) Li_k"),
    ("Li_k", "(-1)^k ScriptLi_k"),
    ("chitilde_k / (k-1)!", "(-1)^(k-1) Li_k"),
    ("-chitilde_k / (k-1)!", "ScriptLi_k"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConventionKind {
    /// `Li_k = (-1)^k ℒi_k`, in either direction.
    LiSign,
    /// `χ̃_k = (-1)^(k-1) (k-1)! Li_k`.
    ChitildeFromLi,
    /// `χ̃_k = (-1)^(k+1) (k-1)! sum_i ρ^(k-i)/(k+1-i)! ℓi_i`.
    ChitildeFromElli,
    /// `ℒi_k = -χ̃_k / (k-1)!`.
    ScriptLiFromChitilde,
}

impl ConventionKind {
    pub const ALL: [ConventionKind; 4] = [
        ConventionKind::LiSign,
        ConventionKind::ChitildeFromLi,
        ConventionKind::ChitildeFromElli,
        ConventionKind::ScriptLiFromChitilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConventionKind::LiSign => "li_sign",
            ConventionKind::ChitildeFromLi => "chitilde_from_li",
            ConventionKind::ChitildeFromElli => "chitilde_from_elli",
            ConventionKind::ScriptLiFromChitilde => "scriptli_from_chitilde",
        }
    }
}

impl fmt::Display for ConventionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConventionKind {
    type Err = MagnusError;
    fn from_str(s: &str) -> Result<Self, MagnusError> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| MagnusError::UnknownConvention(s.to_string()))
    }
}

fn sign<T: Scalar>(odd: bool) -> T {
    if odd {
        -T::one()
    } else {
        T::one()
    }
}

/// Applies one conversion at index `k`. `chitilde_from_elli` reads the whole
/// sequence `ℓi_1..ℓi_k` and `rho`; the other kinds read a single value.
pub fn convention_convert<T: Scalar>(
    kind: ConventionKind,
    k: usize,
    values: &[T],
    rho: &T,
) -> Result<T, MagnusError> {
    if k == 0 {
        return Err(MagnusError::ZeroIndex);
    }
    let want = if kind == ConventionKind::ChitildeFromElli { k } else { 1 };
    if values.len() != want {
        return Err(MagnusError::Arity { kind: kind.name(), k, want, got: values.len() });
    }
    let fact = T::from_rational(&Rational::from_integer(factorial(k as u32 - 1)));
    Ok(match kind {
        ConventionKind::LiSign => sign::<T>(k % 2 == 1) * values[0].clone(),
        ConventionKind::ChitildeFromLi => sign::<T>(k % 2 == 0) * fact * values[0].clone(),
        ConventionKind::ChitildeFromElli => {
            let li = li_from_elli(rho, values);
            sign::<T>(k % 2 == 0) * fact * li[k - 1].clone()
        }
        ConventionKind::ScriptLiFromChitilde => {
            let inv = T::from_rational(&Rational::new(1.into(), factorial(k as u32 - 1)));
            -(values[0].clone() * inv)
        }
    })
}
