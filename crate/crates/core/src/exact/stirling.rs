//! Stirling numbers: the change of basis between power moments and
//! binomial (Mahler) moments.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of the falling factorial `b(b-1)...(b-j+1)`, one row at a
/// time. Row `j` has `j + 1` entries indexed by the power of `b`.
#[derive(Debug, Clone)]
pub struct FallingFactorialRows {
    row: Vec<BigInt>,
    j: u32,
}

impl Default for FallingFactorialRows {
    fn default() -> Self {
        Self::new()
    }
}

impl FallingFactorialRows {
    pub fn new() -> Self {
        Self { row: vec![BigInt::one()], j: 0 }
    }

    pub fn index(&self) -> u32 {
        self.j
    }

    pub fn current(&self) -> &[BigInt] {
        &self.row
    }

    /// Multiply the current row by `(b - j)`.
    pub fn advance(&mut self) {
        let j = BigInt::from(self.j);
        let mut next = vec![BigInt::zero(); self.row.len() + 1];
        for (n, c) in self.row.iter().enumerate() {
            next[n + 1] += c;
            next[n] -= c * &j;
        }
        self.row = next;
        self.j += 1;
    }
}

pub fn stirling_first_row(j: u32) -> Vec<BigInt> {
    let mut rows = FallingFactorialRows::new();
    for _ in 0..j {
        rows.advance();
    }
    rows.row
}

/// Signed Stirling number of the first kind: the coefficient of `b^n` in
/// the falling factorial of length `j`.
pub fn stirling_first_signed(j: u32, n: u32) -> BigInt {
    if n > j {
        return BigInt::zero();
    }
    stirling_first_row(j)[n as usize].clone()
}

pub fn stirling_second_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            // S(i+1, k) = k S(i, k) + S(i, k-1)
            next[k] += c * BigInt::from(k);
            next[k + 1] += c;
        }
        row = next;
    }
    row
}

/// Number of partitions of an `n`-set into `j` blocks.
pub fn stirling_second(n: u32, j: u32) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    stirling_second_row(n)[j as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn first_kind() {
        assert_eq!(stirling_first_signed(0, 0), b(1));
        assert_eq!(stirling_first_signed(3, 1), b(2));
        assert_eq!(stirling_first_signed(3, 2), b(-3));
        assert_eq!(stirling_first_signed(3, 3), b(1));
        assert_eq!(stirling_first_signed(4, 0), b(0));
        assert_eq!(stirling_first_row(4), vec![b(0), b(-6), b(11), b(-6), b(1)]);
    }

    #[test]
    fn second_kind() {
        assert_eq!(stirling_second(3, 2), b(3));
        assert_eq!(stirling_second(4, 2), b(7));
        assert_eq!(stirling_second(0, 0), b(1));
        assert_eq!(stirling_second(5, 0), b(0));
        for n in 0..10 {
            assert_eq!(stirling_second(n, n), b(1));
        }
    }

    /// Enumerate set partitions by restricted growth strings.
    fn count_partitions(n: usize, blocks: usize) -> u64 {
        fn go(pos: usize, n: usize, max: usize, blocks: usize) -> u64 {
            if pos == n {
                return (max == blocks) as u64;
            }
            (0..=max.min(blocks)).map(|c| go(pos + 1, n, max.max(c + 1), blocks)).sum()
        }
        if n == 0 {
            return (blocks == 0) as u64;
        }
        go(1, n, 1, blocks)
    }

    #[test]
    fn second_kind_matches_enumeration() {
        for n in 1..8 {
            for j in 0..=n {
                assert_eq!(stirling_second(n as u32, j as u32), b(count_partitions(n, j) as i64));
            }
        }
    }

    #[test]
    fn rows_are_inverse() {
        for n in 0..14u32 {
            let s1: Vec<Vec<BigInt>> = (0..=n).map(stirling_first_row).collect();
            let s2: Vec<Vec<BigInt>> = (0..=n).map(stirling_second_row).collect();
            for i in 0..=n as usize {
                for k in 0..=n as usize {
                    let mut acc = BigInt::zero();
                    for m in k..=i {
                        acc += &s1[i][m] * &s2[m][k];
                    }
                    assert_eq!(acc, b((i == k) as i64), "({i},{k})");
                }
            }
        }
    }
}
