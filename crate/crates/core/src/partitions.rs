//! Integer partitions and the Schur-functor bookkeeping built on them.
//!
//! Everything here is exact. Dimensions are returned as [`BigUint`] so that
//! large sweeps never overflow.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on the parts, so sorting in reverse
/// yields the canonical (lexicographically decreasing) order used in reports.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Builds a partition from any sequence, dropping zero parts. Panics if the
    /// remaining parts are not weakly decreasing.
    pub fn from_padded(parts: &[u32]) -> Self {
        let trimmed: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        Partition::new(trimmed).expect("padded parts must be weakly decreasing")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), with zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `len` entries. Requires `len >= self.len()`.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.len(), "cannot pad {self} to length {len}");
        (0..len).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn is_even_rows(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    pub fn is_even_cols(&self) -> bool {
        self.conjugate().is_even_rows()
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    fn hook(&self, conj: &Partition, i: usize, j: usize) -> u64 {
        let arm = self.part(i) as u64 - j as u64 - 1;
        let leg = conj.part(j) as u64 - i as u64 - 1;
        arm + leg + 1
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `total` with at most `max_len` parts, each at most
/// `max_part`, in lexicographically decreasing order.
pub fn gen_partitions(total: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(rest: u32, slots: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 || (slots as u64) * (cap as u64) < rest as u64 {
            return;
        }
        for first in (1..=cap.min(rest)).rev() {
            prefix.push(first);
            rec(rest - first, slots - 1, first, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    rec(total, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the Schur functor `S_λ` applied to an `m`-dimensional space,
/// by the hook-content formula. Zero when `λ` has more than `m` parts.
pub fn schur_dim(lambda: &Partition, m: usize) -> BigUint {
    if lambda.len() > m {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            // m + j - i > 0 because i < len(λ) <= m
            num *= BigUint::from((m + j - i) as u64);
            den *= BigUint::from(lambda.hook(&conj, i, j));
        }
    }
    num / den
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Dimension of `Sym^s` of a `dim`-dimensional space.
pub fn sym_power_dim(dim: u64, s: u64) -> BigUint {
    if dim == 0 {
        return if s == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(dim + s - 1, s)
}

/// Compositions of `total` into exactly `parts` nonnegative entries, in
/// lexicographically decreasing order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=rest).rev() {
            prefix.push(first);
            rec(rest - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Counts semistandard tableaux of shape `lambda` with entries in 1..=m by
    /// filling cells in reading order.
    fn count_ssyt(lambda: &[u32], m: u32) -> u64 {
        let cells: Vec<(usize, usize)> = lambda.iter().enumerate().flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j))).collect();
        let mut grid: Vec<Vec<u32>> = lambda.iter().map(|&r| vec![0; r as usize]).collect();

        fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, m: u32) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=m {
                grid[i][j] = v;
                total += fill(k + 1, cells, grid, m);
            }
            grid[i][j] = 0;
            total
        }

        fill(0, &cells, &mut grid, m)
    }

    fn count_partitions(n: u32, max: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| count_partitions(n - k, k)).sum()
    }

    #[test]
    fn gen_partitions_examples() {
        assert_eq!(gen_partitions(4, 2, 4), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(gen_partitions(0, 5, 5), vec![Partition::empty()]);
        assert_eq!(gen_partitions(6, 3, 3), vec![p(&[3, 3]), p(&[3, 2, 1]), p(&[2, 2, 2])]);
        assert!(gen_partitions(5, 1, 4).is_empty());
    }

    #[test]
    fn gen_partitions_matches_brute_force_tuples() {
        // every weakly decreasing tuple of length <= 3 with entries <= 3 summing to 6
        let mut brute = Vec::new();
        for a in 0..=3u32 {
            for b in 0..=a {
                for c in 0..=b {
                    if a + b + c == 6 {
                        brute.push(Partition::from_padded(&[a, b, c]));
                    }
                }
            }
        }
        brute.sort();
        brute.reverse();
        assert_eq!(gen_partitions(6, 3, 3), brute);
    }

    #[test]
    fn gen_partitions_counts() {
        for n in 0..=20 {
            let got = gen_partitions(n, n as usize, n).len() as u64;
            assert_eq!(got, count_partitions(n, n), "p({n})");
        }
    }

    #[test]
    fn canonical_order_is_strictly_decreasing() {
        let all = gen_partitions(9, 9, 9);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn conjugate_is_involution_up_to_twelve() {
        for n in 0..=12 {
            for lam in gen_partitions(n, n as usize, n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().weight(), n);
            }
        }
    }

    #[test]
    fn parity_predicates() {
        assert!(p(&[4, 2]).is_even_rows());
        assert!(!p(&[3, 1]).is_even_rows());
        assert!(p(&[2, 2, 1, 1]).is_even_cols());
        assert!(!p(&[3, 1]).is_even_cols());
        assert!(Partition::empty().is_even_rows() && Partition::empty().is_even_cols());
    }

    #[test]
    fn schur_dim_examples() {
        assert_eq!(schur_dim(&p(&[1]), 5), BigUint::from(5u32));
        assert_eq!(schur_dim(&p(&[2, 1]), 3), BigUint::from(8u32));
        assert_eq!(schur_dim(&p(&[1, 1, 1]), 4), BigUint::from(4u32));
        assert_eq!(schur_dim(&Partition::empty(), 3), BigUint::one());
        assert_eq!(schur_dim(&p(&[1, 1, 1]), 2), BigUint::zero());
    }

    #[test]
    fn schur_dim_counts_tableaux() {
        for n in 0..=6 {
            for lam in gen_partitions(n, n as usize, n) {
                for m in 1..=5usize {
                    let expected = if lam.len() > m { 0 } else { count_ssyt(lam.parts(), m as u32) };
                    assert_eq!(schur_dim(&lam, m), BigUint::from(expected), "{lam} m={m}");
                }
            }
        }
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn binomials_and_compositions() {
        assert_eq!(binomial(7, 2), BigUint::from(21u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(sym_power_dim(6, 2), BigUint::from(21u32));
        assert_eq!(sym_power_dim(4, 0), BigUint::one());
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(3, 4).len(), 20);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[3, 1, 1]).to_string(), "(3,1,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }
}
