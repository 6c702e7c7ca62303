//! Closed-form decompositions of `Sym^s` of each isotropy module into
//! irreducible `K`-modules.
//!
//! * type I, Cauchy: `Sym^s(V_p^* ⊗ V_q) = ⊕_{λ ⊢ s} S_λ V_p^* ⊗ S_λ V_q`
//! * type II, Littlewood: `Sym^s(Λ² V) = ⊕ S_λ V`, `λ ⊢ 2s` with even columns
//! * type III, Littlewood: `Sym^s(Sym² V) = ⊕ S_λ V`, `λ ⊢ 2s` with even rows
//! * type IV: `Sym^s(C^n) = ⊕_j H^{s-2j}`, spherical harmonics
//! * polydisk: monomials in the `n` weight lines
//!
//! All five are multiplicity free. Weights follow the `m^-` orientation, so
//! for types II and III the summand `S_λ` appears through its dual.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::domains::{DomainSpec, Family};
use crate::partitions::{binomial, compositions, gen_partitions, schur_dim, Partition};
use crate::rootdata::{block_w0, BlockStructure, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SummandLabel {
    Partition(Partition),
    /// Harmonic index `j`: the summand `H^{s-2j}` of type IV.
    Harmonic(u32),
    /// Exponents of the polydisk weight lines.
    Exponents(Vec<u32>),
}

impl fmt::Display for SummandLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandLabel::Partition(p) => write!(f, "{p}"),
            SummandLabel::Harmonic(j) => write!(f, "j={j}"),
            SummandLabel::Exponents(e) => {
                let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                write!(f, "e=({})", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub label: SummandLabel,
    pub dim: BigUint,
    pub highest: WeightVector,
    pub lowest: WeightVector,
    pub multiplicity: u32,
}

impl Summand {
    fn new(label: SummandLabel, dim: BigUint, highest: WeightVector) -> Self {
        let lowest = block_w0(&highest);
        Summand { label, dim, highest, lowest, multiplicity: 1 }
    }
}

fn weight(coords: Vec<i64>, blocks: &BlockStructure) -> WeightVector {
    WeightVector::new(coords, blocks.clone()).expect("coordinate count matches layout")
}

/// `(-λ_m, ..., -λ_1)`: highest weight of `S_λ V^*` for `dim V = m`.
fn dual_highest(lambda: &Partition, m: usize) -> Vec<i64> {
    lambda.padded(m).iter().rev().map(|&x| -(x as i64)).collect()
}

/// `Sym^s(V_p^* ⊗ V_q)`.
pub fn sym_bifund(s: u32, p: usize, q: usize) -> Vec<Summand> {
    let blocks = Family::I { p, q }.block_structure();
    gen_partitions(s, p.min(q), s)
        .into_iter()
        .map(|lambda| {
            let mut coords = dual_highest(&lambda, p);
            coords.extend(lambda.padded(q).iter().map(|&x| x as i64));
            let dim = schur_dim(&lambda, p) * schur_dim(&lambda, q);
            Summand::new(SummandLabel::Partition(lambda), dim, weight(coords, &blocks))
        })
        .collect()
}

fn sym_single_block(s: u32, n: usize, keep: impl Fn(&Partition) -> bool) -> Vec<Summand> {
    let blocks = Family::III { n }.block_structure();
    gen_partitions(2 * s, n, 2 * s)
        .into_iter()
        .filter(|l| keep(l))
        .map(|lambda| {
            let coords = dual_highest(&lambda, n);
            let dim = schur_dim(&lambda, n);
            Summand::new(SummandLabel::Partition(lambda), dim, weight(coords, &blocks))
        })
        .collect()
}

/// `Sym^s(Sym² V)` for `dim V = n`.
pub fn sym_sym2(s: u32, n: usize) -> Vec<Summand> {
    sym_single_block(s, n, Partition::is_even_rows)
}

/// `Sym^s(Λ² V)` for `dim V = n`.
pub fn sym_wedge2(s: u32, n: usize) -> Vec<Summand> {
    sym_single_block(s, n, Partition::is_even_cols)
}

/// Dimension of the degree-`d` harmonics on `C^n`.
pub fn harmonic_dim(d: u32, n: usize) -> BigUint {
    let (d, n) = (d as u64, n as u64);
    let top = binomial(n + d - 1, d);
    if d < 2 {
        top
    } else {
        top - binomial(n + d - 3, d - 2)
    }
}

/// `Sym^s(C^n ⊗ χ)` for the type IV isotropy module, `n >= 3`.
pub fn sym_type_iv(s: u32, n: usize) -> Vec<Summand> {
    assert!(n >= 3, "type IV requires n >= 3");
    let blocks = Family::IV { n }.block_structure();
    (0..=s / 2)
        .map(|j| {
            let d = s - 2 * j;
            let mut coords = vec![0i64; blocks.total_len()];
            coords[0] = -(s as i64);
            coords[1] = d as i64;
            Summand::new(SummandLabel::Harmonic(j), harmonic_dim(d, n), weight(coords, &blocks))
        })
        .collect()
}

/// `Sym^s` of the sum of `n` weight lines `-L_{1_k} + L_{2_k}`.
pub fn sym_polydisk(s: u32, n: usize) -> Vec<Summand> {
    let blocks = Family::Poly { n }.block_structure();
    compositions(s, n)
        .into_iter()
        .map(|e| {
            let coords: Vec<i64> = e.iter().flat_map(|&x| [-(x as i64), x as i64]).collect();
            Summand::new(SummandLabel::Exponents(e), BigUint::from(1u32), weight(coords, &blocks))
        })
        .collect()
}

/// Decomposition of `Sym^s` of the isotropy module of `d`.
pub fn decompose(d: &DomainSpec, s: u32) -> Vec<Summand> {
    match d.family {
        Family::I { p, q } => sym_bifund(s, p, q),
        Family::II { n } => sym_wedge2(s, n),
        Family::III { n } => sym_sym2(s, n),
        Family::IV { n } => sym_type_iv(s, n),
        Family::Poly { n } => sym_polydisk(s, n),
    }
}

pub fn total_dim(summands: &[Summand]) -> BigUint {
    summands.iter().fold(BigUint::zero(), |acc, x| acc + &x.dim * x.multiplicity)
}
