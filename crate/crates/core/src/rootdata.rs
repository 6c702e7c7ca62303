//! Weight-lattice arithmetic in the `L`-basis, organised into blocks, one per
//! simple or central factor of the compact group `K`.
//!
//! Every coordinate belongs to exactly one block. A block is a general-linear
//! factor (Weyl group permutes its coordinates), an orthogonal factor
//! `SO(dim)` (coordinates are the `⌊dim/2⌋` standard torus weights) or a
//! circle factor (a single coordinate with trivial Weyl group).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domains::Family;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum BlockKind {
    GeneralLinear,
    /// `SO(dim)`; the block holds `dim / 2` coordinates.
    Orthogonal {
        dim: usize,
    },
    Circle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    #[serde(flatten)]
    pub kind: BlockKind,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

/// Contiguous, disjoint, exhaustive blocks covering `0..total_len()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockStructure {
    blocks: Vec<Block>,
}

impl BlockStructure {
    /// Lays out blocks back to back. General-linear and circle blocks take
    /// their stated length; orthogonal blocks take `dim / 2` coordinates and
    /// the supplied length is ignored.
    pub fn new(layout: &[(BlockKind, usize)]) -> Self {
        let mut start = 0;
        let blocks = layout
            .iter()
            .map(|&(kind, len)| {
                let len = match kind {
                    BlockKind::GeneralLinear => len,
                    BlockKind::Orthogonal { dim } => dim / 2,
                    BlockKind::Circle => 1,
                };
                let b = Block { kind, start, len };
                start += len;
                b
            })
            .collect();
        BlockStructure { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn total_len(&self) -> usize {
        self.blocks.last().map_or(0, |b| b.start + b.len)
    }

    /// Positive roots of `K` in this layout.
    pub fn compact_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.total_len();
        let mut roots = Vec::new();
        for b in &self.blocks {
            let r = b.range();
            match b.kind {
                BlockKind::GeneralLinear => {
                    for i in r.clone() {
                        for j in i + 1..r.end {
                            roots.push(unit_combo(n, &[(i, 1), (j, -1)]));
                        }
                    }
                }
                BlockKind::Orthogonal { dim } => {
                    for i in r.clone() {
                        for j in i + 1..r.end {
                            roots.push(unit_combo(n, &[(i, 1), (j, -1)]));
                            roots.push(unit_combo(n, &[(i, 1), (j, 1)]));
                        }
                        if dim % 2 == 1 {
                            roots.push(unit_combo(n, &[(i, 1)]));
                        }
                    }
                }
                BlockKind::Circle => {}
            }
        }
        roots
    }
}

fn unit_combo(n: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

/// Integer weight in the `L`-basis together with its block layout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    coords: Vec<i64>,
    blocks: BlockStructure,
}

impl WeightVector {
    pub fn new(coords: Vec<i64>, blocks: BlockStructure) -> Result<Self> {
        if coords.len() != blocks.total_len() {
            return Err(Error::StructureMismatch(format!("{} coordinates for a layout of {}", coords.len(), blocks.total_len())));
        }
        Ok(WeightVector { coords, blocks })
    }

    pub fn zero(blocks: BlockStructure) -> Self {
        WeightVector { coords: vec![0; blocks.total_len()], blocks }
    }

    /// `L_i` for coordinate index `i`.
    pub fn basis(blocks: BlockStructure, i: usize) -> Self {
        let mut w = WeightVector::zero(blocks);
        w.coords[i] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn blocks(&self) -> &BlockStructure {
        &self.blocks
    }

    pub fn block_coords(&self, block: &Block) -> &[i64] {
        &self.coords[block.range()]
    }

    pub fn scaled(&self, k: i64) -> Self {
        WeightVector { coords: self.coords.iter().map(|c| c * k).collect(), blocks: self.blocks.clone() }
    }

    pub fn neg(&self) -> Self {
        self.scaled(-1)
    }

    pub fn add(&self, other: &WeightVector) -> Result<Self> {
        self.check_same(other)?;
        Ok(WeightVector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(), blocks: self.blocks.clone() })
    }

    pub fn sub(&self, other: &WeightVector) -> Result<Self> {
        self.add(&other.neg())
    }

    fn check_same(&self, other: &WeightVector) -> Result<()> {
        if self.blocks != other.blocks {
            return Err(Error::StructureMismatch(format!("{self} vs {other}")));
        }
        Ok(())
    }
}

impl fmt::Display for WeightVector {
    /// `(a,b;c,d)`, with `;` separating blocks.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (bi, b) in self.blocks.blocks().iter().enumerate() {
            if bi > 0 {
                write!(f, ";")?;
            }
            for (k, c) in self.block_coords(b).iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, ")")
    }
}

/// Euclidean pairing of `L`-coordinates.
pub fn inner(a: &WeightVector, b: &WeightVector) -> Result<i64> {
    a.check_same(b)?;
    Ok(a.coords.iter().zip(&b.coords).map(|(x, y)| x * y).sum())
}

/// The highest root `μ` of `g` in the family's coordinates. For the polydisk
/// this is the sum of the highest roots of the `sl(2)` factors.
pub fn highest_root(family: &Family) -> WeightVector {
    let blocks = family.block_structure();
    let n = blocks.total_len();
    let coords = match *family {
        Family::I { .. } => unit_combo(n, &[(0, 1), (n - 1, -1)]),
        Family::II { .. } => unit_combo(n, &[(0, 1), (1, 1)]),
        Family::III { .. } => unit_combo(n, &[(0, 2)]),
        // circle coordinate L_0 first, then L_1
        Family::IV { .. } => unit_combo(n, &[(0, 1), (1, 1)]),
        Family::Poly { n: factors } => {
            let terms: Vec<(usize, i64)> = (0..factors).flat_map(|k| [(2 * k, 1), (2 * k + 1, -1)]).collect();
            unit_combo(n, &terms)
        }
    };
    WeightVector { coords, blocks }
}

/// Longest element of the compact Weyl group, applied blockwise.
pub fn block_w0(w: &WeightVector) -> WeightVector {
    let mut coords = w.coords.clone();
    for b in w.blocks.blocks() {
        let r = b.range();
        match b.kind {
            BlockKind::GeneralLinear => coords[r].reverse(),
            BlockKind::Orthogonal { dim } => {
                let rank = b.len;
                // w0 = -1 except for D_r with r odd, where the last sign survives
                let keep_last = dim % 2 == 0 && rank % 2 == 1 && rank > 1;
                let end = if keep_last { r.end - 1 } else { r.end };
                for c in &mut coords[r.start..end] {
                    *c = -*c;
                }
            }
            BlockKind::Circle => {}
        }
    }
    WeightVector { coords, blocks: w.blocks.clone() }
}

/// Whether `w` lies in the closed positive chamber of `K`.
pub fn is_dominant(w: &WeightVector) -> bool {
    w.blocks.blocks().iter().all(|b| {
        let c = w.block_coords(b);
        match b.kind {
            BlockKind::GeneralLinear => c.windows(2).all(|p| p[0] >= p[1]),
            BlockKind::Orthogonal { dim } => {
                let r = c.len();
                if r == 0 {
                    return true;
                }
                if dim % 2 == 1 {
                    c.windows(2).all(|p| p[0] >= p[1]) && c[r - 1] >= 0
                } else if r == 1 {
                    true
                } else {
                    c[..r - 1].windows(2).all(|p| p[0] >= p[1]) && c[r - 2] >= c[r - 1].abs()
                }
            }
            BlockKind::Circle => true,
        }
    })
}

/// Whether `a - b` is a nonnegative integer combination of positive compact
/// roots. Assumes `a - b` lies in the compact root lattice when nonzero.
pub fn dominates(a: &WeightVector, b: &WeightVector) -> Result<bool> {
    let diff = a.sub(b)?;
    Ok(diff.blocks.blocks().iter().all(|blk| {
        let v = diff.block_coords(blk);
        match blk.kind {
            BlockKind::Circle => v[0] == 0,
            BlockKind::GeneralLinear => {
                let mut sum = 0;
                for &x in v {
                    sum += x;
                    if sum < 0 {
                        return false;
                    }
                }
                sum == 0
            }
            BlockKind::Orthogonal { dim } => {
                let r = v.len();
                let partial: Vec<i64> = v
                    .iter()
                    .scan(0, |acc, &x| {
                        *acc += x;
                        Some(*acc)
                    })
                    .collect();
                if dim % 2 == 1 || r <= 1 {
                    // B_r: simple-root coefficients are the partial sums
                    partial.iter().all(|&s| s >= 0)
                } else {
                    // D_r: coefficients s_k (k <= r-2), (s_{r-1} - v_r)/2, s_r/2
                    partial[..r - 2].iter().all(|&s| s >= 0) && partial[r - 2] - v[r - 1] >= 0 && partial[r - 1] >= 0
                }
            }
        }
    }))
}

/// Closed-form root system of `g`, all roots.
pub fn roots_of_g(family: &Family) -> Vec<Vec<i64>> {
    let n = family.block_structure().total_len();
    let mut roots = Vec::new();
    let mut push_pm = |terms: &[(usize, i64)]| {
        let r = unit_combo(n, terms);
        roots.push(r.iter().map(|x| -x).collect());
        roots.push(r);
    };
    match *family {
        Family::I { .. } => {
            for i in 0..n {
                for j in i + 1..n {
                    push_pm(&[(i, 1), (j, -1)]);
                }
            }
        }
        Family::II { .. } | Family::III { .. } | Family::IV { .. } => {
            for i in 0..n {
                for j in i + 1..n {
                    push_pm(&[(i, 1), (j, -1)]);
                    push_pm(&[(i, 1), (j, 1)]);
                }
            }
            match *family {
                Family::III { .. } => (0..n).for_each(|i| push_pm(&[(i, 2)])),
                // so(n+2) is of type B when n is odd
                Family::IV { n: dim } if dim % 2 == 1 => (0..n).for_each(|i| push_pm(&[(i, 1)])),
                _ => {}
            }
        }
        Family::Poly { n: factors } => {
            for k in 0..factors {
                push_pm(&[(2 * k, 1), (2 * k + 1, -1)]);
            }
        }
    }
    roots
}

/// Positivity: first nonzero coordinate is positive.
pub fn is_positive(root: &[i64]) -> bool {
    root.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Positive roots of `g` whose root spaces lie outside `k`.
pub fn noncompact_positive_roots(family: &Family) -> Vec<Vec<i64>> {
    let compact = family.block_structure().compact_positive_roots();
    roots_of_g(family).into_iter().filter(|r| is_positive(r) && !compact.contains(r)).collect()
}
