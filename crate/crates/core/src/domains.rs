//! The five supported domain families and their isotropy modules.
//!
//! | family   | symmetric space                 | `g`        | `K`                   | isotropy module          |
//! |----------|---------------------------------|------------|-----------------------|--------------------------|
//! | `I(p,q)` | `SU(p,q)/S(U(p)×U(q))`          | `sl(p+q)`  | `S(GL_p×GL_q)`        | `V_p^* ⊠ V_q`            |
//! | `II(n)`  | `SO*(2n)/U(n)`                  | `so(2n)`   | `GL_n`                | `Λ² V_n`                 |
//! | `III(n)` | `Sp(2n,R)/U(n)`                 | `sp(2n)`   | `GL_n`                | `Sym² V_n`               |
//! | `IV(n)`  | `SO_0(2,n)/SO(2)×SO(n)`         | `so(n+2)`  | `SO_2×SO_n`           | `C^n ⊗ χ`                |
//! | `poly:n` | `SL(2,R)^n/U(1)^n`              | `sl(2)^n`  | `(C^*)^n`             | `n` weight lines         |
//!
//! Weights of the isotropy module are written in the `m^-` orientation: they
//! are the negatives of the noncompact positive roots of `g`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{highest_root, BlockKind, BlockStructure, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    I { p: usize, q: usize },
    II { n: usize },
    III { n: usize },
    IV { n: usize },
    Poly { n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::I { .. } => "I",
            Family::II { .. } => "II",
            Family::III { .. } => "III",
            Family::IV { .. } => "IV",
            Family::Poly { .. } => "poly",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (ok, bound) = match *self {
            Family::I { p, q } => (p >= 1 && q >= 1, "p >= 1 and q >= 1"),
            Family::II { n } => (n >= 2, "n >= 2"),
            Family::III { n } => (n >= 1, "n >= 1"),
            Family::IV { n } => (n >= 3, "n >= 3"),
            Family::Poly { n } => (n >= 1, "n >= 1"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ParamOutOfRange { family: self.name(), bound })
        }
    }

    pub fn block_structure(&self) -> BlockStructure {
        use BlockKind::*;
        match *self {
            Family::I { p, q } => BlockStructure::new(&[(GeneralLinear, p), (GeneralLinear, q)]),
            Family::II { n } | Family::III { n } => BlockStructure::new(&[(GeneralLinear, n)]),
            Family::IV { n } => BlockStructure::new(&[(Circle, 1), (Orthogonal { dim: n }, 0)]),
            Family::Poly { n } => {
                let layout: Vec<(BlockKind, usize)> = (0..n).flat_map(|_| [(GeneralLinear, 1), (GeneralLinear, 1)]).collect();
                BlockStructure::new(&layout)
            }
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            Family::I { p, q } => p.min(q),
            Family::II { n } => n / 2,
            Family::III { n } => n,
            Family::IV { .. } => 2,
            Family::Poly { n } => n,
        }
    }

    /// Complex dimension of the isotropy module.
    pub fn dim_m(&self) -> usize {
        match *self {
            Family::I { p, q } => p * q,
            Family::II { n } => n * (n - 1) / 2,
            Family::III { n } => n * (n + 1) / 2,
            Family::IV { n } => n,
            Family::Poly { n } => n,
        }
    }

    /// Threshold listed for the family in the vanishing table. Type III is
    /// stored as a lower bound; the polydisk has no vanishing range.
    pub fn paper_threshold(&self) -> PaperThreshold {
        match *self {
            Family::I { p, q } => PaperThreshold::Exact(p.min(q) as u32),
            Family::II { n } => PaperThreshold::Exact((n / 2) as u32),
            Family::III { n } => PaperThreshold::LowerBound((n / 2) as u32),
            Family::IV { .. } => PaperThreshold::Exact(2),
            Family::Poly { .. } => PaperThreshold::Exact(1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::I { p, q } => write!(f, "I:{p},{q}"),
            Family::II { n } => write!(f, "II:{n}"),
            Family::III { n } => write!(f, "III:{n}"),
            Family::IV { n } => write!(f, "IV:{n}"),
            Family::Poly { n } => write!(f, "poly:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `I:p,q` | `II:n` | `III:n` | `IV:n` | `poly:n`
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::DomainSyntax(s.to_string());
        let (kind, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let family = match kind.trim() {
            "I" => {
                let (p, q) = params.split_once(',').ok_or_else(bad)?;
                Family::I { p: num(p)?, q: num(q)? }
            }
            "II" => Family::II { n: num(params)? },
            "III" => Family::III { n: num(params)? },
            "IV" => Family::IV { n: num(params)? },
            k if k.eq_ignore_ascii_case("poly") => Family::Poly { n: num(params)? },
            _ => return Err(bad()),
        };
        Ok(family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum PaperThreshold {
    Exact(u32),
    /// Vanishing is asserted below this value; the criterion may give more.
    LowerBound(u32),
}

impl PaperThreshold {
    pub fn value(&self) -> u32 {
        match *self {
            PaperThreshold::Exact(v) | PaperThreshold::LowerBound(v) => v,
        }
    }
}

impl fmt::Display for PaperThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaperThreshold::Exact(v) => write!(f, "{v}"),
            PaperThreshold::LowerBound(v) => write!(f, ">={v}"),
        }
    }
}

/// A fully populated domain: layout, highest root and reference threshold.
///
/// The lattice `Γ`, the quotient `X` and its singularities play no role in
/// the computation and are not modelled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSpec {
    pub family: Family,
    pub rank: usize,
    pub dim_m: usize,
    pub blocks: BlockStructure,
    pub mu: WeightVector,
    pub paper_m: PaperThreshold,
    /// Set for the low-dimensional type IV cases that coincide with other families.
    pub warning: Option<&'static str>,
}

pub fn make_domain(family: Family) -> Result<DomainSpec> {
    family.validate()?;
    let warning = match family {
        Family::IV { n: 3 } => Some("IV:3 is isomorphic to III:2 (so(5) = sp(4))"),
        Family::IV { n: 4 } => Some("IV:4 is isomorphic to I:2,2 (so(6) = sl(4))"),
        _ => None,
    };
    Ok(DomainSpec {
        family,
        rank: family.rank(),
        dim_m: family.dim_m(),
        blocks: family.block_structure(),
        mu: highest_root(&family),
        paper_m: family.paper_threshold(),
        warning,
    })
}

impl DomainSpec {
    pub fn weight(&self, coords: Vec<i64>) -> WeightVector {
        WeightVector::new(coords, self.blocks.clone()).expect("coordinate count matches layout")
    }
}

/// Weights of the isotropy module, `m^-` orientation, one per basis vector.
pub fn tangent_weights(d: &DomainSpec) -> Vec<WeightVector> {
    let len = d.blocks.total_len();
    let combo = |terms: &[(usize, i64)]| {
        let mut c = vec![0i64; len];
        for &(i, x) in terms {
            c[i] += x;
        }
        d.weight(c)
    };
    let mut out = Vec::with_capacity(d.dim_m);
    match d.family {
        Family::I { p, q } => {
            for i in 0..p {
                for j in 0..q {
                    out.push(combo(&[(i, -1), (p + j, 1)]));
                }
            }
        }
        Family::II { n } => {
            for i in 0..n {
                for j in i + 1..n {
                    out.push(combo(&[(i, -1), (j, -1)]));
                }
            }
        }
        Family::III { n } => {
            for i in 0..n {
                for j in i..n {
                    out.push(combo(&[(i, -1), (j, -1)]));
                }
            }
        }
        Family::IV { n } => {
            for i in 1..=n / 2 {
                out.push(combo(&[(0, -1), (i, 1)]));
                out.push(combo(&[(0, -1), (i, -1)]));
            }
            if n % 2 == 1 {
                out.push(combo(&[(0, -1)]));
            }
        }
        Family::Poly { n } => {
            for k in 0..n {
                out.push(combo(&[(2 * k, -1), (2 * k + 1, 1)]));
            }
        }
    }
    out
}
