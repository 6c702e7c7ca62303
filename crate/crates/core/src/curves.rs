//! Holomorphic one-forms on products of hyperbolic curves and on their free
//! quotients.

use crate::error::{Error, Result};

/// Genera of the factors `C_1 × ... × C_n`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveProduct {
    genera: Vec<u64>,
}

impl CurveProduct {
    pub fn new(genera: Vec<u64>) -> Result<Self> {
        if let Some(&g) = genera.iter().find(|&&g| g < 2) {
            return Err(Error::GenusTooSmall(g));
        }
        Ok(CurveProduct { genera })
    }

    pub fn genera(&self) -> &[u64] {
        &self.genera
    }
}

/// `h^0(Ω^1)` of the product: one-forms pull back from the factors, and each
/// factor contributes its genus.
pub fn product_one_forms(cp: &CurveProduct) -> u64 {
    cp.genera.iter().sum()
}

/// Genus of `C/G` for a free action of a group of order `d` on a curve of
/// genus `g`, from `2g - 2 = d (2g' - 2)`.
pub fn quotient_genus(g: u64, d: u64) -> Result<u64> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if d == 0 {
        return Err(Error::ZeroOrder);
    }
    if !(g - 1).is_multiple_of(d) {
        return Err(Error::NoFreeAction { genus: g, order: d });
    }
    Ok(1 + (g - 1) / d)
}
