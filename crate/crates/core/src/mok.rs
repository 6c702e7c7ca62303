//! Mok's pairing criterion on each summand and the resulting vanishing
//! thresholds.
//!
//! A summand with extremal weight `ω` is properly seminegative exactly when
//! `⟨ω, μ⟩ = 0`, where `μ` is the highest root of `g`. Whenever every summand
//! of `Sym^s` of the tangent module is properly seminegative, `Sym^s` of the
//! cotangent bundle has no sections, so the first `s >= 1` with a nonzero
//! pairing bounds the vanishing range.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domains::{DomainSpec, Family, PaperThreshold};
use crate::error::{Error, Result};
use crate::plethysm::{decompose, Summand};
use crate::rootdata::inner;

/// Which extremal weight enters the pairing.
///
/// `MMinusHighest` pairs the highest weight of the summand in the `m^-`
/// orientation; `MPlusLowest` pairs the lowest weight of the dual summand.
/// The two differ by a global sign and have the same zero set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    #[default]
    MMinusHighest,
    MPlusLowest,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::MMinusHighest => "m-minus-highest",
            Convention::MPlusLowest => "m-plus-lowest",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    ProperlySeminegative,
    NotProperlySeminegative,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::ProperlySeminegative => "properly-seminegative",
            Classification::NotProperlySeminegative => "not-properly-seminegative",
        })
    }
}

pub fn sigma(summand: &Summand, d: &DomainSpec, convention: Convention) -> i64 {
    let pairing = inner(&summand.highest, &d.mu).expect("summand built for this domain");
    match convention {
        Convention::MMinusHighest => pairing,
        // lowest weight of the dual is minus the highest weight
        Convention::MPlusLowest => -pairing,
    }
}

pub fn classify(sigma: i64) -> Classification {
    if sigma == 0 {
        Classification::ProperlySeminegative
    } else {
        Classification::NotProperlySeminegative
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredSummand {
    pub summand: Summand,
    pub sigma: i64,
    pub classification: Classification,
    pub note: Option<String>,
}

pub const STRICTLY_NEGATIVE: &str = "strictly negative";

/// Decomposes `Sym^s` and scores every summand.
pub fn score(d: &DomainSpec, s: u32, convention: Convention) -> Vec<ScoredSummand> {
    decompose(d, s)
        .into_iter()
        .map(|summand| {
            let sigma = sigma(&summand, d, convention);
            let note = match d.family {
                Family::Poly { .. } if sigma != 0 => Some(STRICTLY_NEGATIVE.to_string()),
                _ => None,
            };
            ScoredSummand { summand, sigma, classification: classify(sigma), note }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum Threshold {
    Found(u32),
    /// No summand with nonzero pairing for `1 <= s <= value`.
    NotFoundBelow(u32),
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Found(m) => write!(f, "{m}"),
            Threshold::NotFoundBelow(s) => write!(f, ">{s}"),
        }
    }
}

/// Threshold predicted by the shape of the first summand with a nonzero pairing.
pub fn closed_form_m(family: &Family) -> u32 {
    match *family {
        // first λ with length >= min(p,q)
        Family::I { p, q } => p.min(q) as u32,
        // first even-column λ with length >= n-1
        Family::II { n } => (n / 2) as u32,
        // first even-row λ of length n
        Family::III { n } => n as u32,
        // first j >= 1
        Family::IV { .. } => 2,
        Family::Poly { .. } => 1,
    }
}

/// Smallest `s` in `1..=s_max` whose decomposition has a summand with nonzero
/// pairing, cross-checked against [`closed_form_m`].
pub fn computed_m(d: &DomainSpec, s_max: u32) -> Result<Threshold> {
    let scan = (1..=s_max)
        .find(|&s| score(d, s, Convention::default()).iter().any(|x| x.sigma != 0))
        .map_or(Threshold::NotFoundBelow(s_max), Threshold::Found);
    let closed = closed_form_m(&d.family);
    let consistent = match scan {
        Threshold::Found(m) => m == closed,
        Threshold::NotFoundBelow(s) => closed > s,
    };
    if !consistent {
        return Err(Error::ThresholdDisagreement { domain: d.family.to_string(), scan: scan.to_string(), closed_form: closed });
    }
    Ok(scan)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    /// The computed threshold is at least the listed lower bound.
    ConsistentLowerBound,
    Mismatch,
    /// The scan stopped before the listed value could be reached.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::ConsistentLowerBound => "consistent-lower-bound",
            Verdict::Mismatch => "mismatch",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

pub fn verdict(computed: Threshold, paper: PaperThreshold) -> Verdict {
    match (paper, computed) {
        (PaperThreshold::Exact(m), Threshold::Found(c)) if c == m => Verdict::Match,
        (PaperThreshold::Exact(_), Threshold::Found(_)) => Verdict::Mismatch,
        (PaperThreshold::Exact(m), Threshold::NotFoundBelow(s)) if m <= s => Verdict::Mismatch,
        (PaperThreshold::Exact(_), Threshold::NotFoundBelow(_)) => Verdict::Inconclusive,
        (PaperThreshold::LowerBound(b), Threshold::Found(c)) if c >= b => Verdict::ConsistentLowerBound,
        (PaperThreshold::LowerBound(_), Threshold::Found(_)) => Verdict::Mismatch,
        // the true value exceeds s, so it is at least b once s + 1 >= b
        (PaperThreshold::LowerBound(b), Threshold::NotFoundBelow(s)) if s + 1 >= b => Verdict::ConsistentLowerBound,
        (PaperThreshold::LowerBound(_), Threshold::NotFoundBelow(_)) => Verdict::Inconclusive,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub s: u32,
    pub rows: Vec<ScoredSummand>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub domain: DomainSpec,
    pub convention: Convention,
    /// One entry for each `s` in `1..=s_max`.
    pub levels: Vec<Level>,
    pub m_computed: Threshold,
    pub m_paper: PaperThreshold,
    pub verdict: Verdict,
}

pub fn vanishing_report(d: &DomainSpec, s_max: u32, convention: Convention) -> Result<VanishingReport> {
    let m_computed = computed_m(d, s_max)?;
    let levels = (1..=s_max).map(|s| Level { s, rows: score(d, s, convention) }).collect();
    Ok(VanishingReport { domain: d.clone(), convention, levels, m_computed, m_paper: d.paper_m, verdict: verdict(m_computed, d.paper_m) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::make_domain;
    use crate::plethysm::SummandLabel;

    fn dom(s: &str) -> DomainSpec {
        make_domain(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn polydisk_scores() {
        for n in 1..=4 {
            let d = dom(&format!("poly:{n}"));
            for x in score(&d, 1, Convention::default()) {
                assert_eq!(x.sigma, -2);
                assert_eq!(x.note.as_deref(), Some(STRICTLY_NEGATIVE));
            }
            for x in score(&d, 3, Convention::default()) {
                let SummandLabel::Exponents(e) = &x.summand.label else { panic!() };
                assert_eq!(x.sigma, -2 * e.iter().sum::<u32>() as i64);
            }
        }
    }

    #[test]
    fn type_i_scores() {
        let d = dom("I:2,2");
        let rows = score(&d, 2, Convention::default());
        let got: Vec<(String, i64)> = rows.iter().map(|x| (x.summand.label.to_string(), x.sigma)).collect();
        assert_eq!(got, [("(2)".to_string(), 0), ("(1,1)".to_string(), -2)]);
    }

    #[test]
    fn classification_rule() {
        assert_eq!(classify(0), Classification::ProperlySeminegative);
        assert_eq!(classify(-2), Classification::NotProperlySeminegative);
        assert_eq!(classify(2), Classification::NotProperlySeminegative);
    }

    #[test]
    fn computed_m_examples() {
        assert_eq!(computed_m(&dom("I:2,3"), 4).unwrap(), Threshold::Found(2));
        assert_eq!(computed_m(&dom("II:6"), 4).unwrap(), Threshold::Found(3));
        assert_eq!(computed_m(&dom("III:4"), 5).unwrap(), Threshold::Found(4));
        assert_eq!(computed_m(&dom("III:4"), 3).unwrap(), Threshold::NotFoundBelow(3));
    }

    #[test]
    fn reports() {
        let r = vanishing_report(&dom("IV:9"), 4, Convention::default()).unwrap();
        assert_eq!((r.m_computed, r.verdict), (Threshold::Found(2), Verdict::Match));
        assert_eq!(r.levels.len(), 4);

        let r = vanishing_report(&dom("poly:3"), 3, Convention::default()).unwrap();
        assert_eq!((r.m_computed, r.verdict), (Threshold::Found(1), Verdict::Match));
        assert!(r.levels.iter().flat_map(|l| &l.rows).all(|x| x.sigma < 0 && x.note.is_some()));

        let r = vanishing_report(&dom("I:1,4"), 2, Convention::default()).unwrap();
        assert_eq!(r.m_computed, Threshold::Found(1));

        let r = vanishing_report(&dom("III:4"), 4, Convention::default()).unwrap();
        assert_eq!((r.m_computed, r.verdict), (Threshold::Found(4), Verdict::ConsistentLowerBound));
        assert_eq!(r.m_paper, PaperThreshold::LowerBound(2));
    }

    #[test]
    fn verdict_table() {
        use PaperThreshold::*;
        assert_eq!(verdict(Threshold::Found(3), Exact(3)), Verdict::Match);
        assert_eq!(verdict(Threshold::Found(2), Exact(3)), Verdict::Mismatch);
        assert_eq!(verdict(Threshold::NotFoundBelow(3), Exact(3)), Verdict::Mismatch);
        assert_eq!(verdict(Threshold::NotFoundBelow(2), Exact(3)), Verdict::Inconclusive);
        assert_eq!(verdict(Threshold::Found(5), LowerBound(2)), Verdict::ConsistentLowerBound);
        assert_eq!(verdict(Threshold::Found(1), LowerBound(2)), Verdict::Mismatch);
        assert_eq!(verdict(Threshold::NotFoundBelow(1), LowerBound(2)), Verdict::ConsistentLowerBound);
        assert_eq!(verdict(Threshold::NotFoundBelow(1), LowerBound(3)), Verdict::Inconclusive);
    }

    #[test]
    fn convention_duality() {
        for name in ["I:3,4", "II:5", "III:3", "IV:6", "poly:2"] {
            let d = dom(name);
            for s in 0..=4 {
                for x in decompose(&d, s) {
                    let a = sigma(&x, &d, Convention::MMinusHighest);
                    let b = sigma(&x, &d, Convention::MPlusLowest);
                    assert_eq!(a, -b);
                    assert_eq!(classify(a), classify(b));
                    // the m^+ lowest weight is the negated m^- highest weight
                    assert_eq!(inner(&x.highest.neg(), &d.mu).unwrap(), b);
                }
            }
        }
    }

    #[test]
    fn scaling_does_not_change_classification() {
        let d = dom("I:3,3");
        for s in 0..=4 {
            for x in decompose(&d, s) {
                let plain = inner(&x.highest, &d.mu).unwrap();
                let scaled = inner(&x.highest.scaled(3), &d.mu).unwrap();
                assert_eq!(classify(plain), classify(scaled));
            }
        }
    }

    #[test]
    fn isomorphic_domains_share_thresholds() {
        let m = |s: &str| computed_m(&dom(s), 4).unwrap();
        assert_eq!(m("III:2"), Threshold::Found(2));
        assert_eq!(m("IV:3"), Threshold::Found(2));
        assert_eq!(m("II:3"), Threshold::Found(1));
        assert_eq!(m("I:1,3"), Threshold::Found(1));
        assert_eq!(m("IV:4"), m("I:2,2"));
    }
}
