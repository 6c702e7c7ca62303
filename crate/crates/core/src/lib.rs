//! Exact decomposition of symmetric powers of the isotropy modules of the
//! classical bounded symmetric domains, with Mok's pairing criterion scored
//! on every irreducible summand.
//!
//! The pipeline is [`domains`] → [`plethysm`] → [`mok`], with [`oracle`]
//! certifying the closed-form decompositions by brute force.

pub mod cli;
pub mod curves;
pub mod domains;
pub mod error;
pub mod mok;
pub mod oracle;
pub mod partitions;
pub mod plethysm;
pub mod report;
pub mod rootdata;

pub use domains::{make_domain, tangent_weights, DomainSpec, Family, PaperThreshold};
pub use error::{Error, Result};
pub use mok::{classify, computed_m, score, sigma, vanishing_report, Classification, Convention, Threshold, Verdict};
pub use partitions::Partition;
pub use plethysm::{decompose, Summand, SummandLabel};
pub use rootdata::{BlockKind, BlockStructure, WeightVector};
