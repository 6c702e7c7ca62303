use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("weight structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("cannot parse domain `{0}`: expected I:p,q | II:n | III:n | IV:n | poly:n")]
    DomainSyntax(String),

    #[error("{family}: parameter out of range, requires {bound}")]
    ParamOutOfRange { family: &'static str, bound: &'static str },

    #[error("resource cap exceeded: {what} needs {requested} entries, cap is {cap}")]
    ResourceCap { what: String, requested: String, cap: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("peeling inconsistency: {0}")]
    PeelingInconsistency(String),

    #[error("no irreducible character available for highest weight {0}")]
    UnsupportedHighestWeight(String),

    #[error("{domain}: scanned threshold {scan} disagrees with closed form {closed_form}")]
    ThresholdDisagreement { domain: String, scan: String, closed_form: u32 },

    #[error("curve genus {0} is below 2")]
    GenusTooSmall(u64),

    #[error("group order must be at least 1")]
    ZeroOrder,

    #[error("no free action of order {order} exists on a curve of genus {genus}")]
    NoFreeAction { genus: u64, order: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
