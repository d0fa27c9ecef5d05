use thiserror::Error;

use crate::pair::PairType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid signed diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown pair type `{0}` (expected AIII, BDI, CI, CII or DIII)")]
    UnknownPairType(String),

    #[error("signature ({p},{q}) does not add up to n = {n}")]
    SignatureSize { p: usize, q: usize, n: usize },

    #[error("{pair} requires {rule}, got signature ({p},{q})")]
    SignatureRule {
        pair: PairType,
        rule: &'static str,
        p: usize,
        q: usize,
    },

    #[error("shape {shape} is not admissible for {pair}")]
    InadmissibleShape { pair: PairType, shape: String },

    #[error("column length {height} occurs fewer than twice in {shape}")]
    NoColumnPair { shape: String, height: usize },

    #[error("{pair} only allows even column heights, got {height}")]
    OddHeight { pair: PairType, height: usize },

    #[error("pi-vector rejected: {0}")]
    PiVector(String),

    #[error("series truncated at weight {bound}, asked for weight {asked}")]
    Truncation { bound: usize, asked: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("invalid row slots: {0}")]
    InvalidSlots(String),

    #[error("size {size} exceeds the limit {limit}")]
    TooLarge { size: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
