use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation text: {0}")]
    Malformed(String),
    #[error("value {0} appears more than once")]
    DuplicateValue(u32),
    #[error("values are not a permutation of 1..={expected}: {found} is out of range")]
    NotAPermutation { expected: usize, found: u32 },
    #[error("block {block} is not ascending: {left} precedes {right}")]
    DescentInBlock { block: usize, left: u32, right: u32 },
    #[error("composition total {comp_total} does not match {values} values")]
    LengthMismatch { comp_total: usize, values: usize },
    #[error("block index {index} out of range for {blocks} blocks")]
    BlockIndexOutOfRange { index: usize, blocks: usize },
    #[error("value map does not match the pattern: {0}")]
    MapDomainMismatch(String),
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("composition {target} is not a rearrangement of {source_comp}")]
    NotRearrangement { source_comp: String, target: String },
    #[error("{source_comp} does not majorize {target}: prefix sum {index} is smaller")]
    NotMajorized {
        source_comp: String,
        target: String,
        index: usize,
    },
    #[error("size cap exceeded: {size} > {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
