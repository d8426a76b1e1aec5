use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("position {pos} out of range for text of length {len}")]
    Range { pos: usize, len: usize },

    #[error("input of length {len} exceeds the oracle cap of {cap}")]
    OracleCap { len: usize, cap: usize },

    #[error("gap list describes round {found}, expected round {expected}")]
    RoundMismatch { expected: usize, found: usize },

    #[error("malformed gap triple ({start}, {gap}, {count})")]
    MalformedTriple { start: usize, gap: usize, count: usize },

    #[error("corrupt factorization: {0}")]
    CorruptFactorization(String),

    #[error("scaling fit needs at least {need} distinct sizes, got {got}")]
    TooFewSizes { need: usize, got: usize },

    #[error("invalid symbol {token:?}: expected a non-negative decimal integer")]
    Parse { token: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
