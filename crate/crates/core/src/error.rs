use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the engine.
///
/// The variants group into four classes that the command line maps onto exit
/// codes: malformed input, domain failures (a well-formed request that has no
/// answer, e.g. `u` not below `w`), resource guards, and internal invariant
/// violations, which indicate a bug rather than bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a permutation window (each of 1..m must occur exactly once)")]
    NotAPermutation(String),

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("partition with {parts} parts does not fit in {k} rows")]
    PartitionTooLong { parts: usize, k: usize },

    #[error("permutation moves {support} which exceeds the bound m = {m}")]
    SupportExceedsBound { support: usize, m: usize },

    #[error("{u} is not below {w} in the {k}-Bruhat order")]
    NotComparable { u: String, w: String, k: usize },

    #[error("step {step} of the word is not a cover: {reason}")]
    NotACover { step: usize, reason: String },

    #[error("word evaluates to zero")]
    ZeroWord,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("insertion did not terminate within {0} rule applications")]
    Nontermination(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::NotAPermutation(_) | Error::NotAPartition(_)
        )
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_) | Error::Nontermination(_))
    }
}
