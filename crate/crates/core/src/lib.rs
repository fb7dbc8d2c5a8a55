//! Combinatorics of the k-Bruhat order on permutations and of the monoid of
//! its maximal chains.

pub mod checks;
pub mod constants;
pub mod error;
pub mod insertion;
pub mod korder;
pub mod perm;
pub mod umonoid;

pub use error::{Error, Result};
pub use korder::{leq_k, Chain, MarkedInterval};
pub use perm::{Composition, Partition, Permutation};
pub use umonoid::{Generator, MaybePermutation, Word, WordOrder};
