//! Words with shuffle and quasi-shuffle products, permutations in canonical
//! cycle form, and set partitions. Every enumeration is deterministic.

mod partitions;
mod permutations;
pub(crate) mod words;

pub use partitions::{bell_number, set_partitions, SetPartition};
pub use permutations::{permutations, CycleDecomposition, Permutation, MAX_DEGREE};
pub use words::{
    is_shuffle_of, quasi_shuffle, quasi_shuffle_sum, shuffle, shuffle_sum, weighted_quasi_shuffle,
    MonoidAlphabet, Word, WordSum,
};
