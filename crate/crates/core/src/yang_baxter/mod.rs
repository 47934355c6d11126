//! Half-shuffle axioms and the Yang–Baxter variants.
//!
//! Lie-level checks reuse associative carriers with the commutator bracket.

mod dendriform;
mod lie;
mod tensor;

pub use dendriform::{
    check_dendriform, check_quasi_shuffle_expansions, check_quasi_shuffle_relations,
    check_shuffle_of_images, iterated_image, DENDRIFORM_ANCHOR, QUASI_SHUFFLE_ANCHOR, SHUFFLE_ANCHOR,
};
pub use lie::{check_modified_ybe, check_operator_ybe, MODIFIED_YBE_ANCHOR, OPERATOR_YBE_ANCHOR};
pub use tensor::{aybe_check, aybe_residual, rb_from_tensor, AybeMode, TensorR, TensorRbAlgebra, AYBE_ANCHOR};
