//! Operator calculus on tensor powers of C^N.

mod constants;
mod identities;
mod matrix;
mod ring;

pub use constants::{
    antisymmetrizer_factor, perm_length, permutations, pq_word, q_antisymmetrizer, r_const, r_long, r_spectral,
    r_spectral_at, reduced_word, scalar_identity, ConstVariant, ScalarMatrix,
};
pub use identities::{compare, mutate_entry, r_spectral_display, verify_tensor_identities, ybe_const_check};
pub use matrix::{index_to_tuple, tuple_to_index, OperatorMatrix};
pub use ring::{FreeAlgebra, Ring, Scalars};
