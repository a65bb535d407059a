//! Character arithmetic: Weyl groups, truncated formal characters, o(n) and
//! generalized Verma characters.

mod character;
pub(crate) mod laurent;
mod orthogonal;
mod verma;
mod weyl;

pub use character::{Character, CharacterJson, Cutoff, TermJson};
pub use orthogonal::{o_n_character, o_n_dimension, orthogonal_positive_roots};
pub use verma::{kac_typical_character, verma_character, verma_combination, weyl_sum_character};
pub use weyl::{weyl_generators, weyl_group, WeylElement};
