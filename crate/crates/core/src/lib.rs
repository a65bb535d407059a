//! Exact characters of finite-dimensional irreducible modules over
//! osp(2m|2) and osp(2m+1|2), expressed through generalized Verma modules.

pub mod charpoly;
pub mod error;
pub mod expansion;
pub mod tensor;
pub mod verify;
pub mod weight;
pub mod weightspace;

pub use charpoly::{Character, Cutoff};
pub use error::{Error, Result};
pub use expansion::{
    dimension, finite_character, irreducible_character, verma_expansion, Branch, VermaExpansion,
    VermaSeries,
};
pub use tensor::{tensor_decompose, TensorDecomposition};
pub use verify::{Suite, VerificationReport};
pub use weight::{HalfInt, Weight};
pub use weightspace::{Algebra, BlockKey, Family, PositiveRoots, SignClass};
