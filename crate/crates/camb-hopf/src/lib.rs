//! Hopf algebra layers: signed permutations, Cambrian trees, and the
//! recoils subalgebra, with products, coproducts, dual bases, multiplicative
//! bases, and the antipode.

pub mod cambrian;
pub mod fqsym;
pub mod lincomb;
pub mod recoils;

pub use lincomb::{bilinear, tensor, LinearCombination, TensorCombination};
