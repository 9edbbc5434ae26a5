//! Twin Cambrian trees and Cambrian tree tuples.
//!
//! A tuple keeps several Cambrian trees on one vertex set, tied together
//! by the acyclicity of their edge union; a twin pair is the two-layer
//! case with the second tree stored upside down. Both carry insertion
//! maps from multi-signed permutations, congruences whose classes are the
//! fibers, rotation lattices, and Hopf operations over those lattices.
//! Twin pairs per signature are counted by a matrix recursion refined by
//! free gaps, checked against brute-force enumeration.

pub mod congruence;
pub mod fqsyml;
pub mod hopf;
pub mod lattice;
pub mod matrix;
pub mod tuple;
pub mod twin;
pub mod word;

pub use matrix::{baxter_number, bc_matrix, bc_number, BcMatrix};
pub use tuple::{all_cambrian_tuples, tuple_p_symbol, CambrianTuple};
pub use twin::{baxter_p_symbol, is_twin, twin_pairs, TwinPair};
pub use word::{TupleError, TuplePermutation};
