//! Cambrian trees and the combinatorics built on them: the insertion map
//! from signed permutations, linear extensions, congruence classes of the
//! weak order, edge rotations, Cambrian lattices, decomposability, sign
//! switches, and free gaps of class-maximal permutations.

pub mod congruence;
pub mod export;
pub mod extensions;
pub mod freegap;
pub mod indecomposable;
pub mod insertion;
pub mod lattice;
pub mod rotation;
pub mod switch;
pub mod tree;

pub use insertion::{leveled_p_symbol, p_symbol, LeveledCambrianTree};
pub use tree::{CambrianTree, Slot, TreeError, Vertex};
