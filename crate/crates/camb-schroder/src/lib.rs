//! Block-labeled tree combinatorics over signed ground sets: insertion of
//! ordered partitions, the rewriting congruence, rotation and contraction
//! orders, polygon dissection counts, and the Hopf structure with its dual
//! and canopy classes.

pub mod congruence;
pub mod count;
pub mod export;
pub mod hopf;
pub mod insertion;
pub mod lattice;
pub mod tree;
