//! Core combinatorial objects shared across the workspace: sign sequences,
//! signed permutations, signed ordered set partitions, and a small toolkit
//! for finite posets and lattices.

pub mod notation;
pub mod partition;
pub mod perm;
pub mod poset;
pub mod sign;

pub use notation::ParseError;
pub use partition::{OrderedPartition, SignedOrderedPartition};
pub use perm::SignedPermutation;
pub use poset::HasseDiagram;
pub use sign::{Sign, Signature, Trit};
