//! The recoils subalgebra.
//!
//! One generator per sign vector of length n - 1, summing the fundamental
//! basis over every signed permutation with that recoil pattern. The same
//! element is the sum of the tree basis over all trees, of every
//! signature, whose canopy is the given vector.

use crate::fqsym;
use crate::lincomb::LinearCombination;
use camb_core::perm::permutation_words;
use camb_core::sign::{all_signatures, Signature};
use camb_tree::extensions::all_cambrian_trees;
use camb_tree::CambrianTree;
use num_bigint::BigInt;

/// Generator indexed by a recoil vector, expanded in signed permutations.
pub fn x_to_f(chi: &Signature) -> fqsym::Element {
    let n = chi.len() + 1;
    let mut out = fqsym::Element::zero();
    for word in permutation_words(n) {
        for vsign in all_signatures(n) {
            let tau = camb_core::SignedPermutation::new(word.clone(), vsign).expect("word");
            if tau.recoils() == *chi {
                out.add_term(tau, BigInt::from(1));
            }
        }
    }
    out
}

/// The same generator expanded in the tree basis over all signatures.
pub fn x_to_p(chi: &Signature) -> LinearCombination<CambrianTree> {
    let n = chi.len() + 1;
    let mut out = LinearCombination::zero();
    for sig in all_signatures(n) {
        for tree in all_cambrian_trees(&sig) {
            if tree.canopy() == *chi {
                out.add_term(tree, BigInt::from(1));
            }
        }
    }
    out
}
