//! The Cambrian congruence on signed permutations.
//!
//! Two words are congruent when one can be turned into the other by swaps
//! of adjacent letters `x`, `y` witnessed by a value `b` strictly between
//! them: a positive `b` somewhere before the pair, or a negative `b`
//! somewhere after it. The classes are exactly the insertion fibers, and
//! each class is an interval of the weak order.

use camb_core::perm::SignedPermutation;
use std::collections::{BTreeSet, VecDeque};

/// Whether the letters at positions `p`, `p + 1` (0-indexed) may be swapped.
pub fn swap_allowed(tau: &SignedPermutation, p: usize) -> bool {
    let x = tau.word()[p];
    let y = tau.word()[p + 1];
    let (lo, hi) = (x.min(y), x.max(y));
    let before = tau.word()[..p]
        .iter()
        .any(|&b| lo < b && b < hi && tau.sign_of_value(b).is_pos());
    let after = tau.word()[p + 2..]
        .iter()
        .any(|&b| lo < b && b < hi && tau.sign_of_value(b).is_neg());
    before || after
}

/// All words one allowed swap away.
pub fn rewriting_neighbors(tau: &SignedPermutation) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for p in 0..tau.n().saturating_sub(1) {
        if swap_allowed(tau, p) {
            let mut word = tau.word().to_vec();
            word.swap(p, p + 1);
            out.push(SignedPermutation::new(word, tau.signature().to_vec()).expect("swap"));
        }
    }
    out
}

/// The congruence class of `tau`, closed under allowed swaps.
pub fn congruence_class(tau: &SignedPermutation) -> BTreeSet<SignedPermutation> {
    let mut class = BTreeSet::new();
    class.insert(tau.clone());
    let mut queue = VecDeque::from([tau.clone()]);
    while let Some(word) = queue.pop_front() {
        for neighbor in rewriting_neighbors(&word) {
            if class.insert(neighbor.clone()) {
                queue.push_back(neighbor);
            }
        }
    }
    class
}

/// No allowed swap of an adjacent descent, so the class cannot go down.
pub fn is_class_minimal(tau: &SignedPermutation) -> bool {
    (0..tau.n().saturating_sub(1))
        .all(|p| tau.word()[p] < tau.word()[p + 1] || !swap_allowed(tau, p))
}

/// No allowed swap of an adjacent ascent, so the class cannot go up.
pub fn is_class_maximal(tau: &SignedPermutation) -> bool {
    (0..tau.n().saturating_sub(1))
        .all(|p| tau.word()[p] > tau.word()[p + 1] || !swap_allowed(tau, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::{linear_extensions, max_linear_extension, min_linear_extension};
    use crate::insertion::p_symbol;
    use camb_core::notation::parse_signed_permutation as parse;
    use camb_core::perm::permutations_with_signature;
    use camb_core::sign::all_signatures;

    #[test]
    fn classes_are_fibers() {
        for sig in all_signatures(5) {
            for tau in permutations_with_signature(&sig) {
                let fiber: BTreeSet<_> =
                    linear_extensions(&p_symbol(&tau)).into_iter().collect();
                assert_eq!(congruence_class(&tau), fiber);
            }
        }
    }

    #[test]
    fn extreme_words_are_the_swap_blocked_ones() {
        for sig in all_signatures(5) {
            for tau in permutations_with_signature(&sig) {
                let tree = p_symbol(&tau);
                assert_eq!(is_class_minimal(&tau), tau == min_linear_extension(&tree));
                assert_eq!(is_class_maximal(&tau), tau == max_linear_extension(&tree));
            }
        }
    }

    #[test]
    fn golden_class_of_size_two() {
        let class = congruence_class(&parse("2+ 1- 3+").unwrap());
        let words: Vec<String> = class.iter().map(|t| format!("{t}")).collect();
        assert_eq!(words, vec!["2+ 1- 3+", "2+ 3+ 1-"]);
    }
}
