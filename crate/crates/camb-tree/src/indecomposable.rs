//! Decomposability along edge cuts and the generator of the indecomposables.
//!
//! An edge cut is splitting when the side containing the child is exactly
//! an initial interval of values. Trees without splitting cuts form a
//! principal upper ideal of the Cambrian lattice; its generator has a
//! one-word fiber built from the signature alone.

use crate::tree::CambrianTree;
use camb_core::perm::SignedPermutation;
use camb_core::sign::Signature;

pub fn is_decomposable(tree: &CambrianTree) -> bool {
    tree.edges().into_iter().any(|(child, parent)| {
        let (source, _) = tree.edge_cut(child, parent);
        source.iter().enumerate().all(|(idx, &v)| v == idx + 1)
    })
}

pub fn is_indecomposable(tree: &CambrianTree) -> bool {
    !is_decomposable(tree)
}

pub fn indecomposable_trees(signature: &Signature) -> Vec<CambrianTree> {
    crate::extensions::all_cambrian_trees(signature)
        .into_iter()
        .filter(is_indecomposable)
        .collect()
}

/// The word whose tree generates the indecomposables as an upper ideal.
///
/// The negative values of `s2, ..., s(n-1)` together with `n` are listed
/// increasingly; each remaining value `p` except the largest is placed
/// right after the first listed value exceeding the next remaining one,
/// and the largest goes last. The signs of `1` and `n` play no role here.
pub fn generator_word(signature: &Signature) -> SignedPermutation {
    let n = signature.len();
    if n <= 1 {
        return SignedPermutation::new((1..=n).collect(), signature.clone()).expect("short word");
    }
    let mut negatives: Vec<usize> = (2..n).filter(|&v| signature[v - 1].is_neg()).collect();
    negatives.push(n);
    let mut positives: Vec<usize> = vec![1];
    positives.extend((2..n).filter(|&v| signature[v - 1].is_pos()));

    let mut word = negatives.clone();
    for k in (0..positives.len() - 1).rev() {
        let anchor = negatives
            .iter()
            .find(|&&g| g > positives[k + 1])
            .expect("n exceeds every inserted value");
        let at = word.iter().position(|&w| w == *anchor).expect("anchor is placed");
        word.insert(at + 1, positives[k]);
    }
    word.push(positives[positives.len() - 1]);
    SignedPermutation::new(word, signature.clone()).expect("generator word is a permutation")
}

pub fn generator_tree(signature: &Signature) -> CambrianTree {
    crate::insertion::p_symbol(&generator_word(signature))
}

#[cfg(test)]
mod tests {
    use super::*;
    use camb_core::notation::parse_signature;

    fn word_string(tau: &SignedPermutation) -> String {
        tau.word().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn generator_words() {
        assert_eq!(word_string(&generator_word(&parse_signature("----").unwrap())), "2341");
        assert_eq!(word_string(&generator_word(&parse_signature("+++").unwrap())), "312");
        assert_eq!(word_string(&generator_word(&parse_signature("--+--++").unwrap())), "2415736");
    }

    #[test]
    fn one_vertex_tree_is_indecomposable() {
        let tree = generator_tree(&parse_signature("-").unwrap());
        assert!(is_indecomposable(&tree));
    }

    #[test]
    fn chains_split() {
        let tree = crate::insertion::p_symbol(
            &camb_core::notation::parse_signed_permutation("1- 2- 3-").unwrap(),
        );
        assert!(is_decomposable(&tree));
    }
}
