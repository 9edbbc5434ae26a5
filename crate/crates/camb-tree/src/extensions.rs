//! Linear extensions of a Cambrian tree.
//!
//! The fiber of a tree under insertion is exactly its set of linear
//! extensions, read as signed permutations with the tree's signature. The
//! fiber is an interval of the weak order, so its extreme elements are the
//! lexicographically extreme extensions and a greedy sweep finds them.

use crate::tree::CambrianTree;
use camb_core::perm::SignedPermutation;
use std::collections::BTreeSet;

/// All linear extensions, in lexicographic order of the word.
pub fn linear_extensions(tree: &CambrianTree) -> Vec<SignedPermutation> {
    let n = tree.n();
    let mut pending_children: Vec<usize> = vec![0; n + 1];
    for v in 1..=n {
        pending_children[v] = tree.children(v).len();
    }
    let mut word = Vec::with_capacity(n);
    let mut out = Vec::new();
    extend(tree, &mut pending_children, &mut word, &mut out);
    out
}

fn extend(
    tree: &CambrianTree,
    pending_children: &mut Vec<usize>,
    word: &mut Vec<usize>,
    out: &mut Vec<SignedPermutation>,
) {
    let n = tree.n();
    if word.len() == n {
        out.push(
            SignedPermutation::new(word.clone(), tree.signature().to_vec())
                .expect("extension is a permutation"),
        );
        return;
    }
    for v in 1..=n {
        if pending_children[v] == 0 {
            pending_children[v] = usize::MAX;
            for p in tree.parents(v) {
                pending_children[p] -= 1;
            }
            word.push(v);
            extend(tree, pending_children, word, out);
            word.pop();
            for p in tree.parents(v) {
                pending_children[p] += 1;
            }
            pending_children[v] = 0;
        }
    }
}

fn greedy_extension(tree: &CambrianTree, smallest: bool) -> SignedPermutation {
    let n = tree.n();
    let mut pending_children: Vec<usize> = vec![usize::MAX; n + 1];
    for v in 1..=n {
        pending_children[v] = tree.children(v).len();
    }
    let mut word = Vec::with_capacity(n);
    for _ in 0..n {
        let candidates = (1..=n).filter(|&v| pending_children[v] == 0);
        let v = if smallest {
            candidates.min().expect("tree poset has an available vertex")
        } else {
            candidates.max().expect("tree poset has an available vertex")
        };
        pending_children[v] = usize::MAX;
        for p in tree.parents(v) {
            pending_children[p] -= 1;
        }
        word.push(v);
    }
    SignedPermutation::new(word, tree.signature().to_vec()).expect("extension is a permutation")
}

/// The weak-order minimum of the fiber.
pub fn min_linear_extension(tree: &CambrianTree) -> SignedPermutation {
    greedy_extension(tree, true)
}

/// The weak-order maximum of the fiber.
pub fn max_linear_extension(tree: &CambrianTree) -> SignedPermutation {
    greedy_extension(tree, false)
}

/// All Cambrian trees of a signature, by inserting every permutation.
pub fn all_cambrian_trees(signature: &[camb_core::sign::Sign]) -> Vec<CambrianTree> {
    let mut seen: BTreeSet<CambrianTree> = BTreeSet::new();
    for tau in camb_core::perm::permutations_with_signature(signature) {
        seen.insert(crate::insertion::p_symbol(&tau));
    }
    seen.into_iter().collect()
}
