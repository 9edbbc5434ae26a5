//! Congruences whose classes are the insertion fibers.
//!
//! A tuple word allows a swap of two adjacent letters when every layer
//! allows it in the Cambrian sense: some value strictly between the two
//! letters lies before the pair with a positive sign or after it with a
//! negative sign, in that layer. The twin congruence on signed
//! permutations asks the Cambrian condition for the word and for its
//! mirror at once.

use crate::word::TuplePermutation;
use camb_core::perm::SignedPermutation;
use camb_core::sign::Sign;
use camb_tree::congruence::swap_allowed;
use std::collections::{BTreeSet, VecDeque};

/// Whether positions `p`, `p + 1` may be swapped in every layer at once.
pub fn tuple_swap_allowed(tau: &TuplePermutation, p: usize) -> bool {
    let word = tau.word();
    let (x, y) = (word[p], word[p + 1]);
    let (lo, hi) = (x.min(y), x.max(y));
    let between = |b: usize| lo < b && b < hi;
    tau.vsigns().iter().all(|signs| {
        word[..p].iter().any(|&b| between(b) && signs[b - 1] == Sign::Pos)
            || word[p + 2..].iter().any(|&b| between(b) && signs[b - 1] == Sign::Neg)
    })
}

/// All tuple words one allowed swap away.
pub fn tuple_rewriting_neighbors(tau: &TuplePermutation) -> Vec<TuplePermutation> {
    let mut out = Vec::new();
    for p in 0..tau.n().saturating_sub(1) {
        if tuple_swap_allowed(tau, p) {
            let mut word = tau.word().to_vec();
            word.swap(p, p + 1);
            out.push(TuplePermutation::new(word, tau.vsigns().to_vec()).expect("swap"));
        }
    }
    out
}

/// The congruence class of `tau`, closed under allowed swaps.
pub fn tuple_congruence_class(tau: &TuplePermutation) -> BTreeSet<TuplePermutation> {
    let mut class = BTreeSet::new();
    class.insert(tau.clone());
    let mut queue = VecDeque::from([tau.clone()]);
    while let Some(word) = queue.pop_front() {
        for neighbor in tuple_rewriting_neighbors(&word) {
            if class.insert(neighbor.clone()) {
                queue.push_back(neighbor);
            }
        }
    }
    class
}

pub fn tuple_congruent(a: &TuplePermutation, b: &TuplePermutation) -> bool {
    a.vsigns() == b.vsigns() && tuple_congruence_class(a).contains(b)
}

pub fn is_tuple_class_minimal(tau: &TuplePermutation) -> bool {
    (0..tau.n().saturating_sub(1))
        .all(|p| tau.word()[p] < tau.word()[p + 1] || !tuple_swap_allowed(tau, p))
}

pub fn is_tuple_class_maximal(tau: &TuplePermutation) -> bool {
    (0..tau.n().saturating_sub(1))
        .all(|p| tau.word()[p] > tau.word()[p + 1] || !tuple_swap_allowed(tau, p))
}

/// Whether the twin congruence lets positions `p`, `p + 1` swap: the word
/// and its mirror must both allow the Cambrian swap of that pair.
pub fn baxter_swap_allowed(tau: &SignedPermutation, p: usize) -> bool {
    swap_allowed(tau, p) && swap_allowed(&tau.mirror(), tau.n() - 2 - p)
}

/// All signed words one allowed twin swap away.
pub fn baxter_rewriting_neighbors(tau: &SignedPermutation) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for p in 0..tau.n().saturating_sub(1) {
        if baxter_swap_allowed(tau, p) {
            let mut word = tau.word().to_vec();
            word.swap(p, p + 1);
            out.push(SignedPermutation::new(word, tau.signature().to_vec()).expect("swap"));
        }
    }
    out
}

/// The twin congruence class of `tau`.
pub fn baxter_congruence_class(tau: &SignedPermutation) -> BTreeSet<SignedPermutation> {
    let mut class = BTreeSet::new();
    class.insert(tau.clone());
    let mut queue = VecDeque::from([tau.clone()]);
    while let Some(word) = queue.pop_front() {
        for neighbor in baxter_rewriting_neighbors(&word) {
            if class.insert(neighbor.clone()) {
                queue.push_back(neighbor);
            }
        }
    }
    class
}

pub fn baxter_congruent(a: &SignedPermutation, b: &SignedPermutation) -> bool {
    a.signature() == b.signature() && baxter_congruence_class(a).contains(b)
}

pub fn is_baxter_class_minimal(tau: &SignedPermutation) -> bool {
    (0..tau.n().saturating_sub(1))
        .all(|p| tau.word()[p] < tau.word()[p + 1] || !baxter_swap_allowed(tau, p))
}

pub fn is_baxter_class_maximal(tau: &SignedPermutation) -> bool {
    (0..tau.n().saturating_sub(1))
        .all(|p| tau.word()[p] > tau.word()[p + 1] || !baxter_swap_allowed(tau, p))
}
