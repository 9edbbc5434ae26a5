//! Free gaps and the generating tree on class-maximal words.
//!
//! A gap of a word of length n is one of the n + 1 positions where n + 1
//! could be inserted. Inserting at a free gap of a class-maximal word
//! yields a class-maximal word again, and every maximal word of the
//! extended signature arises exactly once this way.

use camb_core::perm::SignedPermutation;
use camb_core::sign::Sign;

/// Whether inserting `n + 1` at `gap` keeps a maximal word maximal.
///
/// The gap after a letter `a` is blocked by a larger positive letter
/// before it or a larger negative letter after it; the leftmost gap is
/// always free.
pub fn is_free_gap(tau: &SignedPermutation, gap: usize) -> bool {
    if gap == 0 {
        return true;
    }
    let a = tau.word()[gap - 1];
    let blocked_before = tau.word()[..gap]
        .iter()
        .any(|&b| b > a && tau.sign_of_value(b).is_pos());
    let blocked_after = tau.word()[gap..]
        .iter()
        .any(|&b| b > a && tau.sign_of_value(b).is_neg());
    !(blocked_before || blocked_after)
}

pub fn free_gaps(tau: &SignedPermutation) -> Vec<usize> {
    (0..=tau.n()).filter(|&g| is_free_gap(tau, g)).collect()
}

/// The word with `n + 1` of sign `s` inserted at `gap`.
pub fn insert_at_gap(tau: &SignedPermutation, gap: usize, s: Sign) -> SignedPermutation {
    let mut word = tau.word().to_vec();
    word.insert(gap, tau.n() + 1);
    let mut vsign = tau.signature().to_vec();
    vsign.push(s);
    SignedPermutation::new(word, vsign).expect("insertion keeps a permutation")
}
