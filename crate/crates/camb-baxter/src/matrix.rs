//! Twin pair counts per signature, refined by free gaps.
//!
//! Appending a letter to a class-maximal word keeps it class-maximal only
//! at its free gaps, and the count of free gaps on each side of the
//! maximum letter is all the next step needs. The matrix of these counts
//! obeys a two-case recursion, one step per appended sign, which reaches
//! sizes far beyond brute force.

use crate::congruence::is_baxter_class_maximal;
use camb_core::perm::{permutations_with_signature, SignedPermutation};
use camb_core::sign::{negate_signature, Sign, Signature};
use std::collections::{BTreeMap, BTreeSet};

/// Whether appending `n + 1` at `gap` keeps a class-maximal word maximal.
pub fn is_free_gap(tau: &SignedPermutation, gap: usize) -> bool {
    let n = tau.n();
    assert!(gap <= n);
    if gap == 0 {
        return true;
    }
    let a = tau.word()[gap - 1];
    let mut witness_before = [false; 2];
    let mut witness_after = [false; 2];
    for (p, &v) in tau.word().iter().enumerate() {
        if v > a {
            let side = if p < gap { &mut witness_before } else { &mut witness_after };
            side[tau.sign_of_value(v).is_pos() as usize] = true;
        }
    }
    let (nb, pb) = (witness_before[0], witness_before[1]);
    let (na, pa) = (witness_after[0], witness_after[1]);
    !((pb || na) && (pa || nb))
}

/// The free gaps of a word, in increasing order.
pub fn free_gaps(tau: &SignedPermutation) -> Vec<usize> {
    (0..=tau.n()).filter(|&g| is_free_gap(tau, g)).collect()
}

/// Counts of free gaps weakly left and strictly right of the maximum.
pub fn free_gap_type(tau: &SignedPermutation) -> (usize, usize) {
    let n = tau.n();
    if n == 0 {
        return (1, 1);
    }
    let split = tau.position_of(n);
    let left = free_gaps(tau).iter().filter(|&&g| g < split).count();
    (left, free_gaps(tau).len() - left)
}

/// Free gap type distribution over the class-maximal words, brute force.
pub fn free_gap_type_counts(sig: &[Sign]) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for tau in permutations_with_signature(sig) {
        if is_baxter_class_maximal(&tau) {
            *out.entry(free_gap_type(&tau)).or_insert(0) += 1;
        }
    }
    out
}

/// Square matrix of twin pair counts by free gap type, 1-indexed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BcMatrix {
    entries: Vec<Vec<u64>>,
}

impl BcMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// The count at type `(l, r)`; zero outside the stored range.
    pub fn entry(&self, l: usize, r: usize) -> u64 {
        if l == 0 || r == 0 || l > self.size() || r > self.size() {
            return 0;
        }
        self.entries[l - 1][r - 1]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }

    pub fn counts(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (l, row) in self.entries.iter().enumerate() {
            for (r, &v) in row.iter().enumerate() {
                if v != 0 {
                    out.insert((l + 1, r + 1), v);
                }
            }
        }
        out
    }
}

/// The free gap matrix of a signature, by the two step recursions.
pub fn bc_matrix(sig: &[Sign]) -> BcMatrix {
    let n = sig.len();
    if n <= 1 {
        return BcMatrix { entries: vec![vec![1]] };
    }
    let mut m = BcMatrix { entries: vec![vec![0, 1], vec![1, 0]] };
    for k in 3..=n {
        m = if sig[k - 1] == sig[k - 2] { step_repeat(&m) } else { step_switch(&m) };
    }
    m
}

/// Appending a letter whose sign repeats the previous one: a type (l', r')
/// word contributes one child of type (l, r' + 1) for each l <= l' and one
/// of type (l' + 1, r) for each r <= r'.
fn step_repeat(m: &BcMatrix) -> BcMatrix {
    let k = m.size() + 1;
    let mut out = vec![vec![0u64; k]; k];
    for (l, row) in out.iter_mut().enumerate().map(|(i, r)| (i + 1, r)) {
        for r in 1..=k {
            let mut v = 0;
            if r >= 2 {
                for lp in l..k {
                    v += m.entry(lp, r - 1);
                }
            }
            if l >= 2 {
                for rp in r..k {
                    v += m.entry(l - 1, rp);
                }
            }
            row[r - 1] = v;
        }
    }
    BcMatrix { entries: out }
}

/// Appending a letter whose sign switches: children land in the first row
/// or the first column, with the old right count bounding the new left
/// count and conversely.
fn step_switch(m: &BcMatrix) -> BcMatrix {
    let k = m.size() + 1;
    let mut out = vec![vec![0u64; k]; k];
    for r in 2..=k {
        let mut v = 0;
        for lp in r - 1..k {
            for rp in 1..k {
                v += m.entry(lp, rp);
            }
        }
        out[0][r - 1] = v;
    }
    for (l, row) in out.iter_mut().enumerate().skip(1).map(|(i, r)| (i + 1, r)) {
        let mut v = 0;
        for rp in l - 1..k {
            for lp in 1..k {
                v += m.entry(lp, rp);
            }
        }
        row[0] = v;
    }
    BcMatrix { entries: out }
}

/// The number of twin pairs of a signature.
pub fn bc_number(sig: &[Sign]) -> u64 {
    bc_matrix(sig).total()
}

/// The number of twin pairs of a signature, by counting the class-maximal
/// words directly.
pub fn bc_number_brute(sig: &[Sign]) -> u64 {
    permutations_with_signature(sig)
        .iter()
        .filter(|tau| is_baxter_class_maximal(tau))
        .count() as u64
}

/// Baxter numbers 1, 1, 2, 6, 22, 92, ... by the binomial sum.
pub fn baxter_number(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    let c = |a: u128, b: u128| -> u128 {
        if b > a {
            return 0;
        }
        (0..b).fold(1u128, |acc, i| acc * (a - i) / (i + 1))
    };
    let m = (n + 1) as u128;
    let total: u128 = (1..=n as u128)
        .map(|k| c(m, k - 1) * c(m, k) * c(m, k + 1))
        .sum();
    (total / (c(m, 1) * c(m, 2))) as u64
}

/// Gaps where consecutive signs differ.
pub fn switch_set(sig: &[Sign]) -> BTreeSet<usize> {
    (1..sig.len()).filter(|&i| sig[i - 1] != sig[i]).collect()
}

/// Switch gaps away from the two boundary gaps. The count depends on a
/// signature only through this set, and drops strictly under strict
/// inclusion; the boundary gaps are absorbed by the first and last sign
/// flips.
pub fn interior_switch_set(sig: &[Sign]) -> BTreeSet<usize> {
    let n = sig.len();
    switch_set(sig).into_iter().filter(|&g| 2 <= g && g + 1 < n).collect()
}

/// Closure of a signature under first sign flip, last sign flip, and
/// global negation. Reversal preserves the count as well but is left out,
/// so mirror images fall in distinct orbits and the census multiplicities
/// count them separately.
pub fn signature_orbit(sig: &[Sign]) -> BTreeSet<Signature> {
    let mut orbit = BTreeSet::new();
    orbit.insert(sig.to_vec());
    let mut queue = vec![sig.to_vec()];
    while let Some(s) = queue.pop() {
        let mut images = vec![negate_signature(&s)];
        if !s.is_empty() {
            let mut first = s.clone();
            first[0] = first[0].flip();
            let mut last = s.clone();
            let end = last.len() - 1;
            last[end] = last[end].flip();
            images.push(first);
            images.push(last);
        }
        for image in images {
            if orbit.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    orbit
}

/// Counts grouped by value with orbit multiplicities, as in a census of
/// all signatures of one size.
pub fn bc_census(n: usize) -> BTreeMap<u64, (usize, usize)> {
    let mut seen: BTreeSet<Signature> = BTreeSet::new();
    let mut out: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for sig in camb_core::sign::all_signatures(n) {
        let value = bc_number(&sig);
        let entry = out.entry(value).or_insert((0, 0));
        entry.0 += 1;
        if !seen.contains(&sig) {
            entry.1 += 1;
            seen.extend(signature_orbit(&sig));
        }
    }
    out
}

/// The word obtained by removing the largest letter.
fn unappend(tau: &SignedPermutation) -> SignedPermutation {
    let n = tau.n();
    let word = tau.word().iter().copied().filter(|&v| v < n).collect();
    SignedPermutation::new(word, tau.signature()[..n - 1].to_vec()).expect("subword")
}

/// Check that the generating tree grows class-maximal words exactly at
/// free gaps: used by tests as the bridge between the recursion and the
/// brute-force count.
pub fn children_are_free_gap_insertions(sig: &[Sign]) -> bool {
    let n = sig.len();
    if n == 0 {
        return true;
    }
    permutations_with_signature(sig).iter().all(|tau| {
        let parent = unappend(tau);
        let gap = tau.position_of(n) - 1;
        is_baxter_class_maximal(tau)
            == (is_baxter_class_maximal(&parent) && is_free_gap(&parent, gap))
    })
}
