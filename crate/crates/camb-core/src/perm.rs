//! Signed permutations in one-line notation, with signs carried by values.

use crate::sign::{Sign, Signature};
use itertools::Itertools;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum InvalidPermutation {
    #[error("word of length {word} but {signs} signs")]
    LengthMismatch { word: usize, signs: usize },
    #[error("value {0} out of range")]
    ValueOutOfRange(usize),
    #[error("value {0} repeated")]
    RepeatedValue(usize),
}

/// A permutation of `[n]` with a sign attached to every value.
///
/// Signs are stored by value: `sign_of_value(v)` does not depend on where `v`
/// occurs in the word. The sign seen at position `p` is the sign of the value
/// `value(p)`. Values and positions are 1-indexed in the public API.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedPermutation {
    word: Vec<usize>,
    vsign: Vec<Sign>,
}

impl SignedPermutation {
    pub fn new(word: Vec<usize>, vsign: Vec<Sign>) -> Result<Self, InvalidPermutation> {
        if word.len() != vsign.len() {
            return Err(InvalidPermutation::LengthMismatch {
                word: word.len(),
                signs: vsign.len(),
            });
        }
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n {
                return Err(InvalidPermutation::ValueOutOfRange(v));
            }
            if seen[v - 1] {
                return Err(InvalidPermutation::RepeatedValue(v));
            }
            seen[v - 1] = true;
        }
        Ok(SignedPermutation { word, vsign })
    }

    /// Builds from a word and signs listed by position instead of by value.
    pub fn from_position_signs(word: Vec<usize>, psign: Vec<Sign>) -> Result<Self, InvalidPermutation> {
        if word.len() != psign.len() {
            return Err(InvalidPermutation::LengthMismatch {
                word: word.len(),
                signs: psign.len(),
            });
        }
        let mut vsign = vec![Sign::Neg; word.len()];
        for (p, &v) in word.iter().enumerate() {
            if v == 0 || v > word.len() {
                return Err(InvalidPermutation::ValueOutOfRange(v));
            }
            vsign[v - 1] = psign[p];
        }
        Self::new(word, vsign)
    }

    pub fn identity(signature: Signature) -> Self {
        let word = (1..=signature.len()).collect();
        SignedPermutation { word, vsign: signature }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at position `p` (1-indexed).
    pub fn value(&self, p: usize) -> usize {
        self.word[p - 1]
    }

    /// Position of value `v` (1-indexed).
    pub fn position_of(&self, v: usize) -> usize {
        self.word.iter().position(|&w| w == v).expect("value in range") + 1
    }

    pub fn sign_of_value(&self, v: usize) -> Sign {
        self.vsign[v - 1]
    }

    pub fn sign_at_position(&self, p: usize) -> Sign {
        self.vsign[self.word[p - 1] - 1]
    }

    /// Signs listed by value; this is the signature of the ambient `S^σ`.
    pub fn signature(&self) -> &[Sign] {
        &self.vsign
    }

    /// Signs listed by position.
    pub fn position_signature(&self) -> Signature {
        self.word.iter().map(|&v| self.vsign[v - 1]).collect()
    }

    /// Inverse permutation; the sign table transposes with the word, so the
    /// value signs of the inverse are the position signs of `self`.
    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut word = vec![0; n];
        for (p, &v) in self.word.iter().enumerate() {
            word[v - 1] = p + 1;
        }
        SignedPermutation {
            word,
            vsign: self.position_signature(),
        }
    }

    /// Reverses the word, keeping the sign of every value.
    pub fn mirror(&self) -> Self {
        SignedPermutation {
            word: self.word.iter().rev().copied().collect(),
            vsign: self.vsign.clone(),
        }
    }

    /// Keeps the letters at the selected positions (0-indexed into the word)
    /// and renumbers the surviving values by rank; signs travel with values.
    fn subword(&self, positions: &[usize]) -> Self {
        let values: Vec<usize> = positions.iter().map(|&p| self.word[p]).collect();
        let mut sorted = values.clone();
        sorted.sort_unstable();
        let rank = |v: usize| sorted.binary_search(&v).expect("value present") + 1;
        let word: Vec<usize> = values.iter().map(|&v| rank(v)).collect();
        let mut vsign = vec![Sign::Neg; word.len()];
        for &v in &values {
            vsign[rank(v) - 1] = self.vsign[v - 1];
        }
        SignedPermutation { word, vsign }
    }

    /// Standardization of the letters lying at positions `1..=k` and `k+1..=n`.
    pub fn split_by_position(&self, k: usize) -> (Self, Self) {
        let left: Vec<usize> = (0..k).collect();
        let right: Vec<usize> = (k..self.n()).collect();
        (self.subword(&left), self.subword(&right))
    }

    /// Standardization of the subwords formed by values `1..=k` and `k+1..=n`.
    pub fn split_by_value(&self, k: usize) -> (Self, Self) {
        let left: Vec<usize> = (0..self.n()).filter(|&p| self.word[p] <= k).collect();
        let right: Vec<usize> = (0..self.n()).filter(|&p| self.word[p] > k).collect();
        (self.subword(&left), self.subword(&right))
    }

    /// `self` followed by `other` with all values of `other` shifted up by `n`.
    pub fn followed_by_shifted(&self, other: &Self) -> Self {
        let n = self.n();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&v| v + n));
        let mut vsign = self.vsign.clone();
        vsign.extend(other.vsign.iter().copied());
        SignedPermutation { word, vsign }
    }

    /// Shifted `other` followed by `self`.
    pub fn preceded_by_shifted(&self, other: &Self) -> Self {
        let n = self.n();
        let mut word: Vec<usize> = other.word.iter().map(|&v| v + n).collect();
        word.extend(self.word.iter().copied());
        let mut vsign = self.vsign.clone();
        vsign.extend(other.vsign.iter().copied());
        SignedPermutation { word, vsign }
    }

    /// Shifted shuffle: all interleavings of `self` with the shift of `other`.
    /// Signs travel with values. Results are sorted.
    pub fn shifted_shuffle(&self, other: &Self) -> Vec<Self> {
        let n = self.n();
        let m = other.n();
        let mut vsign = self.vsign.clone();
        vsign.extend(other.vsign.iter().copied());
        let mut out = Vec::new();
        for positions in (0..n + m).combinations(n) {
            let chosen: BTreeSet<usize> = positions.iter().copied().collect();
            let mut a = self.word.iter();
            let mut b = other.word.iter();
            let word: Vec<usize> = (0..n + m)
                .map(|p| {
                    if chosen.contains(&p) {
                        *a.next().expect("length checked")
                    } else {
                        b.next().expect("length checked") + n
                    }
                })
                .collect();
            out.push(SignedPermutation { word, vsign: vsign.clone() });
        }
        out.sort_unstable();
        out
    }

    /// Convolution: all ways to relabel `self` into a value set `V` and
    /// `other` into its complement, concatenating the words. Signs stay with
    /// ranks, so the position signs of every result are those of `self`
    /// followed by those of `other`. Results are sorted.
    pub fn convolution(&self, other: &Self) -> Vec<Self> {
        let n = self.n();
        let m = other.n();
        let mut out = Vec::new();
        for chosen in (1..=n + m).combinations(n) {
            let comp: Vec<usize> = (1..=n + m).filter(|v| !chosen.contains(v)).collect();
            let mut word: Vec<usize> = self.word.iter().map(|&v| chosen[v - 1]).collect();
            word.extend(other.word.iter().map(|&v| comp[v - 1]));
            let mut vsign = vec![Sign::Neg; n + m];
            for (rank, &v) in chosen.iter().enumerate() {
                vsign[v - 1] = self.vsign[rank];
            }
            for (rank, &v) in comp.iter().enumerate() {
                vsign[v - 1] = other.vsign[rank];
            }
            out.push(SignedPermutation { word, vsign });
        }
        out.sort_unstable();
        out
    }

    /// Pairs of values `i < j` with `i` occurring after `j` in the word.
    pub fn coinversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.n();
        let mut pos = vec![0; n];
        for (p, &v) in self.word.iter().enumerate() {
            pos[v - 1] = p;
        }
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if pos[i - 1] > pos[j - 1] {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Right weak order: inclusion of coinversion sets.
    pub fn weak_leq(&self, other: &Self) -> bool {
        self.coinversions().is_subset(&other.coinversions())
    }

    /// Covers above `self` in the weak order: swap any ascent of the word.
    pub fn weak_covers_up(&self) -> Vec<Self> {
        self.adjacent_swaps(true)
    }

    /// Covers below `self`: swap any descent of the word.
    pub fn weak_covers_down(&self) -> Vec<Self> {
        self.adjacent_swaps(false)
    }

    fn adjacent_swaps(&self, ascent: bool) -> Vec<Self> {
        let mut out = Vec::new();
        for p in 0..self.n().saturating_sub(1) {
            if (self.word[p] < self.word[p + 1]) == ascent {
                let mut word = self.word.clone();
                word.swap(p, p + 1);
                out.push(SignedPermutation { word, vsign: self.vsign.clone() });
            }
        }
        out
    }

    /// Sign sequence of length `n-1`: entry `i` is `-` when `i` occurs after
    /// `i+1` in the word, and `+` otherwise.
    pub fn recoils(&self) -> Signature {
        let n = self.n();
        let mut pos = vec![0; n];
        for (p, &v) in self.word.iter().enumerate() {
            pos[v - 1] = p;
        }
        (1..n)
            .map(|i| if pos[i - 1] > pos[i] { Sign::Neg } else { Sign::Pos })
            .collect()
    }
}

/// All words of the symmetric group on `[n]`, in lexicographic order.
pub fn permutation_words(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n).permutations(n).collect()
}

/// All signed permutations with the given signature, in lexicographic order.
pub fn permutations_with_signature(signature: &[Sign]) -> Vec<SignedPermutation> {
    permutation_words(signature.len())
        .into_iter()
        .map(|word| SignedPermutation {
            word,
            vsign: signature.to_vec(),
        })
        .collect()
}
