//! Permutations carrying a sign per value in each of several layers.
//!
//! A tuple permutation is one word together with `l` signatures read
//! against the values. Layer `k` is the signed permutation made of the
//! word and the `k`-th signature. Shuffles move signs with their values;
//! convolutions keep them with the positions of the pattern.

use camb_core::perm::{InvalidPermutation, SignedPermutation};
use camb_core::sign::{Sign, Signature};
use itertools::Itertools;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum TupleError {
    #[error("at least one layer is required")]
    NoLayers,
    #[error("layers disagree in length or word")]
    LayerMismatch,
    #[error(transparent)]
    BadWord(#[from] InvalidPermutation),
    #[error("union of the layers has a cycle")]
    CyclicUnion,
}

/// A permutation word with a signature per layer, signs indexed by value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TuplePermutation {
    word: Vec<usize>,
    vsigns: Vec<Signature>,
}

impl TuplePermutation {
    pub fn new(word: Vec<usize>, vsigns: Vec<Signature>) -> Result<Self, TupleError> {
        if vsigns.is_empty() {
            return Err(TupleError::NoLayers);
        }
        if vsigns.iter().any(|s| s.len() != word.len()) {
            return Err(TupleError::LayerMismatch);
        }
        SignedPermutation::new(word.clone(), vsigns[0].clone())?;
        Ok(TuplePermutation { word, vsigns })
    }

    /// The empty word with the given number of layers.
    pub fn empty(layers: usize) -> Self {
        assert!(layers > 0, "at least one layer is required");
        TuplePermutation { word: Vec::new(), vsigns: vec![Vec::new(); layers] }
    }

    /// Bundles signed permutations sharing one word into layers.
    pub fn from_layers(layers: &[SignedPermutation]) -> Result<Self, TupleError> {
        let first = layers.first().ok_or(TupleError::NoLayers)?;
        if layers.iter().any(|p| p.word() != first.word()) {
            return Err(TupleError::LayerMismatch);
        }
        Ok(TuplePermutation {
            word: first.word().to_vec(),
            vsigns: layers.iter().map(|p| p.signature().to_vec()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn layers(&self) -> usize {
        self.vsigns.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn vsigns(&self) -> &[Signature] {
        &self.vsigns
    }

    pub fn vsign(&self, layer: usize) -> &[Sign] {
        &self.vsigns[layer]
    }

    pub fn sign_of_value(&self, layer: usize, v: usize) -> Sign {
        self.vsigns[layer][v - 1]
    }

    /// The `layer`-th signed permutation.
    pub fn layer(&self, layer: usize) -> SignedPermutation {
        SignedPermutation::new(self.word.clone(), self.vsigns[layer].clone())
            .expect("word validated at construction")
    }

    /// The same values in reverse order, signs unchanged.
    pub fn mirror(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        TuplePermutation { word, vsigns: self.vsigns.clone() }
    }

    /// Concatenation with the other word shifted above this one.
    pub fn followed_by_shifted(&self, other: &Self) -> Self {
        assert_eq!(self.layers(), other.layers());
        let n = self.n();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|v| v + n));
        TuplePermutation { word, vsigns: self.joined_vsigns(other) }
    }

    /// The other word shifted above this one, written first.
    pub fn preceded_by_shifted(&self, other: &Self) -> Self {
        assert_eq!(self.layers(), other.layers());
        let n = self.n();
        let mut word: Vec<usize> = other.word.iter().map(|v| v + n).collect();
        word.extend(&self.word);
        TuplePermutation { word, vsigns: self.joined_vsigns(other) }
    }

    fn joined_vsigns(&self, other: &Self) -> Vec<Signature> {
        self.vsigns
            .iter()
            .zip(&other.vsigns)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect()
    }

    /// All interleavings of this word with the shifted other word.
    pub fn shifted_shuffle(&self, other: &Self) -> Vec<Self> {
        assert_eq!(self.layers(), other.layers());
        let (n, m) = (self.n(), other.n());
        let vsigns = self.joined_vsigns(other);
        let mut out = Vec::new();
        for positions in (0..n + m).combinations(n) {
            let mut here = vec![false; n + m];
            for &p in &positions {
                here[p] = true;
            }
            let (mut a, mut b) = (self.word.iter(), other.word.iter());
            let word = here
                .iter()
                .map(|&h| if h { *a.next().unwrap() } else { b.next().unwrap() + n })
                .collect();
            out.push(TuplePermutation { word, vsigns: vsigns.clone() });
        }
        out.sort_unstable();
        out
    }

    /// All words splitting as this pattern before the other pattern.
    pub fn convolution(&self, other: &Self) -> Vec<Self> {
        assert_eq!(self.layers(), other.layers());
        let (n, m, l) = (self.n(), other.n(), self.layers());
        let mut out = Vec::new();
        for low in (1..=n + m).combinations(n) {
            let mut taken = vec![false; n + m + 1];
            for &v in &low {
                taken[v] = true;
            }
            let high: Vec<usize> = (1..=n + m).filter(|&v| !taken[v]).collect();
            let mut word: Vec<usize> = self.word.iter().map(|&j| low[j - 1]).collect();
            word.extend(other.word.iter().map(|&j| high[j - 1]));
            let mut vsigns = vec![vec![Sign::Pos; n + m]; l];
            for (k, signs) in vsigns.iter_mut().enumerate() {
                for (j, &v) in low.iter().enumerate() {
                    signs[v - 1] = self.vsigns[k][j];
                }
                for (j, &v) in high.iter().enumerate() {
                    signs[v - 1] = other.vsigns[k][j];
                }
            }
            out.push(TuplePermutation { word, vsigns });
        }
        out.sort_unstable();
        out
    }

    /// Both halves of the word cut after `k` letters, standardized, the
    /// signs following their values.
    pub fn split_by_position(&self, k: usize) -> (Self, Self) {
        (self.standardized(&self.word[..k]), self.standardized(&self.word[k..]))
    }

    fn standardized(&self, sub: &[usize]) -> Self {
        let mut sorted = sub.to_vec();
        sorted.sort_unstable();
        let word = sub
            .iter()
            .map(|v| sorted.binary_search(v).expect("value of the subword") + 1)
            .collect();
        let vsigns = self
            .vsigns
            .iter()
            .map(|s| sorted.iter().map(|&v| s[v - 1]).collect())
            .collect();
        TuplePermutation { word, vsigns }
    }

    /// The subwords of values up to `k` and above `k`, the latter shifted
    /// down.
    pub fn split_by_value(&self, k: usize) -> (Self, Self) {
        let low = self.word.iter().copied().filter(|&v| v <= k).collect();
        let high = self.word.iter().copied().filter(|&v| v > k).map(|v| v - k).collect();
        let low_signs = self.vsigns.iter().map(|s| s[..k].to_vec()).collect();
        let high_signs = self.vsigns.iter().map(|s| s[k..].to_vec()).collect();
        (
            TuplePermutation { word: low, vsigns: low_signs },
            TuplePermutation { word: high, vsigns: high_signs },
        )
    }

    /// Pairs of values `i < j` with `i` occurring after `j` in the word.
    pub fn coinversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.n();
        let mut pos = vec![0; n + 1];
        for (p, &v) in self.word.iter().enumerate() {
            pos[v] = p;
        }
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if pos[i] > pos[j] {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Right weak order on the words, signatures fixed.
    pub fn weak_leq(&self, other: &Self) -> bool {
        self.coinversions().is_subset(&other.coinversions())
    }
}

impl fmt::Display for TuplePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, &v) in self.word.iter().enumerate() {
            if p > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            for signs in &self.vsigns {
                write!(f, "{}", signs[v - 1].as_char())?;
            }
        }
        Ok(())
    }
}

/// All tuple permutations with the given layer signatures.
pub fn tuple_permutations(vsigns: &[Signature]) -> Vec<TuplePermutation> {
    assert!(!vsigns.is_empty(), "at least one layer is required");
    let n = vsigns[0].len();
    assert!(vsigns.iter().all(|s| s.len() == n), "layers disagree in length");
    camb_core::perm::permutation_words(n)
        .into_iter()
        .map(|word| TuplePermutation { word, vsigns: vsigns.to_vec() })
        .collect()
}
