//! Tuples of Cambrian trees with an acyclic union.
//!
//! All layers share the vertex set and the union of their edge sets must
//! be a directed acyclic graph; its linear extensions form the fiber of
//! the tuple under layerwise insertion. Rotations act layer by layer on a
//! union edge wherever it exists, and the increasing ones are the cover
//! relations of the tuple lattice.

use crate::word::{TupleError, TuplePermutation};
use camb_core::sign::Signature;
use camb_tree::insertion::p_symbol;
use camb_tree::CambrianTree;
use std::collections::BTreeSet;

/// Cambrian trees on a common vertex set whose edge union is acyclic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CambrianTuple {
    trees: Vec<CambrianTree>,
}

impl CambrianTuple {
    pub fn new(trees: Vec<CambrianTree>) -> Result<Self, TupleError> {
        let first = trees.first().ok_or(TupleError::NoLayers)?;
        if trees.iter().any(|t| t.n() != first.n()) {
            return Err(TupleError::LayerMismatch);
        }
        let tuple = CambrianTuple { trees };
        if !tuple.union_is_acyclic() {
            return Err(TupleError::CyclicUnion);
        }
        Ok(tuple)
    }

    pub(crate) fn new_unchecked(trees: Vec<CambrianTree>) -> Self {
        let tuple = CambrianTuple { trees };
        debug_assert!(tuple.union_is_acyclic());
        tuple
    }

    /// The tuple of empty trees with the given number of layers.
    pub fn empty(layers: usize) -> Self {
        assert!(layers > 0, "at least one layer is required");
        CambrianTuple { trees: vec![CambrianTree::empty(); layers] }
    }

    pub fn n(&self) -> usize {
        self.trees[0].n()
    }

    pub fn layers(&self) -> usize {
        self.trees.len()
    }

    pub fn trees(&self) -> &[CambrianTree] {
        &self.trees
    }

    pub fn tree(&self, layer: usize) -> &CambrianTree {
        &self.trees[layer]
    }

    pub fn signatures(&self) -> Vec<Signature> {
        self.trees.iter().map(|t| t.signature().to_vec()).collect()
    }

    /// Union of the layer edge sets, as (child, parent) pairs.
    pub fn union_edges(&self) -> BTreeSet<(usize, usize)> {
        self.trees.iter().flat_map(|t| t.edges()).collect()
    }

    fn union_adjacency(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = self.n();
        let mut children = vec![Vec::new(); n + 1];
        let mut parents = vec![Vec::new(); n + 1];
        for (c, p) in self.union_edges() {
            children[p].push(c);
            parents[c].push(p);
        }
        (children, parents)
    }

    fn union_is_acyclic(&self) -> bool {
        let n = self.n();
        let (children, parents) = self.union_adjacency();
        let mut pending: Vec<usize> = (0..=n).map(|v| children[v].len()).collect();
        let mut ready: Vec<usize> = (1..=n).filter(|&v| pending[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &p in &parents[v] {
                pending[p] -= 1;
                if pending[p] == 0 {
                    ready.push(p);
                }
            }
        }
        seen == n
    }

    /// All linear extensions of the union, in lexicographic order.
    pub fn linear_extensions(&self) -> Vec<TuplePermutation> {
        let n = self.n();
        let (children, parents) = self.union_adjacency();
        let mut pending: Vec<usize> = (0..=n).map(|v| children[v].len()).collect();
        let mut word = Vec::with_capacity(n);
        let mut out = Vec::new();
        self.extend_word(&parents, &mut pending, &mut word, &mut out);
        out
    }

    fn extend_word(
        &self,
        parents: &[Vec<usize>],
        pending: &mut Vec<usize>,
        word: &mut Vec<usize>,
        out: &mut Vec<TuplePermutation>,
    ) {
        let n = self.n();
        if word.len() == n {
            out.push(
                TuplePermutation::new(word.clone(), self.signatures())
                    .expect("extension is a permutation"),
            );
            return;
        }
        for v in 1..=n {
            if pending[v] == 0 {
                pending[v] = usize::MAX;
                for &p in &parents[v] {
                    pending[p] -= 1;
                }
                word.push(v);
                self.extend_word(parents, pending, word, out);
                word.pop();
                for &p in &parents[v] {
                    pending[p] += 1;
                }
                pending[v] = 0;
            }
        }
    }

    fn greedy_extension(&self, smallest: bool) -> TuplePermutation {
        let n = self.n();
        let (children, parents) = self.union_adjacency();
        let mut pending: Vec<usize> = (0..=n).map(|v| children[v].len()).collect();
        let mut word = Vec::with_capacity(n);
        for _ in 0..n {
            let candidates = (1..=n).filter(|&v| pending[v] == 0);
            let v = if smallest {
                candidates.min().expect("acyclic union has an available vertex")
            } else {
                candidates.max().expect("acyclic union has an available vertex")
            };
            pending[v] = usize::MAX;
            for &p in &parents[v] {
                pending[p] -= 1;
            }
            word.push(v);
        }
        TuplePermutation::new(word, self.signatures()).expect("extension is a permutation")
    }

    /// The weak-order minimum of the fiber.
    pub fn min_linear_extension(&self) -> TuplePermutation {
        self.greedy_extension(true)
    }

    /// The weak-order maximum of the fiber.
    pub fn max_linear_extension(&self) -> TuplePermutation {
        self.greedy_extension(false)
    }

    /// Lower sets of the union order, smallest first.
    pub fn union_lower_sets(&self) -> Vec<BTreeSet<usize>> {
        let n = self.n();
        let edges = self.union_edges();
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            let set: BTreeSet<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            if edges.iter().all(|&(c, p)| !set.contains(&p) || set.contains(&c)) {
                out.push(set);
            }
        }
        out.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        out
    }

    /// No proper prefix of the labels is a lower set of the union.
    pub fn is_indecomposable(&self) -> bool {
        let edges = self.union_edges();
        !(1..self.n()).any(|k| edges.iter().all(|&(c, p)| !(p <= k && c > k)))
    }
}

/// Layerwise insertion of a tuple permutation.
pub fn tuple_p_symbol(tau: &TuplePermutation) -> CambrianTuple {
    let trees = (0..tau.layers()).map(|k| p_symbol(&tau.layer(k))).collect();
    CambrianTuple::new_unchecked(trees)
}

/// All tuples with the given layer signatures, by inserting every word.
pub fn all_cambrian_tuples(signatures: &[Signature]) -> Vec<CambrianTuple> {
    let mut seen = BTreeSet::new();
    for tau in crate::word::tuple_permutations(signatures) {
        seen.insert(tuple_p_symbol(&tau));
    }
    seen.into_iter().collect()
}

/// Union edges that are an edge or an incomparable pair in every layer.
pub fn rotatable_edges(tuple: &CambrianTuple) -> Vec<(usize, usize)> {
    tuple
        .union_edges()
        .into_iter()
        .filter(|&(i, j)| {
            tuple.trees().iter().all(|t| {
                t.parents(i).contains(&j) || (!t.reaches_up(i, j) && !t.reaches_up(j, i))
            })
        })
        .collect()
}

/// Rotation of a union edge, layer by layer where the edge exists.
pub fn rotate(tuple: &CambrianTuple, child: usize, parent: usize) -> CambrianTuple {
    let trees = tuple
        .trees()
        .iter()
        .map(|t| {
            if t.parents(child).contains(&parent) {
                camb_tree::rotation::rotate(t, child, parent)
            } else {
                t.clone()
            }
        })
        .collect();
    CambrianTuple::new(trees).expect("rotation of a tuple is a tuple")
}

/// Rotatable edges whose child label is smaller than its parent label.
pub fn increasing_rotations(tuple: &CambrianTuple) -> Vec<(usize, usize)> {
    rotatable_edges(tuple).into_iter().filter(|&(i, j)| i < j).collect()
}
