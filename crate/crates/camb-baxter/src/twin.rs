//! Twin pairs of Cambrian trees.
//!
//! Two trees of the same signature are twins when the edges of the first
//! and the reversed edges of the second fit together without a directed
//! cycle. A pair is stored with both trees upright; turning the second
//! tree upside down yields the equivalent two-layer tuple on opposite
//! signatures, and that conversion is the only bridge between the two
//! conventions.

use crate::tuple::CambrianTuple;
use crate::word::TupleError;
use camb_core::perm::SignedPermutation;
use camb_core::sign::Sign;
use camb_tree::extensions::all_cambrian_trees;
use camb_tree::insertion::p_symbol;
use camb_tree::CambrianTree;
use std::collections::BTreeSet;

/// Two Cambrian trees of one signature whose opposed union is acyclic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TwinPair {
    first: CambrianTree,
    second: CambrianTree,
}

impl TwinPair {
    pub fn new(first: CambrianTree, second: CambrianTree) -> Result<Self, TupleError> {
        if first.signature() != second.signature() {
            return Err(TupleError::LayerMismatch);
        }
        CambrianTuple::new(vec![first.clone(), second.reversed()])?;
        Ok(TwinPair { first, second })
    }

    pub fn empty() -> Self {
        TwinPair { first: CambrianTree::empty(), second: CambrianTree::empty() }
    }

    pub fn first(&self) -> &CambrianTree {
        &self.first
    }

    pub fn second(&self) -> &CambrianTree {
        &self.second
    }

    pub fn n(&self) -> usize {
        self.first.n()
    }

    pub fn signature(&self) -> &[Sign] {
        self.first.signature()
    }

    /// The pair as a two-layer tuple, the second tree turned upside down.
    pub fn to_tuple(&self) -> CambrianTuple {
        CambrianTuple::new_unchecked(vec![self.first.clone(), self.second.reversed()])
    }

    /// Rebuilds a pair from a two-layer tuple on opposite signatures.
    pub fn from_tuple(tuple: &CambrianTuple) -> Result<Self, TupleError> {
        if tuple.layers() != 2 {
            return Err(TupleError::LayerMismatch);
        }
        TwinPair::new(tuple.tree(0).clone(), tuple.tree(1).reversed())
    }

    /// Edges of the first tree with the reversed edges of the second.
    pub fn union_edges(&self) -> BTreeSet<(usize, usize)> {
        self.to_tuple().union_edges()
    }

    /// The words inserting to this pair: linear extensions of the union.
    pub fn fiber(&self) -> Vec<SignedPermutation> {
        self.to_tuple().linear_extensions().iter().map(|t| t.layer(0)).collect()
    }

    pub fn min_linear_extension(&self) -> SignedPermutation {
        self.to_tuple().min_linear_extension().layer(0)
    }

    pub fn max_linear_extension(&self) -> SignedPermutation {
        self.to_tuple().max_linear_extension().layer(0)
    }

    /// No proper prefix of the labels is a lower set of the union.
    pub fn is_indecomposable(&self) -> bool {
        self.to_tuple().is_indecomposable()
    }
}

/// Whether the two trees form a twin pair.
pub fn is_twin(first: &CambrianTree, second: &CambrianTree) -> bool {
    TwinPair::new(first.clone(), second.clone()).is_ok()
}

/// Insertion of the word and of its mirror, as a pair.
pub fn baxter_p_symbol(tau: &SignedPermutation) -> TwinPair {
    let pair = TwinPair { first: p_symbol(tau), second: p_symbol(&tau.mirror()) };
    debug_assert!(is_twin(&pair.first, &pair.second));
    pair
}

/// All twin pairs of a signature, from ordered pairs of its trees.
pub fn twin_pairs(signature: &[Sign]) -> Vec<TwinPair> {
    let trees = all_cambrian_trees(signature);
    let mut out = Vec::new();
    for a in &trees {
        for b in &trees {
            if let Ok(pair) = TwinPair::new(a.clone(), b.clone()) {
                out.push(pair);
            }
        }
    }
    out
}

/// Union edges rotatable in the pair, through its tuple form.
pub fn rotatable_edges(pair: &TwinPair) -> Vec<(usize, usize)> {
    crate::tuple::rotatable_edges(&pair.to_tuple())
}

/// Rotation of a union edge in both trees where it exists.
pub fn rotate(pair: &TwinPair, child: usize, parent: usize) -> TwinPair {
    TwinPair::from_tuple(&crate::tuple::rotate(&pair.to_tuple(), child, parent))
        .expect("rotation of a pair is a pair")
}

/// Rotatable edges whose child label is smaller than its parent label.
pub fn increasing_rotations(pair: &TwinPair) -> Vec<(usize, usize)> {
    rotatable_edges(pair).into_iter().filter(|&(i, j)| i < j).collect()
}

/// Whether two trees have opposite canopies at every interior gap.
pub fn opposite_canopies(a: &CambrianTree, b: &CambrianTree) -> bool {
    a.canopy().iter().zip(b.canopy()).all(|(&x, y)| x != y)
}

/// Tally of the twin and opposite-canopy relations over the ordered tree
/// pairs of one signature.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CanopyTally {
    pub pairs: u64,
    pub twin: u64,
    pub opposite: u64,
    pub twin_and_opposite: u64,
}

pub fn canopy_tally(signature: &[Sign]) -> CanopyTally {
    let trees = all_cambrian_trees(signature);
    let mut tally = CanopyTally::default();
    for a in &trees {
        for b in &trees {
            tally.pairs += 1;
            let twin = is_twin(a, b);
            let opposite = opposite_canopies(a, b);
            tally.twin += twin as u64;
            tally.opposite += opposite as u64;
            tally.twin_and_opposite += (twin && opposite) as u64;
        }
    }
    tally
}
