//! The Cambrian lattice of a signature.
//!
//! Elements are the trees of the signature, covers are increasing
//! rotations, and the order is the one induced from the weak order through
//! the insertion map. Lattices are cached per signature; the order test
//! and interval search below work without building the whole lattice.

use crate::extensions::{all_cambrian_trees, min_linear_extension};
use crate::rotation::{increasing_rotations, rotate};
use crate::tree::CambrianTree;
use camb_core::poset::HasseDiagram;
use camb_core::sign::Signature;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

static CACHE: OnceLock<Mutex<HashMap<Signature, Arc<HasseDiagram<CambrianTree>>>>> =
    OnceLock::new();

pub fn cambrian_lattice(signature: &Signature) -> Arc<HasseDiagram<CambrianTree>> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(signature) {
        return Arc::clone(found);
    }
    let trees = all_cambrian_trees(signature);
    let index: HashMap<&CambrianTree, usize> =
        trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (lo, tree) in trees.iter().enumerate() {
        for (i, j) in increasing_rotations(tree) {
            covers.push((lo, index[&rotate(tree, i, j)]));
        }
    }
    let lattice = Arc::new(HasseDiagram::from_covers(trees.clone(), &covers));
    cache
        .lock()
        .unwrap()
        .entry(signature.clone())
        .or_insert(lattice)
        .clone()
}

/// Order of the Cambrian lattice, through the minimal words of the fibers.
pub fn tree_leq(a: &CambrianTree, b: &CambrianTree) -> bool {
    min_linear_extension(a).weak_leq(&min_linear_extension(b))
}

/// All trees in the lattice interval between `lo` and `hi`, in sorted
/// order; empty when the two are not comparable in the right direction.
pub fn tree_interval(lo: &CambrianTree, hi: &CambrianTree) -> Vec<CambrianTree> {
    assert_eq!(lo.signature(), hi.signature());
    if !tree_leq(lo, hi) {
        return Vec::new();
    }
    let mut seen: BTreeSet<CambrianTree> = BTreeSet::new();
    seen.insert(lo.clone());
    let mut queue = VecDeque::from([lo.clone()]);
    while let Some(tree) = queue.pop_front() {
        for (i, j) in increasing_rotations(&tree) {
            let up = rotate(&tree, i, j);
            if tree_leq(&up, hi) && seen.insert(up.clone()) {
                queue.push_back(up);
            }
        }
    }
    seen.into_iter().collect()
}
