//! Lattices of tuples and of twin pairs.
//!
//! Both quotients of the weak order have the increasing rotations as
//! cover relations. Order tests go through the minimal words of the
//! fibers, so intervals can be searched without building a lattice; the
//! full diagrams are cached per signature list.

use crate::tuple::{self, all_cambrian_tuples, CambrianTuple};
use crate::twin::{self, twin_pairs, TwinPair};
use camb_core::poset::HasseDiagram;
use camb_core::sign::Signature;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

static TUPLE_CACHE: OnceLock<Mutex<HashMap<Vec<Signature>, Arc<HasseDiagram<CambrianTuple>>>>> =
    OnceLock::new();

pub fn tuple_lattice(signatures: &[Signature]) -> Arc<HasseDiagram<CambrianTuple>> {
    let cache = TUPLE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(signatures) {
        return Arc::clone(found);
    }
    let tuples = all_cambrian_tuples(signatures);
    let index: HashMap<&CambrianTuple, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (lo, t) in tuples.iter().enumerate() {
        for (i, j) in tuple::increasing_rotations(t) {
            covers.push((lo, index[&tuple::rotate(t, i, j)]));
        }
    }
    let lattice = Arc::new(HasseDiagram::from_covers(tuples.clone(), &covers));
    cache
        .lock()
        .unwrap()
        .entry(signatures.to_vec())
        .or_insert(lattice)
        .clone()
}

static PAIR_CACHE: OnceLock<Mutex<HashMap<Signature, Arc<HasseDiagram<TwinPair>>>>> =
    OnceLock::new();

pub fn baxter_lattice(signature: &Signature) -> Arc<HasseDiagram<TwinPair>> {
    let cache = PAIR_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(signature) {
        return Arc::clone(found);
    }
    let pairs = twin_pairs(signature);
    let index: HashMap<&TwinPair, usize> =
        pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut covers = Vec::new();
    for (lo, pair) in pairs.iter().enumerate() {
        for (i, j) in twin::increasing_rotations(pair) {
            covers.push((lo, index[&twin::rotate(pair, i, j)]));
        }
    }
    let lattice = Arc::new(HasseDiagram::from_covers(pairs.clone(), &covers));
    cache
        .lock()
        .unwrap()
        .entry(signature.clone())
        .or_insert(lattice)
        .clone()
}

/// Order of the tuple lattice, through the minimal words of the fibers.
pub fn tuple_leq(a: &CambrianTuple, b: &CambrianTuple) -> bool {
    a.min_linear_extension().weak_leq(&b.min_linear_extension())
}

/// All tuples in the lattice interval between `lo` and `hi`, sorted;
/// empty when the two are not comparable in the right direction.
pub fn tuple_interval(lo: &CambrianTuple, hi: &CambrianTuple) -> Vec<CambrianTuple> {
    assert_eq!(lo.signatures(), hi.signatures());
    if !tuple_leq(lo, hi) {
        return Vec::new();
    }
    let mut seen: BTreeSet<CambrianTuple> = BTreeSet::new();
    seen.insert(lo.clone());
    let mut queue = VecDeque::from([lo.clone()]);
    while let Some(t) = queue.pop_front() {
        for (i, j) in tuple::increasing_rotations(&t) {
            let up = tuple::rotate(&t, i, j);
            if tuple_leq(&up, hi) && seen.insert(up.clone()) {
                queue.push_back(up);
            }
        }
    }
    seen.into_iter().collect()
}

/// Order of the twin pair lattice.
pub fn pair_leq(a: &TwinPair, b: &TwinPair) -> bool {
    a.min_linear_extension().weak_leq(&b.min_linear_extension())
}

/// All pairs in the lattice interval between `lo` and `hi`, sorted.
pub fn pair_interval(lo: &TwinPair, hi: &TwinPair) -> Vec<TwinPair> {
    assert_eq!(lo.signature(), hi.signature());
    if !pair_leq(lo, hi) {
        return Vec::new();
    }
    let mut seen: BTreeSet<TwinPair> = BTreeSet::new();
    seen.insert(lo.clone());
    let mut queue = VecDeque::from([lo.clone()]);
    while let Some(pair) = queue.pop_front() {
        for (i, j) in twin::increasing_rotations(&pair) {
            let up = twin::rotate(&pair, i, j);
            if pair_leq(&up, hi) && seen.insert(up.clone()) {
                queue.push_back(up);
            }
        }
    }
    seen.into_iter().collect()
}
