//! Orders on the trees of one signature.
//!
//! An edge contraction with all child labels below the parent labels moves
//! up, one with all parent labels below moves down, and an interleaved one
//! relates nothing. The rotation order is the transitive closure of these
//! moves; the contraction order closes `tree < contracted` for every edge.

use crate::insertion::all_schroder_trees;
use crate::tree::{ContractionKind, SchroderTree};
use camb_core::poset::HasseDiagram;
use camb_core::sign::Signature;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn poset_from_arcs(
    trees: Vec<SchroderTree>,
    arcs: &[(usize, usize)],
) -> HasseDiagram<SchroderTree> {
    let k = trees.len();
    let mut next = vec![Vec::new(); k];
    for &(a, b) in arcs {
        next[a].push(b);
    }
    let mut reach = vec![vec![false; k]; k];
    for start in 0..k {
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &next[v] {
                if !reach[start][w] {
                    reach[start][w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let index: HashMap<&SchroderTree, usize> =
        trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let leq = |a: &SchroderTree, b: &SchroderTree| a == b || reach[index[a]][index[b]];
    HasseDiagram::from_relation(trees.clone(), leq)
}

static ROTATION_CACHE: OnceLock<Mutex<HashMap<Signature, Arc<HasseDiagram<SchroderTree>>>>> =
    OnceLock::new();

pub fn schroder_lattice(signature: &Signature) -> Arc<HasseDiagram<SchroderTree>> {
    let cache = ROTATION_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(signature) {
        return Arc::clone(found);
    }
    let trees = all_schroder_trees(signature);
    let index: HashMap<&SchroderTree, usize> =
        trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut arcs = Vec::new();
    for (i, tree) in trees.iter().enumerate() {
        for &(c, p) in tree.edges() {
            let j = index[&tree.contract(c, p)];
            match tree.contraction_kind(c, p) {
                ContractionKind::Increasing => arcs.push((i, j)),
                ContractionKind::Decreasing => arcs.push((j, i)),
                ContractionKind::NonMonotone => {}
            }
        }
    }
    let lattice = Arc::new(poset_from_arcs(trees, &arcs));
    cache
        .lock()
        .unwrap()
        .entry(signature.clone())
        .or_insert(lattice)
        .clone()
}

static CONTRACTION_CACHE: OnceLock<Mutex<HashMap<Signature, Arc<HasseDiagram<SchroderTree>>>>> =
    OnceLock::new();

pub fn contraction_poset(signature: &Signature) -> Arc<HasseDiagram<SchroderTree>> {
    let cache = CONTRACTION_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(signature) {
        return Arc::clone(found);
    }
    let trees = all_schroder_trees(signature);
    let index: HashMap<&SchroderTree, usize> =
        trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut arcs = Vec::new();
    for (i, tree) in trees.iter().enumerate() {
        for &(c, p) in tree.edges() {
            arcs.push((i, index[&tree.contract(c, p)]));
        }
    }
    let poset = Arc::new(poset_from_arcs(trees, &arcs));
    cache
        .lock()
        .unwrap()
        .entry(signature.clone())
        .or_insert(poset)
        .clone()
}

pub fn schroder_leq(a: &SchroderTree, b: &SchroderTree) -> bool {
    if a.signature() != b.signature() {
        return false;
    }
    let lattice = schroder_lattice(&a.signature().to_vec());
    let (i, j) = (
        lattice.index_of(a).expect("tree of its signature"),
        lattice.index_of(b).expect("tree of its signature"),
    );
    lattice.leq(i, j)
}

/// All trees of the rotation order interval between two trees.
pub fn schroder_interval(lo: &SchroderTree, hi: &SchroderTree) -> Vec<SchroderTree> {
    let lattice = schroder_lattice(&lo.signature().to_vec());
    let (i, j) = (
        lattice.index_of(lo).expect("tree of its signature"),
        lattice.index_of(hi).expect("tree of its signature"),
    );
    lattice
        .interval(i, j)
        .into_iter()
        .map(|t| lattice.element(t).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::{max_fiber, min_fiber, p_star_symbol};
    use camb_core::notation::{parse_signature, parse_signed_partition};

    #[test]
    fn two_element_ground_set_gives_a_chain() {
        let sig = parse_signature("+-").unwrap();
        let lattice = schroder_lattice(&sig);
        assert_eq!(lattice.len(), 3);
        assert!(lattice.is_lattice());
        let bottom = p_star_symbol(&parse_signed_partition("1+/2-").unwrap());
        let top = p_star_symbol(&parse_signed_partition("2-/1+").unwrap());
        assert_eq!(lattice.element(lattice.minimum().unwrap()), &bottom);
        assert_eq!(lattice.element(lattice.maximum().unwrap()), &top);
        assert_eq!(schroder_interval(&bottom, &top).len(), 3);
    }

    #[test]
    fn extremes_insert_the_identity_partitions() {
        for sig in camb_core::sign::all_signatures(3) {
            let lattice = schroder_lattice(&sig);
            assert!(lattice.is_lattice());
            let bottom = lattice.element(lattice.minimum().unwrap());
            let top = lattice.element(lattice.maximum().unwrap());
            assert_eq!(min_fiber(bottom).partition().to_word(), Some(vec![1, 2, 3]));
            assert_eq!(max_fiber(top).partition().to_word(), Some(vec![3, 2, 1]));
        }
    }
}
