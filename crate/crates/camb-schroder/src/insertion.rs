//! Insertion of signed ordered partitions.
//!
//! The columns of a partition are scanned one level at a time. A level
//! splits into nodes wherever a wall of another column crosses it; each new
//! node gathers the dangling strands visible between its boundary walls and
//! hangs them below itself, then leaves one new strand per upper slot. The
//! producer of a gathered strand becomes a child of the gathering node.

use crate::tree::SchroderTree;
use camb_core::partition::SignedOrderedPartition;
use camb_core::sign::{Sign, Signature};
use std::collections::BTreeSet;

/// The tree of a partition together with the level of each node, aligned
/// with the canonical node order of the tree.
pub fn leveled_p_star_symbol(lambda: &SignedOrderedPartition) -> (SchroderTree, Vec<usize>) {
    let n = lambda.n();
    if n == 0 {
        return (SchroderTree::empty(), Vec::new());
    }
    let sig = lambda.signature();
    let level = |v: usize| lambda.partition().part_index(v) + 1;
    let is_neg = |v: usize| sig[v - 1] == Sign::Neg;

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut node_level: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Dangling strands: gap position and producing node, if any. Gap g sits
    // between columns g and g + 1; the walls 0 and n + 1 are sentinels.
    let mut strands: Vec<(usize, Option<usize>)> = vec![(0, None)];
    for c in 1..=n {
        if is_neg(c) {
            strands.push((c, None));
        }
    }

    for i in 1..=lambda.num_parts() {
        let dots = lambda.partition().part(i - 1);
        let crosses = |c: usize| if is_neg(c) { level(c) > i } else { level(c) < i };
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for &d in &dots {
            match runs.last_mut() {
                Some(run) if !(run.last().copied().expect("nonempty run") + 1..d).any(crosses) => {
                    run.push(d)
                }
                _ => runs.push(vec![d]),
            }
        }
        for block in runs {
            let v = blocks.len();
            let lo = block[0];
            let hi = *block.last().expect("nonempty block");
            let lower_wall = |c: usize| if is_neg(c) { level(c) >= i } else { level(c) < i };
            let left = (1..lo).rev().find(|&c| lower_wall(c)).unwrap_or(0);
            let right = (hi + 1..=n).find(|&c| lower_wall(c)).unwrap_or(n + 1);
            let mut kept = Vec::new();
            for (gap, producer) in strands.drain(..) {
                if left <= gap && gap < right {
                    if let Some(u) = producer {
                        edges.push((u, v));
                    }
                } else {
                    kept.push((gap, producer));
                }
            }
            strands = kept;
            let upper_wall = |c: usize| if is_neg(c) { level(c) > i } else { level(c) <= i };
            let left_up = (1..lo).rev().find(|&c| upper_wall(c)).unwrap_or(0);
            strands.push((left_up, Some(v)));
            for &c in block.iter().filter(|&&c| !is_neg(c)) {
                strands.push((c, Some(v)));
            }
            blocks.push(block);
            node_level.push(i);
        }
    }

    let tree = SchroderTree::new(sig.to_vec(), blocks.clone(), edges).expect("insertion is valid");
    let mut levels = vec![0; blocks.len()];
    for (block, lvl) in blocks.iter().zip(&node_level) {
        levels[tree.node_of(block[0])] = *lvl;
    }
    (tree, levels)
}

pub fn p_star_symbol(lambda: &SignedOrderedPartition) -> SchroderTree {
    leveled_p_star_symbol(lambda).0
}

/// Inverse of the leveled insertion: parts are the unions of the blocks at
/// each level.
pub fn partition_from_leveled(tree: &SchroderTree, levels: &[usize]) -> SignedOrderedPartition {
    let top = levels.iter().copied().max().unwrap_or(0);
    let mut parts = vec![Vec::new(); top];
    for (node, &lvl) in levels.iter().enumerate() {
        parts[lvl - 1].extend(tree.node(node).iter().copied());
    }
    SignedOrderedPartition::from_parts(&parts, tree.signature().to_vec())
        .expect("levels cover the ground set")
}

pub fn all_signed_ordered_partitions(signature: &[Sign]) -> Vec<SignedOrderedPartition> {
    camb_core::partition::all_ordered_partitions(signature.len())
        .into_iter()
        .map(|p| SignedOrderedPartition::new(p, signature.to_vec()).expect("matching length"))
        .collect()
}

pub fn all_schroder_trees(signature: &[Sign]) -> Vec<SchroderTree> {
    let mut seen = BTreeSet::new();
    for lambda in all_signed_ordered_partitions(signature) {
        seen.insert(p_star_symbol(&lambda));
    }
    seen.into_iter().collect()
}

/// All partitions inserting to the given tree: the node blocks are spread
/// over levels so that every edge moves strictly up, one choice of a
/// nonempty antichain of minimal nodes per level.
pub fn fiber(tree: &SchroderTree) -> Vec<SignedOrderedPartition> {
    let k = tree.num_nodes();
    if k == 0 {
        return vec![SignedOrderedPartition::from_parts(&[], Vec::new()).expect("empty")];
    }
    assert!(k < 32, "node count too large for fiber enumeration");
    let children: Vec<Vec<usize>> = (0..k).map(|i| tree.children(i)).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(u32, Vec<u32>)> = vec![(0, Vec::new())];
    while let Some((used, parts)) = stack.pop() {
        if used == (1 << k) - 1 {
            let value_parts: Vec<Vec<usize>> = parts
                .iter()
                .map(|mask| {
                    (0..k)
                        .filter(|v| mask >> v & 1 == 1)
                        .flat_map(|v| tree.node(v).iter().copied())
                        .collect()
                })
                .collect();
            out.push(
                SignedOrderedPartition::from_parts(&value_parts, tree.signature().to_vec())
                    .expect("parts partition the ground set"),
            );
            continue;
        }
        let minimal: Vec<usize> = (0..k)
            .filter(|&v| {
                used >> v & 1 == 0 && children[v].iter().all(|&c| used >> c & 1 == 1)
            })
            .collect();
        for pick in 1u32..(1 << minimal.len()) {
            let mask: u32 = minimal
                .iter()
                .enumerate()
                .filter(|(t, _)| pick >> t & 1 == 1)
                .map(|(_, &v)| 1 << v)
                .sum();
            let mut parts = parts.clone();
            parts.push(mask);
            stack.push((used | mask, parts));
        }
    }
    out.sort_unstable();
    out
}

/// Nodes as singleton parts in linear order, incomparable nodes taken
/// smaller labels first.
pub fn min_fiber(tree: &SchroderTree) -> SignedOrderedPartition {
    extreme_fiber(tree, true)
}

/// Nodes as singleton parts in linear order, incomparable nodes taken
/// larger labels first.
pub fn max_fiber(tree: &SchroderTree) -> SignedOrderedPartition {
    extreme_fiber(tree, false)
}

fn extreme_fiber(tree: &SchroderTree, small_first: bool) -> SignedOrderedPartition {
    let k = tree.num_nodes();
    let mut arcs = vec![Vec::new(); k];
    let mut indegree = vec![0; k];
    for u in 0..k {
        for v in 0..k {
            if u == v {
                continue;
            }
            let first = if tree.below(u, v) {
                true
            } else if tree.below(v, u) {
                false
            } else {
                // Incomparable blocks never interleave.
                (tree.node(u).last() < tree.node(v).first()) == small_first
            };
            if first {
                arcs[u].push(v);
                indegree[v] += 1;
            }
        }
    }
    let mut order = Vec::new();
    let mut ready: Vec<usize> = (0..k).filter(|&v| indegree[v] == 0).collect();
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in &arcs[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(w);
            }
        }
    }
    assert_eq!(order.len(), k, "extreme fiber order is acyclic");
    let parts: Vec<Vec<usize>> = order.iter().map(|&v| tree.node(v).to_vec()).collect();
    SignedOrderedPartition::from_parts(&parts, tree.signature().to_vec())
        .expect("singleton node parts")
}
