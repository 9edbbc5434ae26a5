//! Fibers, rewriting classes, and the rotation order for twin pairs.

use camb_baxter::congruence::baxter_congruence_class;
use camb_baxter::lattice::{baxter_lattice, pair_leq};
use camb_baxter::matrix::bc_number;
use camb_baxter::twin::{baxter_p_symbol, increasing_rotations, rotate, TwinPair};
use camb_core::perm::{permutations_with_signature, SignedPermutation};
use camb_core::sign::{all_signatures, format_signature, negate_signature};
use camb_tree::congruence::congruence_class;
use camb_tree::insertion::p_symbol;
use std::collections::BTreeMap;

#[test]
fn insertion_commutes_with_mirror_and_reversal() {
    for n in 0..=5 {
        for s in all_signatures(n) {
            for tau in permutations_with_signature(&s) {
                let flipped =
                    SignedPermutation::new(tau.word().to_vec(), negate_signature(&s)).unwrap();
                assert_eq!(p_symbol(&flipped), p_symbol(&tau.mirror()).reversed());
            }
        }
    }
}

#[test]
fn fibers_are_rewriting_classes_and_partition_the_words() {
    for n in 0..=5 {
        for s in all_signatures(n) {
            let words = permutations_with_signature(&s);
            let mut fibers: BTreeMap<TwinPair, Vec<SignedPermutation>> = BTreeMap::new();
            for tau in &words {
                fibers.entry(baxter_p_symbol(tau)).or_default().push(tau.clone());
            }
            assert_eq!(fibers.len() as u64, bc_number(&s), "{}", format_signature(&s));
            let mut covered = 0;
            for (pair, members) in &fibers {
                covered += members.len();
                let linear = pair.fiber();
                assert_eq!(&linear, members);
                let class: Vec<SignedPermutation> =
                    baxter_congruence_class(&members[0]).into_iter().collect();
                assert_eq!(&class, members);
            }
            assert_eq!(covered, words.len());
        }
    }
}

#[test]
fn classes_are_weak_order_intervals_with_greedy_ends() {
    for n in 0..=5 {
        for s in all_signatures(n) {
            let words = permutations_with_signature(&s);
            for tau in &words {
                let pair = baxter_p_symbol(tau);
                let lo = pair.min_linear_extension();
                let hi = pair.max_linear_extension();
                let fiber = pair.fiber();
                assert!(fiber.contains(&lo) && fiber.contains(&hi));
                for w in &words {
                    let inside = lo.weak_leq(w) && w.weak_leq(&hi);
                    assert_eq!(fiber.contains(w), inside, "{tau} vs {w}");
                }
            }
        }
    }
}

#[test]
fn classes_intersect_the_tree_classes_of_both_mirrors() {
    for n in 0..=5 {
        for s in all_signatures(n) {
            for tau in permutations_with_signature(&s) {
                let both: Vec<SignedPermutation> = congruence_class(&tau)
                    .into_iter()
                    .filter(|w| congruence_class(&tau.mirror()).contains(&w.mirror()))
                    .collect();
                let class: Vec<SignedPermutation> =
                    baxter_congruence_class(&tau).into_iter().collect();
                assert_eq!(class, both, "{tau}");
            }
        }
    }
}

#[test]
fn insertion_is_order_preserving_onto_the_rotation_order() {
    for n in 0..=5 {
        for s in all_signatures(n) {
            for tau in permutations_with_signature(&s) {
                let below = baxter_p_symbol(&tau);
                for upper in tau.weak_covers_up() {
                    assert!(pair_leq(&below, &baxter_p_symbol(&upper)), "{tau} vs {upper}");
                }
            }
        }
    }
}

#[test]
fn rotation_diagrams_are_lattices_ordered_like_the_representatives() {
    for n in 0..=4 {
        for s in all_signatures(n) {
            let diagram = baxter_lattice(&s);
            assert!(diagram.is_lattice(), "{}", format_signature(&s));
            let bottom = diagram.minimum().expect("bounded below");
            let top = diagram.maximum().expect("bounded above");
            let identity: Vec<usize> = (1..=n).collect();
            let reversed: Vec<usize> = (1..=n).rev().collect();
            assert_eq!(diagram.element(bottom).min_linear_extension().word(), &identity[..]);
            assert_eq!(diagram.element(top).max_linear_extension().word(), &reversed[..]);
            for i in 0..diagram.len() {
                for j in 0..diagram.len() {
                    assert_eq!(
                        diagram.leq(i, j),
                        pair_leq(diagram.element(i), diagram.element(j)),
                        "{}: {i} {j}",
                        format_signature(&s)
                    );
                }
            }
        }
    }
}

#[test]
fn increasing_rotations_move_strictly_up() {
    for n in 0..=4 {
        for s in all_signatures(n) {
            for tau in permutations_with_signature(&s) {
                let pair = baxter_p_symbol(&tau);
                for (child, parent) in increasing_rotations(&pair) {
                    let rotated = rotate(&pair, child, parent);
                    assert_ne!(rotated, pair);
                    assert!(pair_leq(&pair, &rotated));
                    assert!(!rotated.union_edges().contains(&(child, parent)));
                    assert!(rotated.union_edges().contains(&(parent, child)));
                }
            }
        }
    }
}
