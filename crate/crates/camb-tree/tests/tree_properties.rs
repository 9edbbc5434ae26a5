//! Structural laws of insertion, rotation, and the congruence.

use camb_core::perm::permutations_with_signature;
use camb_core::sign::{all_signatures, Sign};
use camb_core::SignedPermutation;
use camb_tree::congruence::congruence_class;
use camb_tree::extensions::{
    all_cambrian_trees, linear_extensions, max_linear_extension, min_linear_extension,
};
use camb_tree::lattice::{cambrian_lattice, tree_leq};
use camb_tree::rotation::{increasing_rotations, rotate};
use camb_tree::{leveled_p_symbol, p_symbol};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn arb_signed_permutation(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let word = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
            let signs = proptest::collection::vec(prop_oneof![Just(Sign::Neg), Just(Sign::Pos)], n);
            (word, signs)
        })
        .prop_map(|(word, vsign)| SignedPermutation::new(word, vsign).expect("valid word"))
}

proptest! {
    #[test]
    fn insertion_is_valid_and_leveled_insertion_invertible(tau in arb_signed_permutation(7)) {
        let leveled = leveled_p_symbol(&tau);
        prop_assert_eq!(leveled.tree.validate(), Ok(()));
        prop_assert_eq!(leveled.to_permutation(), tau);
    }

    #[test]
    fn recoils_equal_canopy_of_insertion(tau in arb_signed_permutation(7)) {
        prop_assert_eq!(tau.recoils(), p_symbol(&tau).canopy());
    }

    #[test]
    fn rotations_move_one_step_up(tau in arb_signed_permutation(6)) {
        let tree = p_symbol(&tau);
        for (i, j) in increasing_rotations(&tree) {
            let up = rotate(&tree, i, j);
            prop_assert!(tree_leq(&tree, &up));
            prop_assert!(!tree_leq(&up, &tree));
            prop_assert_eq!(rotate(&up, j, i), tree.clone());
        }
    }

    #[test]
    fn fiber_is_weak_interval(tau in arb_signed_permutation(5)) {
        let tree = p_symbol(&tau);
        let lo = min_linear_extension(&tree);
        let hi = max_linear_extension(&tree);
        let fiber: BTreeSet<SignedPermutation> = linear_extensions(&tree).into_iter().collect();
        for word in permutations_with_signature(tau.signature()) {
            let inside = lo.weak_leq(&word) && word.weak_leq(&hi);
            prop_assert_eq!(inside, fiber.contains(&word));
        }
    }
}

#[test]
fn fibers_partition_all_words() {
    for sig in all_signatures(5) {
        let mut seen = 0usize;
        for tree in all_cambrian_trees(&sig) {
            let fiber = linear_extensions(&tree);
            seen += fiber.len();
            for tau in &fiber {
                assert_eq!(p_symbol(tau), tree);
                assert_eq!(
                    congruence_class(tau),
                    fiber.iter().cloned().collect::<BTreeSet<_>>()
                );
            }
        }
        assert_eq!(seen, 120);
    }
}

#[test]
fn cambrian_lattice_is_a_weak_order_quotient() {
    for sig in all_signatures(4) {
        let lattice = cambrian_lattice(&sig);
        for a in permutations_with_signature(&sig) {
            for b in permutations_with_signature(&sig) {
                if a.weak_leq(&b) {
                    let ta = lattice.index_of(&p_symbol(&a)).unwrap();
                    let tb = lattice.index_of(&p_symbol(&b)).unwrap();
                    assert!(lattice.leq(ta, tb));
                }
            }
        }
    }
}

#[test]
fn bottom_and_top_of_the_lattice_are_extreme_insertions() {
    for sig in all_signatures(5) {
        let lattice = cambrian_lattice(&sig);
        let identity: Vec<usize> = (1..=5).collect();
        let bottom = p_symbol(&SignedPermutation::new(identity.clone(), sig.clone()).unwrap());
        let top = p_symbol(
            &SignedPermutation::new(identity.iter().rev().copied().collect(), sig.clone()).unwrap(),
        );
        assert_eq!(lattice.minimum(), lattice.index_of(&bottom));
        assert_eq!(lattice.maximum(), lattice.index_of(&top));
    }
}
