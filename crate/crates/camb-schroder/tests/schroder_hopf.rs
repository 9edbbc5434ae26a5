//! The tree algebra against the partition-level oracles, the worked four
//! and two letter examples, representative independence of the dual
//! operations, and canopy class sums.

use std::collections::BTreeSet;

use camb_core::notation::parse_signed_partition;
use camb_core::partition::SignedOrderedPartition;
use camb_core::perm::permutations_with_signature;
use camb_core::sign::{all_signatures, Trit};
use camb_hopf::cambrian;
use camb_schroder::hopf::{
    all_canopies, p_coproduct_basis, p_product, p_product_basis, p_tensor_to_f, p_to_f,
    p_to_f_linear, part_f_coproduct, part_f_product, part_g_coproduct_basis, part_g_product_basis,
    project_g, project_g_tensor, q_coproduct_basis, q_product_basis, trilean_x, Element,
};
use camb_schroder::insertion::{all_schroder_trees, fiber, min_fiber, p_star_symbol};
use camb_schroder::tree::SchroderTree;
use camb_tree::tree::CambrianTree;
use num_bigint::BigInt;

fn ps(s: &str) -> SignedOrderedPartition {
    parse_signed_partition(s).unwrap()
}

fn pt(s: &str) -> SchroderTree {
    p_star_symbol(&ps(s))
}

fn one() -> BigInt {
    BigInt::from(1)
}

#[test]
fn products_expand_like_the_partition_shuffles() {
    for n1 in 1..=3usize {
        for n2 in 1..=3usize {
            if n1 + n2 > 4 {
                continue;
            }
            for sig1 in all_signatures(n1) {
                for sig2 in all_signatures(n2) {
                    for s in all_schroder_trees(&sig1) {
                        for t in all_schroder_trees(&sig2) {
                            let product = p_to_f_linear(&p_product_basis(&s, &t));
                            let oracle = part_f_product(&p_to_f(&s), &p_to_f(&t));
                            assert_eq!(product, oracle);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn coproducts_split_like_the_partition_levels() {
    for n in 0..=4usize {
        for sig in all_signatures(n) {
            for t in all_schroder_trees(&sig) {
                let coproduct = p_tensor_to_f(&p_coproduct_basis(&t));
                let oracle = part_f_coproduct(&p_to_f(&t));
                assert_eq!(coproduct, oracle);
            }
        }
    }
}

#[test]
fn worked_product_example_spans_three_fibers() {
    let left = pt("1-2+");
    let right = pt("1+3-/2-4+");
    let product = p_product_basis(&left, &right);
    assert_eq!(product.len(), 3);
    let mut groups: Vec<BTreeSet<SignedOrderedPartition>> = Vec::new();
    for (tree, coeff) in product.iter() {
        assert_eq!(coeff, &one());
        groups.push(fiber(tree).into_iter().collect());
    }
    let fibers: [&[&str]; 3] = [
        &[
            "1-2+/3+/5-/4-6+",
            "1-2+/3+5-/4-6+",
            "1-2+/5-/3+/4-6+",
            "1-2+5-/3+/4-6+",
            "5-/1-2+/3+/4-6+",
        ],
        &["1-2+3+/5-/4-6+", "1-2+3+5-/4-6+", "5-/1-2+3+/4-6+"],
        &[
            "3+/1-2+/5-/4-6+",
            "3+/1-2+5-/4-6+",
            "3+/5-/1-2+/4-6+",
            "3+5-/1-2+/4-6+",
            "5-/3+/1-2+/4-6+",
            "3+/5-/1-2+4-6+",
            "3+5-/1-2+4-6+",
            "5-/3+/1-2+4-6+",
            "3+/5-/4-6+/1-2+",
            "3+5-/4-6+/1-2+",
            "5-/3+/4-6+/1-2+",
        ],
    ];
    let mut expected: Vec<BTreeSet<SignedOrderedPartition>> = fibers
        .iter()
        .map(|group| group.iter().map(|s| ps(s)).collect())
        .collect();
    groups.sort();
    expected.sort();
    assert_eq!(groups, expected);
    assert_eq!(groups.iter().map(BTreeSet::len).sum::<usize>(), 19);
}

#[test]
fn worked_coproduct_example_lists_the_level_cuts() {
    let tree = pt("1+3-/2-4+");
    let pair = pt("1-2+");
    let coproduct = p_coproduct_basis(&tree);
    let expected = [
        (SchroderTree::empty(), tree.clone()),
        (pt("1+"), pt("2-/1-3+")),
        (pt("1-"), pt("1+/2-3+")),
        (pt("1+/2-"), pair.clone()),
        (pt("1+2-"), pair.clone()),
        (pt("2-/1+"), pair.clone()),
        (tree.clone(), SchroderTree::empty()),
    ];
    assert_eq!(coproduct.len(), expected.len());
    for entry in &expected {
        assert_eq!(coproduct.coefficient(entry), one());
    }
    assert_eq!(p_tensor_to_f(&coproduct).len(), 11);
}

#[test]
fn worked_dual_product_example_reinserts_the_convolutions() {
    let left = pt("1-2+");
    let right = pt("1+3-/2-4+");
    let product = q_product_basis(&left, &right);
    let representatives = [
        "1-2+/3+5-/4-6+",
        "1-3+/2+5-/4-6+",
        "1-4+/2+5-/3-6+",
        "1-5+/2+4-/3-6+",
        "1-6+/2+4-/3-5+",
        "2-3+/1+5-/4-6+",
        "2-4+/1+5-/3-6+",
        "2-5+/1+4-/3-6+",
        "2-6+/1+4-/3-5+",
        "3-4+/1+5-/2-6+",
        "3-5+/1+4-/2-6+",
        "3-6+/1+4-/2-5+",
        "4-5+/1+3-/2-6+",
        "4-6+/1+3-/2-5+",
        "5-6+/1+3-/2-4+",
    ];
    assert_eq!(product.len(), representatives.len());
    for s in representatives {
        assert_eq!(product.coefficient(&pt(s)), one(), "missing {s}");
    }
}

#[test]
fn worked_dual_coproduct_example_splits_by_values() {
    let tree = pt("1+3-/2-4+");
    let coproduct = q_coproduct_basis(&tree);
    let expected = [
        (SchroderTree::empty(), tree.clone()),
        (pt("1+"), pt("2-/1-3+")),
        (pt("1+/2-"), pt("1-/2+")),
        (pt("1+3-/2-"), pt("1+")),
        (tree.clone(), SchroderTree::empty()),
    ];
    assert_eq!(coproduct.len(), expected.len());
    for entry in &expected {
        assert_eq!(coproduct.coefficient(entry), one());
    }
}

#[test]
fn dual_operations_ignore_the_fiber_representative() {
    for n1 in 1..=2usize {
        for n2 in 1..=2usize {
            if n1 + n2 > 3 {
                continue;
            }
            for sig1 in all_signatures(n1) {
                for sig2 in all_signatures(n2) {
                    for s in all_schroder_trees(&sig1) {
                        for t in all_schroder_trees(&sig2) {
                            let want = q_product_basis(&s, &t);
                            for lambda in fiber(&s) {
                                for mu in fiber(&t) {
                                    let got =
                                        project_g(&part_g_product_basis(&lambda, &mu));
                                    assert_eq!(got, want);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for n in 0..=3usize {
        for sig in all_signatures(n) {
            for t in all_schroder_trees(&sig) {
                let want = q_coproduct_basis(&t);
                for lambda in fiber(&t) {
                    let got = project_g_tensor(&part_g_coproduct_basis(&lambda));
                    assert_eq!(got, want);
                }
            }
        }
    }
}

#[test]
fn canopy_class_sums_cover_every_tree_once() {
    for n in 1..=4usize {
        let mut total = Element::zero();
        for chi in all_canopies(n) {
            total.add_assign(&trilean_x(&chi));
        }
        let mut count = 0usize;
        for sig in all_signatures(n) {
            for tree in all_schroder_trees(&sig) {
                assert_eq!(total.coefficient(&tree), one());
                count += 1;
            }
        }
        assert_eq!(total.len(), count);
    }
}

#[test]
fn canopy_class_products_reexpand_with_positive_coefficients() {
    for (n1, n2) in [(1usize, 1usize), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)] {
        for chi1 in all_canopies(n1) {
            for chi2 in all_canopies(n2) {
                let mut rest = p_product(&trilean_x(&chi1), &trilean_x(&chi2));
                let mut rounds = 0;
                while !rest.is_zero() {
                    rounds += 1;
                    assert!(rounds <= 400, "expansion does not terminate");
                    let (tree, coeff) = {
                        let (t, c) = rest.iter().next().expect("nonzero element");
                        (t.clone(), c.clone())
                    };
                    assert!(coeff > BigInt::from(0), "negative canopy coefficient");
                    let mut piece = trilean_x(&tree.canopy());
                    piece.scale(&coeff);
                    rest.sub_assign(&piece);
                }
            }
        }
    }
}

#[test]
fn only_the_fused_tree_has_an_all_zero_canopy() {
    for n in 1..=4usize {
        for sig in all_signatures(n) {
            for tree in all_schroder_trees(&sig) {
                let zero = tree.canopy().iter().all(|t| *t == Trit::Zero);
                assert_eq!(zero, tree == SchroderTree::single_node(&sig));
            }
        }
    }
}

fn to_binary(tree: &SchroderTree) -> CambrianTree {
    camb_tree::insertion::p_symbol(&min_fiber(tree).to_permutation().expect("singleton parts"))
}

#[test]
fn permutation_fibers_collapse_to_binary_insertion() {
    for n in 0..=4usize {
        for sig in all_signatures(n) {
            for perm in permutations_with_signature(&sig) {
                let fine = p_star_symbol(&SignedOrderedPartition::from_permutation(&perm));
                assert_eq!(fine.num_nodes(), n);
                assert!(fine.nodes().iter().all(|b| b.len() == 1));
                let value_edges: BTreeSet<(usize, usize)> = fine
                    .edges()
                    .iter()
                    .map(|&(c, p)| (fine.node(c)[0], fine.node(p)[0]))
                    .collect();
                let binary = camb_tree::insertion::p_symbol(&perm);
                let binary_edges: BTreeSet<(usize, usize)> =
                    binary.edges().into_iter().collect();
                assert_eq!(value_edges, binary_edges);
            }
        }
    }
}

#[test]
fn finest_tree_products_restrict_to_the_binary_product() {
    for (n1, n2) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)] {
        for sig1 in all_signatures(n1) {
            for sig2 in all_signatures(n2) {
                for s in all_schroder_trees(&sig1).iter().filter(|t| t.num_nodes() == n1) {
                    for t in all_schroder_trees(&sig2).iter().filter(|t| t.num_nodes() == n2) {
                        let fine = p_product_basis(s, t);
                        let mut restricted = cambrian::Element::zero();
                        for (u, c) in fine.iter() {
                            if u.num_nodes() == n1 + n2 {
                                restricted.add_term(to_binary(u), c.clone());
                            }
                        }
                        let coarse = cambrian::p_product_basis(&to_binary(s), &to_binary(t));
                        assert_eq!(restricted, coarse);
                    }
                }
            }
        }
    }
}
