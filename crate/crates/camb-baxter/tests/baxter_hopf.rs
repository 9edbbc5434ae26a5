//! Product, coproduct, dual basis, and multiplicative bases on twin pairs,
//! checked against the word-level shuffle and convolution oracles.

use camb_baxter::hopf::{
    baxter_e_to_p, baxter_h_to_p, baxter_p_coproduct_basis, baxter_p_product,
    baxter_p_product_basis, baxter_p_tensor_to_f, baxter_p_to_f, baxter_p_to_f_linear,
    baxter_product_ends, baxter_project_g, baxter_project_g_tensor, baxter_q_coproduct_basis,
    baxter_q_product_basis, PairElement,
};
use camb_baxter::twin::{baxter_p_symbol, twin_pairs, TwinPair};
use camb_core::notation::parse_signed_permutation;
use camb_core::sign::{all_signatures, alternating_signature, constant_signature, Sign};
use camb_hopf::fqsym::{f_coproduct, f_product, g_coproduct_basis, g_product_basis};
use camb_tree::insertion::p_symbol;
use camb_tree::tree::CambrianTree;
use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet};

fn pair_of(s: &str) -> TwinPair {
    baxter_p_symbol(&parse_signed_permutation(s).unwrap())
}

fn word_string(tau: &camb_core::perm::SignedPermutation) -> String {
    tau.word().iter().map(|v| v.to_string()).collect()
}

fn all_pairs_of_size(n: usize) -> Vec<TwinPair> {
    all_signatures(n).flat_map(|s| twin_pairs(&s)).collect()
}

#[test]
fn worked_product_example_expands_into_five_fiber_groups() {
    let a = pair_of("2+ 1-");
    let b = pair_of("2+ 3- 1+ 4-");
    let b_words: BTreeSet<String> = b.fiber().iter().map(word_string).collect();
    assert_eq!(b_words, BTreeSet::from(["2314".into(), "2341".into()]));

    let product = baxter_p_product_basis(&a, &b);
    assert_eq!(product.len(), 5);
    assert!(product.iter().all(|(_, c)| *c == BigInt::from(1)));

    let expected: BTreeSet<BTreeSet<&str>> = [
        BTreeSet::from(["214536", "241536", "245136", "214563", "241563", "245163", "245613"]),
        BTreeSet::from(["245316", "245361", "245631"]),
        BTreeSet::from([
            "421536", "425136", "421563", "425163", "425613", "452136", "452163", "452613",
            "456213",
        ]),
        BTreeSet::from(["425316", "425361", "425631", "452316", "452361", "452631", "456231"]),
        BTreeSet::from(["453216", "453261", "453621", "456321"]),
    ]
    .into();
    let groups: BTreeSet<BTreeSet<String>> = product
        .support()
        .map(|p| p.fiber().iter().map(word_string).collect())
        .collect();
    let groups: BTreeSet<BTreeSet<&str>> = groups
        .iter()
        .map(|g| g.iter().map(String::as_str).collect())
        .collect();
    assert_eq!(groups, expected);

    let f = baxter_p_to_f_linear(&product);
    assert_eq!(f.len(), 30);
    let combined: Vec<Sign> = "-+++--".chars().map(|c| Sign::from_char(c).unwrap()).collect();
    assert!(f.support().all(|w| w.signature() == &combined[..]));
}

#[test]
fn coproduct_cuts_along_the_six_lower_sets() {
    let b = pair_of("2+ 3- 1+ 4-");
    assert_eq!(b.to_tuple().union_lower_sets().len(), 6);

    let coproduct = baxter_p_coproduct_basis(&b);
    assert_eq!(coproduct.len(), 8);
    assert!(coproduct.iter().all(|(_, c)| *c == BigInt::from(1)));

    let mut rights_per_left: BTreeMap<TwinPair, usize> = BTreeMap::new();
    for ((left, _), _) in coproduct.iter() {
        *rights_per_left.entry(left.clone()).or_default() += 1;
    }
    let mut counts: Vec<usize> = rights_per_left.into_values().collect();
    counts.sort();
    assert_eq!(counts, [1, 1, 1, 1, 2, 2]);

    assert_eq!(baxter_p_tensor_to_f(&coproduct), f_coproduct(&baxter_p_to_f(&b)));
}

#[test]
fn products_and_coproducts_match_the_word_oracle() {
    for total in 0..=5 {
        for n1 in 0..=total {
            let n2 = total - n1;
            for p in all_pairs_of_size(n1) {
                for q in all_pairs_of_size(n2) {
                    let product = baxter_p_product_basis(&p, &q);
                    let oracle = f_product(&baxter_p_to_f(&p), &baxter_p_to_f(&q));
                    assert_eq!(baxter_p_to_f_linear(&product), oracle, "{p:?} times {q:?}");
                }
            }
        }
    }
    for n in 0..=5 {
        for p in all_pairs_of_size(n) {
            let coproduct = baxter_p_coproduct_basis(&p);
            assert_eq!(baxter_p_tensor_to_f(&coproduct), f_coproduct(&baxter_p_to_f(&p)));
        }
    }
}

#[test]
fn dual_basis_does_not_depend_on_the_representative() {
    for total in 0..=4 {
        for n1 in 0..=total {
            let n2 = total - n1;
            for p in all_pairs_of_size(n1) {
                for q in all_pairs_of_size(n2) {
                    let expected = baxter_q_product_basis(&p, &q);
                    for u in p.fiber() {
                        for v in q.fiber() {
                            let projected = baxter_project_g(&g_product_basis(&u, &v));
                            assert_eq!(projected, expected, "{u} times {v}");
                        }
                    }
                }
            }
        }
    }
    for n in 0..=4 {
        for p in all_pairs_of_size(n) {
            let expected = baxter_q_coproduct_basis(&p);
            for u in p.fiber() {
                let projected = baxter_project_g_tensor(&g_coproduct_basis(&u));
                assert_eq!(projected, expected, "{u}");
            }
        }
    }
}

#[test]
fn worked_dual_product_example_lists_six_terms() {
    let product = baxter_q_product_basis(&pair_of("2+ 1-"), &pair_of("1+ 2-"));
    let expected: PairElement = ["2+ 1- 3+ 4-", "3+ 1- 2+ 4-", "4+ 1- 2+ 3-", "3+ 2- 1+ 4-",
        "4+ 2- 1+ 3-", "4+ 3- 1+ 2-"]
        .iter()
        .fold(PairElement::zero(), |mut acc, rep| {
            acc.add_term(pair_of(rep), BigInt::from(1));
            acc
        });
    assert_eq!(product, expected);
}

#[test]
fn worked_dual_coproduct_example_lists_five_splits() {
    let coproduct = baxter_q_coproduct_basis(&pair_of("2+ 3- 4- 1+"));
    let splits = [
        ("", "2+ 3- 4- 1+"),
        ("1+", "1+ 2- 3-"),
        ("2+ 1+", "1- 2-"),
        ("2+ 3- 1+", "1-"),
        ("2+ 3- 4- 1+", ""),
    ];
    assert_eq!(coproduct.len(), splits.len());
    for (left, right) in splits {
        let key = (pair_of(left), pair_of(right));
        assert_eq!(coproduct.coefficient(&key), BigInt::from(1), "{left} | {right}");
    }
}

#[test]
fn multiplicative_bases_collapse_products_to_single_terms() {
    for total in 0..=4 {
        for n1 in 0..=total {
            let n2 = total - n1;
            for p in all_pairs_of_size(n1) {
                for q in all_pairs_of_size(n2) {
                    let (bottom, top) = baxter_product_ends(&p, &q);
                    let e = baxter_p_product(&baxter_e_to_p(&p), &baxter_e_to_p(&q));
                    assert_eq!(e, baxter_e_to_p(&bottom), "{p:?} times {q:?}");
                    let h = baxter_p_product(&baxter_h_to_p(&p), &baxter_h_to_p(&q));
                    assert_eq!(h, baxter_h_to_p(&top), "{p:?} times {q:?}");
                }
            }
        }
    }
}

#[test]
fn indecomposable_pairs_follow_the_known_sequences() {
    let constant = [1, 1, 3, 11, 47, 221];
    for (n, &v) in (1..=6).zip(&constant) {
        let count = twin_pairs(&constant_signature(n, Sign::Neg))
            .iter()
            .filter(|p| p.is_indecomposable())
            .count();
        assert_eq!(count, v, "n = {n}");
    }
    let alternating = [1, 1, 3, 9, 29, 97];
    for (n, &v) in (1..=6).zip(&alternating) {
        let count = twin_pairs(&alternating_signature(n, Sign::Pos))
            .iter()
            .filter(|p| p.is_indecomposable())
            .count();
        assert_eq!(count, v, "n = {n}");
    }
}

#[test]
fn a_pair_can_be_indecomposable_while_both_trees_split() {
    let is_final_interval_cut = |tree: &CambrianTree| {
        let n = tree.n();
        tree.edges().into_iter().any(|(child, parent)| {
            let (source, _) = tree.edge_cut(child, parent);
            source.len() < n
                && source.iter().enumerate().all(|(i, &v)| v == n - source.len() + 1 + i)
        })
    };

    let pair = pair_of("3- 1- 4- 2-");
    assert!(pair.is_indecomposable());

    let first = p_symbol(&parse_signed_permutation("3- 1- 4- 2-").unwrap());
    assert_eq!(first, p_symbol(&parse_signed_permutation("1- 3- 4- 2-").unwrap()));
    assert_eq!(&first, pair.first());
    assert!(camb_tree::indecomposable::is_decomposable(&first));

    let second = p_symbol(&parse_signed_permutation("2- 4- 1- 3-").unwrap());
    assert_eq!(second, p_symbol(&parse_signed_permutation("4- 2- 1- 3-").unwrap()));
    assert_eq!(&second, pair.second());
    assert!(is_final_interval_cut(&second));
}
