//! The partition algebra and its tree quotient.
//!
//! On signed ordered partitions the product quasi-shuffles the part lists
//! and the coproduct splits off level prefixes; the dual pair convolves and
//! splits by value. Tree basis elements sum their fibers, multiply as
//! rotation order intervals between the two graftings, split along lower
//! sets of nodes, and project on the dual side through insertion.

use crate::insertion::{fiber, max_fiber, min_fiber, p_star_symbol};
use crate::lattice::schroder_interval;
use crate::tree::SchroderTree;
use camb_core::partition::SignedOrderedPartition;
use camb_core::sign::{all_signatures, Trit};
use camb_hopf::lincomb::{bilinear, tensor, LinearCombination};
use num_bigint::BigInt;
use std::collections::BTreeSet;

pub type Element = LinearCombination<SchroderTree>;
pub type TensorElement = LinearCombination<(SchroderTree, SchroderTree)>;
pub type PartElement = LinearCombination<SignedOrderedPartition>;
pub type PartTensorElement = LinearCombination<(SignedOrderedPartition, SignedOrderedPartition)>;

pub fn part_f_product_basis(
    a: &SignedOrderedPartition,
    b: &SignedOrderedPartition,
) -> PartElement {
    let mut out = PartElement::zero();
    for term in a.quasi_shuffle(b) {
        out.add_term(term, BigInt::from(1));
    }
    out
}

pub fn part_f_product(x: &PartElement, y: &PartElement) -> PartElement {
    bilinear(x, y, part_f_product_basis)
}

pub fn part_f_coproduct_basis(lambda: &SignedOrderedPartition) -> PartTensorElement {
    let mut out = PartTensorElement::zero();
    for k in 0..=lambda.num_parts() {
        out.add_term(lambda.split_by_parts(k), BigInt::from(1));
    }
    out
}

pub fn part_f_coproduct(x: &PartElement) -> PartTensorElement {
    x.flat_map(part_f_coproduct_basis)
}

pub fn part_g_product_basis(
    a: &SignedOrderedPartition,
    b: &SignedOrderedPartition,
) -> PartElement {
    let mut out = PartElement::zero();
    for term in a.convolution(b) {
        out.add_term(term, BigInt::from(1));
    }
    out
}

pub fn part_g_product(x: &PartElement, y: &PartElement) -> PartElement {
    bilinear(x, y, part_g_product_basis)
}

pub fn part_g_coproduct_basis(lambda: &SignedOrderedPartition) -> PartTensorElement {
    let mut out = PartTensorElement::zero();
    for k in 0..=lambda.n() {
        out.add_term(lambda.split_by_value(k), BigInt::from(1));
    }
    out
}

pub fn part_g_coproduct(x: &PartElement) -> PartTensorElement {
    x.flat_map(part_g_coproduct_basis)
}

/// Expansion of a tree basis element as the sum over its fiber.
pub fn p_to_f(tree: &SchroderTree) -> PartElement {
    let mut out = PartElement::zero();
    for lambda in fiber(tree) {
        out.add_term(lambda, BigInt::from(1));
    }
    out
}

pub fn p_to_f_linear(x: &Element) -> PartElement {
    x.flat_map(p_to_f)
}

pub fn p_tensor_to_f(x: &TensorElement) -> PartTensorElement {
    x.flat_map(|(a, b)| tensor(&p_to_f(a), &p_to_f(b)))
}

fn shifted_parts(lambda: &SignedOrderedPartition, by: usize) -> Vec<Vec<usize>> {
    lambda
        .partition()
        .parts()
        .iter()
        .map(|p| p.iter().map(|&v| v + by).collect())
        .collect()
}

fn joined_signature(
    a: &SignedOrderedPartition,
    b: &SignedOrderedPartition,
) -> camb_core::sign::Signature {
    a.signature().iter().chain(b.signature()).copied().collect()
}

/// Parts of `a` followed by the parts of `b` shifted above them.
fn concatenated(a: &SignedOrderedPartition, b: &SignedOrderedPartition) -> SignedOrderedPartition {
    let mut parts = a.partition().parts();
    parts.extend(shifted_parts(b, a.n()));
    SignedOrderedPartition::from_parts(&parts, joined_signature(a, b)).expect("disjoint ranges")
}

/// Shifted parts of `b` first, the parts of `a` after.
fn concatenated_reversed(
    a: &SignedOrderedPartition,
    b: &SignedOrderedPartition,
) -> SignedOrderedPartition {
    let mut parts = shifted_parts(b, a.n());
    parts.extend(a.partition().parts());
    SignedOrderedPartition::from_parts(&parts, joined_signature(a, b)).expect("disjoint ranges")
}

/// The two graftings bounding a product: the shifted right factor hung on
/// the last upper leaf, or under the first lower leaf, of the left factor.
pub fn product_ends(s: &SchroderTree, t: &SchroderTree) -> (SchroderTree, SchroderTree) {
    (
        p_star_symbol(&concatenated(&min_fiber(s), &min_fiber(t))),
        p_star_symbol(&concatenated_reversed(&max_fiber(s), &max_fiber(t))),
    )
}

pub fn p_product_basis(s: &SchroderTree, t: &SchroderTree) -> Element {
    if s.n() == 0 {
        return Element::basis(t.clone());
    }
    if t.n() == 0 {
        return Element::basis(s.clone());
    }
    let (lo, hi) = product_ends(s, t);
    let mut out = Element::zero();
    for tree in schroder_interval(&lo, &hi) {
        out.add_term(tree, BigInt::from(1));
    }
    out
}

pub fn p_product(x: &Element, y: &Element) -> Element {
    bilinear(x, y, p_product_basis)
}

/// Product of the trees of a forest, in increasing order of labels.
pub fn forest_product(forest: &[SchroderTree]) -> Element {
    let mut out = Element::basis(SchroderTree::empty());
    for tree in forest {
        out = p_product(&out, &Element::basis(tree.clone()));
    }
    out
}

/// One term per lower set of nodes, each side the product of its
/// standardized components.
pub fn p_coproduct_basis(t: &SchroderTree) -> TensorElement {
    let all: BTreeSet<usize> = (1..=t.n()).collect();
    let mut out = TensorElement::zero();
    for lower in t.node_lower_sets() {
        let upper: BTreeSet<usize> = all.difference(&lower).copied().collect();
        let left = forest_product(&t.restricted_components(&lower));
        let right = forest_product(&t.restricted_components(&upper));
        out.add_assign(&tensor(&left, &right));
    }
    out
}

pub fn p_coproduct(x: &Element) -> TensorElement {
    x.flat_map(p_coproduct_basis)
}

/// Projection of the dual partition algebra onto the dual tree algebra,
/// one insertion per basis element.
pub fn project_g(x: &PartElement) -> Element {
    x.map(p_star_symbol)
}

pub fn project_g_tensor(x: &PartTensorElement) -> TensorElement {
    x.map(|(a, b)| (p_star_symbol(a), p_star_symbol(b)))
}

/// Product in the dual: convolution of fiber representatives followed by
/// projection. The result does not depend on the chosen representatives.
pub fn q_product_basis(s: &SchroderTree, t: &SchroderTree) -> Element {
    project_g(&part_g_product_basis(&min_fiber(s), &min_fiber(t)))
}

pub fn q_product(x: &Element, y: &Element) -> Element {
    bilinear(x, y, q_product_basis)
}

/// Coproduct in the dual: value splits of a fiber representative, each side
/// reinserted.
pub fn q_coproduct_basis(t: &SchroderTree) -> TensorElement {
    project_g_tensor(&part_g_coproduct_basis(&min_fiber(t)))
}

pub fn q_coproduct(x: &Element) -> TensorElement {
    x.flat_map(q_coproduct_basis)
}

pub fn all_canopies(n: usize) -> Vec<Vec<Trit>> {
    let mut out = vec![Vec::new()];
    for _ in 1..n.max(1) {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Trit>| {
                [Trit::Neg, Trit::Zero, Trit::Pos].into_iter().map(move |t| {
                    let mut longer = prefix.clone();
                    longer.push(t);
                    longer
                })
            })
            .collect();
    }
    out
}

/// Canopy class sum over every signature: all trees of size
/// `chi.len() + 1` whose canopy equals `chi`.
pub fn trilean_x(chi: &[Trit]) -> Element {
    let n = chi.len() + 1;
    let mut out = Element::zero();
    for sig in all_signatures(n) {
        for tree in crate::insertion::all_schroder_trees(&sig) {
            if tree.canopy() == chi {
                out.add_term(tree, BigInt::from(1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use camb_core::notation::parse_signed_partition;

    fn ps(s: &str) -> SchroderTree {
        p_star_symbol(&parse_signed_partition(s).unwrap())
    }

    #[test]
    fn smallest_product_fills_the_interval() {
        let product = p_product_basis(&ps("1+"), &ps("1-"));
        assert_eq!(product.len(), 3);
        for tree in [ps("1+/2-"), ps("1+2-"), ps("2-/1+")] {
            assert_eq!(product.coefficient(&tree), BigInt::from(1));
        }
    }

    #[test]
    fn chain_coproduct_matches_the_level_splits() {
        let chain = ps("1+/2-");
        let image = p_tensor_to_f(&p_coproduct_basis(&chain));
        let oracle = part_f_coproduct(&p_to_f(&chain));
        assert_eq!(image, oracle);
    }

    #[test]
    fn dual_product_reinserts_the_convolution() {
        let product = q_product_basis(&ps("1+"), &ps("1-"));
        assert_eq!(product.len(), 2);
        assert_eq!(product.coefficient(&ps("1+/2-")), BigInt::from(1));
        assert_eq!(product.coefficient(&ps("2+/1-")), BigInt::from(1));
    }

    #[test]
    fn canopy_classes_partition_small_trees() {
        let mut total = 0;
        for chi in all_canopies(2) {
            total += trilean_x(&chi).len();
        }
        // Four signatures with three trees each.
        assert_eq!(total, 12);
    }
}
