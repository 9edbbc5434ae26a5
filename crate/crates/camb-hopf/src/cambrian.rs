//! The Cambrian Hopf algebra and its dual.
//!
//! The tree basis embeds into signed permutations by summing the
//! fundamental basis over linear extensions. Products expand as lattice
//! intervals between two grafts, coproducts as sums over lower sets of the
//! tree; the dual basis is indexed by the same trees through the fibers of
//! insertion. Upper and lower ideal sums give the multiplicative bases.

use crate::fqsym;
use crate::lincomb::{bilinear, tensor, LinearCombination, TensorCombination};
use camb_tree::extensions::{linear_extensions, max_linear_extension, min_linear_extension};
use camb_tree::lattice::{cambrian_lattice, tree_interval};
use camb_tree::{p_symbol, CambrianTree};
use num_bigint::BigInt;

pub type Element = LinearCombination<CambrianTree>;
pub type TensorElement = TensorCombination<CambrianTree, CambrianTree>;

/// Expansion of a tree basis element into the fundamental basis.
pub fn p_to_f(tree: &CambrianTree) -> fqsym::Element {
    let mut out = fqsym::Element::zero();
    for tau in linear_extensions(tree) {
        out.add_term(tau, BigInt::from(1));
    }
    out
}

pub fn p_to_f_linear(x: &Element) -> fqsym::Element {
    x.flat_map(p_to_f)
}

pub fn p_tensor_to_f(x: &TensorElement) -> fqsym::TensorElement {
    x.flat_map(|(a, b)| tensor(&p_to_f(a), &p_to_f(b)))
}

/// The tree below `s` grafted under `t`: insertion of the lowest word of
/// `s` followed by the shifted lowest word of `t`.
pub fn lower_graft(s: &CambrianTree, t: &CambrianTree) -> CambrianTree {
    p_symbol(&min_linear_extension(s).followed_by_shifted(&min_linear_extension(t)))
}

/// The tree with `s` grafted over the shifted copy of `t`.
pub fn upper_graft(s: &CambrianTree, t: &CambrianTree) -> CambrianTree {
    p_symbol(&max_linear_extension(s).preceded_by_shifted(&max_linear_extension(t)))
}

/// Product of two tree basis elements: the lattice interval between the
/// two grafts, in the concatenated signature.
pub fn p_product_basis(s: &CambrianTree, t: &CambrianTree) -> Element {
    let mut out = Element::zero();
    for tree in tree_interval(&lower_graft(s, t), &upper_graft(s, t)) {
        out.add_term(tree, BigInt::from(1));
    }
    out
}

pub fn p_product(x: &Element, y: &Element) -> Element {
    bilinear(x, y, p_product_basis)
}

/// Product of the trees of a forest, in increasing order of labels.
pub fn forest_product(forest: &[CambrianTree]) -> Element {
    let mut out = Element::basis(CambrianTree::empty());
    for tree in forest {
        out = p_product(&out, &Element::basis(tree.clone()));
    }
    out
}

/// Coproduct of a tree basis element: one term per lower set of the tree,
/// each side being the product of its standardized components.
pub fn p_coproduct_basis(t: &CambrianTree) -> TensorElement {
    let all: std::collections::BTreeSet<usize> = (1..=t.n()).collect();
    let mut out = TensorElement::zero();
    for lower in t.lower_sets() {
        let upper: std::collections::BTreeSet<usize> = all.difference(&lower).copied().collect();
        let left = forest_product(&t.restricted_components(&lower));
        let right = forest_product(&t.restricted_components(&upper));
        out.add_assign(&tensor(&left, &right));
    }
    out
}

pub fn p_coproduct(x: &Element) -> TensorElement {
    x.flat_map(p_coproduct_basis)
}

/// Projection of the dual signed permutation algebra onto the dual tree
/// algebra, one insertion per basis element.
pub fn project_g(x: &fqsym::Element) -> Element {
    x.map(|tau| p_symbol(tau))
}

pub fn project_g_tensor(x: &fqsym::TensorElement) -> TensorElement {
    x.map(|(a, b)| (p_symbol(a), p_symbol(b)))
}

/// Product in the dual: convolution of fiber representatives followed by
/// projection. The result does not depend on the chosen representatives.
pub fn q_product_basis(s: &CambrianTree, t: &CambrianTree) -> Element {
    project_g(&fqsym::g_product_basis(
        &min_linear_extension(s),
        &min_linear_extension(t),
    ))
}

pub fn q_product(x: &Element, y: &Element) -> Element {
    bilinear(x, y, q_product_basis)
}

/// Coproduct in the dual: value splits of a fiber representative, each
/// side reinserted.
pub fn q_coproduct_basis(t: &CambrianTree) -> TensorElement {
    project_g_tensor(&fqsym::g_coproduct_basis(&min_linear_extension(t)))
}

pub fn q_coproduct(x: &Element) -> TensorElement {
    x.flat_map(q_coproduct_basis)
}

/// The duality map: expand into the fundamental basis, invert, project.
pub fn psi(t: &CambrianTree) -> Element {
    project_g(&fqsym::invert(&p_to_f(t)))
}

/// Multiplicative basis element as an upper ideal of the tree lattice.
pub fn e_to_p(t: &CambrianTree) -> Element {
    let lattice = cambrian_lattice(&t.signature().to_vec());
    let idx = lattice.index_of(t).expect("tree of its signature");
    let mut out = Element::zero();
    for i in lattice.up_set(idx) {
        out.add_term(lattice.element(i).clone(), BigInt::from(1));
    }
    out
}

/// Multiplicative basis element as a lower ideal of the tree lattice.
pub fn h_to_p(t: &CambrianTree) -> Element {
    let lattice = cambrian_lattice(&t.signature().to_vec());
    let idx = lattice.index_of(t).expect("tree of its signature");
    let mut out = Element::zero();
    for i in lattice.down_set(idx) {
        out.add_term(lattice.element(i).clone(), BigInt::from(1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use camb_core::notation::parse_signed_permutation as parse;

    fn tree(text: &str) -> CambrianTree {
        p_symbol(&parse(text).unwrap())
    }

    #[test]
    fn worked_product_has_three_terms_with_group_sizes_9_7_4() {
        let s = tree("1- 2+");
        let t = tree("2+ 1- 3+");
        let product = p_product_basis(&s, &t);
        assert_eq!(product.len(), 3);
        let mut sizes: Vec<usize> = product
            .support()
            .map(|tr| linear_extensions(tr).len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 7, 9]);
    }

    #[test]
    fn worked_coproduct_has_six_summands() {
        let x = p_coproduct_basis(&tree("2+ 1- 3+"));
        assert_eq!(x.len(), 6);
        let f_side = fqsym::f_coproduct(&p_to_f(&tree("2+ 1- 3+")));
        assert_eq!(p_tensor_to_f(&x), f_side);
    }

    #[test]
    fn worked_dual_product_has_ten_terms() {
        let x = q_product_basis(&tree("1- 2+"), &tree("2+ 1- 3+"));
        let total: BigInt = x.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(10));
    }

    #[test]
    fn duality_collides_on_mirror_fibers() {
        let psi_a = psi(&tree("2- 1+ 3+"));
        let psi_b = psi(&tree("3- 1+ 2+"));
        assert_eq!(psi_a, psi_b);
        assert_eq!(psi_a, Element::basis(tree("2+ 1- 3+")));
    }
}
