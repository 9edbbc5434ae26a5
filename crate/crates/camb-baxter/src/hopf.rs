//! Hopf operations on tuples and on twin pairs.
//!
//! Tuple basis elements embed by their fibers; products expand as the
//! lattice interval between the layerwise grafts of the factors, and
//! coproducts cut along lower sets of the union, each layer expanding as
//! a forest product. The twin versions differ in one way: the second
//! tree is stored upside down, so its grafts run in the opposite
//! direction to the first tree's.

use crate::fqsyml;
use crate::lattice::{baxter_lattice, pair_interval, tuple_interval, tuple_lattice};
use crate::tuple::{tuple_p_symbol, CambrianTuple};
use crate::twin::{baxter_p_symbol, TwinPair};
use camb_hopf::cambrian::{forest_product, lower_graft, upper_graft};
use camb_hopf::fqsym;
use camb_hopf::lincomb::{bilinear, tensor, LinearCombination, TensorCombination};
use num_bigint::BigInt;
use std::collections::BTreeSet;

pub type TupleElement = LinearCombination<CambrianTuple>;
pub type TupleTensorElement = TensorCombination<CambrianTuple, CambrianTuple>;
pub type PairElement = LinearCombination<TwinPair>;
pub type PairTensorElement = TensorCombination<TwinPair, TwinPair>;

/// Expansion of a tuple basis element into the layered fundamental basis.
pub fn tuple_p_to_f(t: &CambrianTuple) -> fqsyml::Element {
    let mut out = fqsyml::Element::zero();
    for tau in t.linear_extensions() {
        out.add_term(tau, BigInt::from(1));
    }
    out
}

pub fn tuple_p_to_f_linear(x: &TupleElement) -> fqsyml::Element {
    x.flat_map(tuple_p_to_f)
}

pub fn tuple_p_tensor_to_f(x: &TupleTensorElement) -> fqsyml::TensorElement {
    x.flat_map(|(a, b)| tensor(&tuple_p_to_f(a), &tuple_p_to_f(b)))
}

/// Layerwise graft of the second tuple below the slots of the first.
pub fn tuple_lower_graft(s: &CambrianTuple, t: &CambrianTuple) -> CambrianTuple {
    assert_eq!(s.layers(), t.layers());
    let trees = s.trees().iter().zip(t.trees()).map(|(a, b)| lower_graft(a, b)).collect();
    CambrianTuple::new(trees).expect("layerwise graft of tuples is a tuple")
}

/// Layerwise graft of the second tuple above the slots of the first.
pub fn tuple_upper_graft(s: &CambrianTuple, t: &CambrianTuple) -> CambrianTuple {
    assert_eq!(s.layers(), t.layers());
    let trees = s.trees().iter().zip(t.trees()).map(|(a, b)| upper_graft(a, b)).collect();
    CambrianTuple::new(trees).expect("layerwise graft of tuples is a tuple")
}

/// Product of two tuple basis elements: the lattice interval between the
/// two layerwise grafts, in the concatenated signatures.
pub fn tuple_p_product_basis(s: &CambrianTuple, t: &CambrianTuple) -> TupleElement {
    let mut out = TupleElement::zero();
    for tuple in tuple_interval(&tuple_lower_graft(s, t), &tuple_upper_graft(s, t)) {
        out.add_term(tuple, BigInt::from(1));
    }
    out
}

pub fn tuple_p_product(x: &TupleElement, y: &TupleElement) -> TupleElement {
    bilinear(x, y, tuple_p_product_basis)
}

/// All tuples assembled from one forest expansion per layer.
fn layerwise_expansion(t: &CambrianTuple, set: &BTreeSet<usize>) -> TupleElement {
    let mut partial = vec![(Vec::new(), BigInt::from(1))];
    for tree in t.trees() {
        let factor = forest_product(&tree.restricted_components(set));
        let mut next = Vec::with_capacity(partial.len() * factor.len());
        for (stack, c) in &partial {
            for (layer, cl) in factor.iter() {
                let mut stack = stack.clone();
                stack.push(layer.clone());
                next.push((stack, c * cl));
            }
        }
        partial = next;
    }
    let mut out = TupleElement::zero();
    for (trees, c) in partial {
        if let Ok(tuple) = CambrianTuple::new(trees) {
            out.add_term(tuple, c);
        }
    }
    out
}

/// Coproduct of a tuple basis element: one tensor term per lower set of
/// the union, each side combining its layers' forest products.
pub fn tuple_p_coproduct_basis(t: &CambrianTuple) -> TupleTensorElement {
    let all: BTreeSet<usize> = (1..=t.n()).collect();
    let mut out = TupleTensorElement::zero();
    for lower in t.union_lower_sets() {
        let upper: BTreeSet<usize> = all.difference(&lower).copied().collect();
        let left = layerwise_expansion(t, &lower);
        let right = layerwise_expansion(t, &upper);
        out.add_assign(&tensor(&left, &right));
    }
    out
}

pub fn tuple_p_coproduct(x: &TupleElement) -> TupleTensorElement {
    x.flat_map(tuple_p_coproduct_basis)
}

/// Projection of the layered dual algebra onto the dual tuple algebra.
pub fn tuple_project_g(x: &fqsyml::Element) -> TupleElement {
    x.map(tuple_p_symbol)
}

pub fn tuple_project_g_tensor(x: &fqsyml::TensorElement) -> TupleTensorElement {
    x.map(|(a, b)| (tuple_p_symbol(a), tuple_p_symbol(b)))
}

/// Product in the dual: convolution of fiber representatives followed by
/// projection; independent of the chosen representatives.
pub fn tuple_q_product_basis(s: &CambrianTuple, t: &CambrianTuple) -> TupleElement {
    tuple_project_g(&fqsyml::g_product_basis(
        &s.min_linear_extension(),
        &t.min_linear_extension(),
    ))
}

pub fn tuple_q_product(x: &TupleElement, y: &TupleElement) -> TupleElement {
    bilinear(x, y, tuple_q_product_basis)
}

/// Coproduct in the dual: value splits of a representative, reinserted.
pub fn tuple_q_coproduct_basis(t: &CambrianTuple) -> TupleTensorElement {
    tuple_project_g_tensor(&fqsyml::g_coproduct_basis(&t.min_linear_extension()))
}

pub fn tuple_q_coproduct(x: &TupleElement) -> TupleTensorElement {
    x.flat_map(tuple_q_coproduct_basis)
}

/// Multiplicative basis element as an upper ideal of the tuple lattice.
pub fn tuple_e_to_p(t: &CambrianTuple) -> TupleElement {
    let lattice = tuple_lattice(&t.signatures());
    let idx = lattice.index_of(t).expect("tuple of its signatures");
    let mut out = TupleElement::zero();
    for i in lattice.up_set(idx) {
        out.add_term(lattice.element(i).clone(), BigInt::from(1));
    }
    out
}

/// Multiplicative basis element as a lower ideal of the tuple lattice.
pub fn tuple_h_to_p(t: &CambrianTuple) -> TupleElement {
    let lattice = tuple_lattice(&t.signatures());
    let idx = lattice.index_of(t).expect("tuple of its signatures");
    let mut out = TupleElement::zero();
    for i in lattice.down_set(idx) {
        out.add_term(lattice.element(i).clone(), BigInt::from(1));
    }
    out
}

/// Expansion of a pair basis element into signed permutations.
pub fn baxter_p_to_f(pair: &TwinPair) -> fqsym::Element {
    let mut out = fqsym::Element::zero();
    for tau in pair.fiber() {
        out.add_term(tau, BigInt::from(1));
    }
    out
}

pub fn baxter_p_to_f_linear(x: &PairElement) -> fqsym::Element {
    x.flat_map(baxter_p_to_f)
}

pub fn baxter_p_tensor_to_f(x: &PairTensorElement) -> fqsym::TensorElement {
    x.flat_map(|(a, b)| tensor(&baxter_p_to_f(a), &baxter_p_to_f(b)))
}

/// The ends of a pair product: first trees graft downward then upward,
/// second trees the other way round.
pub fn baxter_product_ends(p: &TwinPair, q: &TwinPair) -> (TwinPair, TwinPair) {
    let bottom = TwinPair::new(
        lower_graft(p.first(), q.first()),
        upper_graft(p.second(), q.second()),
    )
    .expect("grafts of twins are twins");
    let top = TwinPair::new(
        upper_graft(p.first(), q.first()),
        lower_graft(p.second(), q.second()),
    )
    .expect("grafts of twins are twins");
    (bottom, top)
}

/// Product of two pair basis elements: the twin lattice interval between
/// the opposed grafts.
pub fn baxter_p_product_basis(p: &TwinPair, q: &TwinPair) -> PairElement {
    let (bottom, top) = baxter_product_ends(p, q);
    let mut out = PairElement::zero();
    for pair in pair_interval(&bottom, &top) {
        out.add_term(pair, BigInt::from(1));
    }
    out
}

pub fn baxter_p_product(x: &PairElement, y: &PairElement) -> PairElement {
    bilinear(x, y, baxter_p_product_basis)
}

/// All pairs assembled from the two trees' forest expansions over a label
/// set, kept when they are twins.
fn pair_expansion(p: &TwinPair, set: &BTreeSet<usize>) -> PairElement {
    let firsts = forest_product(&p.first().restricted_components(set));
    let seconds = forest_product(&p.second().restricted_components(set));
    let mut out = PairElement::zero();
    for (a, ca) in firsts.iter() {
        for (b, cb) in seconds.iter() {
            if let Ok(pair) = TwinPair::new(a.clone(), b.clone()) {
                out.add_term(pair, ca * cb);
            }
        }
    }
    out
}

/// Coproduct of a pair basis element: cuts are the lower sets of the
/// union, and both halves keep only twin combinations.
pub fn baxter_p_coproduct_basis(p: &TwinPair) -> PairTensorElement {
    let all: BTreeSet<usize> = (1..=p.n()).collect();
    let mut out = PairTensorElement::zero();
    for lower in p.to_tuple().union_lower_sets() {
        let upper: BTreeSet<usize> = all.difference(&lower).copied().collect();
        let left = pair_expansion(p, &lower);
        let right = pair_expansion(p, &upper);
        out.add_assign(&tensor(&left, &right));
    }
    out
}

pub fn baxter_p_coproduct(x: &PairElement) -> PairTensorElement {
    x.flat_map(baxter_p_coproduct_basis)
}

/// Projection of the signed dual algebra onto the dual pair algebra.
pub fn baxter_project_g(x: &fqsym::Element) -> PairElement {
    x.map(|tau| baxter_p_symbol(tau))
}

pub fn baxter_project_g_tensor(x: &fqsym::TensorElement) -> PairTensorElement {
    x.map(|(a, b)| (baxter_p_symbol(a), baxter_p_symbol(b)))
}

/// Product in the dual: convolution of fiber representatives followed by
/// projection; independent of the chosen representatives.
pub fn baxter_q_product_basis(p: &TwinPair, q: &TwinPair) -> PairElement {
    baxter_project_g(&fqsym::g_product_basis(
        &p.min_linear_extension(),
        &q.min_linear_extension(),
    ))
}

pub fn baxter_q_product(x: &PairElement, y: &PairElement) -> PairElement {
    bilinear(x, y, baxter_q_product_basis)
}

/// Coproduct in the dual: value splits of a representative, reinserted.
pub fn baxter_q_coproduct_basis(p: &TwinPair) -> PairTensorElement {
    baxter_project_g_tensor(&fqsym::g_coproduct_basis(&p.min_linear_extension()))
}

pub fn baxter_q_coproduct(x: &PairElement) -> PairTensorElement {
    x.flat_map(baxter_q_coproduct_basis)
}

/// Multiplicative basis element as an upper ideal of the pair lattice.
pub fn baxter_e_to_p(p: &TwinPair) -> PairElement {
    let lattice = baxter_lattice(&p.signature().to_vec());
    let idx = lattice.index_of(p).expect("pair of its signature");
    let mut out = PairElement::zero();
    for i in lattice.up_set(idx) {
        out.add_term(lattice.element(i).clone(), BigInt::from(1));
    }
    out
}

/// Multiplicative basis element as a lower ideal of the pair lattice.
pub fn baxter_h_to_p(p: &TwinPair) -> PairElement {
    let lattice = baxter_lattice(&p.signature().to_vec());
    let idx = lattice.index_of(p).expect("pair of its signature");
    let mut out = PairElement::zero();
    for i in lattice.down_set(idx) {
        out.add_term(lattice.element(i).clone(), BigInt::from(1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use camb_core::notation::parse_signed_permutation as parse;

    #[test]
    fn pair_product_of_the_worked_factors_has_thirty_words() {
        let p = baxter_p_symbol(&parse("2+ 1-").unwrap());
        let q = baxter_p_symbol(&parse("2+ 3- 1+ 4-").unwrap());
        let product = baxter_p_product_basis(&p, &q);
        let words = baxter_p_to_f_linear(&product);
        assert_eq!(words.len(), 30);
    }

    #[test]
    fn tuple_coproduct_of_the_empty_tuple_is_one_term() {
        let unit = CambrianTuple::empty(2);
        let cut = tuple_p_coproduct_basis(&unit);
        assert_eq!(cut.len(), 1);
        assert_eq!(cut.coefficient(&(unit.clone(), unit.clone())), BigInt::from(1));
    }
}
