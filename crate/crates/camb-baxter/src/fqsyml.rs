//! Shuffle and convolution algebras on tuple permutations.
//!
//! The fundamental basis multiplies by shifted shuffles and splits by
//! positions; the dual basis multiplies by convolutions and splits by
//! values. Signs decorate the letters and follow them through both
//! structures, one signature per layer.

use crate::word::TuplePermutation;
use camb_hopf::lincomb::{bilinear, LinearCombination, TensorCombination};
use num_bigint::BigInt;

pub type Element = LinearCombination<TuplePermutation>;
pub type TensorElement = TensorCombination<TuplePermutation, TuplePermutation>;

pub fn f_product_basis(a: &TuplePermutation, b: &TuplePermutation) -> Element {
    let mut out = Element::zero();
    for word in a.shifted_shuffle(b) {
        out.add_term(word, BigInt::from(1));
    }
    out
}

pub fn f_coproduct_basis(s: &TuplePermutation) -> TensorElement {
    let mut out = TensorElement::zero();
    for k in 0..=s.n() {
        out.add_term(s.split_by_position(k), BigInt::from(1));
    }
    out
}

pub fn g_product_basis(a: &TuplePermutation, b: &TuplePermutation) -> Element {
    let mut out = Element::zero();
    for word in a.convolution(b) {
        out.add_term(word, BigInt::from(1));
    }
    out
}

pub fn g_coproduct_basis(s: &TuplePermutation) -> TensorElement {
    let mut out = TensorElement::zero();
    for k in 0..=s.n() {
        out.add_term(s.split_by_value(k), BigInt::from(1));
    }
    out
}

pub fn f_product(x: &Element, y: &Element) -> Element {
    bilinear(x, y, f_product_basis)
}

pub fn f_coproduct(x: &Element) -> TensorElement {
    x.flat_map(f_coproduct_basis)
}

pub fn g_product(x: &Element, y: &Element) -> Element {
    bilinear(x, y, g_product_basis)
}

pub fn g_coproduct(x: &Element) -> TensorElement {
    x.flat_map(g_coproduct_basis)
}

/// The layered fundamental expansion of a signed word, for one layer.
pub fn single_layer(tau: &camb_core::perm::SignedPermutation) -> TuplePermutation {
    TuplePermutation::from_layers(std::slice::from_ref(tau)).expect("one layer")
}
