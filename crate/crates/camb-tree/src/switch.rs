//! Sign-switch bijections between tree sets of neighboring signatures.
//!
//! Switch 0 and switch n flip the sign of the first and last vertex by
//! moving their forced boundary leaf. An interior switch at i acts on
//! signatures with opposite signs at i and i + 1: when the positive vertex
//! of the pair hangs below the negative one their single connecting edge is
//! reversed in place, and otherwise the two labels are exchanged. Either
//! way only the pair's slot tables change, so these maps are involutions.

use crate::tree::{CambrianTree, Slot, Vertex};
use camb_core::sign::Signature;

/// The signature acted on by `switch_tree(_, i)`.
pub fn switch_signature(signature: &Signature, i: usize) -> Signature {
    let n = signature.len();
    let mut out = signature.clone();
    match i {
        0 => out[0] = out[0].flip(),
        _ if i == n => out[n - 1] = out[n - 1].flip(),
        _ => out.swap(i - 1, i),
    }
    out
}

/// Image of `tree` under the switch at `i`, `0 <= i <= n`. An interior
/// switch requires opposite signs at `i` and `i + 1`.
pub fn switch_tree(tree: &CambrianTree, i: usize) -> CambrianTree {
    let n = tree.n();
    assert!(i <= n && n > 0, "switch position out of range");
    let signature = switch_signature(&tree.signature().to_vec(), i);
    let mut vertices: Vec<Vertex> = (1..=n).map(|v| tree.vertex(v).clone()).collect();

    if i == 0 {
        let v = &mut vertices[0];
        if tree.sign_of(1).is_neg() {
            // down = [Leaf, x], up = [y]  ->  down = [x], up = [Leaf, y]
            v.down = vec![v.down[1]];
            v.up.insert(0, Slot::Leaf);
        } else {
            v.down = vec![Slot::Leaf, v.down[0]];
            v.up.remove(0);
        }
    } else if i == n {
        let v = &mut vertices[n - 1];
        if tree.sign_of(n).is_neg() {
            // down = [x, Leaf], up = [y]  ->  down = [x], up = [y, Leaf]
            v.down = vec![v.down[0]];
            v.up.push(Slot::Leaf);
        } else {
            v.down = vec![v.down[0], Slot::Leaf];
            v.up.pop();
        }
    } else {
        assert_ne!(
            tree.sign_of(i),
            tree.sign_of(i + 1),
            "interior switch needs opposite signs at {i} and {}",
            i + 1
        );
        let positive = if tree.sign_of(i).is_pos() { i } else { i + 1 };
        let negative = 2 * i + 1 - positive;
        if tree.parents(positive).contains(&negative) {
            // The edge from the positive vertex up to the negative one is
            // reversed; the four surrounding subtrees keep their vertical
            // sides, so no slot outside the pair moves.
            if positive == i {
                // i: down = [a], up = [u, i+1]; i+1: down = [i, b], up = [c]
                let a = vertices[i - 1].down[0];
                let u = vertices[i - 1].up[0];
                let b = vertices[i].down[1];
                let c = vertices[i].up[0];
                vertices[i - 1].down = vec![a, Slot::Node(i + 1)];
                vertices[i - 1].up = vec![u];
                vertices[i].down = vec![b];
                vertices[i].up = vec![Slot::Node(i), c];
            } else {
                // i: down = [a, i+1], up = [u]; i+1: down = [b], up = [i, c]
                let a = vertices[i - 1].down[0];
                let u = vertices[i - 1].up[0];
                let b = vertices[i].down[0];
                let c = vertices[i].up[1];
                vertices[i - 1].down = vec![a];
                vertices[i - 1].up = vec![u, Slot::Node(i + 1)];
                vertices[i].down = vec![Slot::Node(i), b];
                vertices[i].up = vec![c];
            }
        } else {
            vertices.swap(i - 1, i);
            for vertex in &mut vertices {
                for slot in vertex.down.iter_mut().chain(vertex.up.iter_mut()) {
                    *slot = match *slot {
                        Slot::Node(v) if v == i => Slot::Node(i + 1),
                        Slot::Node(v) if v == i + 1 => Slot::Node(i),
                        s => s,
                    };
                }
            }
        }
    }

    let result = CambrianTree::new_unchecked(signature, vertices);
    debug_assert_eq!(result.validate(), Ok(()));
    result
}
