//! Edge rotations.
//!
//! Rotating the edge below `i` and above `j` reverses it while reattaching
//! the four surrounding subtrees; the result is again a Cambrian tree of the
//! same signature. Rotations along edges `i -> j` with `i < j` are exactly
//! the cover relations of the Cambrian lattice.

use crate::tree::{CambrianTree, Slot, Vertex};
use camb_core::sign::Sign;

/// Edges `(i, j)` with `i < j`, `i` child of `j`.
pub fn increasing_rotations(tree: &CambrianTree) -> Vec<(usize, usize)> {
    tree.edges().into_iter().filter(|&(c, p)| c < p).collect()
}

/// Reverses the edge `child -> parent`. Panics if the edge is absent.
pub fn rotate(tree: &CambrianTree, child: usize, parent: usize) -> CambrianTree {
    let (i, j, increasing) = if child < parent {
        (child, parent, true)
    } else {
        (parent, child, false)
    };
    let mut vertices: Vec<Vertex> = (1..=tree.n()).map(|v| tree.vertex(v).clone()).collect();
    let si = tree.sign_of(i);
    let sj = tree.sign_of(j);

    // The four subtrees around the edge: l and b hang on i, a and r on j
    // before an increasing rotation; afterwards b and r hang on j, l and a
    // on i. The decreasing case reads the picture bottom to top.
    let (l, b, a, r);
    if increasing {
        assert!(tree.edges().contains(&(child, parent)), "no edge {child} -> {parent}");
        match si {
            Sign::Neg => {
                l = vertices[i - 1].down[0];
                b = vertices[i - 1].down[1];
            }
            Sign::Pos => {
                l = vertices[i - 1].up[0];
                b = vertices[i - 1].down[0];
            }
        }
        match sj {
            Sign::Neg => {
                r = vertices[j - 1].down[1];
                a = vertices[j - 1].up[0];
            }
            Sign::Pos => {
                r = vertices[j - 1].up[1];
                a = vertices[j - 1].up[0];
            }
        }
        match si {
            Sign::Neg => {
                vertices[i - 1].down = vec![l, Slot::Node(j)];
                vertices[i - 1].up = vec![a];
            }
            Sign::Pos => {
                vertices[i - 1].down = vec![Slot::Node(j)];
                vertices[i - 1].up = vec![l, a];
            }
        }
        match sj {
            Sign::Neg => {
                vertices[j - 1].down = vec![b, r];
                vertices[j - 1].up = vec![Slot::Node(i)];
            }
            Sign::Pos => {
                vertices[j - 1].down = vec![b];
                vertices[j - 1].up = vec![Slot::Node(i), r];
            }
        }
        repoint_up(&mut vertices, b, i, j);
        repoint_down(&mut vertices, a, j, i);
    } else {
        assert!(tree.edges().contains(&(child, parent)), "no edge {child} -> {parent}");
        match si {
            Sign::Neg => {
                l = vertices[i - 1].down[0];
                a = vertices[i - 1].up[0];
            }
            Sign::Pos => {
                l = vertices[i - 1].up[0];
                a = vertices[i - 1].up[1];
            }
        }
        match sj {
            Sign::Neg => {
                b = vertices[j - 1].down[0];
                r = vertices[j - 1].down[1];
            }
            Sign::Pos => {
                b = vertices[j - 1].down[0];
                r = vertices[j - 1].up[1];
            }
        }
        match si {
            Sign::Neg => {
                vertices[i - 1].down = vec![l, b];
                vertices[i - 1].up = vec![Slot::Node(j)];
            }
            Sign::Pos => {
                vertices[i - 1].down = vec![b];
                vertices[i - 1].up = vec![l, Slot::Node(j)];
            }
        }
        match sj {
            Sign::Neg => {
                vertices[j - 1].down = vec![Slot::Node(i), r];
                vertices[j - 1].up = vec![a];
            }
            Sign::Pos => {
                vertices[j - 1].down = vec![Slot::Node(i)];
                vertices[j - 1].up = vec![a, r];
            }
        }
        repoint_up(&mut vertices, b, j, i);
        repoint_down(&mut vertices, a, i, j);
    }

    let result = CambrianTree::new_unchecked(tree.signature().to_vec(), vertices);
    debug_assert_eq!(result.validate(), Ok(()));
    result
}

fn repoint_up(vertices: &mut [Vertex], subtree: Slot, from: usize, to: usize) {
    if let Slot::Node(root) = subtree {
        let slot = vertices[root - 1]
            .up
            .iter_mut()
            .find(|s| **s == Slot::Node(from))
            .expect("subtree root points to its old parent");
        *slot = Slot::Node(to);
    }
}

fn repoint_down(vertices: &mut [Vertex], subtree: Slot, from: usize, to: usize) {
    if let Slot::Node(root) = subtree {
        let slot = vertices[root - 1]
            .down
            .iter_mut()
            .find(|s| **s == Slot::Node(from))
            .expect("subtree root points to its old child");
        *slot = Slot::Node(to);
    }
}
