//! Insertion of a signed permutation into its Cambrian tree.
//!
//! The word is processed left to right. A vertical wall sits below every
//! negative value not yet processed; the spaces between consecutive walls
//! form regions, each carrying one pending strand: either a bottom leaf of
//! the tree under construction or a dangling up slot of an inserted vertex.
//! A negative value sits on its own wall, consumes the strands of the two
//! regions beside it, and merges them; a positive value consumes the strand
//! of the region containing it and splits that region with a new wall.

use crate::tree::{CambrianTree, Slot, Vertex};
use camb_core::perm::SignedPermutation;

#[derive(Clone, Copy)]
enum Strand {
    BottomLeaf,
    FromUp { label: usize, slot: usize },
}

/// The Cambrian tree of a signed permutation.
pub fn p_symbol(tau: &SignedPermutation) -> CambrianTree {
    insert(tau).0
}

/// A Cambrian tree together with the level of every vertex; levels record
/// the positions of the inserted word, so this is a bijection on `S^σ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LeveledCambrianTree {
    pub tree: CambrianTree,
    /// `level_of[v - 1]` is the 1-indexed position at which `v` was inserted.
    pub level_of: Vec<usize>,
}

impl LeveledCambrianTree {
    /// The word that reads values by increasing level.
    pub fn to_permutation(&self) -> SignedPermutation {
        let n = self.tree.n();
        let mut word = vec![0; n];
        for v in 1..=n {
            word[self.level_of[v - 1] - 1] = v;
        }
        SignedPermutation::new(word, self.tree.signature().to_vec()).expect("levels are a permutation")
    }
}

pub fn leveled_p_symbol(tau: &SignedPermutation) -> LeveledCambrianTree {
    let (tree, level_of) = insert(tau);
    LeveledCambrianTree { tree, level_of }
}

fn insert(tau: &SignedPermutation) -> (CambrianTree, Vec<usize>) {
    let n = tau.n();
    let signature = tau.signature().to_vec();
    let mut vertices: Vec<Vertex> = signature.iter().map(|&s| Vertex::with_sign(s)).collect();
    let mut level_of = vec![0; n];
    let mut walls: Vec<usize> = (1..=n).filter(|&v| signature[v - 1].is_neg()).collect();
    let mut strands: Vec<Strand> = vec![Strand::BottomLeaf; walls.len() + 1];

    let attach = |vertices: &mut Vec<Vertex>, v: usize, down_idx: usize, strand: Strand| {
        if let Strand::FromUp { label, slot } = strand {
            vertices[label - 1].up[slot] = Slot::Node(v);
            vertices[v - 1].down[down_idx] = Slot::Node(label);
        }
    };

    for (level, &v) in tau.word().iter().enumerate() {
        level_of[v - 1] = level + 1;
        if signature[v - 1].is_neg() {
            let w = walls.binary_search(&v).expect("wall below negative value");
            attach(&mut vertices, v, 0, strands[w]);
            attach(&mut vertices, v, 1, strands[w + 1]);
            walls.remove(w);
            strands.splice(w..w + 2, [Strand::FromUp { label: v, slot: 0 }]);
        } else {
            let r = walls.partition_point(|&w| w < v);
            attach(&mut vertices, v, 0, strands[r]);
            walls.insert(r, v);
            strands.splice(
                r..r + 1,
                [Strand::FromUp { label: v, slot: 0 }, Strand::FromUp { label: v, slot: 1 }],
            );
        }
    }
    debug_assert!(n == 0 || strands.iter().all(|s| matches!(s, Strand::FromUp { .. })));
    (CambrianTree::new_unchecked(signature, vertices), level_of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use camb_core::notation::parse_signed_permutation as parse;
    use camb_core::perm::permutations_with_signature;
    use camb_core::sign::all_signatures;

    #[test]
    fn worked_three_letter_example() {
        let tree = p_symbol(&parse("2+ 1- 3+").unwrap());
        assert_eq!(tree.edges(), vec![(2, 1), (2, 3)]);
        assert_eq!(tree.vertex(1).down, vec![Slot::Leaf, Slot::Node(2)]);
        assert_eq!(tree.vertex(2).up, vec![Slot::Node(1), Slot::Node(3)]);
        assert_eq!(tree.vertex(3).down, vec![Slot::Node(2)]);
    }

    #[test]
    fn worked_seven_letter_example() {
        let tree = p_symbol(&parse("2- 7+ 5- 1- 3+ 4- 6+").unwrap());
        assert_eq!(
            tree.edges(),
            vec![(1, 3), (2, 1), (3, 4), (4, 6), (5, 4), (7, 5)]
        );
        let canopy: String = tree.canopy().iter().map(|s| s.as_char()).collect();
        assert_eq!(canopy, "-++-+-");
    }

    #[test]
    fn constant_negative_signature_gives_binary_search_insertion() {
        let tree = p_symbol(&parse("1- 2-").unwrap());
        assert_eq!(tree.vertex(2).down, vec![Slot::Node(1), Slot::Leaf]);
    }

    #[test]
    fn all_insertions_produce_valid_trees() {
        for sig in all_signatures(5) {
            for tau in permutations_with_signature(&sig) {
                let leveled = leveled_p_symbol(&tau);
                assert_eq!(leveled.tree.validate(), Ok(()));
                assert_eq!(leveled.to_permutation(), tau);
            }
        }
    }

    #[test]
    fn empty_word_inserts_to_empty_tree() {
        assert_eq!(p_symbol(&parse("").unwrap()), CambrianTree::empty());
    }
}
