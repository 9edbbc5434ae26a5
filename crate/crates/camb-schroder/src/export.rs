//! JSON and Graphviz serialization of block trees.
//!
//! Nodes are listed in canonical order; slot tables hold the 1-based index
//! of the neighbor hanging there, or 0 for a leaf. Down slots are delimited
//! by the negative values of the block, up slots by the positive values.

use crate::tree::SchroderTree;
use camb_core::notation::parse_signature;
use camb_core::sign::{format_signature, Sign};
use serde_json::{json, Value};

const SCHEMA: &str = "schroder-tree/1";

fn slot_table(tree: &SchroderTree, v: usize, barrier: Sign, neighbors: &[usize]) -> Vec<usize> {
    let walls: Vec<usize> = tree
        .node(v)
        .iter()
        .copied()
        .filter(|&x| tree.signature()[x - 1] == barrier)
        .collect();
    let mut slots = vec![0; walls.len() + 1];
    for &u in neighbors {
        let witness = tree.node(u)[0];
        slots[walls.partition_point(|&c| c < witness)] = u + 1;
    }
    slots
}

pub fn tree_to_json(tree: &SchroderTree) -> Value {
    json!({
        "schema": SCHEMA,
        "n": tree.n(),
        "signature": format_signature(tree.signature()),
        "nodes": (0..tree.num_nodes())
            .map(|v| {
                json!({
                    "label": tree.node(v),
                    "down": slot_table(tree, v, Sign::Neg, &tree.children(v)),
                    "up": slot_table(tree, v, Sign::Pos, &tree.parents(v)),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn tree_from_json(value: &Value) -> Result<SchroderTree, String> {
    if value["schema"] != SCHEMA {
        return Err(format!("expected schema {SCHEMA}"));
    }
    let signature = parse_signature(
        value["signature"].as_str().ok_or("signature is not a string")?,
    )
    .map_err(|e| e.to_string())?;
    let entries = value["nodes"].as_array().ok_or("nodes is not an array")?;
    let mut blocks = Vec::new();
    let mut edges = Vec::new();
    for (v, entry) in entries.iter().enumerate() {
        let label: Vec<usize> = entry["label"]
            .as_array()
            .ok_or("label is not an array")?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or("label entry is not a number"))
            .collect::<Result<_, _>>()?;
        blocks.push(label);
        for slot in entry["down"].as_array().ok_or("down is not an array")? {
            match slot.as_u64().ok_or("slot is not a number")? {
                0 => {}
                c => edges.push((c as usize - 1, v)),
            }
        }
    }
    SchroderTree::new(signature, blocks, edges).map_err(|e| e.to_string())
}

pub fn tree_to_dot(tree: &SchroderTree) -> String {
    let mut out = String::from("digraph schroder_tree {\n  rankdir=BT;\n  node [shape=box];\n");
    for v in 0..tree.num_nodes() {
        let label: Vec<String> = tree
            .node(v)
            .iter()
            .map(|&x| {
                let glyph = match tree.signature()[x - 1] {
                    Sign::Neg => "\u{2296}",
                    Sign::Pos => "\u{2295}",
                };
                format!("{x}{glyph}")
            })
            .collect();
        out.push_str(&format!("  v{v} [label=\"{}\"];\n", label.join(" ")));
    }
    for &(child, parent) in tree.edges() {
        out.push_str(&format!("  v{child} -> v{parent};\n"));
    }
    out.push_str("}\n");
    out
}
