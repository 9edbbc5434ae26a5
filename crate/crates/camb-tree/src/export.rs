//! JSON and Graphviz renderings of a single tree.

use crate::tree::{CambrianTree, Slot, Vertex};
use camb_core::sign::{format_signature, Sign};
use serde_json::{json, Value};

const SCHEMA: &str = "cambrian-tree/1";

fn slot_json(slots: &[Slot]) -> Value {
    Value::Array(
        slots
            .iter()
            .map(|s| json!(match s {
                Slot::Leaf => 0,
                Slot::Node(v) => *v,
            }))
            .collect(),
    )
}

pub fn tree_to_json(tree: &CambrianTree) -> Value {
    json!({
        "schema": SCHEMA,
        "n": tree.n(),
        "signature": format_signature(tree.signature()),
        "nodes": (1..=tree.n())
            .map(|v| {
                let vertex = tree.vertex(v);
                json!({
                    "label": v,
                    "sign": tree.sign_of(v).as_char().to_string(),
                    "down": slot_json(&vertex.down),
                    "up": slot_json(&vertex.up),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn slots_from_json(value: &Value) -> Result<Vec<Slot>, String> {
    value
        .as_array()
        .ok_or("slot table is not an array")?
        .iter()
        .map(|s| match s.as_u64() {
            Some(0) => Ok(Slot::Leaf),
            Some(v) => Ok(Slot::Node(v as usize)),
            None => Err("slot is not a number".to_string()),
        })
        .collect()
}

pub fn tree_from_json(value: &Value) -> Result<CambrianTree, String> {
    if value["schema"] != SCHEMA {
        return Err(format!("expected schema {SCHEMA}"));
    }
    let nodes = value["nodes"].as_array().ok_or("nodes is not an array")?;
    let n = value["n"].as_u64().ok_or("n is not a number")? as usize;
    if nodes.len() != n {
        return Err(format!("{} nodes but n = {n}", nodes.len()));
    }
    let mut signature = vec![Sign::Neg; n];
    let mut vertices = vec![Vertex { down: Vec::new(), up: Vec::new() }; n];
    for node in nodes {
        let label = node["label"].as_u64().ok_or("label is not a number")? as usize;
        if label == 0 || label > n {
            return Err(format!("label {label} out of range"));
        }
        let sign = node["sign"]
            .as_str()
            .and_then(|s| s.chars().next())
            .and_then(Sign::from_char)
            .ok_or("sign is not '-' or '+'")?;
        signature[label - 1] = sign;
        vertices[label - 1] = Vertex {
            down: slots_from_json(&node["down"])?,
            up: slots_from_json(&node["up"])?,
        };
    }
    CambrianTree::from_vertices(signature, vertices).map_err(|e| e.to_string())
}

pub fn tree_to_dot(tree: &CambrianTree) -> String {
    let mut out = String::from("digraph cambrian_tree {\n  rankdir=BT;\n  node [shape=circle];\n");
    for v in 1..=tree.n() {
        let glyph = match tree.sign_of(v) {
            Sign::Neg => "\u{2296}",
            Sign::Pos => "\u{2295}",
        };
        out.push_str(&format!("  v{v} [label=\"{v}{glyph}\"];\n"));
    }
    for (child, parent) in tree.edges() {
        out.push_str(&format!("  v{child} -> v{parent};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::p_symbol;
    use camb_core::notation::parse_signed_permutation as parse;

    #[test]
    fn json_round_trip() {
        let tree = p_symbol(&parse("2- 7+ 5- 1- 3+ 4- 6+").unwrap());
        let value = tree_to_json(&tree);
        assert_eq!(value["schema"], "cambrian-tree/1");
        assert_eq!(value["signature"], "--+--++");
        assert_eq!(tree_from_json(&value).unwrap(), tree);
    }

    #[test]
    fn rejects_label_order_violations() {
        let bad = serde_json::json!({
            "schema": "cambrian-tree/1",
            "n": 2,
            "signature": "--",
            "nodes": [
                {"label": 1, "sign": "-", "down": [2, 0], "up": [0]},
                {"label": 2, "sign": "-", "down": [0, 0], "up": [1]},
            ],
        });
        assert!(tree_from_json(&bad).unwrap_err().contains("label order"));
    }

    #[test]
    fn dot_contains_edges() {
        let dot = tree_to_dot(&p_symbol(&parse("2+ 1- 3+").unwrap()));
        assert!(dot.contains("v2 -> v1"));
        assert!(dot.contains("v2 -> v3"));
        assert!(dot.contains("1\u{2296}"));
    }
}
