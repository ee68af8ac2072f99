//! Graphviz rendering of Γ graphs.

use std::fmt::Write;

use freeknot_core::{gamma_graph, j_number, ChordDiagram, LinearCombination};

/// Undirected graph with one vertex per circle, labelled by its word.
pub fn gamma_dot(name: &str, d: &ChordDiagram) -> String {
    let g = gamma_graph(d);
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  label=\"{} (j = {})\";", escape(&d.serialize()), j_number(d)).unwrap();
    for (c, word) in d.serialize().split(" | ").enumerate() {
        writeln!(out, "  c{c} [label=\"{}\"];", escape(word)).unwrap();
    }
    for &(a, b) in g.edges() {
        writeln!(out, "  c{a} -- c{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// One graph per term, in key order.
pub fn combination_dot(x: &LinearCombination) -> String {
    x.iter()
        .enumerate()
        .map(|(i, (_, d))| gamma_dot(&format!("gamma{i}"), d))
        .collect()
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let d: ChordDiagram = "1 2 | 1 3 | 2 3".parse().unwrap();
        let dot = gamma_dot("g", &d);
        assert!(dot.starts_with("graph g {\n"));
        assert!(dot.contains("j = 3"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("c2 [label=\"2 3\"]"));
    }

    #[test]
    fn empty_combination() {
        assert_eq!(combination_dot(&LinearCombination::zero()), "");
    }
}
