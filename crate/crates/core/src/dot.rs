//! Graphviz DOT rendering of finite crystal graphs.
//!
//! Node identifiers are the canonical compact form of each tableau (rows
//! joined by `|`, symbols by `,`), so the output is stable across runs.

use std::fmt::Write;

use crate::enumerate::CrystalGraph;
use crate::tableau::Tableau;

/// Compact one-line form of a tableau, used as the DOT node id.
pub fn compact_id(t: &Tableau) -> String {
    if t.is_empty() {
        return "empty".to_string();
    }
    t.rows()
        .iter()
        .map(|row| row.iter().map(|x| x.symbol()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("|")
}

/// Render a crystal graph as DOT text: nodes in discovery order, one edge
/// per arrow, labeled by its index.
pub fn export_dot(graph: &CrystalGraph) -> String {
    let ids: Vec<String> = graph.nodes.iter().map(compact_id).collect();
    let mut out = String::new();
    out.push_str("digraph crystal {\n");
    out.push_str("  rankdir=LR;\n");
    for id in &ids {
        writeln!(out, "  \"{id}\";").expect("writing to a string");
    }
    for &(from, i, to) in &graph.edges {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{i}\"];",
            ids[from], ids[to]
        )
        .expect("writing to a string");
    }
    out.push_str("}\n");
    out
}
