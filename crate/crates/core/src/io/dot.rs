use std::fmt::Write;

use super::output::introduced_text;
use crate::context::NContext;
use crate::order::{AsConcept, DimensionDiagram};

/// Renders a diagram as a DOT digraph. Edges point from the smaller class
/// to the larger one and `rankdir=BT` draws them upward.
pub fn export_dot<T: AsConcept>(ctx: &NContext, diagram: &DimensionDiagram<T>) -> String {
    let name = ctx
        .dims()
        .get(diagram.dimension)
        .map_or("order", |d| d.name());
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    for (i, node) in diagram.nodes.iter().enumerate() {
        let lines: Vec<String> = node
            .members
            .iter()
            .map(|m| {
                let mut line = ctx.format_tuple(m.concept());
                if let Some(intro) = m.introduced() {
                    line.push_str(&introduced_text(ctx, intro));
                }
                escape(&line)
            })
            .collect();
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", lines.join("\\n"));
    }
    for (lower, upper) in &diagram.edges {
        let _ = writeln!(out, "  n{lower} -> n{upper};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
