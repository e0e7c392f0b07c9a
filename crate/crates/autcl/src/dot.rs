//! Graphviz output of Hasse diagrams.

use std::fmt::Write;

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// `digraph { rankdir=BT; "a" -> "b"; ... }` with one node statement per
/// label, so isolated elements are kept, then one edge per cover pair.
pub fn hasse_dot(labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for l in labels {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for &(a, b) in covers {
        let _ = writeln!(out, "  {} -> {};", quote(&labels[a]), quote(&labels[b]));
    }
    out.push_str("}\n");
    out
}
