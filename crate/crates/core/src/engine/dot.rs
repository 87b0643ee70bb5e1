use std::fmt::Write;

use super::digraph::TransitionDigraph;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Graphviz rendering: vertices named by their window, edges labeled by
/// the member word.
pub fn to_dot(g: &TransitionDigraph) -> String {
    let alphabet = g.alphabet();
    let names: Vec<String> = (0..g.vertex_count())
        .map(|v| quote(&alphabet.render(&g.vertex(v))))
        .collect();

    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(g.class_label())).unwrap();
    for name in &names {
        writeln!(out, "  {name};").unwrap();
    }
    for e in g.edges() {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            names[e.from],
            names[e.to],
            quote(&alphabet.render(&g.edge_word(e)))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
