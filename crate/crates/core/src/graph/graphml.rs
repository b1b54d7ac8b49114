use std::fmt::Write;

use crate::ir::{Edge, GraphIR, Node, Subgraph};

pub const GRAPHML_NS: &str = "http://graphml.graphdrawing.org/xmlns";
pub const GRAPHML_XSD: &str = "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd";
pub const XSI_NS: &str = "http://www.w3.org/2001/XMLSchema-instance";

/// Attribute keys declared by every document: (id, for, attr.name).
pub const KEYS: [(&str, &str, &str); 4] = [
    ("node.label", "node", "label"),
    ("node.shape", "node", "shape"),
    ("node.fill", "node", "fill"),
    ("edge.label", "edge", "label"),
];

pub fn escape_xml(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn data(out: &mut String, depth: usize, key: &str, value: &str) {
    indent(out, depth);
    writeln!(out, "<data key=\"{key}\">{}</data>", escape_xml(value)).unwrap();
}

fn node(out: &mut String, depth: usize, n: &Node) {
    indent(out, depth);
    writeln!(out, "<node id=\"{}\">", escape_xml(&n.id)).unwrap();
    data(out, depth + 1, "node.label", &n.label);
    data(out, depth + 1, "node.shape", n.shape.graphml_name());
    data(out, depth + 1, "node.fill", &n.fill.to_string());
    indent(out, depth);
    out.push_str("</node>\n");
}

fn group(out: &mut String, depth: usize, sg: &Subgraph, g: &GraphIR) {
    indent(out, depth);
    writeln!(out, "<node id=\"{}\">", escape_xml(&sg.id)).unwrap();
    data(out, depth + 1, "node.label", &sg.label);
    data(out, depth + 1, "node.shape", "roundrectangle");
    data(out, depth + 1, "node.fill", &sg.fill.to_string());
    indent(out, depth + 1);
    write!(
        out,
        "<graph id=\"{}_graph\" edgedefault=\"directed\"",
        escape_xml(&sg.id)
    )
    .unwrap();
    let mut members: Vec<&Node> = sg.members.iter().filter_map(|m| g.node(m)).collect();
    members.sort_by(|a, b| a.id.cmp(&b.id));
    if members.is_empty() {
        out.push_str("/>\n");
    } else {
        out.push_str(">\n");
        for n in members {
            node(out, depth + 2, n);
        }
        indent(out, depth + 1);
        out.push_str("</graph>\n");
    }
    indent(out, depth);
    out.push_str("</node>\n");
}

fn edge(out: &mut String, depth: usize, e: &Edge) {
    indent(out, depth);
    write!(
        out,
        "<edge id=\"{}\" source=\"{}\" target=\"{}\"",
        escape_xml(&e.id),
        escape_xml(&e.source),
        escape_xml(&e.target)
    )
    .unwrap();
    if !e.directed {
        out.push_str(" directed=\"false\"");
    }
    match &e.label {
        None => out.push_str("/>\n"),
        Some(l) => {
            out.push_str(">\n");
            data(out, depth + 1, "edge.label", l);
            indent(out, depth);
            out.push_str("</edge>\n");
        }
    }
}

/// Serialises `g` as GraphML. Subgraphs become group nodes holding a nested
/// graph; with `flat` they are dropped and every node sits at the top level.
/// Output depends only on the content of `g`, not on its ordering.
pub fn emit_graphml(g: &GraphIR, flat: bool) -> String {
    let mut g = g.clone();
    g.sort();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<graphml xmlns=\"{GRAPHML_NS}\" xmlns:xsi=\"{XSI_NS}\" xsi:schemaLocation=\"{GRAPHML_NS} {GRAPHML_XSD}\">"
    )
    .unwrap();
    for (id, target, name) in KEYS {
        writeln!(
            out,
            "  <key id=\"{id}\" for=\"{target}\" attr.name=\"{name}\" attr.type=\"string\"/>"
        )
        .unwrap();
    }
    write!(
        out,
        "  <graph id=\"{}\" edgedefault=\"directed\"",
        escape_xml(&g.name)
    )
    .unwrap();

    enum Item<'a> {
        Node(&'a Node),
        Group(&'a Subgraph),
    }
    let mut top: Vec<(&str, Item<'_>)> = Vec::new();
    for n in &g.nodes {
        if flat || g.owner(&n.id).is_none() {
            top.push((&n.id, Item::Node(n)));
        }
    }
    if !flat {
        for sg in &g.subgraphs {
            top.push((&sg.id, Item::Group(sg)));
        }
    }
    top.sort_by(|a, b| a.0.cmp(b.0));

    if top.is_empty() && g.edges.is_empty() {
        out.push_str("/>\n");
    } else {
        out.push_str(">\n");
        for (_, item) in &top {
            match item {
                Item::Node(n) => node(&mut out, 2, n),
                Item::Group(sg) => group(&mut out, 2, sg, &g),
            }
        }
        for e in &g.edges {
            edge(&mut out, 2, e);
        }
        out.push_str("  </graph>\n");
    }
    out.push_str("</graphml>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{Fill, Shape};

    #[test]
    fn empty_graph() {
        let text = emit_graphml(&GraphIR::new("g"), false);
        assert!(text.contains("  <graph id=\"g\" edgedefault=\"directed\"/>\n"));
        assert!(text.ends_with("</graphml>\n"));
    }

    #[test]
    fn escapes_labels() {
        let mut g = GraphIR::new("g");
        g.nodes.push(Node {
            id: "a".into(),
            label: "a<b & \"c\"".into(),
            shape: Shape::Rectangle,
            fill: Fill::MAP,
        });
        let text = emit_graphml(&g, false);
        assert!(text.contains("<data key=\"node.label\">a&lt;b &amp; &quot;c&quot;</data>"));
        assert!(text.contains("<data key=\"node.fill\">#CCE5FF</data>"));
    }

    #[test]
    fn flat_drops_groups() {
        let mut g = GraphIR::new("g");
        for id in ["m", "c"] {
            g.nodes.push(Node {
                id: id.into(),
                label: id.into(),
                shape: Shape::Rectangle,
                fill: Fill::MODULE,
            });
        }
        g.subgraphs.push(Subgraph {
            id: "sg".into(),
            label: "grp".into(),
            fill: Fill::COMPONENT,
            members: vec!["m".into(), "c".into()],
        });
        let nested = emit_graphml(&g, false);
        assert!(nested.contains("    <node id=\"sg\">"));
        assert!(nested.contains("        <node id=\"m\">"));
        let flat = emit_graphml(&g, true);
        assert!(!flat.contains("sg"));
        assert!(flat.contains("    <node id=\"m\">"));
    }
}
