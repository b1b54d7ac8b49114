//! The line-oriented `.graph` format.
//!
//! ```text
//! graph <name>
//! node <id> <rect|ellipse|roundrect> <#RRGGBB> "<label>"
//! subgraph <id> [#RRGGBB] "<label>" { <member> ... }
//! edge <id> <source> -> <target> ["<label>"]
//! ```
//!
//! A subgraph without a colour gets the component group fill. `--` in
//! place of `->` marks an undirected edge. Blank lines and lines
//! starting with `//` are ignored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::diag::{codes, has_errors, Diagnostic};
use crate::frontend::quote;
use crate::ir::{Edge, Fill, GraphIR, Node, Shape, Span, Subgraph};

pub fn print_graph(g: &GraphIR) -> String {
    let mut g = g.clone();
    g.sort();
    let mut out = String::new();
    writeln!(out, "graph {}", g.name).unwrap();
    for n in &g.nodes {
        writeln!(
            out,
            "node {} {} {} {}",
            n.id,
            n.shape.keyword(),
            n.fill,
            quote(&n.label)
        )
        .unwrap();
    }
    for sg in &g.subgraphs {
        write!(out, "subgraph {} ", sg.id).unwrap();
        if sg.fill != Fill::COMPONENT {
            write!(out, "{} ", sg.fill).unwrap();
        }
        write!(out, "{} {{", quote(&sg.label)).unwrap();
        for m in &sg.members {
            write!(out, " {m}").unwrap();
        }
        out.push_str(" }\n");
    }
    for e in &g.edges {
        let arrow = if e.directed { "->" } else { "--" };
        write!(out, "edge {} {} {arrow} {}", e.id, e.source, e.target).unwrap();
        if let Some(l) = &e.label {
            write!(out, " {}", quote(l)).unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Str(String),
}

fn tokenize_line(line: &str, line_no: u32) -> Result<Vec<(Tok, Span)>, Diagnostic> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let span = |a: usize, b: usize| Span::new(line_no, a as u32 + 1, line_no, b as u32 + 1);
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '"' {
            let start = i;
            let mut s = String::new();
            i += 1;
            loop {
                match chars.get(i) {
                    None => {
                        return Err(Diagnostic::error(
                            codes::GRAPH_SYNTAX,
                            span(start, chars.len()),
                            "unterminated string",
                        ))
                    }
                    Some('"') => break,
                    Some('\\') => match chars.get(i + 1) {
                        Some(&e @ ('"' | '\\')) => {
                            s.push(e);
                            i += 2;
                        }
                        _ => {
                            return Err(Diagnostic::error(
                                codes::GRAPH_SYNTAX,
                                span(i, i + 2),
                                "unknown escape",
                            ))
                        }
                    },
                    Some(&c) => {
                        s.push(c);
                        i += 1;
                    }
                }
            }
            i += 1;
            out.push((Tok::Str(s), span(start, i)));
        } else if c == '{' || c == '}' {
            out.push((Tok::Word(c.to_string()), span(i, i + 1)));
            i += 1;
        } else {
            let start = i;
            while i < chars.len()
                && !chars[i].is_whitespace()
                && !matches!(chars[i], '"' | '{' | '}')
            {
                i += 1;
            }
            out.push((Tok::Word(chars[start..i].iter().collect()), span(start, i)));
        }
    }
    Ok(out)
}

fn is_graph_id(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
        && !s.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '.')
}

struct Line<'a> {
    toks: &'a [(Tok, Span)],
    span: Span,
    diags: &'a mut Vec<Diagnostic>,
}

impl Line<'_> {
    fn err(&mut self, code: &'static str, span: Span, msg: impl Into<String>) {
        self.diags.push(Diagnostic::error(code, span, msg));
    }

    fn at(&self, i: usize) -> Span {
        self.toks.get(i).map_or(self.span, |t| t.1)
    }

    fn id(&mut self, i: usize, what: &str) -> Option<String> {
        match self.toks.get(i) {
            Some((Tok::Word(w), _)) if is_graph_id(w) => Some(w.clone()),
            _ => {
                self.err(
                    codes::GRAPH_SYNTAX,
                    self.at(i),
                    format!("expected {what} id"),
                );
                None
            }
        }
    }

    fn string(&mut self, i: usize, what: &str) -> Option<String> {
        match self.toks.get(i) {
            Some((Tok::Str(s), _)) => Some(s.clone()),
            _ => {
                self.err(
                    codes::GRAPH_SYNTAX,
                    self.at(i),
                    format!("expected quoted {what}"),
                );
                None
            }
        }
    }

    fn fill(&mut self, i: usize) -> Option<Fill> {
        match self.toks.get(i) {
            Some((Tok::Word(w), span)) => match w.parse() {
                Ok(f) => Some(f),
                Err(_) => {
                    self.err(
                        codes::GRAPH_BAD_VALUE,
                        *span,
                        format!("`{w}` is not a #RRGGBB colour"),
                    );
                    None
                }
            },
            _ => {
                self.err(codes::GRAPH_SYNTAX, self.at(i), "expected fill colour");
                None
            }
        }
    }

    fn end(&mut self, i: usize) -> bool {
        if i < self.toks.len() {
            self.err(
                codes::GRAPH_SYNTAX,
                self.at(i),
                "unexpected text at end of line",
            );
            false
        } else {
            true
        }
    }
}

/// Parses a `.graph` document. Returns `None` when any error was found.
pub fn parse_graph(text: &str) -> (Option<GraphIR>, Vec<Diagnostic>) {
    let mut diags = Vec::new();
    let mut g: Option<GraphIR> = None;
    let mut node_spans: BTreeMap<String, Span> = BTreeMap::new();
    let mut edge_ids = BTreeSet::new();
    let mut member_spans: Vec<(usize, Vec<Span>)> = Vec::new();
    let mut edge_spans: Vec<(Span, Span)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx as u32 + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with("//") {
            continue;
        }
        let span = Span::new(line_no, 1, line_no, raw.chars().count() as u32 + 1);
        let toks = match tokenize_line(raw, line_no) {
            Ok(t) => t,
            Err(d) => {
                diags.push(d);
                continue;
            }
        };
        let mut line = Line {
            toks: &toks,
            span,
            diags: &mut diags,
        };
        let head = match &toks[0].0 {
            Tok::Word(w) => w.as_str(),
            Tok::Str(_) => "",
        };

        let Some(graph) = g.as_mut() else {
            if head == "graph" {
                if let Some(name) = line.id(1, "graph") {
                    if line.end(2) {
                        g = Some(GraphIR::new(name));
                        continue;
                    }
                }
            } else {
                line.err(codes::GRAPH_SYNTAX, span, "expected `graph <name>` header");
            }
            return (None, diags);
        };

        match head {
            "node" => {
                let Some(id) = line.id(1, "node") else {
                    continue;
                };
                let shape = match toks.get(2) {
                    Some((Tok::Word(w), sp)) => match Shape::from_keyword(w) {
                        Some(s) => s,
                        None => {
                            line.err(codes::GRAPH_BAD_VALUE, *sp, format!("unknown shape `{w}`"));
                            continue;
                        }
                    },
                    _ => {
                        line.err(codes::GRAPH_SYNTAX, line.at(2), "expected shape");
                        continue;
                    }
                };
                let Some(fill) = line.fill(3) else { continue };
                let Some(label) = line.string(4, "label") else {
                    continue;
                };
                if !line.end(5) {
                    continue;
                }
                if node_spans.contains_key(&id) {
                    line.err(
                        codes::GRAPH_DUPLICATE,
                        toks[1].1,
                        format!("duplicate node `{id}`"),
                    );
                    continue;
                }
                node_spans.insert(id.clone(), toks[1].1);
                graph.nodes.push(Node {
                    id,
                    label,
                    shape,
                    fill,
                });
            }
            "subgraph" => {
                let Some(id) = line.id(1, "subgraph") else {
                    continue;
                };
                let (fill, at) = match toks.get(2) {
                    Some((Tok::Word(_), _)) => match line.fill(2) {
                        Some(f) => (f, 3),
                        None => continue,
                    },
                    _ => (Fill::COMPONENT, 2),
                };
                let Some(label) = line.string(at, "label") else {
                    continue;
                };
                if toks.get(at + 1).map(|t| &t.0) != Some(&Tok::Word("{".into())) {
                    line.err(codes::GRAPH_SYNTAX, line.at(at + 1), "expected `{`");
                    continue;
                }
                let mut members = Vec::new();
                let mut spans = Vec::new();
                let mut i = at + 2;
                let mut closed = false;
                while let Some((tok, sp)) = toks.get(i) {
                    i += 1;
                    match tok {
                        Tok::Word(w) if w == "}" => {
                            closed = true;
                            break;
                        }
                        Tok::Word(w) if is_graph_id(w) => {
                            members.push(w.clone());
                            spans.push(*sp);
                        }
                        _ => {
                            line.err(codes::GRAPH_SYNTAX, *sp, "expected member id");
                            break;
                        }
                    }
                }
                if !closed {
                    if line.diags.last().map(|d| d.span.start_line) != Some(line_no) {
                        line.err(codes::GRAPH_SYNTAX, span, "expected `}`");
                    }
                    continue;
                }
                if !line.end(i) {
                    continue;
                }
                if graph.subgraphs.iter().any(|s| s.id == id) {
                    line.err(
                        codes::GRAPH_DUPLICATE,
                        toks[1].1,
                        format!("duplicate subgraph `{id}`"),
                    );
                    continue;
                }
                member_spans.push((graph.subgraphs.len(), spans));
                graph.subgraphs.push(Subgraph {
                    id,
                    label,
                    fill,
                    members,
                });
            }
            "edge" => {
                let Some(id) = line.id(1, "edge") else {
                    continue;
                };
                let Some(source) = line.id(2, "source node") else {
                    continue;
                };
                let directed = match toks.get(3) {
                    Some((Tok::Word(w), _)) if w == "->" => true,
                    Some((Tok::Word(w), _)) if w == "--" => false,
                    _ => {
                        line.err(codes::GRAPH_SYNTAX, line.at(3), "expected `->` or `--`");
                        continue;
                    }
                };
                let Some(target) = line.id(4, "target node") else {
                    continue;
                };
                let label = match toks.get(5) {
                    None => None,
                    Some(_) => match line.string(5, "label") {
                        Some(l) => Some(l),
                        None => continue,
                    },
                };
                if !line.end(if label.is_some() { 6 } else { 5 }) {
                    continue;
                }
                if !edge_ids.insert(id.clone()) {
                    line.err(
                        codes::GRAPH_DUPLICATE,
                        toks[1].1,
                        format!("duplicate edge `{id}`"),
                    );
                    continue;
                }
                edge_spans.push((toks[2].1, toks[4].1));
                graph.edges.push(Edge {
                    id,
                    source,
                    target,
                    label,
                    directed,
                });
            }
            _ => line.err(
                codes::GRAPH_SYNTAX,
                toks[0].1,
                "expected `node`, `subgraph` or `edge`",
            ),
        }
    }

    let Some(mut g) = g else {
        diags.push(Diagnostic::error(
            codes::GRAPH_SYNTAX,
            Span::new(1, 1, 1, 1),
            "expected `graph <name>` header",
        ));
        return (None, diags);
    };

    for (e, (src_span, dst_span)) in g.edges.iter().zip(&edge_spans) {
        for (end, sp) in [(&e.source, src_span), (&e.target, dst_span)] {
            if !node_spans.contains_key(end) {
                diags.push(Diagnostic::error(
                    codes::DANGLING_EDGE,
                    *sp,
                    format!("edge `{}` refers to unknown node `{end}`", e.id),
                ));
            }
        }
    }
    let mut owner: BTreeMap<&str, &str> = BTreeMap::new();
    for (idx, spans) in &member_spans {
        let sg = &g.subgraphs[*idx];
        if node_spans.contains_key(&sg.id) {
            diags.push(Diagnostic::error(
                codes::GRAPH_DUPLICATE,
                spans.first().copied().unwrap_or(Span::SYNTHETIC),
                format!("subgraph `{}` reuses a node id", sg.id),
            ));
        }
        for (m, sp) in sg.members.iter().zip(spans) {
            if !node_spans.contains_key(m) {
                diags.push(Diagnostic::error(
                    codes::GRAPH_MEMBER,
                    *sp,
                    format!("subgraph `{}` names unknown node `{m}`", sg.id),
                ));
            } else if let Some(prev) = owner.insert(m, &sg.id) {
                diags.push(Diagnostic::error(
                    codes::GRAPH_MEMBER,
                    *sp,
                    format!("node `{m}` is already in subgraph `{prev}`"),
                ));
            }
        }
    }

    if has_errors(&diags) {
        return (None, diags);
    }
    g.sort();
    (Some(g), diags)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"graph demo
node a ellipse #FFFFFF "a: JointAngles"
node b rect #FF9999 "b \"quoted\""
node c roundrect #FFF3A0 "c: Generic"
subgraph sg_c "c" { b c }
subgraph sg_d #CCE5FF "d" { a }
edge e.a.c a -> c "execution"
edge u a -- b
"#;

    #[test]
    fn round_trip() {
        let (g, d) = parse_graph(SMALL);
        assert!(d.is_empty(), "{d:?}");
        let g = g.unwrap();
        assert_eq!(g.node("b").unwrap().label, "b \"quoted\"");
        assert!(!g.edges[1].directed);
        assert_eq!(print_graph(&g), SMALL);
    }

    #[test]
    fn dangling_edge_points_at_endpoint() {
        let text = "graph g\nnode a rect #FFFFFF \"a\"\nedge x a -> zz\n";
        let d = parse_graph(text).1;
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].code, "E601");
        assert_eq!(d[0].span, Span::new(3, 13, 3, 15));
    }

    #[test]
    fn member_errors() {
        let text = "graph g
node a rect #FFFFFF \"a\"
subgraph s1 \"s\" { a missing }
subgraph s2 #FFFFFF \"s\" { a }
";
        let codes: Vec<_> = parse_graph(text).1.iter().map(|d| d.code).collect();
        assert_eq!(codes, ["E604", "E604"]);
    }

    #[test]
    fn value_and_syntax_errors() {
        let code = |t: &str| parse_graph(t).1.first().map(|d| d.code);
        assert_eq!(
            code("graph g\nnode a hexagon #FFFFFF \"a\"\n"),
            Some("E605")
        );
        assert_eq!(code("graph g\nnode a rect red \"a\"\n"), Some("E605"));
        assert_eq!(code("graph g\nnode a rect #FFFFFF a\n"), Some("E602"));
        assert_eq!(code("graph g\nnode a rect #FFFFFF \"a\ny\n"), Some("E602"));
        assert_eq!(code("node a rect #FFFFFF \"a\"\n"), Some("E602"));
        assert_eq!(
            code("graph g\nnode a rect #FFFFFF \"a\"\nnode a rect #FFFFFF \"a\"\n"),
            Some("E603")
        );
    }
}
