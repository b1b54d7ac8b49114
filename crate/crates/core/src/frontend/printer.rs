use std::fmt::Write;

use crate::ir::{AdaptiveComponentDecl, AdaptiveModuleDecl, SystemModel};

const INDENT: &str = "  ";

/// Prints a model in the canonical text layout: two-space indent, one
/// statement per line, declarations grouped by category in list order.
pub fn print_system(model: &SystemModel) -> String {
    let mut out = String::new();
    writeln!(out, "system {} {{", model.name).unwrap();
    for s in &model.spaces {
        write!(out, "{INDENT}space {} : {}", s.name, s.ty).unwrap();
        if let Some(d) = &s.description {
            write!(out, " {}", quote(d)).unwrap();
        }
        out.push('\n');
    }
    for m in &model.mappings {
        writeln!(
            out,
            "{INDENT}mapping {} : {} from {} to {}",
            m.name, m.kind, m.from, m.to
        )
        .unwrap();
    }
    for t in &model.transformations {
        writeln!(
            out,
            "{INDENT}transformation {} : {} from {} to {}",
            t.name, t.kind, t.from, t.to
        )
        .unwrap();
    }
    for m in &model.modules {
        print_module(&mut out, m);
    }
    for c in &model.components {
        print_component(&mut out, c);
    }
    out.push_str("}\n");
    out
}

fn print_module(out: &mut String, m: &AdaptiveModuleDecl) {
    let stmt = format!("{INDENT}{INDENT}");
    writeln!(out, "{INDENT}adaptive module {} {{", m.name).unwrap();
    if let Some(ds) = &m.dynamical_system {
        writeln!(out, "{stmt}dynamical_system {ds}").unwrap();
    }
    if let Some(l) = &m.learner {
        writeln!(out, "{stmt}learner {l}").unwrap();
    }
    write!(out, "{stmt}mode {}", m.loop_mode.keyword()).unwrap();
    if let Some(lm) = m.learning_mode {
        write!(out, ", {}", lm.keyword()).unwrap();
    }
    out.push('\n');
    if !m.execution_inputs.is_empty() {
        writeln!(out, "{stmt}in execution {}", join(&m.execution_inputs, " ")).unwrap();
    }
    if !m.learning_inputs.is_empty() {
        writeln!(out, "{stmt}in learning {}", join(&m.learning_inputs, " ")).unwrap();
    }
    for (param, space) in &m.shaping {
        writeln!(out, "{stmt}param {} {space}", param.keyword()).unwrap();
    }
    if let Some(o) = &m.output {
        writeln!(out, "{stmt}out {o}").unwrap();
    }
    writeln!(out, "{INDENT}}}").unwrap();
}

fn print_component(out: &mut String, c: &AdaptiveComponentDecl) {
    let stmt = format!("{INDENT}{INDENT}");
    writeln!(
        out,
        "{INDENT}adaptive component {} : {} {{",
        c.name,
        c.subtype.keyword()
    )
    .unwrap();
    if let Some(m) = &c.module {
        writeln!(out, "{stmt}module {m}").unwrap();
    }
    for m in &c.input_mappings {
        writeln!(out, "{stmt}in via {m}").unwrap();
    }
    if let Some(m) = &c.output_mapping {
        writeln!(out, "{stmt}out via {m}").unwrap();
    }
    if let Some(k) = &c.criterion {
        write!(out, "{stmt}criterion {}", k.kind).unwrap();
        if let Some(d) = &k.description {
            write!(out, " {}", quote(d)).unwrap();
        }
        out.push('\n');
    }
    if !c.children.is_empty() {
        writeln!(out, "{stmt}children {}", join(&c.children, ", ")).unwrap();
    }
    writeln!(out, "{INDENT}}}").unwrap();
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// Double-quoted literal with `"` and `\` escaped.
pub fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            q.push('\\');
        }
        q.push(c);
    }
    q.push('"');
    q
}
