//! C++ skeletons for the component runtime: one regenerated hull per
//! component, user implementation stubs written once, and a bootstrap that
//! instantiates, deploys and wires everything.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use thiserror::Error;

use crate::ir::{ComponentIR, Connection, Direction, IrComponent, PortDecl, State};

pub const RUNTIME_INCLUDE: &str = "cca/runtime.h";
pub const DEFAULT_STEPS: u32 = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodegenError {
    #[error("no component named `{0}`")]
    UnknownComponent(String),
    #[error("components `{0}` and `{1}` map to the same C++ class name")]
    ClassNameCollision(String, String),
}

/// First two lines of every generated file.
pub fn banner() -> String {
    format!(
        "// GENERATED by amdsl v{} — DO NOT EDIT\n// runtime include: {RUNTIME_INCLUDE}\n",
        crate::VERSION
    )
}

/// C++ class stem for a component: the name with its first letter upper-cased.
pub fn class_name(component: &str) -> String {
    let mut c = component.chars();
    match c.next() {
        Some(f) => f.to_uppercase().chain(c).collect(),
        None => String::new(),
    }
}

pub fn hull_file(component: &str) -> String {
    format!("{component}_hull.h")
}

pub fn impl_header_file(component: &str) -> String {
    format!("{component}_impl.h")
}

pub fn impl_source_file(component: &str) -> String {
    format!("{component}_impl.cpp")
}

pub fn bootstrap_file(system: &str) -> String {
    format!("system_{system}.cpp")
}

/// Hooks a component must implement, in declaration order.
pub fn hooks(c: &IrComponent) -> Vec<&'static str> {
    let mut h = vec!["void onInit()", "void onExecute()"];
    if c.has_state(State::OnlineLearning) {
        h.push("void onOnlineLearning()");
    }
    if c.has_state(State::OfflineLearning) {
        h.push("void onOfflineLearning()");
    }
    if c.criterion.is_some() {
        h.push("bool checkCriterion()");
    }
    h
}

fn port_member(p: &PortDecl) -> String {
    let wrapper = match p.direction {
        Direction::In => "In",
        Direction::Out => "Out",
    };
    format!(
        "cca::{wrapper}<cca::Port<{}, {}>> {};",
        p.ty.kind().name(),
        p.ty.dimension(),
        p.name
    )
}

fn cpp_string(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn state_enum(s: State) -> String {
    format!("cca::State::{}", s.name())
}

/// Header declaring `<Name>Hull` for the named component.
pub fn emit_component_hull(ir: &ComponentIR, name: &str) -> Result<String, CodegenError> {
    ir.component(name)
        .map(hull)
        .ok_or_else(|| CodegenError::UnknownComponent(name.to_string()))
}

fn hull(c: &IrComponent) -> String {
    let class = format!("{}Hull", class_name(&c.name));
    let mut out = banner();
    out.push_str("#pragma once\n\n");
    writeln!(out, "#include <{RUNTIME_INCLUDE}>\n").unwrap();
    out.push_str("namespace amdsl_gen {\nusing namespace cca::types;\n\n");
    writeln!(out, "// {} ({})", c.name, c.kind).unwrap();
    writeln!(out, "class {class} : public cca::Component {{").unwrap();
    out.push_str("public:\n");
    writeln!(
        out,
        "    explicit {class}(const char* name) : cca::Component(name) {{}}"
    )
    .unwrap();
    writeln!(out, "    ~{class}() override = default;").unwrap();

    let mut ports: Vec<&PortDecl> = c.ports.iter().collect();
    ports.sort_by(|a, b| (a.direction, &a.name).cmp(&(b.direction, &b.name)));
    if !ports.is_empty() {
        out.push('\n');
        for p in ports {
            writeln!(out, "    {}", port_member(p)).unwrap();
        }
    }

    out.push('\n');
    for h in hooks(c) {
        writeln!(out, "    {h} override = 0;").unwrap();
    }
    out.push_str("};\n\n} // namespace amdsl_gen\n");
    out
}

pub fn emit_impl_header(c: &IrComponent) -> String {
    let stem = class_name(&c.name);
    let mut out = format!(
        "// {stem}Impl: behaviour of component {}.\n// Written once by amdsl; never overwritten.\n#pragma once\n\n",
        c.name
    );
    writeln!(out, "#include \"{}\"\n", hull_file(&c.name)).unwrap();
    out.push_str("namespace amdsl_gen {\n\n");
    writeln!(out, "class {stem}Impl : public {stem}Hull {{").unwrap();
    out.push_str("public:\n");
    writeln!(out, "    using {stem}Hull::{stem}Hull;\n").unwrap();
    for h in hooks(c) {
        writeln!(out, "    {h} override;").unwrap();
    }
    out.push_str("};\n\n} // namespace amdsl_gen\n");
    out
}

pub fn emit_impl_source(c: &IrComponent) -> String {
    let stem = class_name(&c.name);
    let mut out = format!(
        "// {stem}Impl: behaviour of component {}.\n// Written once by amdsl; never overwritten.\n",
        c.name
    );
    writeln!(out, "#include \"{}\"\n", impl_header_file(&c.name)).unwrap();
    out.push_str("namespace amdsl_gen {\n");
    for h in hooks(c) {
        let (ret, sig) = h.split_once(' ').expect("hook has a return type");
        writeln!(out, "\n{ret} {stem}Impl::{sig} {{").unwrap();
        if ret == "bool" {
            out.push_str("    return false;\n");
        }
        out.push_str("}\n");
    }
    out.push_str("\n} // namespace amdsl_gen\n");
    out
}

fn connect_line(conn: &Connection) -> String {
    let states: Vec<String> = conn.active_in.iter().map(|s| state_enum(*s)).collect();
    format!(
        "    cca::connect(c_{}.{}, c_{}.{}, {{{}}});",
        conn.source.component,
        conn.source.port,
        conn.target.component,
        conn.target.port,
        states.join(", ")
    )
}

pub fn emit_system_bootstrap(ir: &ComponentIR) -> String {
    let mut ir = ir.clone();
    ir.sort();
    let mut out = banner();
    writeln!(out, "// system {}\n", ir.system_name).unwrap();
    writeln!(out, "#include <{RUNTIME_INCLUDE}>\n\n#include <cstdlib>\n").unwrap();
    for c in &ir.components {
        writeln!(out, "#include \"{}\"", impl_header_file(&c.name)).unwrap();
    }
    if !ir.components.is_empty() {
        out.push('\n');
    }
    out.push_str("int main(int argc, char** argv) {\n");
    out.push_str("    using namespace amdsl_gen;\n");
    writeln!(
        out,
        "    const int steps = argc > 1 ? std::atoi(argv[1]) : {DEFAULT_STEPS};\n"
    )
    .unwrap();
    out.push_str("    cca::Registry registry;\n");

    for c in &ir.components {
        writeln!(
            out,
            "\n    auto& c_{} = registry.add<{}Impl>({});",
            c.name,
            class_name(&c.name),
            cpp_string(&c.name)
        )
        .unwrap();
        for (key, value) in &c.deployment {
            match value {
                Some(v) => writeln!(
                    out,
                    "    c_{}.deploy({}, {});",
                    c.name,
                    cpp_string(key),
                    cpp_string(v)
                )
                .unwrap(),
                None => writeln!(out, "    // TODO deploy {key} ? [{}]", c.name).unwrap(),
            }
        }
    }

    if !ir.connections.is_empty() {
        out.push('\n');
        for conn in &ir.connections {
            writeln!(out, "{}", connect_line(conn)).unwrap();
        }
    }

    let any = |s: State| ir.components.iter().any(|c| c.has_state(s));
    out.push_str("\n    registry.enter(cca::State::Init);\n");
    if any(State::OfflineLearning) {
        out.push_str("    registry.enter(cca::State::OfflineLearning);\n");
    }
    out.push_str("    for (int step = 0; step < steps; ++step) {\n");
    if any(State::OnlineLearning) {
        out.push_str("        registry.step(cca::State::OnlineLearning);\n");
    }
    out.push_str("        registry.step(cca::State::Execution);\n    }\n");
    out.push_str("    return 0;\n}\n");
    out
}

fn check_class_names(ir: &ComponentIR) -> Result<(), CodegenError> {
    let mut seen: BTreeMap<String, &str> = BTreeMap::new();
    for c in &ir.components {
        if let Some(prev) = seen.insert(class_name(&c.name), &c.name) {
            let (a, b) = if prev < c.name.as_str() {
                (prev, c.name.as_str())
            } else {
                (c.name.as_str(), prev)
            };
            return Err(CodegenError::ClassNameCollision(a.into(), b.into()));
        }
    }
    Ok(())
}

/// Files for a single component. Implementation stubs are skipped when their
/// file name is in `existing`.
pub fn emit_component(
    ir: &ComponentIR,
    name: &str,
    existing: &BTreeSet<String>,
) -> Result<BTreeMap<String, String>, CodegenError> {
    let c = ir
        .component(name)
        .ok_or_else(|| CodegenError::UnknownComponent(name.to_string()))?;
    let mut files = BTreeMap::new();
    files.insert(hull_file(&c.name), hull(c));
    for (file, text) in [
        (
            impl_header_file(&c.name),
            emit_impl_header as fn(&IrComponent) -> String,
        ),
        (impl_source_file(&c.name), emit_impl_source),
    ] {
        if !existing.contains(&file) {
            files.insert(file, text(c));
        }
    }
    Ok(files)
}

/// Every file for the system, keyed by file name. Hulls and the bootstrap
/// are always produced; implementation stubs only where `existing` lacks
/// them.
pub fn emit_all(
    ir: &ComponentIR,
    existing: &BTreeSet<String>,
) -> Result<BTreeMap<String, String>, CodegenError> {
    check_class_names(ir)?;
    let mut files = BTreeMap::new();
    for c in &ir.components {
        files.extend(emit_component(ir, &c.name, existing)?);
    }
    files.insert(bootstrap_file(&ir.system_name), emit_system_bootstrap(ir));
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{PortRole, SpaceKind, SpaceType};

    fn component(states: &[State], criterion: bool) -> IrComponent {
        IrComponent {
            name: "walker".into(),
            kind: "PatternGenerator".into(),
            states: states.iter().copied().collect(),
            ports: vec![
                PortDecl {
                    name: "out_u".into(),
                    direction: Direction::Out,
                    ty: SpaceType::new(SpaceKind::JointAngles, 7, None).unwrap(),
                    role: PortRole::Output,
                },
                PortDecl {
                    name: "exec_q".into(),
                    direction: Direction::In,
                    ty: SpaceType::new(SpaceKind::JointAngles, 7, None).unwrap(),
                    role: PortRole::Execution,
                },
            ],
            criterion: criterion.then(|| "Convergence".into()),
            deployment: BTreeMap::from([("host".into(), None)]),
        }
    }

    #[test]
    fn hull_layout() {
        let hull = hull(&component(&[State::Execution], false));
        let lines: Vec<&str> = hull.lines().collect();
        assert_eq!(
            lines[0],
            format!("// GENERATED by amdsl v{} — DO NOT EDIT", crate::VERSION)
        );
        assert_eq!(lines[1], "// runtime include: cca/runtime.h");
        assert!(hull.contains("class WalkerHull : public cca::Component {"));
        let exec = hull
            .find("cca::In<cca::Port<JointAngles, 7>> exec_q;")
            .unwrap();
        let out = hull
            .find("cca::Out<cca::Port<JointAngles, 7>> out_u;")
            .unwrap();
        assert!(exec < out);
        assert!(!hull.contains("Learning"));
        assert!(!hull.contains("checkCriterion"));
    }

    #[test]
    fn hooks_follow_states() {
        let c = component(&[State::Execution, State::OfflineLearning], true);
        assert_eq!(
            hooks(&c),
            [
                "void onInit()",
                "void onExecute()",
                "void onOfflineLearning()",
                "bool checkCriterion()"
            ]
        );
        let src = emit_impl_source(&c);
        assert!(src.contains("bool WalkerImpl::checkCriterion() {\n    return false;\n}"));
    }

    #[test]
    fn existing_impl_files_are_kept() {
        let mut ir = ComponentIR::new("S");
        ir.components.push(component(&[State::Execution], false));
        let all = emit_all(&ir, &BTreeSet::new()).unwrap();
        let names: Vec<_> = all.keys().map(String::as_str).collect();
        assert_eq!(
            names,
            [
                "system_S.cpp",
                "walker_hull.h",
                "walker_impl.cpp",
                "walker_impl.h"
            ]
        );
        let existing = BTreeSet::from(["walker_impl.h".to_string()]);
        let some = emit_all(&ir, &existing).unwrap();
        assert!(!some.contains_key("walker_impl.h"));
        assert!(some.contains_key("walker_impl.cpp"));
        assert_eq!(
            emit_component(&ir, "runner", &existing),
            Err(CodegenError::UnknownComponent("runner".into()))
        );
    }

    #[test]
    fn bootstrap_deploys_and_marks_unset_keys() {
        let mut ir = ComponentIR::new("S");
        let mut c = component(&[State::Execution], false);
        c.deployment
            .insert("process".into(), Some("rt \"a\"".into()));
        ir.components.push(c);
        let boot = emit_system_bootstrap(&ir);
        assert!(boot.contains("    // TODO deploy host ? [walker]\n"));
        assert!(boot.contains("    c_walker.deploy(\"process\", \"rt \\\"a\\\"\");\n"));
        assert!(boot.contains("registry.add<WalkerImpl>(\"walker\")"));
        assert!(!boot.contains("OnlineLearning"));
    }

    #[test]
    fn class_collisions_are_reported() {
        let mut ir = ComponentIR::new("S");
        for name in ["fk", "Fk"] {
            let mut c = component(&[State::Execution], false);
            c.name = name.into();
            ir.components.push(c);
        }
        assert_eq!(
            emit_all(&ir, &BTreeSet::new()),
            Err(CodegenError::ClassNameCollision("Fk".into(), "fk".into()))
        );
    }
}
