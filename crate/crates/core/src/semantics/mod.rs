//! Name resolution, space type checking and component wiring validation.
//!
//! Names live in three namespaces: spaces, adaptive modules, and units.
//! Units are mappings, transformations and adaptive components, which all
//! become components after lowering and therefore may not share a name.

use std::collections::{BTreeMap, BTreeSet};

use crate::diag::{codes, has_errors, sort_by_position, Diagnostic};
use crate::ir::{
    AdaptiveComponentDecl, AdaptiveModuleDecl, ComponentSubtype, Ident, LoopMode, MapRef,
    SpaceType, Span, SystemModel,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Mapping(usize),
    Transformation(usize),
    Component(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolTable {
    pub spaces: BTreeMap<String, usize>,
    pub modules: BTreeMap<String, usize>,
    pub units: BTreeMap<String, Unit>,
}

/// A model whose references all resolve. `is_checked` is true only after
/// the type and wiring checks passed as well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedModel {
    model: SystemModel,
    symbols: SymbolTable,
    checked: bool,
}

impl ResolvedModel {
    pub fn model(&self) -> &SystemModel {
        &self.model
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    pub fn is_checked(&self) -> bool {
        self.checked
    }

    pub fn into_model(self) -> SystemModel {
        self.model
    }

    pub fn space_type(&self, name: &str) -> &SpaceType {
        &self.model.spaces[self.symbols.spaces[name]].ty
    }

    pub fn module(&self, name: &str) -> &AdaptiveModuleDecl {
        &self.model.modules[self.symbols.modules[name]]
    }

    pub fn component(&self, name: &str) -> &AdaptiveComponentDecl {
        match self.symbols.units[name] {
            Unit::Component(i) => &self.model.components[i],
            other => panic!("`{name}` is {other:?}, not a component"),
        }
    }

    pub fn map(&self, name: &str) -> MapRef<'_> {
        match self.symbols.units[name] {
            Unit::Mapping(i) => MapRef::Mapping(&self.model.mappings[i]),
            Unit::Transformation(i) => MapRef::Transformation(&self.model.transformations[i]),
            Unit::Component(_) => panic!("`{name}` is a component, not a mapping"),
        }
    }

    pub fn module_of(&self, component: &AdaptiveComponentDecl) -> Option<&AdaptiveModuleDecl> {
        component.module.as_ref().map(|m| self.module(&m.name))
    }
}

/// Result of running every check in order.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub resolved: Option<ResolvedModel>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Analysis {
    pub fn has_errors(&self) -> bool {
        has_errors(&self.diagnostics)
    }
}

/// Resolves, then type-checks and wiring-checks. The returned model is
/// present and marked checked only when no error was found.
pub fn analyze(model: SystemModel) -> Analysis {
    let (resolved, mut diagnostics) = resolve(model);
    let Some(mut resolved) = resolved else {
        return Analysis {
            resolved: None,
            diagnostics,
        };
    };
    diagnostics.extend(check_types(&resolved));
    diagnostics.extend(check_wiring(&resolved));
    sort_by_position(&mut diagnostics);
    if has_errors(&diagnostics) {
        return Analysis {
            resolved: None,
            diagnostics,
        };
    }
    resolved.checked = true;
    Analysis {
        resolved: Some(resolved),
        diagnostics,
    }
}

fn declare<V: Copy>(
    table: &mut BTreeMap<String, V>,
    spans: &mut BTreeMap<String, Span>,
    name: &Ident,
    value: V,
    what: &str,
    diags: &mut Vec<Diagnostic>,
) {
    if let Some(first) = spans.get(&name.name) {
        diags.push(Diagnostic::error(
            codes::DUPLICATE_NAME,
            name.span,
            format!(
                "duplicate {what} name `{}` (first declared at {first})",
                name.name
            ),
        ));
    } else {
        table.insert(name.name.clone(), value);
        spans.insert(name.name.clone(), name.span);
    }
}

fn duplicates_in<'a>(
    refs: impl IntoIterator<Item = &'a Ident>,
    what: &str,
    diags: &mut Vec<Diagnostic>,
) {
    let mut seen = BTreeSet::new();
    for r in refs {
        if !seen.insert(&r.name) {
            diags.push(Diagnostic::error(
                codes::DUPLICATE_REFERENCE,
                r.span,
                format!("{what} `{}` is listed twice", r.name),
            ));
        }
    }
}

/// Builds the symbol table and checks that every reference names a
/// declaration of the right category.
pub fn resolve(model: SystemModel) -> (Option<ResolvedModel>, Vec<Diagnostic>) {
    let mut diags = Vec::new();
    let mut symbols = SymbolTable::default();

    let mut spans = BTreeMap::new();
    for (i, s) in model.spaces.iter().enumerate() {
        declare(
            &mut symbols.spaces,
            &mut spans,
            &s.name,
            i,
            "space",
            &mut diags,
        );
    }
    let mut spans = BTreeMap::new();
    for (i, m) in model.modules.iter().enumerate() {
        declare(
            &mut symbols.modules,
            &mut spans,
            &m.name,
            i,
            "module",
            &mut diags,
        );
    }
    let mut spans = BTreeMap::new();
    for (i, m) in model.mappings.iter().enumerate() {
        declare(
            &mut symbols.units,
            &mut spans,
            &m.name,
            Unit::Mapping(i),
            "unit",
            &mut diags,
        );
    }
    for (i, t) in model.transformations.iter().enumerate() {
        declare(
            &mut symbols.units,
            &mut spans,
            &t.name,
            Unit::Transformation(i),
            "unit",
            &mut diags,
        );
    }
    for (i, c) in model.components.iter().enumerate() {
        declare(
            &mut symbols.units,
            &mut spans,
            &c.name,
            Unit::Component(i),
            "unit",
            &mut diags,
        );
    }

    let space = |r: &Ident, diags: &mut Vec<Diagnostic>| {
        if !symbols.spaces.contains_key(&r.name) {
            diags.push(Diagnostic::error(
                codes::UNRESOLVED,
                r.span,
                format!("unknown space `{}`", r.name),
            ));
        }
    };
    for m in &model.mappings {
        space(&m.from, &mut diags);
        space(&m.to, &mut diags);
    }
    for t in &model.transformations {
        space(&t.from, &mut diags);
        space(&t.to, &mut diags);
    }
    for m in &model.modules {
        for (_, r) in m.inputs() {
            space(r, &mut diags);
        }
        if let Some(o) = &m.output {
            space(o, &mut diags);
        }
        if m.dynamical_system.is_none() {
            diags.push(Diagnostic::error(
                codes::MISSING_STATEMENT,
                m.name.span,
                format!("module `{}` declares no dynamical_system", m.name),
            ));
        }
        if m.output.is_none() {
            diags.push(Diagnostic::error(
                codes::MISSING_STATEMENT,
                m.name.span,
                format!("module `{}` declares no output space", m.name),
            ));
        }
        duplicates_in(&m.execution_inputs, "execution input", &mut diags);
        duplicates_in(&m.learning_inputs, "learning input", &mut diags);
    }

    for c in &model.components {
        match &c.module {
            Some(r) if !symbols.modules.contains_key(&r.name) => diags.push(Diagnostic::error(
                codes::UNRESOLVED,
                r.span,
                format!("unknown adaptive module `{}`", r.name),
            )),
            None if c.subtype != ComponentSubtype::Sequencer => diags.push(Diagnostic::error(
                codes::MISSING_STATEMENT,
                c.name.span,
                format!("component `{}` wraps no adaptive module", c.name),
            )),
            _ => {}
        }
        for r in c.input_mappings.iter().chain(&c.output_mapping) {
            match symbols.units.get(&r.name) {
                Some(Unit::Mapping(_) | Unit::Transformation(_)) => {}
                Some(Unit::Component(_)) => diags.push(Diagnostic::error(
                    codes::UNRESOLVED,
                    r.span,
                    format!(
                        "`{}` is a component, not a mapping or transformation",
                        r.name
                    ),
                )),
                None => diags.push(Diagnostic::error(
                    codes::UNRESOLVED,
                    r.span,
                    format!("unknown mapping or transformation `{}`", r.name),
                )),
            }
        }
        for r in &c.children {
            match symbols.units.get(&r.name) {
                Some(Unit::Component(_)) => {}
                Some(_) => diags.push(Diagnostic::error(
                    codes::UNRESOLVED,
                    r.span,
                    format!("`{}` is a mapping, not a component", r.name),
                )),
                None => diags.push(Diagnostic::error(
                    codes::UNRESOLVED,
                    r.span,
                    format!("unknown component `{}`", r.name),
                )),
            }
        }
        duplicates_in(&c.input_mappings, "input mapping", &mut diags);
        duplicates_in(&c.children, "child", &mut diags);
    }

    if !has_errors(&diags) {
        find_child_cycles(&model, &mut diags);
    }
    sort_by_position(&mut diags);
    if has_errors(&diags) {
        return (None, diags);
    }
    (
        Some(ResolvedModel {
            model,
            symbols,
            checked: false,
        }),
        diags,
    )
}

fn find_child_cycles(model: &SystemModel, diags: &mut Vec<Diagnostic>) {
    let children: BTreeMap<&str, Vec<&str>> = model
        .components
        .iter()
        .map(|c| {
            (
                c.name.as_str(),
                c.children.iter().map(Ident::as_str).collect(),
            )
        })
        .collect();
    for c in &model.components {
        let mut stack: Vec<&str> = children[c.name.as_str()].clone();
        let mut seen = BTreeSet::new();
        while let Some(n) = stack.pop() {
            if n == c.name.name {
                diags.push(Diagnostic::error(
                    codes::CHILD_CYCLE,
                    c.name.span,
                    format!("component `{}` is its own descendant", c.name),
                ));
                break;
            }
            if seen.insert(n) {
                stack.extend(children.get(n).into_iter().flatten());
            }
        }
    }
}

/// Space typing rules for mappings, transformations and via-chains.
pub fn check_types(resolved: &ResolvedModel) -> Vec<Diagnostic> {
    let model = resolved.model();
    let mut diags = Vec::new();

    for m in &model.mappings {
        let (a, b) = (
            resolved.space_type(&m.from.name),
            resolved.space_type(&m.to.name),
        );
        if a.kind() == b.kind() {
            diags.push(Diagnostic::error(
                codes::MAPPING_SAME_KIND,
                m.name.span,
                format!(
                    "mapping `{}` connects two {} spaces; use a transformation between spaces of the same kind",
                    m.name,
                    a.kind()
                ),
            ));
        }
    }
    for t in &model.transformations {
        let (a, b) = (
            resolved.space_type(&t.from.name),
            resolved.space_type(&t.to.name),
        );
        if !a.compatible(b) {
            diags.push(Diagnostic::error(
                codes::TRANSFORM_MISMATCH,
                t.name.span,
                format!(
                    "transformation `{}` goes from {a} to {b}; both ends must have the same kind and dimension",
                    t.name
                ),
            ));
        }
    }

    for c in &model.components {
        let module = resolved.module_of(c);
        if let Some(via) = &c.output_mapping {
            let map = resolved.map(&via.name);
            let src = resolved.space_type(&map.from().name);
            if let Some(out) = module.and_then(|m| m.output.as_ref()) {
                let out_ty = resolved.space_type(&out.name);
                if !out_ty.compatible(src) {
                    diags.push(Diagnostic::error(
                        codes::OUTPUT_MAPPING_TYPE,
                        via.span,
                        format!(
                            "output mapping `{}` reads {src} but module output `{out}` is {out_ty}",
                            via.name
                        ),
                    ));
                }
            }
        }
        for via in &c.input_mappings {
            let map = resolved.map(&via.name);
            let produced = map.to();
            let produced_ty = resolved.space_type(&produced.name);
            let inputs: Vec<&Ident> = module
                .map(|m| m.inputs().map(|(_, s)| s).collect())
                .unwrap_or_default();
            if inputs.iter().any(|s| s.name == produced.name) {
                continue;
            }
            let near = inputs.iter().find(|s| {
                let t = resolved.space_type(&s.name);
                t.kind() == produced_ty.kind() && t.dimension() != produced_ty.dimension()
            });
            match near {
                Some(s) => diags.push(Diagnostic::error(
                    codes::DIMENSION_MISMATCH,
                    via.span,
                    format!(
                        "input mapping `{}` produces {produced_ty} but module input `{s}` is {}",
                        via.name,
                        resolved.space_type(&s.name)
                    ),
                )),
                None => diags.push(Diagnostic::error(
                    codes::INPUT_MAPPING_TARGET,
                    via.span,
                    format!(
                        "input mapping `{}` produces `{produced}`, which is not an input of the wrapped module",
                        via.name
                    ),
                )),
            }
        }
    }
    sort_by_position(&mut diags);
    diags
}

/// Per-subtype wiring rules and module consistency.
pub fn check_wiring(resolved: &ResolvedModel) -> Vec<Diagnostic> {
    let model = resolved.model();
    let mut diags = Vec::new();

    for m in &model.modules {
        if m.loop_mode == LoopMode::ClosedLoop && m.execution_inputs.is_empty() {
            diags.push(Diagnostic::error(
                codes::CLOSED_LOOP_NO_INPUT,
                m.name.span,
                format!("closed-loop module `{}` has no execution input", m.name),
            ));
        }
        if m.learns_online() && m.learning_inputs.is_empty() {
            diags.push(Diagnostic::error(
                codes::ONLINE_NO_LEARNING_INPUT,
                m.name.span,
                format!(
                    "module `{}` learns online but has no learning input",
                    m.name
                ),
            ));
        }
        if !m.learning_inputs.is_empty() && !m.learns_online() && !m.learns_offline() {
            diags.push(Diagnostic::warning(
                codes::UNUSED_LEARNING_INPUTS,
                m.learning_inputs[0].span,
                format!(
                    "module `{}` never learns; its learning inputs are unused",
                    m.name
                ),
            ));
        }
        if m.learner.is_some() != m.learning_mode.is_some() {
            let msg = if m.learner.is_some() {
                format!("module `{}` has a learner but no learning mode; no learning hooks are generated", m.name)
            } else {
                format!("module `{}` has a learning mode but no learner", m.name)
            };
            diags.push(Diagnostic::warning(
                codes::INCOMPLETE_LEARNING,
                m.name.span,
                msg,
            ));
        }
    }

    let mut wrapped: BTreeMap<&str, &Ident> = BTreeMap::new();
    for c in &model.components {
        let module = resolved.module_of(c);
        match c.subtype {
            ComponentSubtype::TrackingController => {
                if let Some(m) = module {
                    if m.loop_mode != LoopMode::ClosedLoop {
                        diags.push(Diagnostic::error(
                            codes::TRACKING_OPEN_LOOP,
                            c.name.span,
                            format!(
                                "tracking controller `{}` wraps open-loop module `{}`",
                                c.name, m.name
                            ),
                        ));
                    }
                    if m.execution_inputs.is_empty() {
                        diags.push(Diagnostic::error(
                            codes::TRACKING_NO_FEEDBACK,
                            c.name.span,
                            format!(
                                "tracking controller `{}` needs an execution input for feedback",
                                c.name
                            ),
                        ));
                    }
                }
            }
            ComponentSubtype::Sequencer => {
                if c.children.is_empty() {
                    diags.push(Diagnostic::error(
                        codes::EMPTY_SEQUENCER,
                        c.name.span,
                        format!("sequencer `{}` has no children", c.name),
                    ));
                }
            }
            ComponentSubtype::Generic | ComponentSubtype::PatternGenerator => {}
        }
        if c.subtype != ComponentSubtype::Sequencer && !c.children.is_empty() {
            diags.push(Diagnostic::error(
                codes::CHILDREN_NOT_SEQUENCER,
                c.children[0].span,
                format!(
                    "only sequencers have children; `{}` is a {}",
                    c.name,
                    c.subtype.keyword()
                ),
            ));
        }
        if let Some(r) = &c.module {
            if let Some(first) = wrapped.get(r.name.as_str()) {
                diags.push(Diagnostic::error(
                    codes::SHARED_MODULE,
                    r.span,
                    format!(
                        "module `{}` is already wrapped by another component (at {})",
                        r.name, first.span
                    ),
                ));
            } else {
                wrapped.insert(&r.name, r);
            }
        }
    }
    sort_by_position(&mut diags);
    diags
}
