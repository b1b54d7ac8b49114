//! The architecture model: spaces, mappings, transformations, adaptive
//! modules and the adaptive components that wrap them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::space::SpaceType;
use super::span::{Ident, Span};

macro_rules! open_kind {
    ($(#[$meta:meta])* $name:ident { $($variant:ident),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant,)+
            Custom(String),
        }

        impl $name {
            pub fn from_name(name: &str) -> Self {
                match name {
                    $(stringify!($variant) => $name::$variant,)+
                    other => $name::Custom(other.to_string()),
                }
            }

            pub fn name(&self) -> &str {
                match self {
                    $($name::$variant => stringify!($variant),)+
                    $name::Custom(label) => label,
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

open_kind!(MappingKind {
    ForwardKinematics,
    InverseKinematics,
    Jacobian,
});

open_kind!(TransformKind {
    CoordinateTransformation,
});

open_kind!(DynamicalSystem {
    VelocityField,
    DynamicalMovementPrimitive,
});

open_kind!(Learner {
    ExtremeLearningMachine,
    ReservoirNetwork,
});

open_kind!(
    /// What signals that a movement primitive has finished.
    CriterionKind {
        Convergence,
        Timeout,
    }
);

macro_rules! keyword_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $kw:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant,)+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant,)+];

            pub fn keyword(self) -> &'static str {
                match self {
                    $($name::$variant => $kw,)+
                }
            }

            pub fn from_keyword(kw: &str) -> Option<Self> {
                match kw {
                    $($kw => Some($name::$variant),)+
                    _ => None,
                }
            }

            pub fn name(self) -> &'static str {
                match self {
                    $($name::$variant => stringify!($variant),)+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

keyword_enum!(LoopMode {
    ClosedLoop => "closed_loop",
    OpenLoop => "open_loop",
});

keyword_enum!(LearningMode {
    Online => "online",
    Offline => "offline",
    Both => "both",
});

keyword_enum!(
    /// Inputs that parametrize a movement primitive.
    ShapingParam {
        Shape => "shape",
        Speed => "speed",
        Goal => "goal",
    }
);

keyword_enum!(ComponentSubtype {
    Generic => "Generic",
    TrackingController => "TrackingController",
    Sequencer => "Sequencer",
    PatternGenerator => "PatternGenerator",
});

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDecl {
    pub name: Ident,
    pub ty: SpaceType,
    pub description: Option<String>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingDecl {
    pub name: Ident,
    pub kind: MappingKind,
    pub from: Ident,
    pub to: Ident,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationDecl {
    pub name: Ident,
    pub kind: TransformKind,
    pub from: Ident,
    pub to: Ident,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptiveModuleDecl {
    pub name: Ident,
    pub dynamical_system: Option<DynamicalSystem>,
    pub learner: Option<Learner>,
    /// Open loop unless a `mode` statement says otherwise.
    pub loop_mode: LoopMode,
    pub learning_mode: Option<LearningMode>,
    pub execution_inputs: Vec<Ident>,
    pub learning_inputs: Vec<Ident>,
    pub shaping: BTreeMap<ShapingParam, Ident>,
    pub output: Option<Ident>,
    pub span: Span,
}

impl AdaptiveModuleDecl {
    pub fn new(name: impl Into<String>) -> Self {
        AdaptiveModuleDecl {
            name: Ident::new(name),
            dynamical_system: None,
            learner: None,
            loop_mode: LoopMode::OpenLoop,
            learning_mode: None,
            execution_inputs: Vec::new(),
            learning_inputs: Vec::new(),
            shaping: BTreeMap::new(),
            output: None,
            span: Span::SYNTHETIC,
        }
    }

    /// Online learning needs both a learner and a mode that asks for it.
    pub fn learns_online(&self) -> bool {
        self.learner.is_some()
            && matches!(
                self.learning_mode,
                Some(LearningMode::Online | LearningMode::Both)
            )
    }

    pub fn learns_offline(&self) -> bool {
        self.learner.is_some()
            && matches!(
                self.learning_mode,
                Some(LearningMode::Offline | LearningMode::Both)
            )
    }

    /// Every space the module reads, with the slot it is read through.
    pub fn inputs(&self) -> impl Iterator<Item = (InputSlot, &Ident)> {
        let exec = self
            .execution_inputs
            .iter()
            .map(|s| (InputSlot::Execution, s));
        let learn = self
            .learning_inputs
            .iter()
            .map(|s| (InputSlot::Learning, s));
        let shaping = self
            .shaping
            .iter()
            .map(|(p, s)| (InputSlot::Shaping(*p), s));
        exec.chain(learn).chain(shaping)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InputSlot {
    Execution,
    Learning,
    Shaping(ShapingParam),
}

impl InputSlot {
    pub fn label(self) -> &'static str {
        match self {
            InputSlot::Execution => "execution",
            InputSlot::Learning => "learning",
            InputSlot::Shaping(p) => p.keyword(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionDecl {
    pub kind: CriterionKind,
    pub description: Option<String>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptiveComponentDecl {
    pub name: Ident,
    pub subtype: ComponentSubtype,
    pub module: Option<Ident>,
    pub input_mappings: Vec<Ident>,
    pub output_mapping: Option<Ident>,
    pub criterion: Option<CriterionDecl>,
    /// Ordered; only Sequencers have children.
    pub children: Vec<Ident>,
    pub span: Span,
}

impl AdaptiveComponentDecl {
    pub fn new(name: impl Into<String>, subtype: ComponentSubtype) -> Self {
        AdaptiveComponentDecl {
            name: Ident::new(name),
            subtype,
            module: None,
            input_mappings: Vec::new(),
            output_mapping: None,
            criterion: None,
            children: Vec::new(),
            span: Span::SYNTHETIC,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemModel {
    pub name: Ident,
    pub spaces: Vec<SpaceDecl>,
    pub mappings: Vec<MappingDecl>,
    pub transformations: Vec<TransformationDecl>,
    pub modules: Vec<AdaptiveModuleDecl>,
    pub components: Vec<AdaptiveComponentDecl>,
}

impl SystemModel {
    pub fn new(name: impl Into<String>) -> Self {
        SystemModel {
            name: Ident::new(name),
            spaces: Vec::new(),
            mappings: Vec::new(),
            transformations: Vec::new(),
            modules: Vec::new(),
            components: Vec::new(),
        }
    }

    pub fn space(&self, name: &str) -> Option<&SpaceDecl> {
        self.spaces.iter().find(|s| s.name.name == name)
    }

    pub fn module(&self, name: &str) -> Option<&AdaptiveModuleDecl> {
        self.modules.iter().find(|m| m.name.name == name)
    }

    pub fn component(&self, name: &str) -> Option<&AdaptiveComponentDecl> {
        self.components.iter().find(|c| c.name.name == name)
    }

    /// A mapping or transformation by name.
    pub fn map(&self, name: &str) -> Option<MapRef<'_>> {
        if let Some(m) = self.mappings.iter().find(|m| m.name.name == name) {
            return Some(MapRef::Mapping(m));
        }
        self.transformations
            .iter()
            .find(|t| t.name.name == name)
            .map(MapRef::Transformation)
    }

    /// Same model with every span cleared, for structural comparison.
    pub fn strip_spans(&self) -> SystemModel {
        let ids = |v: &[Ident]| v.iter().map(Ident::unspanned).collect::<Vec<_>>();
        SystemModel {
            name: self.name.unspanned(),
            spaces: self
                .spaces
                .iter()
                .map(|s| SpaceDecl {
                    name: s.name.unspanned(),
                    span: Span::SYNTHETIC,
                    ..s.clone()
                })
                .collect(),
            mappings: self
                .mappings
                .iter()
                .map(|m| MappingDecl {
                    name: m.name.unspanned(),
                    kind: m.kind.clone(),
                    from: m.from.unspanned(),
                    to: m.to.unspanned(),
                    span: Span::SYNTHETIC,
                })
                .collect(),
            transformations: self
                .transformations
                .iter()
                .map(|t| TransformationDecl {
                    name: t.name.unspanned(),
                    kind: t.kind.clone(),
                    from: t.from.unspanned(),
                    to: t.to.unspanned(),
                    span: Span::SYNTHETIC,
                })
                .collect(),
            modules: self
                .modules
                .iter()
                .map(|m| AdaptiveModuleDecl {
                    name: m.name.unspanned(),
                    execution_inputs: ids(&m.execution_inputs),
                    learning_inputs: ids(&m.learning_inputs),
                    shaping: m.shaping.iter().map(|(p, s)| (*p, s.unspanned())).collect(),
                    output: m.output.as_ref().map(Ident::unspanned),
                    span: Span::SYNTHETIC,
                    ..m.clone()
                })
                .collect(),
            components: self
                .components
                .iter()
                .map(|c| AdaptiveComponentDecl {
                    name: c.name.unspanned(),
                    subtype: c.subtype,
                    module: c.module.as_ref().map(Ident::unspanned),
                    input_mappings: ids(&c.input_mappings),
                    output_mapping: c.output_mapping.as_ref().map(Ident::unspanned),
                    criterion: c.criterion.as_ref().map(|k| CriterionDecl {
                        span: Span::SYNTHETIC,
                        ..k.clone()
                    }),
                    children: ids(&c.children),
                    span: Span::SYNTHETIC,
                })
                .collect(),
        }
    }
}

/// A mapping or a transformation; both become standalone data-conversion
/// units after lowering.
#[derive(Debug, Clone, Copy)]
pub enum MapRef<'a> {
    Mapping(&'a MappingDecl),
    Transformation(&'a TransformationDecl),
}

impl<'a> MapRef<'a> {
    pub fn name(&self) -> &'a Ident {
        match self {
            MapRef::Mapping(m) => &m.name,
            MapRef::Transformation(t) => &t.name,
        }
    }

    pub fn from(&self) -> &'a Ident {
        match self {
            MapRef::Mapping(m) => &m.from,
            MapRef::Transformation(t) => &t.from,
        }
    }

    pub fn to(&self) -> &'a Ident {
        match self {
            MapRef::Mapping(m) => &m.to,
            MapRef::Transformation(t) => &t.to,
        }
    }

    pub fn kind_name(&self) -> &'a str {
        match self {
            MapRef::Mapping(m) => m.kind.name(),
            MapRef::Transformation(t) => t.kind.name(),
        }
    }

    /// `Mapping` or `Transformation`.
    pub fn class(&self) -> &'static str {
        match self {
            MapRef::Mapping(_) => "Mapping",
            MapRef::Transformation(_) => "Transformation",
        }
    }
}

/// Sorts every declaration list by name and clears spans. Reference lists
/// inside declarations keep their written order.
pub fn canonicalize(model: &SystemModel) -> SystemModel {
    let mut out = model.strip_spans();
    out.spaces.sort_by(|a, b| a.name.name.cmp(&b.name.name));
    out.mappings.sort_by(|a, b| a.name.name.cmp(&b.name.name));
    out.transformations
        .sort_by(|a, b| a.name.name.cmp(&b.name.name));
    out.modules.sort_by(|a, b| a.name.name.cmp(&b.name.name));
    out.components.sort_by(|a, b| a.name.name.cmp(&b.name.name));
    out
}

/// A broken model invariant, found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub subject: String,
    pub rule: &'static str,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subject, self.rule)
    }
}

/// Checks every structural invariant of a [`SystemModel`] directly, without
/// going through semantic analysis. Returns all violations found.
pub fn validate(model: &SystemModel) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut bad = |subject: &Ident, rule: &'static str| {
        out.push(Violation {
            subject: subject.name.clone(),
            rule,
        })
    };

    let mut seen = BTreeSet::new();
    for s in &model.spaces {
        if !seen.insert(&s.name.name) {
            bad(&s.name, "duplicate space name");
        }
    }
    let mut seen = BTreeSet::new();
    for m in &model.modules {
        if !seen.insert(&m.name.name) {
            bad(&m.name, "duplicate module name");
        }
    }
    // mappings, transformations and components share one namespace
    let mut seen = BTreeSet::new();
    let units = model
        .mappings
        .iter()
        .map(|m| &m.name)
        .chain(model.transformations.iter().map(|t| &t.name))
        .chain(model.components.iter().map(|c| &c.name));
    for name in units {
        if !seen.insert(&name.name) {
            bad(name, "duplicate unit name");
        }
    }

    let space_ty = |r: &Ident| model.space(&r.name).map(|s| &s.ty);

    for m in &model.mappings {
        match (space_ty(&m.from), space_ty(&m.to)) {
            (Some(a), Some(b)) => {
                if a.kind() == b.kind() {
                    bad(&m.name, "mapping endpoints share a type kind");
                }
            }
            _ => bad(&m.name, "mapping endpoint unresolved"),
        }
    }
    for t in &model.transformations {
        match (space_ty(&t.from), space_ty(&t.to)) {
            (Some(a), Some(b)) => {
                if !a.compatible(b) {
                    bad(
                        &t.name,
                        "transformation endpoints differ in kind or dimension",
                    );
                }
            }
            _ => bad(&t.name, "transformation endpoint unresolved"),
        }
    }

    for m in &model.modules {
        if m.dynamical_system.is_none() {
            bad(&m.name, "module without dynamical system");
        }
        match &m.output {
            None => bad(&m.name, "module without output"),
            Some(o) if space_ty(o).is_none() => bad(&m.name, "module output unresolved"),
            Some(_) => {}
        }
        if m.inputs().any(|(_, s)| space_ty(s).is_none()) {
            bad(&m.name, "module input unresolved");
        }
        if m.loop_mode == LoopMode::ClosedLoop && m.execution_inputs.is_empty() {
            bad(&m.name, "closed-loop module without execution inputs");
        }
        if m.learns_online() && m.learning_inputs.is_empty() {
            bad(&m.name, "online learner without learning inputs");
        }
    }

    let mut wrapped = BTreeSet::new();
    for c in &model.components {
        let module = c.module.as_ref().and_then(|r| model.module(&r.name));
        match (&c.module, module) {
            (Some(_), None) => bad(&c.name, "component module unresolved"),
            (None, _) if c.subtype != ComponentSubtype::Sequencer => {
                bad(&c.name, "component without module")
            }
            (Some(r), Some(_)) if !wrapped.insert(&r.name) => {
                bad(&c.name, "module wrapped by more than one component")
            }
            _ => {}
        }
        for r in &c.input_mappings {
            if model.map(&r.name).is_none() {
                bad(&c.name, "input mapping unresolved");
            }
        }
        if let Some(r) = &c.output_mapping {
            match model.map(&r.name) {
                None => bad(&c.name, "output mapping unresolved"),
                Some(map) => {
                    let out = module.and_then(|m| m.output.as_ref()).and_then(&space_ty);
                    let src = space_ty(map.from());
                    if let (Some(out), Some(src)) = (out, src) {
                        if !out.compatible(src) {
                            bad(
                                &c.name,
                                "output mapping source type differs from module output",
                            );
                        }
                    }
                }
            }
        }
        if c.subtype == ComponentSubtype::Sequencer {
            if c.children.is_empty() {
                bad(&c.name, "sequencer without children");
            }
        } else if !c.children.is_empty() {
            bad(&c.name, "children on a non-sequencer");
        }
        if c.children
            .iter()
            .any(|r| model.component(&r.name).is_none())
        {
            bad(&c.name, "child unresolved");
        }
        if c.subtype == ComponentSubtype::TrackingController {
            if let Some(m) = module {
                if m.loop_mode != LoopMode::ClosedLoop || m.execution_inputs.is_empty() {
                    bad(&c.name, "tracking controller without closed-loop feedback");
                }
            }
        }
        if let Some(k) = &c.criterion {
            if let CriterionKind::Custom(label) = &k.kind {
                if label.is_empty() {
                    bad(&c.name, "custom criterion without label");
                }
            }
        }
    }
    out
}
