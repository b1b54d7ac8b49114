//! The component-level model: typed ports, lifecycle states, connections and
//! deployment properties.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::space::SpaceType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    In,
    Out,
}

impl Direction {
    pub fn keyword(self) -> &'static str {
        match self {
            Direction::In => "in",
            Direction::Out => "out",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PortRole {
    Execution,
    Learning,
    Shaping,
    Output,
    Reference,
    Feedback,
    Event,
}

impl PortRole {
    pub const ALL: [PortRole; 7] = [
        PortRole::Execution,
        PortRole::Learning,
        PortRole::Shaping,
        PortRole::Output,
        PortRole::Reference,
        PortRole::Feedback,
        PortRole::Event,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PortRole::Execution => "Execution",
            PortRole::Learning => "Learning",
            PortRole::Shaping => "Shaping",
            PortRole::Output => "Output",
            PortRole::Reference => "Reference",
            PortRole::Feedback => "Feedback",
            PortRole::Event => "Event",
        }
    }

    pub fn from_name(s: &str) -> Option<PortRole> {
        PortRole::ALL.into_iter().find(|r| r.name() == s)
    }

    /// States in which data on a port with this role is consumed.
    pub fn active_states(self) -> BTreeSet<State> {
        match self {
            PortRole::Execution => [State::Execution, State::OnlineLearning].into(),
            PortRole::Learning => [State::OnlineLearning, State::OfflineLearning].into(),
            _ => State::ALL.into(),
        }
    }
}

impl fmt::Display for PortRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Lifecycle states a component can be driven through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum State {
    Execution,
    OnlineLearning,
    OfflineLearning,
}

impl State {
    pub const ALL: [State; 3] = [
        State::Execution,
        State::OnlineLearning,
        State::OfflineLearning,
    ];

    pub fn name(self) -> &'static str {
        match self {
            State::Execution => "Execution",
            State::OnlineLearning => "OnlineLearning",
            State::OfflineLearning => "OfflineLearning",
        }
    }

    pub fn from_name(s: &str) -> Option<State> {
        State::ALL.into_iter().find(|st| st.name() == s)
    }
}

pub fn format_states(states: &BTreeSet<State>) -> String {
    states
        .iter()
        .map(|s| s.name())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortDecl {
    pub name: String,
    pub direction: Direction,
    pub ty: SpaceType,
    pub role: PortRole,
}

/// Keys every lowered component starts with, all unset.
pub const DEPLOY_KEYS: [&str; 3] = ["host", "process", "rate_hz"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrComponent {
    pub name: String,
    pub kind: String,
    pub states: BTreeSet<State>,
    pub ports: Vec<PortDecl>,
    /// Kind of the stop criterion, if the component declares one.
    pub criterion: Option<String>,
    /// `None` values are unset.
    pub deployment: BTreeMap<String, Option<String>>,
}

impl IrComponent {
    pub fn port(&self, name: &str, direction: Direction) -> Option<&PortDecl> {
        self.ports
            .iter()
            .find(|p| p.name == name && p.direction == direction)
    }

    pub fn has_state(&self, state: State) -> bool {
        self.states.contains(&state)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PortRef {
    pub component: String,
    pub port: String,
}

impl PortRef {
    pub fn new(component: impl Into<String>, port: impl Into<String>) -> Self {
        PortRef {
            component: component.into(),
            port: port.into(),
        }
    }
}

impl fmt::Display for PortRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.component, self.port)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    pub source: PortRef,
    pub target: PortRef,
    pub active_in: BTreeSet<State>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentIR {
    pub system_name: String,
    pub components: Vec<IrComponent>,
    pub connections: Vec<Connection>,
}

impl ComponentIR {
    pub fn new(system_name: impl Into<String>) -> Self {
        ComponentIR {
            system_name: system_name.into(),
            components: Vec::new(),
            connections: Vec::new(),
        }
    }

    pub fn component(&self, name: &str) -> Option<&IrComponent> {
        self.components.iter().find(|c| c.name == name)
    }

    pub fn component_mut(&mut self, name: &str) -> Option<&mut IrComponent> {
        self.components.iter_mut().find(|c| c.name == name)
    }

    /// Puts components, ports and connections into the order the text format
    /// prints them in.
    pub fn sort(&mut self) {
        self.components.sort_by(|a, b| a.name.cmp(&b.name));
        for c in &mut self.components {
            c.ports
                .sort_by(|a, b| (a.direction, &a.name).cmp(&(b.direction, &b.name)));
        }
        self.connections
            .sort_by(|a, b| (&a.source, &a.target).cmp(&(&b.source, &b.target)));
    }

    /// Structural problems: unknown endpoints, wrong directions, type
    /// disagreement on a connection, duplicate names.
    pub fn check(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let mut names = BTreeSet::new();
        for c in &self.components {
            if !names.insert(&c.name) {
                problems.push(format!("duplicate component `{}`", c.name));
            }
            let mut ports = BTreeSet::new();
            for p in &c.ports {
                if !ports.insert((&p.name, p.direction)) {
                    problems.push(format!("duplicate port `{}.{}`", c.name, p.name));
                }
            }
        }
        for conn in &self.connections {
            let src = self
                .component(&conn.source.component)
                .and_then(|c| c.port(&conn.source.port, Direction::Out));
            let dst = self
                .component(&conn.target.component)
                .and_then(|c| c.port(&conn.target.port, Direction::In));
            match (src, dst) {
                (Some(s), Some(d)) => {
                    if !s.ty.compatible(&d.ty) {
                        problems.push(format!(
                            "connection {} -> {} joins {} and {}",
                            conn.source, conn.target, s.ty, d.ty
                        ));
                    }
                }
                (None, _) => problems.push(format!("no out port {}", conn.source)),
                (_, None) => problems.push(format!("no in port {}", conn.target)),
            }
            if conn.active_in.is_empty() {
                problems.push(format!(
                    "connection {} -> {} is never active",
                    conn.source, conn.target
                ));
            }
        }
        problems
    }
}
