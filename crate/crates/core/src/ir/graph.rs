//! The visualization model: styled nodes, edges and grouping subgraphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Rectangle,
    Ellipse,
    RoundRectangle,
}

impl Shape {
    /// Spelling in the graph text format.
    pub fn keyword(self) -> &'static str {
        match self {
            Shape::Rectangle => "rect",
            Shape::Ellipse => "ellipse",
            Shape::RoundRectangle => "roundrect",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Shape> {
        match s {
            "rect" => Some(Shape::Rectangle),
            "ellipse" => Some(Shape::Ellipse),
            "roundrect" => Some(Shape::RoundRectangle),
            _ => None,
        }
    }

    /// Value of the `shape` data key in GraphML.
    pub fn graphml_name(self) -> &'static str {
        match self {
            Shape::Rectangle => "rectangle",
            Shape::Ellipse => "ellipse",
            Shape::RoundRectangle => "roundrectangle",
        }
    }
}

/// An RGB fill, written `#RRGGBB` with upper-case hex digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fill(pub [u8; 3]);

impl Fill {
    pub const MODULE: Fill = Fill([0xFF, 0x99, 0x99]);
    pub const COMPONENT: Fill = Fill([0xFF, 0xF3, 0xA0]);
    pub const SPACE: Fill = Fill([0xFF, 0xFF, 0xFF]);
    pub const MAP: Fill = Fill([0xCC, 0xE5, 0xFF]);
}

impl fmt::Display for Fill {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [r, g, b] = self.0;
        write!(f, "#{r:02X}{g:02X}{b:02X}")
    }
}

impl FromStr for Fill {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let hex = s
            .strip_prefix('#')
            .filter(|h| h.len() == 6 && h.bytes().all(|b| b.is_ascii_hexdigit()))
            .ok_or_else(|| format!("`{s}` is not a #RRGGBB color"))?;
        let byte = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).unwrap();
        Ok(Fill([byte(0), byte(2), byte(4)]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub label: String,
    pub shape: Shape,
    pub fill: Fill,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub source: String,
    pub target: String,
    pub label: Option<String>,
    pub directed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub id: String,
    pub label: String,
    /// Background of the group box.
    pub fill: Fill,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphIR {
    pub name: String,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub subgraphs: Vec<Subgraph>,
}

impl GraphIR {
    pub fn new(name: impl Into<String>) -> Self {
        GraphIR {
            name: name.into(),
            nodes: Vec::new(),
            edges: Vec::new(),
            subgraphs: Vec::new(),
        }
    }

    pub fn node(&self, id: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn node_mut(&mut self, id: &str) -> Option<&mut Node> {
        self.nodes.iter_mut().find(|n| n.id == id)
    }

    /// Sorts nodes, edges, subgraphs and subgraph members by id.
    pub fn sort(&mut self) {
        self.nodes.sort_by(|a, b| a.id.cmp(&b.id));
        self.edges.sort_by(|a, b| a.id.cmp(&b.id));
        self.subgraphs.sort_by(|a, b| a.id.cmp(&b.id));
        for sg in &mut self.subgraphs {
            sg.members.sort();
        }
    }

    /// Subgraph that owns `node`, if any.
    pub fn owner(&self, node: &str) -> Option<&Subgraph> {
        self.subgraphs
            .iter()
            .find(|sg| sg.members.iter().any(|m| m == node))
    }

    pub fn check(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let mut ids = BTreeSet::new();
        for n in &self.nodes {
            if !ids.insert(n.id.as_str()) {
                problems.push(format!("duplicate node `{}`", n.id));
            }
        }
        let mut edge_ids = BTreeSet::new();
        for e in &self.edges {
            if !edge_ids.insert(e.id.as_str()) {
                problems.push(format!("duplicate edge `{}`", e.id));
            }
            for end in [&e.source, &e.target] {
                if !ids.contains(end.as_str()) {
                    problems.push(format!("edge `{}` names missing node `{end}`", e.id));
                }
            }
        }
        let mut owned = BTreeSet::new();
        for sg in &self.subgraphs {
            if ids.contains(sg.id.as_str()) {
                problems.push(format!("subgraph `{}` reuses a node id", sg.id));
            }
            for m in &sg.members {
                if !ids.contains(m.as_str()) {
                    problems.push(format!("subgraph `{}` names missing node `{m}`", sg.id));
                }
                if !owned.insert(m.as_str()) {
                    problems.push(format!("node `{m}` is in more than one subgraph"));
                }
            }
        }
        problems
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fill_parses_and_prints_upper_case() {
        let f: Fill = "#ff9999".parse().unwrap();
        assert_eq!(f, Fill::MODULE);
        assert_eq!(f.to_string(), "#FF9999");
        assert!("FF9999".parse::<Fill>().is_err());
        assert!("#FF99".parse::<Fill>().is_err());
        assert!("#GG9999".parse::<Fill>().is_err());
    }

    #[test]
    fn overlapping_subgraphs_rejected() {
        let mut g = GraphIR::new("g");
        g.nodes.push(Node {
            id: "a".into(),
            label: "a".into(),
            shape: Shape::Ellipse,
            fill: Fill::SPACE,
        });
        for id in ["s1", "s2"] {
            g.subgraphs.push(Subgraph {
                id: id.into(),
                label: id.into(),
                fill: Fill::COMPONENT,
                members: vec!["a".into()],
            });
        }
        assert_eq!(g.check(), ["node `a` is in more than one subgraph"]);
    }
}
