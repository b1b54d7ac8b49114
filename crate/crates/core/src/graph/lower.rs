use std::collections::{BTreeMap, BTreeSet};

use crate::ir::{AdaptiveModuleDecl, Edge, Fill, GraphIR, MapRef, Node, Shape, Subgraph};
use crate::semantics::ResolvedModel;

pub fn space_node_id(space: &str) -> String {
    format!("n_space_{space}")
}

pub fn module_node_id(module: &str) -> String {
    format!("n_mod_{module}")
}

pub fn component_node_id(component: &str) -> String {
    format!("n_comp_{component}")
}

pub fn map_node_id(map: &str) -> String {
    format!("n_map_{map}")
}

pub fn component_group_id(component: &str) -> String {
    format!("sg_comp_{component}")
}

pub fn edge_id(source: &str, target: &str) -> String {
    format!("e.{source}.{target}")
}

/// Collects edges, merging parallel ones into a single edge whose label
/// lists every distinct label in insertion order.
#[derive(Default)]
struct Edges {
    order: Vec<(String, String)>,
    labels: BTreeMap<(String, String), Vec<String>>,
}

impl Edges {
    fn add(&mut self, source: String, target: String, label: Option<&str>) {
        let key = (source, target);
        let labels = match self.labels.get_mut(&key) {
            Some(l) => l,
            None => {
                self.order.push(key.clone());
                self.labels.entry(key).or_default()
            }
        };
        if let Some(label) = label {
            if !labels.iter().any(|l| l == label) {
                labels.push(label.to_string());
            }
        }
    }

    fn finish(mut self) -> Vec<Edge> {
        self.order
            .into_iter()
            .map(|key| {
                let labels = self.labels.remove(&key).unwrap_or_default();
                let (source, target) = key;
                Edge {
                    id: edge_id(&source, &target),
                    source,
                    target,
                    label: (!labels.is_empty()).then(|| labels.join(",")),
                    directed: true,
                }
            })
            .collect()
    }
}

fn module_edges(edges: &mut Edges, m: &AdaptiveModuleDecl, node: &str) {
    for (slot, space) in m.inputs() {
        edges.add(
            space_node_id(&space.name),
            node.to_string(),
            Some(slot.label()),
        );
    }
    if let Some(out) = &m.output {
        edges.add(node.to_string(), space_node_id(&out.name), Some("output"));
    }
}

/// Lowers a checked model to the architecture diagram. Components become a
/// group holding their boundary node and the wrapped module; data flows
/// through mappings along the declared `via` chains.
///
/// Panics if `resolved` did not pass every check.
pub fn lower_to_graph(resolved: &ResolvedModel) -> GraphIR {
    assert!(
        resolved.is_checked(),
        "lowering requires a model that passed semantic checks"
    );
    let model = resolved.model();
    let mut g = GraphIR::new(model.name.name.clone());
    let mut edges = Edges::default();

    for s in &model.spaces {
        g.nodes.push(Node {
            id: space_node_id(&s.name.name),
            label: format!("{}: {}", s.name, s.ty.kind().name()),
            shape: Shape::Ellipse,
            fill: Fill::SPACE,
        });
    }
    for m in &model.modules {
        g.nodes.push(Node {
            id: module_node_id(&m.name.name),
            label: m.name.name.clone(),
            shape: Shape::Rectangle,
            fill: Fill::MODULE,
        });
    }
    let maps: Vec<MapRef<'_>> = model
        .mappings
        .iter()
        .map(MapRef::Mapping)
        .chain(model.transformations.iter().map(MapRef::Transformation))
        .collect();
    for map in &maps {
        g.nodes.push(Node {
            id: map_node_id(&map.name().name),
            label: format!("{}: {}", map.name(), map.kind_name()),
            shape: Shape::Rectangle,
            fill: Fill::MAP,
        });
    }

    let mut wrapped = BTreeSet::new();
    let mut used_maps = BTreeSet::new();
    for c in &model.components {
        let node = component_node_id(&c.name.name);
        g.nodes.push(Node {
            id: node.clone(),
            label: format!("{}: {}", c.name, c.subtype.name()),
            shape: Shape::RoundRectangle,
            fill: Fill::COMPONENT,
        });
        let mut members = vec![node.clone()];

        if let Some(m) = resolved.module_of(c) {
            wrapped.insert(m.name.name.as_str());
            members.push(module_node_id(&m.name.name));
            for (slot, space) in m.inputs() {
                let feeding = c
                    .input_mappings
                    .iter()
                    .map(|v| resolved.map(&v.name))
                    .find(|map| map.to().name == space.name);
                match feeding {
                    Some(map) => {
                        let map_node = map_node_id(&map.name().name);
                        used_maps.insert(map.name().name.as_str());
                        edges.add(space_node_id(&map.from().name), map_node.clone(), None);
                        edges.add(map_node, node.clone(), Some(slot.label()));
                    }
                    None => edges.add(space_node_id(&space.name), node.clone(), Some(slot.label())),
                }
            }
            let out = m.output.as_ref().expect("checked module has an output");
            match &c.output_mapping {
                Some(via) => {
                    let map = resolved.map(&via.name);
                    let map_node = map_node_id(&via.name);
                    used_maps.insert(map.name().name.as_str());
                    edges.add(node.clone(), map_node.clone(), Some("output"));
                    edges.add(map_node, space_node_id(&map.to().name), None);
                }
                None => edges.add(node.clone(), space_node_id(&out.name), Some("output")),
            }
        }
        for child in &c.children {
            edges.add(node.clone(), component_node_id(&child.name), Some("child"));
        }
        g.subgraphs.push(Subgraph {
            id: component_group_id(&c.name.name),
            label: c.name.name.clone(),
            fill: Fill::COMPONENT,
            members,
        });
    }

    for m in &model.modules {
        if !wrapped.contains(m.name.name.as_str()) {
            module_edges(&mut edges, m, &module_node_id(&m.name.name));
        }
    }
    for map in &maps {
        if !used_maps.contains(map.name().name.as_str()) {
            let node = map_node_id(&map.name().name);
            edges.add(space_node_id(&map.from().name), node.clone(), None);
            edges.add(node, space_node_id(&map.to().name), None);
        }
    }

    g.edges = edges.finish();
    g.sort();
    g
}
