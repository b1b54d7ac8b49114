//! Diagram-level lowering, the editable `.graph` format and GraphML output.

mod graphml;
mod lower;
pub mod schema;
mod text;

pub use graphml::{emit_graphml, escape_xml, GRAPHML_NS, GRAPHML_XSD, KEYS};
pub use lower::{
    component_group_id, component_node_id, edge_id, lower_to_graph, map_node_id, module_node_id,
    space_node_id,
};
pub use schema::validate_graphml;
pub use text::{parse_graph, print_graph};
