//! Component-level lowering and the editable `.cca` intermediate format.

mod lower;
mod merge;
mod text;

pub use lower::{
    child_done_port_name, input_port_name, lower_to_cca, map_kind_tag, output_port_name,
    reference_port_name, DONE_PORT,
};
pub use merge::merge_refinement;
pub use text::{parse_cca, parse_space_type, print_cca, FORMAT_VERSION};
