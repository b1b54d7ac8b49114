//! Data model shared by all three language levels.

mod component;
mod graph;
mod model;
mod space;
mod span;

pub use component::{
    format_states, ComponentIR, Connection, Direction, IrComponent, PortDecl, PortRef, PortRole,
    State, DEPLOY_KEYS,
};
pub use graph::{Edge, Fill, GraphIR, Node, Shape, Subgraph};
pub use model::{
    canonicalize, validate, AdaptiveComponentDecl, AdaptiveModuleDecl, ComponentSubtype,
    CriterionDecl, CriterionKind, DynamicalSystem, InputSlot, Learner, LearningMode, LoopMode,
    MapRef, MappingDecl, MappingKind, ShapingParam, SpaceDecl, SystemModel, TransformKind,
    TransformationDecl, Violation,
};
pub use space::{SpaceKind, SpaceType, SpaceTypeError};
pub use span::{is_identifier, Ident, Span};
