//! Compiler core for the adaptive-module architecture language: parsing,
//! semantic checks, lowering to component and graph models, GraphML and C++
//! emission, and structural comparison.

pub mod cca;
pub mod codegen;
pub mod compare;
pub mod diag;
pub mod frontend;
pub mod graph;
pub mod ir;
pub mod semantics;
pub mod synth;

pub use diag::{Diagnostic, Severity};
pub use ir::*;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
