//! Inputs shared by the benchmarks: the example models and larger generated
//! ones.

use std::path::PathBuf;

use amdsl_core::frontend::print_system;
use amdsl_core::synth::{random_model_with, SynthConfig};

pub const CORPUS: [&str; 4] = ["hybrid", "paddling", "reaching", "walking"];

/// Source text of an example model.
pub fn corpus_text(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../corpus/{name}.am"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// A generated model with up to `spaces` spaces and `modules` modules, as text.
pub fn synthetic_text(seed: u64, spaces: usize, modules: usize) -> String {
    let cfg = SynthConfig {
        max_spaces: spaces,
        max_modules: modules,
        max_sequencers: (modules / 4).max(1),
    };
    print_system(&random_model_with(seed, cfg))
}
