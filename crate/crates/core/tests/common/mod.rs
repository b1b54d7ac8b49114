#![allow(dead_code)]

use std::path::PathBuf;

use amdsl_core::frontend::parse_system;
use amdsl_core::semantics::{analyze, ResolvedModel};
use amdsl_core::SystemModel;

pub const CORPUS: [&str; 4] = ["hybrid", "paddling", "reaching", "walking"];

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn golden_dir() -> PathBuf {
    corpus_dir().join("golden")
}

pub fn corpus_text(name: &str) -> String {
    std::fs::read_to_string(corpus_dir().join(format!("{name}.am"))).unwrap()
}

pub fn parse_ok(text: &str) -> SystemModel {
    let (model, diags) = parse_system(text);
    assert!(diags.is_empty(), "{diags:?}");
    model.unwrap()
}

pub fn checked(model: SystemModel) -> ResolvedModel {
    let a = analyze(model);
    assert!(a.diagnostics.is_empty(), "{:?}", a.diagnostics);
    a.resolved.unwrap()
}

pub fn corpus_model(name: &str) -> ResolvedModel {
    checked(parse_ok(&corpus_text(name)))
}

/// Compares against a checked-in file, or rewrites it when AMDSL_BLESS is set.
pub fn golden(rel: &str, actual: &str) {
    let path = golden_dir().join(rel);
    if std::env::var_os("AMDSL_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| {
        panic!(
            "missing golden {}: {e}; run with AMDSL_BLESS=1",
            path.display()
        )
    });
    assert!(
        expected == actual,
        "{} differs from output; rerun with AMDSL_BLESS=1 if the change is intended",
        path.display()
    );
}
