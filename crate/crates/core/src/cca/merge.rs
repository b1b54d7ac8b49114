use crate::diag::{codes, Diagnostic};
use crate::ir::{ComponentIR, Span};

/// Carries hand-made deployment settings from an edited component model onto
/// a freshly lowered one. Structure always comes from `fresh`; components
/// are matched by name, and edited components with no match are dropped
/// with a warning.
pub fn merge_refinement(
    fresh: &ComponentIR,
    edited: &ComponentIR,
) -> (ComponentIR, Vec<Diagnostic>) {
    let mut merged = fresh.clone();
    let mut diags = Vec::new();
    for old in &edited.components {
        match merged.component_mut(&old.name) {
            Some(c) => {
                for (key, value) in &old.deployment {
                    c.deployment.insert(key.clone(), value.clone());
                }
            }
            None => {
                let set: Vec<_> = old
                    .deployment
                    .iter()
                    .filter(|(_, v)| v.is_some())
                    .map(|(k, _)| k.as_str())
                    .collect();
                let lost = if set.is_empty() {
                    String::new()
                } else {
                    format!("; dropping deploy {}", set.join(", "))
                };
                diags.push(Diagnostic::warning(
                    codes::STALE_REFINEMENT,
                    Span::SYNTHETIC,
                    format!(
                        "component `{}` no longer exists in the lowered model{lost}",
                        old.name
                    ),
                ));
            }
        }
    }
    (merged, diags)
}
