//! Structural comparison of two systems. Each system is reduced to a
//! name-free signature: multisets of space kinds, module configurations,
//! component subtypes, mapping kinds and typed connection patterns. Two
//! signatures are compared per category with the multiset Jaccard index.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::ir::{ComponentSubtype, MapRef, SystemModel};

pub const CATEGORIES: [&str; 5] = ["components", "edges", "mappings", "modules", "spaces"];

pub type Multiset = BTreeMap<String, usize>;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Signature {
    pub categories: BTreeMap<&'static str, Multiset>,
}

impl Signature {
    pub fn category(&self, name: &str) -> &Multiset {
        static EMPTY: Multiset = BTreeMap::new();
        self.categories.get(name).unwrap_or(&EMPTY)
    }

    fn add(&mut self, category: &'static str, item: String) {
        *self
            .categories
            .entry(category)
            .or_default()
            .entry(item)
            .or_insert(0) += 1;
    }
}

fn edge(source: &str, target: &str, kind: &str) -> String {
    format!("{source}->{target}[{kind}]")
}

/// Computes the signature of a model that passed semantic checks.
/// References that do not resolve are skipped.
pub fn signature(model: &SystemModel) -> Signature {
    let mut sig = Signature::default();
    for c in CATEGORIES {
        sig.categories.insert(c, Multiset::new());
    }
    let kind_of = |space: &str| model.space(space).map(|s| s.ty.kind().name());

    for s in &model.spaces {
        sig.add("spaces", s.ty.kind().name().to_string());
    }
    for m in &model.modules {
        let ds = m.dynamical_system.as_ref().map_or("none", |d| d.name());
        let learner = m.learner.as_ref().map_or("none", |l| l.name());
        sig.add(
            "modules",
            format!("{ds}|{learner}|{}", m.loop_mode.keyword()),
        );
        for (_, space) in m.inputs() {
            if let Some(k) = kind_of(&space.name) {
                sig.add("edges", edge("Space", "AdaptiveModule", k));
            }
        }
        if let Some(k) = m.output.as_ref().and_then(|o| kind_of(&o.name)) {
            sig.add("edges", edge("AdaptiveModule", "Space", k));
        }
    }
    let maps = model
        .mappings
        .iter()
        .map(MapRef::Mapping)
        .chain(model.transformations.iter().map(MapRef::Transformation));
    for map in maps {
        sig.add("mappings", format!("{}:{}", map.class(), map.kind_name()));
        if let Some(k) = kind_of(&map.from().name) {
            sig.add("edges", edge("Space", map.class(), k));
        }
        if let Some(k) = kind_of(&map.to().name) {
            sig.add("edges", edge(map.class(), "Space", k));
        }
    }
    for c in &model.components {
        let subtype = c.subtype.name();
        sig.add("components", subtype.to_string());
        if let Some(map) = c.output_mapping.as_ref().and_then(|v| model.map(&v.name)) {
            if let Some(k) = kind_of(&map.from().name) {
                sig.add("edges", edge(subtype, map.class(), k));
            }
        }
        for map in c.input_mappings.iter().filter_map(|v| model.map(&v.name)) {
            if let Some(k) = kind_of(&map.to().name) {
                sig.add("edges", edge(map.class(), subtype, k));
            }
        }
        for child in c.children.iter().filter_map(|ch| model.component(&ch.name)) {
            sig.add(
                "edges",
                edge(
                    ComponentSubtype::Sequencer.name(),
                    child.subtype.name(),
                    "EventFlag",
                ),
            );
        }
    }
    sig
}

/// Multiset Jaccard index, or `None` when both sides are empty.
pub fn jaccard(a: &Multiset, b: &Multiset) -> Option<f64> {
    let mut min = 0usize;
    let mut max = 0usize;
    for (k, &x) in a {
        let y = b.get(k).copied().unwrap_or(0);
        min += x.min(y);
        max += x.max(y);
    }
    for (k, &y) in b {
        if !a.contains_key(k) {
            max += y;
        }
    }
    (max > 0).then(|| min as f64 / max as f64)
}

/// Entry lists repeat an item once per occurrence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CategoryComparison {
    pub similarity: Option<f64>,
    pub shared: Vec<String>,
    pub only_a: Vec<String>,
    pub only_b: Vec<String>,
}

fn expand(m: &Multiset) -> Vec<String> {
    m.iter()
        .flat_map(|(k, &n)| std::iter::repeat_n(k.clone(), n))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    /// Mean similarity over the categories populated on either side; 1.0
    /// when no category is.
    pub overall: f64,
    pub categories: BTreeMap<String, CategoryComparison>,
}

fn split(a: &Multiset, b: &Multiset) -> (Multiset, Multiset, Multiset) {
    let mut shared = Multiset::new();
    let mut only_a = Multiset::new();
    let mut only_b = Multiset::new();
    for (k, &x) in a {
        let y = b.get(k).copied().unwrap_or(0);
        if x.min(y) > 0 {
            shared.insert(k.clone(), x.min(y));
        }
        if x > y {
            only_a.insert(k.clone(), x - y);
        }
    }
    for (k, &y) in b {
        let x = a.get(k).copied().unwrap_or(0);
        if y > x {
            only_b.insert(k.clone(), y - x);
        }
    }
    (shared, only_a, only_b)
}

pub fn compare_signatures(a: &Signature, b: &Signature) -> Comparison {
    let mut categories = BTreeMap::new();
    let mut scores = Vec::new();
    for name in CATEGORIES {
        let (ma, mb) = (a.category(name), b.category(name));
        let similarity = jaccard(ma, mb);
        scores.extend(similarity);
        let (shared, only_a, only_b) = split(ma, mb);
        categories.insert(
            name.to_string(),
            CategoryComparison {
                similarity,
                shared: expand(&shared),
                only_a: expand(&only_a),
                only_b: expand(&only_b),
            },
        );
    }
    let overall = if scores.is_empty() {
        1.0
    } else {
        scores.iter().sum::<f64>() / scores.len() as f64
    };
    Comparison {
        overall,
        categories,
    }
}

pub fn compare(a: &SystemModel, b: &SystemModel) -> Comparison {
    compare_signatures(&signature(a), &signature(b))
}

pub fn to_json(c: &Comparison) -> String {
    let mut s = serde_json::to_string_pretty(c).expect("comparison serialises");
    s.push('\n');
    s
}

fn items(list: &[String]) -> String {
    if list.is_empty() {
        return "-".into();
    }
    let mut m = Multiset::new();
    for k in list {
        *m.entry(k.clone()).or_insert(0) += 1;
    }
    m.iter()
        .map(|(k, &n)| {
            if n == 1 {
                k.clone()
            } else {
                format!("{k} x{n}")
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn text_report(c: &Comparison, a_name: &str, b_name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "{a_name} vs {b_name}: overall {:.4}", c.overall).unwrap();
    for (name, cat) in &c.categories {
        match cat.similarity {
            Some(s) => writeln!(out, "  {name:<10} {s:.4}").unwrap(),
            None => writeln!(out, "  {name:<10} n/a").unwrap(),
        }
        if cat.similarity.is_some() {
            writeln!(out, "    shared: {}", items(&cat.shared)).unwrap();
            writeln!(out, "    only {a_name}: {}", items(&cat.only_a)).unwrap();
            writeln!(out, "    only {b_name}: {}", items(&cat.only_b)).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(items: &[(&str, usize)]) -> Multiset {
        items.iter().map(|(k, n)| (k.to_string(), *n)).collect()
    }

    #[test]
    fn jaccard_on_multisets() {
        let a = ms(&[("x", 2), ("y", 1)]);
        let b = ms(&[("x", 1), ("z", 1)]);
        // min: x1 = 1; max: x2 + y1 + z1 = 4
        assert_eq!(jaccard(&a, &b), Some(0.25));
        assert_eq!(jaccard(&a, &a), Some(1.0));
        assert_eq!(jaccard(&Multiset::new(), &Multiset::new()), None);
        assert_eq!(jaccard(&a, &Multiset::new()), Some(0.0));
    }

    #[test]
    fn empty_models_are_identical() {
        let c = compare(&SystemModel::new("a"), &SystemModel::new("b"));
        assert_eq!(c.overall, 1.0);
        assert!(c.categories.values().all(|c| c.similarity.is_none()));
        assert!(to_json(&c).contains("\"similarity\": null"));
    }

    #[test]
    fn split_counts() {
        let (shared, only_a, only_b) = split(&ms(&[("x", 3)]), &ms(&[("x", 1), ("y", 2)]));
        assert_eq!(shared, ms(&[("x", 1)]));
        assert_eq!(only_a, ms(&[("x", 2)]));
        assert_eq!(only_b, ms(&[("y", 2)]));
    }
}
