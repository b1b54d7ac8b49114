mod common;

use amdsl_core::compare::{compare, jaccard, signature, Multiset, CATEGORIES};
use amdsl_core::semantics::analyze;
use amdsl_core::synth::random_model;
use amdsl_core::{Ident, SystemModel};
use common::{corpus_model, CORPUS};
use proptest::prelude::*;

fn rename(model: &SystemModel, f: &dyn Fn(&str) -> String) -> SystemModel {
    let mut m = model.clone();
    let r = |id: &mut Ident| id.name = f(&id.name);
    r(&mut m.name);
    for s in &mut m.spaces {
        r(&mut s.name);
    }
    for x in &mut m.mappings {
        r(&mut x.name);
        r(&mut x.from);
        r(&mut x.to);
    }
    for x in &mut m.transformations {
        r(&mut x.name);
        r(&mut x.from);
        r(&mut x.to);
    }
    for x in &mut m.modules {
        r(&mut x.name);
        x.execution_inputs.iter_mut().for_each(r);
        x.learning_inputs.iter_mut().for_each(r);
        x.shaping.values_mut().for_each(r);
        x.output.iter_mut().for_each(r);
    }
    for c in &mut m.components {
        r(&mut c.name);
        c.module.iter_mut().for_each(r);
        c.input_mappings.iter_mut().for_each(r);
        c.output_mapping.iter_mut().for_each(r);
        c.children.iter_mut().for_each(r);
    }
    m
}

fn scramble(name: &str) -> String {
    format!("r_{}", name.chars().rev().collect::<String>())
}

#[test]
fn corpus_self_similarity_is_one() {
    for name in CORPUS {
        let m = corpus_model(name).into_model();
        let c = compare(&m, &m);
        assert_eq!(c.overall, 1.0, "{name}");
        assert!(c
            .categories
            .values()
            .all(|c| c.only_a.is_empty() && c.only_b.is_empty()));
    }
}

#[test]
fn corpus_pairs_are_symmetric() {
    for a in CORPUS {
        for b in CORPUS {
            let ma = corpus_model(a).into_model();
            let mb = corpus_model(b).into_model();
            let ab = compare(&ma, &mb);
            let ba = compare(&mb, &ma);
            assert_eq!(ab.overall.to_bits(), ba.overall.to_bits(), "{a} {b}");
            for (k, cat) in &ab.categories {
                let other = &ba.categories[k];
                assert_eq!(cat.similarity, other.similarity);
                assert_eq!(cat.shared, other.shared);
                assert_eq!(cat.only_a, other.only_b);
            }
        }
    }
}

#[test]
fn renamed_corpus_model_still_checks() {
    for name in CORPUS {
        let m = rename(&corpus_model(name).into_model(), &scramble);
        let a = analyze(m);
        assert!(a.diagnostics.is_empty(), "{name}: {:?}", a.diagnostics);
    }
}

fn ms(items: &[(&str, usize)]) -> Multiset {
    items.iter().map(|(k, n)| (k.to_string(), *n)).collect()
}

/// paddling vs walking, counted by hand from the two model files.
#[test]
fn paddling_vs_walking_matches_hand_count() {
    let p = signature(&corpus_model("paddling").into_model());
    let w = signature(&corpus_model("walking").into_model());

    // q_left q_demo goal u / speed / x_hand
    let p_spaces = ms(&[("CartesianPose", 1), ("JointAngles", 4), ("Scalar", 1)]);
    // phase / q_legs q_stance q_swing / step_len / foot
    let w_spaces = ms(&[
        ("CartesianPosition", 1),
        ("JointAngles", 3),
        ("Phase", 1),
        ("Scalar", 1),
    ]);
    assert_eq!(p.category("spaces"), &p_spaces);
    assert_eq!(w.category("spaces"), &w_spaces);

    assert_eq!(
        p.category("modules"),
        &ms(&[("VelocityField|ExtremeLearningMachine|closed_loop", 1)])
    );
    assert_eq!(
        w.category("modules"),
        &ms(&[
            ("DynamicalMovementPrimitive|ReservoirNetwork|closed_loop", 1),
            ("DynamicalMovementPrimitive|none|open_loop", 1),
        ])
    );
    assert_eq!(p.category("components"), &ms(&[("PatternGenerator", 1)]));
    assert_eq!(
        w.category("components"),
        &ms(&[("PatternGenerator", 2), ("Sequencer", 1)])
    );
    assert_eq!(
        p.category("mappings"),
        &ms(&[("Mapping:ForwardKinematics", 1)])
    );
    assert_eq!(
        w.category("mappings"),
        &ms(&[("Mapping:ForwardKinematics", 1)])
    );

    let p_edges = ms(&[
        ("AdaptiveModule->Space[JointAngles]", 1),
        ("Mapping->Space[CartesianPose]", 1),
        ("PatternGenerator->Mapping[JointAngles]", 1),
        ("Space->AdaptiveModule[JointAngles]", 3),
        ("Space->AdaptiveModule[Scalar]", 1),
        ("Space->Mapping[JointAngles]", 1),
    ]);
    let w_edges = ms(&[
        ("AdaptiveModule->Space[JointAngles]", 2),
        ("Mapping->Space[CartesianPosition]", 1),
        ("PatternGenerator->Mapping[JointAngles]", 1),
        ("Sequencer->PatternGenerator[EventFlag]", 2),
        ("Space->AdaptiveModule[JointAngles]", 2),
        ("Space->AdaptiveModule[Phase]", 2),
        ("Space->AdaptiveModule[Scalar]", 2),
        ("Space->Mapping[JointAngles]", 1),
    ]);
    assert_eq!(p.category("edges"), &p_edges);
    assert_eq!(w.category("edges"), &w_edges);

    // sum of minima over sum of maxima, per category
    let expected = [
        ("components", 1.0 / 3.0),
        ("edges", 6.0 / 15.0),
        ("mappings", 1.0),
        ("modules", 0.0),
        ("spaces", 4.0 / 8.0),
    ];
    let c = compare(
        &corpus_model("paddling").into_model(),
        &corpus_model("walking").into_model(),
    );
    for (name, value) in expected {
        let got = c.categories[name].similarity.unwrap();
        assert!((got - value).abs() < 1e-12, "{name}: {got} vs {value}");
    }
    let mean = (1.0 / 3.0 + 0.4 + 1.0 + 0.0 + 0.5) / 5.0;
    assert!((c.overall - mean).abs() < 1e-12);
}

fn arb_multiset() -> impl Strategy<Value = Multiset> {
    prop::collection::btree_map("[a-d]", 1usize..4, 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn self_similarity_is_one(seed in any::<u64>()) {
        let m = random_model(seed);
        prop_assert_eq!(compare(&m, &m).overall, 1.0);
    }

    #[test]
    fn symmetric(a in any::<u64>(), b in any::<u64>()) {
        let (ma, mb) = (random_model(a), random_model(b));
        prop_assert_eq!(compare(&ma, &mb).overall.to_bits(), compare(&mb, &ma).overall.to_bits());
    }

    #[test]
    fn rename_invariant(a in any::<u64>(), b in any::<u64>()) {
        let (ma, mb) = (random_model(a), random_model(b));
        let renamed = rename(&mb, &scramble);
        prop_assert_eq!(signature(&renamed), signature(&mb));
        prop_assert_eq!(compare(&ma, &renamed), compare(&ma, &mb));
        prop_assert_eq!(compare(&ma, &rename(&ma, &scramble)).overall, 1.0);
    }

    #[test]
    fn overall_is_a_mean_of_unit_scores(a in any::<u64>(), b in any::<u64>()) {
        let c = compare(&random_model(a), &random_model(b));
        prop_assert!((0.0..=1.0).contains(&c.overall));
        prop_assert_eq!(c.categories.len(), CATEGORIES.len());
    }

    #[test]
    fn jaccard_bounds_and_identity(a in arb_multiset(), b in arb_multiset()) {
        match jaccard(&a, &b) {
            None => prop_assert!(a.is_empty() && b.is_empty()),
            Some(s) => {
                prop_assert!((0.0..=1.0).contains(&s));
                prop_assert_eq!(s == 1.0, a == b);
                prop_assert_eq!(Some(s), jaccard(&b, &a));
            }
        }
    }
}
