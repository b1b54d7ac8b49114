mod common;

use std::collections::BTreeSet;

use amdsl_core::cca::{lower_to_cca, merge_refinement, parse_cca, print_cca};
use amdsl_core::codegen::emit_all;
use amdsl_core::graph::schema::validate_graphml;
use amdsl_core::graph::{emit_graphml, lower_to_graph, parse_graph, print_graph};
use amdsl_core::synth::random_model;
use amdsl_core::{Direction, IrComponent, PortRole, State};
use common::{checked, corpus_model, golden, CORPUS};
use proptest::prelude::*;

#[test]
fn corpus_goldens() {
    for name in CORPUS {
        let r = corpus_model(name);
        let ir = lower_to_cca(&r);
        let g = lower_to_graph(&r);
        golden(&format!("{name}.cca"), &print_cca(&ir));
        golden(&format!("{name}.graph"), &print_graph(&g));
        golden(&format!("{name}.graphml"), &emit_graphml(&g, false));
        golden(&format!("{name}.flat.graphml"), &emit_graphml(&g, true));
        for (file, text) in emit_all(&ir, &BTreeSet::new()).unwrap() {
            golden(&format!("{name}/{file}"), &text);
        }
    }
}

#[test]
fn lowering_twice_is_byte_identical() {
    for name in CORPUS {
        let (a, b) = (corpus_model(name), corpus_model(name));
        assert_eq!(print_cca(&lower_to_cca(&a)), print_cca(&lower_to_cca(&b)));
        let (ga, gb) = (lower_to_graph(&a), lower_to_graph(&b));
        assert_eq!(emit_graphml(&ga, false), emit_graphml(&gb, false));
        assert_eq!(print_graph(&ga), print_graph(&gb));
    }
}

#[test]
fn paddling_pattern_generator_shape() {
    let ir = lower_to_cca(&corpus_model("paddling"));
    let pg = ir.component("PaddleGenerator").unwrap();
    assert_eq!(pg.kind, "PatternGenerator");
    let count = |d| pg.ports.iter().filter(|p| p.direction == d).count();
    assert_eq!(count(Direction::In), 4);
    assert_eq!(count(Direction::Out), 1);
    assert_eq!(
        pg.states,
        BTreeSet::from([State::Execution, State::OnlineLearning])
    );
    let mapping = ir.component("fk").unwrap();
    assert_eq!(mapping.kind, "Mapping.ForwardKinematics");
    assert_eq!(ir.components.len(), 2);
}

#[test]
fn paddling_graphml_nests_module_in_component_group() {
    let xml = emit_graphml(&lower_to_graph(&corpus_model("paddling")), false);
    let group = xml
        .find(r#"<node id="sg_comp_PaddleGenerator""#)
        .expect("group node");
    let nested = xml
        .find(r#"<graph id="sg_comp_PaddleGenerator_graph""#)
        .unwrap();
    let module = xml.find(r#"<node id="n_mod_Paddle""#).unwrap();
    let close = group + xml[group..].find("</graph>\n    </node>").unwrap();
    assert!(group < nested && nested < module && module < close);
    let group_text = &xml[group..nested];
    assert!(group_text.contains("#FFF3A0"), "{group_text}");
    let module_text = &xml[module..module + xml[module..].find("</node>").unwrap()];
    assert!(module_text.contains("#FF9999"), "{module_text}");
}

#[test]
fn corpus_graphml_is_schema_valid() {
    for name in CORPUS {
        let g = lower_to_graph(&corpus_model(name));
        for flat in [false, true] {
            validate_graphml(&emit_graphml(&g, flat)).unwrap_or_else(|e| panic!("{name}: {e:?}"));
        }
    }
}

#[test]
fn corpus_text_formats_round_trip() {
    for name in CORPUS {
        let r = corpus_model(name);
        let ir = lower_to_cca(&r);
        let (back, diags) = parse_cca(&print_cca(&ir));
        assert!(diags.is_empty(), "{diags:?}");
        assert_eq!(back.unwrap(), ir, "{name}");

        let g = lower_to_graph(&r);
        let (back, diags) = parse_graph(&print_graph(&g));
        assert!(diags.is_empty(), "{diags:?}");
        assert_eq!(back.unwrap(), g, "{name}");
    }
}

#[test]
fn refinement_keeps_hand_edits() {
    let r = corpus_model("paddling");
    let fresh = lower_to_cca(&r);
    let text = print_cca(&fresh).replace("deploy host=?", "deploy host=left-pc");
    let (edited, diags) = parse_cca(&text);
    assert!(diags.is_empty());
    let (merged, warnings) = merge_refinement(&fresh, &edited.unwrap());
    assert!(warnings.is_empty());
    let pg = merged.component("PaddleGenerator").unwrap();
    assert_eq!(pg.deployment["host"].as_deref(), Some("left-pc"));
    assert_eq!(print_cca(&merged), text);
}

fn is_map(c: &IrComponent) -> bool {
    c.kind.starts_with("Mapping.") || c.kind.starts_with("Transformation.")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_lowerings_are_consistent(seed in any::<u64>()) {
        let r = checked(random_model(seed));
        let ir = lower_to_cca(&r);
        prop_assert_eq!(ir.check(), Vec::<String>::new());
        let (back, diags) = parse_cca(&print_cca(&ir));
        prop_assert!(diags.is_empty(), "{:?}", diags);
        prop_assert_eq!(back.unwrap(), ir.clone());

        let g = lower_to_graph(&r);
        prop_assert_eq!(g.check(), Vec::<String>::new());
        let (back, diags) = parse_graph(&print_graph(&g));
        prop_assert!(diags.is_empty(), "{:?}", diags);
        prop_assert_eq!(back.unwrap(), g.clone());

        for flat in [false, true] {
            let xml = emit_graphml(&g, flat);
            prop_assert!(validate_graphml(&xml).is_ok(), "{:?}", validate_graphml(&xml));
        }
    }

    #[test]
    fn connections_respect_component_states(seed in any::<u64>()) {
        let ir = lower_to_cca(&checked(random_model(seed)));
        for c in &ir.connections {
            prop_assert!(!c.active_in.is_empty());
            let src = ir.component(&c.source.component).unwrap();
            let dst = ir.component(&c.target.component).unwrap();
            // gated by the adaptive component on the connection; mapping
            // components only carry Execution
            let owner = if is_map(dst) { src } else { dst };
            prop_assert!(c.active_in.is_subset(&owner.states), "{:?}", c);
            let out = src.port(&c.source.port, Direction::Out).unwrap();
            let inp = dst.port(&c.target.port, Direction::In).unwrap();
            if !is_map(dst) {
                prop_assert!(c.active_in.is_subset(&inp.role.active_states()));
            }
            if inp.role == PortRole::Learning {
                prop_assert!(!c.active_in.contains(&State::Execution));
            }
            prop_assert_eq!(out.ty.kind(), inp.ty.kind());
            prop_assert_eq!(out.ty.dimension(), inp.ty.dimension());
        }
    }
}
