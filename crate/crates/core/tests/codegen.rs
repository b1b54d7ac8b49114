mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use amdsl_core::cca::lower_to_cca;
use amdsl_core::codegen::{
    class_name, emit_all, emit_component_hull, hull_file, impl_header_file, impl_source_file,
    CodegenError,
};
use amdsl_core::synth::random_model;
use amdsl_core::{ComponentIR, IrComponent, State};
use common::{checked, corpus_model, CORPUS};
use proptest::prelude::*;
use regex::Regex;

fn hook_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"(?m)^    (?:void|bool) (on\w+|checkCriterion)\(\) override = 0;$").unwrap()
    })
}

fn member_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"(?m)^    cca::(In|Out)<cca::Port<(\w+), (\d+)>> (\w+);$").unwrap()
    })
}

fn declared_hooks(hull: &str) -> BTreeSet<String> {
    hook_re()
        .captures_iter(hull)
        .map(|c| c[1].to_string())
        .collect()
}

fn expected_hooks(c: &IrComponent) -> BTreeSet<String> {
    let mut h: BTreeSet<String> = ["onInit", "onExecute"].map(String::from).into();
    if c.states.contains(&State::OnlineLearning) {
        h.insert("onOnlineLearning".into());
    }
    if c.states.contains(&State::OfflineLearning) {
        h.insert("onOfflineLearning".into());
    }
    if c.criterion.is_some() {
        h.insert("checkCriterion".into());
    }
    h
}

fn check_hooks(ir: &ComponentIR) -> Result<(), String> {
    for c in &ir.components {
        let hull = emit_component_hull(ir, &c.name).unwrap();
        let class = Regex::new(&format!(
            r"(?m)^class {}Hull : public cca::Component \{{$",
            class_name(&c.name)
        ))
        .unwrap();
        if !class.is_match(&hull) {
            return Err(format!("{}: class line missing", c.name));
        }
        if declared_hooks(&hull) != expected_hooks(c) {
            return Err(format!(
                "{}: hooks {:?}, states {:?}",
                c.name,
                declared_hooks(&hull),
                c.states
            ));
        }
        let members: BTreeSet<String> = member_re()
            .captures_iter(&hull)
            .map(|m| format!("{} {} {} {}", &m[1], &m[2], &m[3], &m[4]))
            .collect();
        let ports: BTreeSet<String> = c
            .ports
            .iter()
            .map(|p| {
                format!(
                    "{:?} {} {} {}",
                    p.direction,
                    p.ty.kind().name(),
                    p.ty.dimension(),
                    p.name
                )
            })
            .collect();
        if members != ports {
            return Err(format!("{}: members {members:?}, ports {ports:?}", c.name));
        }
    }
    Ok(())
}

#[test]
fn corpus_hulls_declare_exactly_their_hooks() {
    for name in CORPUS {
        check_hooks(&lower_to_cca(&corpus_model(name))).unwrap();
    }
}

#[test]
fn walking_hooks_by_hand() {
    let ir = lower_to_cca(&corpus_model("walking"));
    let hooks = |c: &str| declared_hooks(&emit_component_hull(&ir, c).unwrap());
    let set = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    assert_eq!(
        hooks("SwingPhase"),
        set(&["onInit", "onExecute", "onOfflineLearning", "checkCriterion"])
    );
    assert_eq!(
        hooks("StancePhase"),
        set(&["onInit", "onExecute", "checkCriterion"])
    );
    assert_eq!(hooks("Gait"), set(&["onInit", "onExecute"]));
    assert_eq!(hooks("foot_fk"), set(&["onInit", "onExecute"]));
}

#[test]
fn existing_impl_files_are_not_regenerated() {
    let ir = lower_to_cca(&corpus_model("paddling"));
    let fresh = emit_all(&ir, &BTreeSet::new()).unwrap();
    assert!(fresh.contains_key(&impl_header_file("PaddleGenerator")));
    assert!(fresh.contains_key(&impl_source_file("PaddleGenerator")));

    let existing: BTreeSet<String> = [
        impl_header_file("PaddleGenerator"),
        impl_source_file("PaddleGenerator"),
    ]
    .into();
    let again = emit_all(&ir, &existing).unwrap();
    for f in &existing {
        assert!(!again.contains_key(f), "{f} would be overwritten");
    }
    assert_eq!(
        again[&hull_file("PaddleGenerator")],
        fresh[&hull_file("PaddleGenerator")]
    );
    assert!(again.contains_key(&impl_header_file("fk")));
}

#[test]
fn unknown_component_is_an_error() {
    let ir = lower_to_cca(&corpus_model("paddling"));
    assert_eq!(
        emit_component_hull(&ir, "nope"),
        Err(CodegenError::UnknownComponent("nope".into()))
    );
}

#[test]
fn codegen_is_deterministic() {
    for name in CORPUS {
        let a = emit_all(&lower_to_cca(&corpus_model(name)), &BTreeSet::new()).unwrap();
        let b = emit_all(&lower_to_cca(&corpus_model(name)), &BTreeSet::new()).unwrap();
        assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_hulls_declare_exactly_their_hooks(seed in any::<u64>()) {
        let ir = lower_to_cca(&checked(random_model(seed)));
        if let Err(e) = check_hooks(&ir) {
            return Err(TestCaseError::fail(e));
        }
    }

    #[test]
    fn every_file_starts_with_the_banner(seed in any::<u64>()) {
        let ir = lower_to_cca(&checked(random_model(seed)));
        match emit_all(&ir, &BTreeSet::new()) {
            Ok(files) => {
                for (name, text) in files {
                    let first = text.lines().next().unwrap_or_default();
                    if name.contains("_impl.") {
                        prop_assert!(!first.contains("DO NOT EDIT"), "{}", name);
                    } else {
                        prop_assert!(first.starts_with("// GENERATED by amdsl v"), "{}", name);
                        prop_assert!(first.ends_with(" — DO NOT EDIT"), "{}", name);
                    }
                }
            }
            // names differing only in the first letter's case collide
            Err(CodegenError::ClassNameCollision(a, b)) => {
                prop_assert_eq!(class_name(&a), class_name(&b));
            }
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }
}
