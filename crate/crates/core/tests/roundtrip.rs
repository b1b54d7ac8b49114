mod common;

use amdsl_core::frontend::{parse_system, print_system};
use amdsl_core::synth::random_model;
use amdsl_core::{canonicalize, validate};
use common::{corpus_text, parse_ok, CORPUS};
use proptest::prelude::*;

#[test]
fn corpus_files_round_trip() {
    for name in CORPUS {
        let first = parse_ok(&corpus_text(name));
        let printed = print_system(&first);
        let second = parse_ok(&printed);
        assert_eq!(first.strip_spans(), second.strip_spans(), "{name}");
        // printing is a fixed point after one pass
        assert_eq!(print_system(&second), printed, "{name}");
    }
}

#[test]
fn corpus_files_satisfy_model_invariants() {
    for name in CORPUS {
        assert_eq!(validate(&parse_ok(&corpus_text(name))), [], "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_models_round_trip(seed in any::<u64>()) {
        let model = random_model(seed);
        let text = print_system(&model);
        let (parsed, diags) = parse_system(&text);
        prop_assert!(diags.is_empty(), "{:?}\n{}", diags, text);
        prop_assert_eq!(parsed.unwrap().strip_spans(), model.strip_spans());
    }

    #[test]
    fn canonical_form_is_idempotent_and_order_free(seed in any::<u64>()) {
        let model = random_model(seed);
        let once = canonicalize(&model);
        prop_assert_eq!(canonicalize(&once), once.clone());
        let mut shuffled = model.clone();
        shuffled.spaces.reverse();
        shuffled.components.reverse();
        shuffled.mappings.reverse();
        prop_assert_eq!(canonicalize(&shuffled), once);
    }

    #[test]
    fn random_models_satisfy_invariants(seed in any::<u64>()) {
        prop_assert_eq!(validate(&random_model(seed)), vec![]);
    }

    #[test]
    fn parser_never_panics(text in "[a-z{}():,@\" \n0-9]{0,80}") {
        let (model, diags) = parse_system(&text);
        prop_assert!(model.is_some() || !diags.is_empty());
    }
}
