//! Seeded generator of random models that pass every semantic check.
//! Used by property tests and benchmarks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::frontend::is_keyword;
use crate::ir::{
    AdaptiveComponentDecl, AdaptiveModuleDecl, ComponentSubtype, CriterionDecl, CriterionKind,
    DynamicalSystem, Ident, Learner, LearningMode, LoopMode, MapRef, MappingDecl, MappingKind,
    ShapingParam, SpaceDecl, SpaceKind, SpaceType, Span, SystemModel, TransformKind,
    TransformationDecl,
};

/// Size knobs for [`random_model_with`].
#[derive(Debug, Clone, Copy)]
pub struct SynthConfig {
    pub max_spaces: usize,
    pub max_modules: usize,
    pub max_sequencers: usize,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            max_spaces: 8,
            max_modules: 4,
            max_sequencers: 2,
        }
    }
}

// words the grammar only treats specially in some positions
const CONTEXTUAL: [&str; 12] = [
    "from",
    "to",
    "execution",
    "learning",
    "closed_loop",
    "open_loop",
    "online",
    "offline",
    "both",
    "shape",
    "speed",
    "goal",
];

const DESCRIPTIONS: [&str; 5] = [
    "joint angles of the left arm",
    "say \"hi\"",
    "back\\slash",
    "Gelenkwinkel \u{e4}\u{f6}\u{fc}",
    "",
];

struct Names {
    used: BTreeSet<String>,
}

impl Names {
    fn new() -> Self {
        Names {
            used: BTreeSet::new(),
        }
    }

    /// A fresh identifier, unique within this namespace even ignoring case.
    fn fresh(&mut self, rng: &mut ChaCha8Rng, prefix: &str) -> Ident {
        loop {
            let name = if rng.gen_bool(0.1) {
                CONTEXTUAL.choose(rng).unwrap().to_string()
            } else if rng.gen_bool(0.5) {
                format!("{prefix}{}", rng.gen_range(0..1000))
            } else {
                let len = rng.gen_range(1..8);
                let mut s = String::new();
                s.push(rng.gen_range(b'a'..=b'z') as char);
                if rng.gen_bool(0.3) {
                    s = s.to_uppercase();
                }
                for _ in 1..len {
                    let c = match rng.gen_range(0..10) {
                        0 => '_',
                        1..=2 => rng.gen_range(b'0'..=b'9') as char,
                        _ => rng.gen_range(b'a'..=b'z') as char,
                    };
                    s.push(c);
                }
                s
            };
            if !is_keyword(&name) && self.used.insert(name.to_lowercase()) {
                return Ident::new(name);
            }
        }
    }
}

fn custom_kind(rng: &mut ChaCha8Rng) -> String {
    format!("Custom{}", rng.gen_range(0..50))
}

fn random_type(rng: &mut ChaCha8Rng, kind: SpaceKind) -> SpaceType {
    let dim = if kind.is_unary() {
        1
    } else {
        rng.gen_range(1..=12)
    };
    let frame = rng
        .gen_bool(0.25)
        .then(|| *["world", "base", "tool0", "camera_2"].choose(rng).unwrap());
    SpaceType::new(kind, dim, frame).expect("generated type is valid")
}

fn space(name: Ident, ty: SpaceType, rng: &mut ChaCha8Rng) -> SpaceDecl {
    SpaceDecl {
        name,
        ty,
        description: rng
            .gen_bool(0.3)
            .then(|| DESCRIPTIONS.choose(rng).unwrap().to_string()),
        span: Span::SYNTHETIC,
    }
}

fn reference(s: &SpaceDecl) -> Ident {
    Ident::new(s.name.name.clone())
}

/// A random valid model with default sizes.
pub fn random_model(seed: u64) -> SystemModel {
    random_model_with(seed, SynthConfig::default())
}

pub fn random_model_with(seed: u64, cfg: SynthConfig) -> SystemModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    let mut model = SystemModel::new(Names::new().fresh(rng, "sys").name);
    let mut space_names = Names::new();
    let mut module_names = Names::new();
    let mut unit_names = Names::new();

    let n_spaces = rng.gen_range(2..=cfg.max_spaces.max(2));
    for _ in 0..n_spaces {
        let kind = *SpaceKind::ALL.choose(rng).unwrap();
        let ty = random_type(rng, kind);
        let name = space_names.fresh(rng, "s");
        model.spaces.push(space(name, ty, rng));
    }

    // mappings join spaces of different kinds
    for _ in 0..rng.gen_range(0..=4) {
        let a = model.spaces.choose(rng).unwrap().clone();
        let b = model.spaces.choose(rng).unwrap().clone();
        if a.ty.kind() == b.ty.kind() {
            continue;
        }
        let kind = match rng.gen_range(0..4) {
            0 => MappingKind::ForwardKinematics,
            1 => MappingKind::InverseKinematics,
            2 => MappingKind::Jacobian,
            _ => MappingKind::Custom(custom_kind(rng)),
        };
        model.mappings.push(MappingDecl {
            name: unit_names.fresh(rng, "map"),
            kind,
            from: reference(&a),
            to: reference(&b),
            span: Span::SYNTHETIC,
        });
    }
    // transformations need a compatible partner, so make one
    for _ in 0..rng.gen_range(0..=2) {
        let a = model.spaces.choose(rng).unwrap().clone();
        let frame = rng.gen_bool(0.5).then_some("target");
        let ty = SpaceType::new(a.ty.kind(), a.ty.dimension() as u64, frame).unwrap();
        let name = space_names.fresh(rng, "t");
        let b = space(name, ty, rng);
        let (from, to) = if rng.gen_bool(0.5) {
            (reference(&a), reference(&b))
        } else {
            (reference(&b), reference(&a))
        };
        model.spaces.push(b);
        let kind = if rng.gen_bool(0.7) {
            TransformKind::CoordinateTransformation
        } else {
            TransformKind::Custom(custom_kind(rng))
        };
        model.transformations.push(TransformationDecl {
            name: unit_names.fresh(rng, "tf"),
            kind,
            from,
            to,
            span: Span::SYNTHETIC,
        });
    }

    for _ in 0..rng.gen_range(0..=cfg.max_modules) {
        let mut m = AdaptiveModuleDecl::new(module_names.fresh(rng, "M").name);
        m.dynamical_system = Some(match rng.gen_range(0..3) {
            0 => DynamicalSystem::VelocityField,
            1 => DynamicalSystem::DynamicalMovementPrimitive,
            _ => DynamicalSystem::Custom(custom_kind(rng)),
        });
        if rng.gen_bool(0.6) {
            m.learner = Some(match rng.gen_range(0..3) {
                0 => Learner::ExtremeLearningMachine,
                1 => Learner::ReservoirNetwork,
                _ => Learner::Custom(custom_kind(rng)),
            });
            m.learning_mode = Some(*LearningMode::ALL.choose(rng).unwrap());
        }
        let pick = |rng: &mut ChaCha8Rng, n: usize, spaces: &[SpaceDecl]| -> Vec<Ident> {
            let mut s: Vec<&SpaceDecl> = spaces.iter().collect();
            s.shuffle(rng);
            s.into_iter().take(n).map(reference).collect()
        };
        let n_exec = rng.gen_range(0..=2);
        m.execution_inputs = pick(rng, n_exec, &model.spaces);
        if m.learns_online() || m.learns_offline() {
            let n_learn = if m.learns_online() { 1 } else { 0 } + rng.gen_range(0..=1);
            m.learning_inputs = pick(rng, n_learn, &model.spaces);
        }
        for p in ShapingParam::ALL {
            if rng.gen_bool(0.3) {
                m.shaping
                    .insert(*p, reference(model.spaces.choose(rng).unwrap()));
            }
        }
        m.loop_mode = if !m.execution_inputs.is_empty() && rng.gen_bool(0.6) {
            LoopMode::ClosedLoop
        } else {
            LoopMode::OpenLoop
        };
        m.output = Some(reference(model.spaces.choose(rng).unwrap()));
        model.modules.push(m);
    }

    let modules = model.modules.clone();
    for m in &modules {
        if rng.gen_bool(0.2) {
            continue; // left unwrapped
        }
        let subtype = if m.loop_mode == LoopMode::ClosedLoop && rng.gen_bool(0.4) {
            ComponentSubtype::TrackingController
        } else if rng.gen_bool(0.5) {
            ComponentSubtype::PatternGenerator
        } else {
            ComponentSubtype::Generic
        };
        let mut c = AdaptiveComponentDecl::new(unit_names.fresh(rng, "C").name, subtype);
        c.module = Some(Ident::new(m.name.name.clone()));

        let out_ty = model
            .space(&m.output.as_ref().unwrap().name)
            .unwrap()
            .ty
            .clone();
        let outs: Vec<String> = all_maps(&model)
            .filter(|map| {
                model
                    .space(&map.from().name)
                    .unwrap()
                    .ty
                    .compatible(&out_ty)
            })
            .map(|map| map.name().name.clone())
            .collect();
        if let Some(via) = outs.choose(rng) {
            if rng.gen_bool(0.7) {
                c.output_mapping = Some(Ident::new(via.clone()));
            }
        }
        let inputs: BTreeSet<&str> = m.inputs().map(|(_, s)| s.name.as_str()).collect();
        let mut ins: Vec<String> = all_maps(&model)
            .filter(|map| inputs.contains(map.to().name.as_str()))
            .map(|map| map.name().name.clone())
            .collect();
        ins.shuffle(rng);
        let n_in = rng.gen_range(0..=ins.len());
        c.input_mappings = ins.into_iter().take(n_in).map(Ident::new).collect();

        if rng.gen_bool(0.3) {
            c.criterion = Some(random_criterion(rng));
        }
        model.components.push(c);
    }

    for _ in 0..rng.gen_range(0..=cfg.max_sequencers) {
        if model.components.is_empty() {
            break;
        }
        let mut c = AdaptiveComponentDecl::new(
            unit_names.fresh(rng, "Seq").name,
            ComponentSubtype::Sequencer,
        );
        let mut kids: Vec<String> = model
            .components
            .iter()
            .map(|c| c.name.name.clone())
            .collect();
        kids.shuffle(rng);
        let n = rng.gen_range(1..=kids.len().min(3));
        c.children = kids.into_iter().take(n).map(Ident::new).collect();
        let wrapped: BTreeSet<&str> = model
            .components
            .iter()
            .filter_map(|c| c.module.as_ref().map(Ident::as_str))
            .collect();
        let free = modules.iter().find(|m| !wrapped.contains(m.name.as_str()));
        if let (Some(m), true) = (free, rng.gen_bool(0.3)) {
            c.module = Some(Ident::new(m.name.name.clone()));
        }
        if rng.gen_bool(0.5) {
            c.criterion = Some(random_criterion(rng));
        }
        model.components.push(c);
    }

    model.spaces.shuffle(rng);
    model.mappings.shuffle(rng);
    model.modules.shuffle(rng);
    model
}

fn all_maps(model: &SystemModel) -> impl Iterator<Item = MapRef<'_>> {
    model
        .mappings
        .iter()
        .map(MapRef::Mapping)
        .chain(model.transformations.iter().map(MapRef::Transformation))
}

fn random_criterion(rng: &mut ChaCha8Rng) -> CriterionDecl {
    CriterionDecl {
        kind: match rng.gen_range(0..3) {
            0 => CriterionKind::Convergence,
            1 => CriterionKind::Timeout,
            _ => CriterionKind::Custom(custom_kind(rng)),
        },
        description: rng
            .gen_bool(0.4)
            .then(|| DESCRIPTIONS.choose(rng).unwrap().to_string()),
        span: Span::SYNTHETIC,
    }
}
