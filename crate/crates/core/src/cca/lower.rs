use std::collections::{BTreeMap, BTreeSet};

use crate::ir::{
    AdaptiveComponentDecl, ComponentIR, ComponentSubtype, Connection, Direction, InputSlot,
    IrComponent, MapRef, PortDecl, PortRef, PortRole, SpaceType, State, DEPLOY_KEYS,
};
use crate::semantics::ResolvedModel;

/// Port carrying a component's finished signal.
pub const DONE_PORT: &str = "done";

pub fn input_port_name(slot: InputSlot, space: &str) -> String {
    match slot {
        InputSlot::Execution => format!("exec_{space}"),
        InputSlot::Learning => format!("learn_{space}"),
        InputSlot::Shaping(p) => format!("param_{}", p.keyword()),
    }
}

pub fn output_port_name(space: &str) -> String {
    format!("out_{space}")
}

pub fn reference_port_name(space: &str) -> String {
    format!("ref_{space}")
}

pub fn child_done_port_name(child: &str) -> String {
    format!("done_{child}")
}

/// Component kind tag for a mapping or transformation, e.g.
/// `Mapping.ForwardKinematics`.
pub fn map_kind_tag(map: &MapRef<'_>) -> String {
    format!("{}.{}", map.class(), map.kind_name())
}

fn unset_deployment() -> BTreeMap<String, Option<String>> {
    DEPLOY_KEYS.iter().map(|k| (k.to_string(), None)).collect()
}

fn port(name: String, direction: Direction, ty: &SpaceType, role: PortRole) -> PortDecl {
    PortDecl {
        name,
        direction,
        ty: ty.clone(),
        role,
    }
}

struct Lowered {
    component: IrComponent,
    /// In ports keyed by the space that feeds them.
    inputs_by_space: BTreeMap<String, Vec<(String, PortRole)>>,
    output_port: Option<String>,
}

fn lower_component(resolved: &ResolvedModel, c: &AdaptiveComponentDecl) -> Lowered {
    let module = resolved.module_of(c);
    let mut states = BTreeSet::from([State::Execution]);
    let mut ports = Vec::new();
    let mut inputs_by_space: BTreeMap<String, Vec<(String, PortRole)>> = BTreeMap::new();
    let mut output_port = None;

    if let Some(m) = module {
        if m.learns_online() {
            states.insert(State::OnlineLearning);
        }
        if m.learns_offline() {
            states.insert(State::OfflineLearning);
        }
        for (slot, space) in m.inputs() {
            let role = match slot {
                InputSlot::Execution => PortRole::Execution,
                InputSlot::Learning => PortRole::Learning,
                InputSlot::Shaping(_) => PortRole::Shaping,
            };
            let name = input_port_name(slot, &space.name);
            ports.push(port(
                name.clone(),
                Direction::In,
                resolved.space_type(&space.name),
                role,
            ));
            inputs_by_space
                .entry(space.name.clone())
                .or_default()
                .push((name, role));
        }
        // resolution guarantees an output on every checked module
        let out = m.output.as_ref().expect("checked module has an output");
        let out_ty = resolved.space_type(&out.name);
        let name = output_port_name(&out.name);
        ports.push(port(name.clone(), Direction::Out, out_ty, PortRole::Output));
        output_port = Some(name);
        if c.subtype == ComponentSubtype::TrackingController {
            ports.push(port(
                reference_port_name(&out.name),
                Direction::In,
                out_ty,
                PortRole::Reference,
            ));
        }
    }

    if c.subtype == ComponentSubtype::Sequencer || c.criterion.is_some() {
        ports.push(port(
            DONE_PORT.into(),
            Direction::Out,
            &SpaceType::event(),
            PortRole::Event,
        ));
    }
    if c.subtype == ComponentSubtype::Sequencer {
        for child in &c.children {
            ports.push(port(
                child_done_port_name(&child.name),
                Direction::In,
                &SpaceType::event(),
                PortRole::Event,
            ));
        }
    }

    Lowered {
        component: IrComponent {
            name: c.name.name.clone(),
            kind: c.subtype.keyword().to_string(),
            states,
            ports,
            criterion: c.criterion.as_ref().map(|k| k.kind.name().to_string()),
            deployment: unset_deployment(),
        },
        inputs_by_space,
        output_port,
    }
}

fn gated(role: PortRole, states: &BTreeSet<State>) -> BTreeSet<State> {
    role.active_states().intersection(states).copied().collect()
}

/// Lowers a checked model to the component level. Each adaptive component
/// gets its subtype's wiring template; mappings and transformations become
/// one-in one-out components; connections follow the `via` declarations.
///
/// Panics if `resolved` did not pass every check.
pub fn lower_to_cca(resolved: &ResolvedModel) -> ComponentIR {
    assert!(
        resolved.is_checked(),
        "lowering requires a model that passed semantic checks"
    );
    let model = resolved.model();
    let mut ir = ComponentIR::new(model.name.name.clone());

    let lowered: BTreeMap<&str, Lowered> = model
        .components
        .iter()
        .map(|c| (c.name.as_str(), lower_component(resolved, c)))
        .collect();

    for c in &model.components {
        let this = &lowered[c.name.as_str()];
        let states = &this.component.states;

        if let (Some(via), Some(out_port)) = (&c.output_mapping, &this.output_port) {
            ir.connections.push(Connection {
                source: PortRef::new(&c.name.name, out_port),
                target: PortRef::new(&via.name, "in"),
                active_in: gated(PortRole::Output, states),
            });
        }
        for via in &c.input_mappings {
            let produced = resolved.map(&via.name).to();
            for (port_name, role) in this
                .inputs_by_space
                .get(&produced.name)
                .into_iter()
                .flatten()
            {
                let active_in = gated(*role, states);
                if active_in.is_empty() {
                    continue;
                }
                ir.connections.push(Connection {
                    source: PortRef::new(&via.name, "out"),
                    target: PortRef::new(&c.name.name, port_name),
                    active_in,
                });
            }
        }
        for child in &c.children {
            let has_done = lowered[child.name.as_str()]
                .component
                .port(DONE_PORT, Direction::Out)
                .is_some();
            if has_done {
                ir.connections.push(Connection {
                    source: PortRef::new(&child.name, DONE_PORT),
                    target: PortRef::new(&c.name.name, child_done_port_name(&child.name)),
                    active_in: gated(PortRole::Event, states),
                });
            }
        }
    }

    ir.components
        .extend(lowered.into_values().map(|l| l.component));
    let maps = model
        .mappings
        .iter()
        .map(MapRef::Mapping)
        .chain(model.transformations.iter().map(MapRef::Transformation));
    for map in maps {
        ir.components.push(IrComponent {
            name: map.name().name.clone(),
            kind: map_kind_tag(&map),
            states: BTreeSet::from([State::Execution]),
            ports: vec![
                port(
                    "in".into(),
                    Direction::In,
                    resolved.space_type(&map.from().name),
                    PortRole::Execution,
                ),
                port(
                    "out".into(),
                    Direction::Out,
                    resolved.space_type(&map.to().name),
                    PortRole::Output,
                ),
            ],
            criterion: None,
            deployment: unset_deployment(),
        });
    }
    ir.sort();
    ir
}
