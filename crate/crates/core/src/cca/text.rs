//! The line-oriented `.cca` format.
//!
//! ```text
//! cca <system> v1
//! component <name> kind=<tag> states=<State,...>
//!   port <name> <in|out> <Kind>(<dim>)[@frame] role=<Role>
//!   criterion <Kind>
//!   deploy <key>=<value|?>
//! connect <comp>.<port> -> <comp>.<port> states=<State,...>
//! ```
//!
//! Blank lines and lines starting with `//` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::diag::{codes, has_errors, Diagnostic};
use crate::ir::{
    format_states, is_identifier, ComponentIR, Connection, Direction, IrComponent, PortDecl,
    PortRef, PortRole, SpaceKind, SpaceType, Span, State,
};

pub const FORMAT_VERSION: &str = "v1";

/// Prints in canonical order: components by name, ports by direction then
/// name, connections lexicographically.
pub fn print_cca(ir: &ComponentIR) -> String {
    let mut ir = ir.clone();
    ir.sort();
    let mut out = String::new();
    writeln!(out, "cca {} {FORMAT_VERSION}", ir.system_name).unwrap();
    for c in &ir.components {
        writeln!(
            out,
            "component {} kind={} states={}",
            c.name,
            c.kind,
            format_states(&c.states)
        )
        .unwrap();
        for p in &c.ports {
            writeln!(
                out,
                "  port {} {} {} role={}",
                p.name,
                p.direction.keyword(),
                p.ty,
                p.role
            )
            .unwrap();
        }
        if let Some(k) = &c.criterion {
            writeln!(out, "  criterion {k}").unwrap();
        }
        for (key, value) in &c.deployment {
            writeln!(out, "  deploy {key}={}", value.as_deref().unwrap_or("?")).unwrap();
        }
    }
    for conn in &ir.connections {
        writeln!(
            out,
            "connect {} -> {} states={}",
            conn.source,
            conn.target,
            format_states(&conn.active_in)
        )
        .unwrap();
    }
    out
}

/// A whitespace-separated word with its column range.
#[derive(Debug, Clone, Copy)]
struct Word<'a> {
    text: &'a str,
    span: Span,
}

fn words(line: &str, line_no: u32) -> Vec<Word<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, u32)> = None;
    let mut col = 1u32;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some((s, sc)) = start.take() {
                out.push(Word {
                    text: &line[s..i],
                    span: Span::new(line_no, sc, line_no, col),
                });
            }
        } else if start.is_none() {
            start = Some((i, col));
        }
        col += 1;
    }
    if let Some((s, sc)) = start {
        out.push(Word {
            text: &line[s..],
            span: Span::new(line_no, sc, line_no, col),
        });
    }
    out
}

fn line_span(line: &str, line_no: u32) -> Span {
    Span::new(line_no, 1, line_no, line.chars().count() as u32 + 1)
}

/// Parses `Kind(dim)` with an optional `@frame`.
pub fn parse_space_type(s: &str) -> Result<SpaceType, String> {
    let (kind, rest) = s
        .split_once('(')
        .ok_or_else(|| format!("`{s}` is not a space type"))?;
    let (dim, frame) = rest
        .split_once(')')
        .ok_or_else(|| format!("`{s}` is not a space type"))?;
    let kind =
        SpaceKind::from_name(kind).ok_or_else(|| format!("unknown space type kind `{kind}`"))?;
    let dim: u64 = dim
        .parse()
        .map_err(|_| format!("`{dim}` is not a dimension"))?;
    let frame = match frame {
        "" => None,
        f => Some(
            f.strip_prefix('@')
                .ok_or_else(|| format!("unexpected `{f}` after space type"))?,
        ),
    };
    SpaceType::new(kind, dim, frame).map_err(|e| e.to_string())
}

fn parse_states(s: &str) -> Result<BTreeSet<State>, String> {
    if s.is_empty() {
        return Err("state set is empty".into());
    }
    s.split(',')
        .map(|st| State::from_name(st).ok_or_else(|| format!("unknown state `{st}`")))
        .collect()
}

fn parse_port_ref(s: &str) -> Option<PortRef> {
    let (c, p) = s.split_once('.')?;
    (!c.is_empty() && !p.is_empty()).then(|| PortRef::new(c, p))
}

struct PendingConnection {
    conn: Connection,
    span: Span,
    source_span: Span,
    target_span: Span,
}

struct CcaParser {
    diags: Vec<Diagnostic>,
}

impl CcaParser {
    fn err(&mut self, code: &'static str, span: Span, msg: impl Into<String>) {
        self.diags.push(Diagnostic::error(code, span, msg));
    }

    /// Splits `key=value`, reporting when the key is not the expected one.
    fn attr<'a>(&mut self, w: Option<&Word<'a>>, key: &str, line: Span) -> Option<&'a str> {
        match w.and_then(|w| w.text.strip_prefix(key).and_then(|r| r.strip_prefix('='))) {
            Some(v) => Some(v),
            None => {
                let span = w.map_or(line, |w| w.span);
                self.err(codes::CCA_SYNTAX, span, format!("expected `{key}=...`"));
                None
            }
        }
    }

    fn name(&mut self, w: Option<&Word<'_>>, what: &str, line: Span) -> Option<String> {
        match w {
            Some(w) if is_identifier(w.text) => Some(w.text.to_string()),
            Some(w) => {
                self.err(
                    codes::CCA_SYNTAX,
                    w.span,
                    format!("`{}` is not a valid {what} name", w.text),
                );
                None
            }
            None => {
                self.err(codes::CCA_SYNTAX, line, format!("missing {what} name"));
                None
            }
        }
    }
}

/// Parses a `.cca` document, possibly hand-edited. Returns `None` when any
/// error was found.
pub fn parse_cca(text: &str) -> (Option<ComponentIR>, Vec<Diagnostic>) {
    let mut p = CcaParser { diags: Vec::new() };
    let mut ir: Option<ComponentIR> = None;
    let mut current: Option<usize> = None;
    let mut pending = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx as u32 + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with("//") {
            continue;
        }
        let ws = words(line, line_no);
        let lspan = line_span(line, line_no);

        let Some(ir) = ir.as_mut() else {
            match ws.as_slice() {
                [cca, name, version] if cca.text == "cca" && version.text == FORMAT_VERSION => {
                    if let Some(name) = p.name(Some(name), "system", lspan) {
                        ir = Some(ComponentIR::new(name));
                    }
                }
                _ => p.err(
                    codes::CCA_HEADER,
                    lspan,
                    format!("expected header `cca <system> {FORMAT_VERSION}`"),
                ),
            }
            if ir.is_none() {
                return (None, p.diags);
            }
            continue;
        };

        match ws[0].text {
            "component" => {
                current = None;
                let Some(name) = p.name(ws.get(1), "component", lspan) else {
                    continue;
                };
                let Some(kind) = p.attr(ws.get(2), "kind", lspan) else {
                    continue;
                };
                let Some(states_text) = p.attr(ws.get(3), "states", lspan) else {
                    continue;
                };
                if let Some(extra) = ws.get(4) {
                    p.err(
                        codes::CCA_SYNTAX,
                        extra.span,
                        "unexpected text after component",
                    );
                    continue;
                }
                if kind.is_empty() {
                    p.err(codes::CCA_BAD_VALUE, ws[2].span, "empty component kind");
                    continue;
                }
                let states = match parse_states(states_text) {
                    Ok(s) => s,
                    Err(e) => {
                        p.err(codes::CCA_BAD_VALUE, ws[3].span, e);
                        continue;
                    }
                };
                if ir.component(&name).is_some() {
                    p.err(
                        codes::CCA_DUPLICATE,
                        ws[1].span,
                        format!("duplicate component `{name}`"),
                    );
                    continue;
                }
                ir.components.push(IrComponent {
                    name,
                    kind: kind.to_string(),
                    states,
                    ports: Vec::new(),
                    criterion: None,
                    deployment: Default::default(),
                });
                current = Some(ir.components.len() - 1);
            }
            "port" | "deploy" | "criterion" => {
                let Some(ci) = current else {
                    p.err(
                        codes::CCA_SYNTAX,
                        ws[0].span,
                        format!("`{}` outside of a component", ws[0].text),
                    );
                    continue;
                };
                let comp = &mut ir.components[ci];
                match ws[0].text {
                    "port" => {
                        let [_, name, dir, ty, role] = ws.as_slice() else {
                            p.err(
                                codes::CCA_SYNTAX,
                                lspan,
                                "expected `port <name> <in|out> <Kind>(<dim>) role=<Role>`",
                            );
                            continue;
                        };
                        let Some(port_name) = p.name(Some(name), "port", lspan) else {
                            continue;
                        };
                        let direction = match dir.text {
                            "in" => Direction::In,
                            "out" => Direction::Out,
                            other => {
                                p.err(
                                    codes::CCA_BAD_VALUE,
                                    dir.span,
                                    format!("expected `in` or `out`, found `{other}`"),
                                );
                                continue;
                            }
                        };
                        let ty = match parse_space_type(ty.text) {
                            Ok(t) => t,
                            Err(e) => {
                                p.err(codes::CCA_BAD_VALUE, ty.span, e);
                                continue;
                            }
                        };
                        let Some(role_text) = p.attr(Some(role), "role", lspan) else {
                            continue;
                        };
                        let Some(role) = PortRole::from_name(role_text) else {
                            p.err(
                                codes::CCA_BAD_VALUE,
                                role.span,
                                format!("unknown port role `{role_text}`"),
                            );
                            continue;
                        };
                        if comp.port(&port_name, direction).is_some() {
                            p.err(
                                codes::CCA_DUPLICATE,
                                name.span,
                                format!("duplicate port `{}.{port_name}`", comp.name),
                            );
                            continue;
                        }
                        comp.ports.push(PortDecl {
                            name: port_name,
                            direction,
                            ty,
                            role,
                        });
                    }
                    "criterion" => match ws.as_slice() {
                        [_, kind] if comp.criterion.is_none() => {
                            comp.criterion = Some(kind.text.to_string())
                        }
                        [_, kind] => p.err(
                            codes::CCA_DUPLICATE,
                            kind.span,
                            format!("`{}` already has a criterion", comp.name),
                        ),
                        _ => p.err(codes::CCA_SYNTAX, lspan, "expected `criterion <Kind>`"),
                    },
                    _ => {
                        // the value runs to the end of the line
                        let rest = line.trim_start()["deploy".len()..].trim();
                        let Some((key, value)) = rest.split_once('=') else {
                            p.err(codes::CCA_SYNTAX, lspan, "expected `deploy <key>=<value>`");
                            continue;
                        };
                        let key = key.trim();
                        if key.is_empty() || key.contains(char::is_whitespace) {
                            p.err(codes::CCA_SYNTAX, lspan, format!("bad deploy key `{key}`"));
                            continue;
                        }
                        let value = match value.trim() {
                            "?" => None,
                            v => Some(v.to_string()),
                        };
                        if comp.deployment.insert(key.to_string(), value).is_some() {
                            p.err(
                                codes::CCA_DUPLICATE,
                                lspan,
                                format!("duplicate deploy key `{key}`"),
                            );
                        }
                    }
                }
            }
            "connect" => {
                current = None;
                let [_, src, arrow, dst, states] = ws.as_slice() else {
                    p.err(
                        codes::CCA_SYNTAX,
                        lspan,
                        "expected `connect <comp>.<port> -> <comp>.<port> states=...`",
                    );
                    continue;
                };
                if arrow.text != "->" {
                    p.err(codes::CCA_SYNTAX, arrow.span, "expected `->`");
                    continue;
                }
                let (Some(source), Some(target)) =
                    (parse_port_ref(src.text), parse_port_ref(dst.text))
                else {
                    p.err(
                        codes::CCA_SYNTAX,
                        lspan,
                        "endpoints are written `<component>.<port>`",
                    );
                    continue;
                };
                let Some(states_text) = p.attr(Some(states), "states", lspan) else {
                    continue;
                };
                let active_in = match parse_states(states_text) {
                    Ok(s) => s,
                    Err(e) => {
                        p.err(codes::CCA_BAD_VALUE, states.span, e);
                        continue;
                    }
                };
                pending.push(PendingConnection {
                    conn: Connection {
                        source,
                        target,
                        active_in,
                    },
                    span: lspan,
                    source_span: src.span,
                    target_span: dst.span,
                });
            }
            other => p.err(
                codes::CCA_SYNTAX,
                ws[0].span,
                format!("unknown statement `{other}`"),
            ),
        }
    }

    let Some(mut ir) = ir else {
        p.err(
            codes::CCA_HEADER,
            Span::new(1, 1, 1, 1),
            format!("expected header `cca <system> {FORMAT_VERSION}`"),
        );
        return (None, p.diags);
    };

    for pc in pending {
        let find = |r: &PortRef, dir: Direction| {
            ir.component(&r.component)
                .and_then(|c| c.port(&r.port, dir))
                .cloned()
        };
        let src = find(&pc.conn.source, Direction::Out);
        let dst = find(&pc.conn.target, Direction::In);
        if src.is_none() {
            p.err(
                codes::CCA_UNKNOWN_ENDPOINT,
                pc.source_span,
                format!("no out port `{}`", pc.conn.source),
            );
        }
        if dst.is_none() {
            p.err(
                codes::CCA_UNKNOWN_ENDPOINT,
                pc.target_span,
                format!("no in port `{}`", pc.conn.target),
            );
        }
        if let (Some(s), Some(d)) = (src, dst) {
            if !s.ty.compatible(&d.ty) {
                p.err(
                    codes::PORT_TYPE_MISMATCH,
                    pc.span,
                    format!(
                        "connection {} -> {} joins {} and {}",
                        pc.conn.source, pc.conn.target, s.ty, d.ty
                    ),
                );
                continue;
            }
            if ir
                .connections
                .iter()
                .any(|c| c.source == pc.conn.source && c.target == pc.conn.target)
            {
                p.err(codes::CCA_DUPLICATE, pc.span, "duplicate connection");
                continue;
            }
            ir.connections.push(pc.conn);
        }
    }

    if has_errors(&p.diags) {
        return (None, p.diags);
    }
    ir.sort();
    (Some(ir), p.diags)
}
