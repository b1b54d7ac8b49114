//! One row per rule: a small model, the single diagnostic it must produce and
//! where. Expected positions are found by searching the source for the
//! offending token, then also pinned as literals.

use amdsl_core::diag::Diagnostic;
use amdsl_core::frontend::parse_system;
use amdsl_core::semantics::analyze;
use amdsl_core::Span;

const SPACES: &str = "
  space q : JointAngles(7)
  space q6 : JointAngles(6)
  space x : CartesianPose(6)
  space x2 : CartesianPose(6)@tool
  space p : Phase(1)
";

fn diagnostics(body: &str) -> Vec<Diagnostic> {
    let text = format!("system T {{{SPACES}{body}}}\n");
    let (model, parse) = parse_system(&text);
    assert!(parse.is_empty(), "parse failed: {parse:?}\n{text}");
    analyze(model.unwrap()).diagnostics
}

/// Span of the `nth` (0-based) whole-word occurrence of `needle` in `body`,
/// in the coordinates of the assembled source.
fn find(body: &str, needle: &str, nth: usize) -> Span {
    let text = format!("system T {{{SPACES}{body}}}\n");
    let first_body_line = SPACES.lines().count();
    let mut seen = 0;
    for (i, line) in text.lines().enumerate().skip(first_body_line) {
        let chars: Vec<char> = line.chars().collect();
        let n: Vec<char> = needle.chars().collect();
        for start in 0..chars.len() {
            if chars[start..].starts_with(&n) {
                let before = start.checked_sub(1).map(|j| chars[j]);
                let after = chars.get(start + n.len()).copied();
                let word = |c: Option<char>| c.is_some_and(|c| c.is_alphanumeric() || c == '_');
                if word(before) || word(after) {
                    continue;
                }
                if seen == nth {
                    let line = i as u32 + 1;
                    let col = start as u32 + 1;
                    return Span::new(line, col, line, col + n.len() as u32);
                }
                seen += 1;
            }
        }
    }
    panic!("`{needle}` #{nth} not found");
}

struct Case {
    name: &'static str,
    body: &'static str,
    /// None for models that must check cleanly.
    expect: Option<(&'static str, &'static str, usize, (u32, u32))>,
}

fn cases() -> Vec<Case> {
    vec![
        Case {
            name: "clean model",
            body: "
  mapping fk : ForwardKinematics from q to x
  adaptive module M {
    dynamical_system VelocityField
    mode closed_loop
    in execution q
    out q
  }
  adaptive component C : TrackingController {
    module M
    out via fk
  }
",
            expect: None,
        },
        Case {
            name: "duplicate space",
            body: "  space q : Scalar(1)\n",
            expect: Some(("E201", "q", 0, (7, 9))),
        },
        Case {
            name: "unresolved space in mapping",
            body: "  mapping fk : ForwardKinematics from q to nowhere\n",
            expect: Some(("E202", "nowhere", 0, (7, 44))),
        },
        Case {
            name: "child cycle",
            body: "
  adaptive component A : Sequencer {
    children A
  }
",
            expect: Some(("E203", "A", 0, (8, 22))),
        },
        Case {
            name: "module without output",
            body: "
  adaptive module M {
    dynamical_system VelocityField
  }
",
            expect: Some(("E204", "M", 0, (8, 19))),
        },
        Case {
            name: "duplicate execution input",
            body: "
  adaptive module M {
    dynamical_system VelocityField
    in execution q q
    out q
  }
",
            expect: Some(("E205", "q", 1, (10, 20))),
        },
        Case {
            name: "mapping between spaces of one kind",
            body: "  mapping m : ForwardKinematics from q to q6\n",
            expect: Some(("E301", "m", 0, (7, 11))),
        },
        Case {
            name: "transformation across kinds",
            body: "  transformation t : CoordinateTransformation from q to x\n",
            expect: Some(("E302", "t", 0, (7, 18))),
        },
        Case {
            name: "transformation between frames of one kind",
            body: "  transformation t : CoordinateTransformation from x to x2\n",
            expect: None,
        },
        Case {
            name: "output mapping reads the wrong type",
            body: "
  mapping ik : InverseKinematics from x to q
  adaptive module M {
    dynamical_system VelocityField
    out q
  }
  adaptive component C : Generic {
    module M
    out via ik
  }
",
            expect: Some(("E303", "ik", 1, (15, 13))),
        },
        Case {
            name: "input mapping with the wrong dimension",
            body: "
  mapping ik : InverseKinematics from x to q6
  adaptive module M {
    dynamical_system VelocityField
    in execution q
    out q
  }
  adaptive component C : Generic {
    module M
    in via ik
  }
",
            expect: Some(("E304", "ik", 1, (16, 12))),
        },
        Case {
            name: "input mapping feeding nothing",
            body: "
  mapping fk : ForwardKinematics from q to x
  adaptive module M {
    dynamical_system VelocityField
    in execution q
    out q
  }
  adaptive component C : Generic {
    module M
    in via fk
  }
",
            expect: Some(("E305", "fk", 1, (16, 12))),
        },
        Case {
            name: "open-loop tracking controller",
            body: "
  adaptive module M {
    dynamical_system VelocityField
    in execution q
    out q
  }
  adaptive component C : TrackingController {
    module M
  }
",
            expect: Some(("E401", "C", 0, (13, 22))),
        },
        Case {
            name: "empty sequencer",
            body: "
  adaptive component S : Sequencer {
  }
",
            expect: Some(("E402", "S", 0, (8, 22))),
        },
        Case {
            name: "module wrapped twice",
            body: "
  adaptive module M {
    dynamical_system VelocityField
    out q
  }
  adaptive component A : Generic {
    module M
  }
  adaptive component B : Generic {
    module M
  }
",
            expect: Some(("E403", "M", 2, (16, 12))),
        },
        Case {
            name: "children on a generic component",
            body: "
  adaptive module M {
    dynamical_system VelocityField
    out q
  }
  adaptive module N {
    dynamical_system VelocityField
    out q
  }
  adaptive component A : Generic {
    module M
    children B
  }
  adaptive component B : Generic {
    module N
  }
",
            expect: Some(("E404", "B", 0, (18, 14))),
        },
        Case {
            name: "closed loop without execution input",
            body: "
  adaptive module M {
    dynamical_system VelocityField
    mode closed_loop
    out q
  }
",
            expect: Some(("E406", "M", 0, (8, 19))),
        },
        Case {
            name: "online learner without learning input",
            body: "
  adaptive module M {
    dynamical_system VelocityField
    learner ExtremeLearningMachine
    mode open_loop, online
    out q
  }
",
            expect: Some(("E407", "M", 0, (8, 19))),
        },
        Case {
            name: "sequencer of pattern generators",
            body: "
  adaptive module M {
    dynamical_system DynamicalMovementPrimitive
    in execution p
    out q
  }
  adaptive component G : PatternGenerator {
    module M
    criterion Convergence
  }
  adaptive component S : Sequencer {
    children G
  }
",
            expect: None,
        },
    ]
}

#[test]
fn each_case_produces_exactly_its_diagnostic() {
    let cases = cases();
    assert!(cases.len() >= 12);
    let mut failures = Vec::new();
    for case in &cases {
        let diags = diagnostics(case.body);
        let errors: Vec<_> = diags.iter().filter(|d| d.is_error()).collect();
        match case.expect {
            None => {
                if !diags.is_empty() {
                    failures.push(format!(
                        "{}: expected no diagnostics, got {diags:?}",
                        case.name
                    ));
                }
            }
            Some((code, needle, nth, (line, col))) => {
                let found = find(case.body, needle, nth);
                if (found.start_line, found.start_col) != (line, col) {
                    failures.push(format!(
                        "{}: needle `{needle}` is at {found}, table says {line}:{col}",
                        case.name
                    ));
                }
                match errors.as_slice() {
                    [d] if d.code == code && d.span == found => {}
                    _ => failures.push(format!(
                        "{}: expected exactly {code} at {found}, got {diags:?}",
                        case.name
                    )),
                }
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn rendered_form() {
    let d = &diagnostics("  mapping m : ForwardKinematics from q to q6\n")[0];
    assert!(d
        .render("t.am")
        .starts_with("t.am:7:11: error[E301]: mapping `m` connects two JointAngles spaces"));
}

#[test]
fn warnings_do_not_block() {
    let diags = diagnostics(
        "
  adaptive module M {
    dynamical_system VelocityField
    learner ReservoirNetwork
    in learning q
    out q
  }
",
    );
    let codes: Vec<_> = diags.iter().map(|d| d.code).collect();
    assert_eq!(codes, ["W409", "W408"]);
    assert!(diags.iter().all(|d| !d.is_error()));
}

#[test]
fn tracking_controller_without_feedback() {
    // closed loop without execution input is already E406 on the module, so
    // E405 only ever shows up next to it
    let body = "
  adaptive module M {
    dynamical_system VelocityField
    mode closed_loop
    out q
  }
  adaptive component C : TrackingController {
    module M
  }
";
    let diags = diagnostics(body);
    let got: Vec<_> = diags.iter().map(|d| (d.code, d.span)).collect();
    assert_eq!(got, [("E406", find(body, "M", 0)), ("E405", find(body, "C", 0))]);
}
