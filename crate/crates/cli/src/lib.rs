//! The `amdsl` command line driver. All logic lives here so it can be run
//! in-process by tests; `main.rs` only wires up the real streams.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use amdsl_core::cca::{lower_to_cca, merge_refinement, parse_cca, print_cca};
use amdsl_core::codegen::emit_all;
use amdsl_core::compare::{compare, text_report, to_json};
use amdsl_core::diag::{has_errors, Diagnostic, Severity};
use amdsl_core::frontend::{parse_system, print_system};
use amdsl_core::graph::{emit_graphml, lower_to_graph, parse_graph, print_graph};
use amdsl_core::semantics::{analyze, ResolvedModel};
use amdsl_core::{ComponentIR, SystemModel};
use anyhow::Context;
use clap::{Parser, Subcommand};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIAGNOSTICS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "amdsl",
    version,
    about = "Compile adaptive-module architecture models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and check a model, printing diagnostics.
    Check { file: PathBuf },
    /// Lower a model to the component format (.cca).
    Lower {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Keep deployment settings from this hand-edited .cca file.
        #[arg(long, value_name = "EXISTING")]
        update: Option<PathBuf>,
    },
    /// Lower a model to a diagram and emit GraphML.
    Graph {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Read the diagram from this .graph file if it exists, otherwise
        /// write the lowered diagram there first.
        #[arg(long, value_name = "GRAPH")]
        via: Option<PathBuf>,
        /// Emit every node at top level, without component groups.
        #[arg(long)]
        flat: bool,
    },
    /// Generate C++ hulls, implementation stubs and the system bootstrap.
    Codegen {
        /// A model (.am) or a component file (.cca).
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// List the files that would be written without writing them.
        #[arg(long)]
        dry_run: bool,
    },
    /// Print a model in canonical layout.
    Fmt { file: PathBuf },
    /// Report the structural similarity of two models.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

/// Output streams plus diagnostic styling.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
    pub color: bool,
}

/// Whether diagnostics should be coloured, given the value of `AMDSL_COLOR`
/// and whether stderr is a terminal.
pub fn color_enabled(setting: Option<&str>, is_terminal: bool) -> bool {
    match setting {
        Some("never") => false,
        _ => is_terminal,
    }
}

enum Failure {
    Diagnostics,
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

type Outcome = Result<(), Failure>;

impl Io<'_> {
    fn report(&mut self, file: &Path, diags: &[Diagnostic]) -> std::io::Result<()> {
        let name = file.display().to_string();
        for d in diags {
            let line = d.render(&name);
            if self.color {
                let (label, paint) = match d.severity {
                    Severity::Error => ("error", "\x1b[1;31m"),
                    Severity::Warning => ("warning", "\x1b[1;33m"),
                };
                let colored =
                    line.replacen(&format!("{label}["), &format!("{paint}{label}\x1b[0m["), 1);
                writeln!(self.err, "{colored}")?;
            } else {
                writeln!(self.err, "{line}")?;
            }
        }
        Ok(())
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn emit(io: &mut Io<'_>, output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(p) => write_file(p, text)?,
        None => io.out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse(io: &mut Io<'_>, file: &Path) -> Result<SystemModel, Failure> {
    let text = read(file)?;
    let (model, diags) = parse_system(&text);
    io.report(file, &diags)?;
    model.ok_or(Failure::Diagnostics)
}

fn check(io: &mut Io<'_>, file: &Path) -> Result<ResolvedModel, Failure> {
    let model = parse(io, file)?;
    let analysis = analyze(model);
    io.report(file, &analysis.diagnostics)?;
    match analysis.resolved {
        Some(r) if !has_errors(&analysis.diagnostics) && r.is_checked() => Ok(r),
        _ => Err(Failure::Diagnostics),
    }
}

fn read_cca(io: &mut Io<'_>, file: &Path) -> Result<ComponentIR, Failure> {
    let text = read(file)?;
    let (ir, diags) = parse_cca(&text);
    io.report(file, &diags)?;
    ir.ok_or(Failure::Diagnostics)
}

fn lower(io: &mut Io<'_>, file: &Path, output: Option<&Path>, update: Option<&Path>) -> Outcome {
    let resolved = check(io, file)?;
    let mut ir = lower_to_cca(&resolved);
    if let Some(existing) = update {
        let edited = read_cca(io, existing)?;
        let (merged, warnings) = merge_refinement(&ir, &edited);
        io.report(existing, &warnings)?;
        ir = merged;
    }
    emit(io, output, &print_cca(&ir))
}

fn graph(
    io: &mut Io<'_>,
    file: &Path,
    output: Option<&Path>,
    via: Option<&Path>,
    flat: bool,
) -> Outcome {
    let resolved = check(io, file)?;
    let g = match via {
        Some(path) if path.exists() => {
            let text = read(path)?;
            let (g, diags) = parse_graph(&text);
            io.report(path, &diags)?;
            g.ok_or(Failure::Diagnostics)?
        }
        Some(path) => {
            let g = lower_to_graph(&resolved);
            write_file(path, &print_graph(&g))?;
            g
        }
        None => lower_to_graph(&resolved),
    };
    emit(io, output, &emit_graphml(&g, flat))
}

fn codegen(io: &mut Io<'_>, file: &Path, dir: &Path, dry_run: bool) -> Outcome {
    let ir = if file.extension().is_some_and(|e| e == "cca") {
        read_cca(io, file)?
    } else {
        lower_to_cca(&check(io, file)?)
    };
    let mut existing = BTreeSet::new();
    if dir.is_dir() {
        for entry in fs::read_dir(dir).with_context(|| format!("cannot list {}", dir.display()))? {
            existing.insert(entry?.file_name().to_string_lossy().into_owned());
        }
    }
    let files = emit_all(&ir, &existing).map_err(anyhow::Error::from)?;
    if dry_run {
        for name in files.keys() {
            writeln!(io.out, "{}", dir.join(name).display())?;
        }
        return Ok(());
    }
    for (name, text) in &files {
        write_file(&dir.join(name), text)?;
    }
    Ok(())
}

fn compare_cmd(io: &mut Io<'_>, a: &Path, b: &Path, json: bool) -> Outcome {
    let ma = check(io, a).map(ResolvedModel::into_model);
    let mb = check(io, b).map(ResolvedModel::into_model);
    let (ma, mb) = (ma?, mb?);
    let report = compare(&ma, &mb);
    let text = if json {
        to_json(&report)
    } else {
        text_report(&report, &ma.name.name, &mb.name.name)
    };
    io.out.write_all(text.as_bytes())?;
    Ok(())
}

fn dispatch(io: &mut Io<'_>, command: Command) -> Outcome {
    match command {
        Command::Check { file } => check(io, &file).map(drop),
        Command::Lower {
            file,
            output,
            update,
        } => lower(io, &file, output.as_deref(), update.as_deref()),
        Command::Graph {
            file,
            output,
            via,
            flat,
        } => graph(io, &file, output.as_deref(), via.as_deref(), flat),
        Command::Codegen {
            file,
            output,
            dry_run,
        } => codegen(io, &file, &output, dry_run),
        Command::Fmt { file } => {
            let model = parse(io, &file)?;
            io.out.write_all(print_system(&model).as_bytes())?;
            Ok(())
        }
        Command::Compare { a, b, json } => compare_cmd(io, &a, &b, json),
    }
}

/// Runs the tool with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { io.err } else { io.out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(io, cli.command) {
        Ok(()) => EXIT_OK,
        Err(Failure::Diagnostics) => EXIT_DIAGNOSTICS,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(io.err, "amdsl: {e:#}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_setting() {
        assert!(!color_enabled(Some("never"), true));
        assert!(color_enabled(Some("auto"), true));
        assert!(!color_enabled(Some("auto"), false));
        assert!(color_enabled(None, true));
    }

    #[test]
    fn usage_errors_exit_2() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut io = Io {
            out: &mut out,
            err: &mut err,
            color: false,
        };
        assert_eq!(run(["amdsl", "frobnicate"], &mut io), EXIT_USAGE);
        assert_eq!(
            run(["amdsl", "check", "/no/such/file.am"], &mut io),
            EXIT_USAGE
        );
        assert!(String::from_utf8(err)
            .unwrap()
            .contains("cannot read /no/such/file.am"));
    }
}
