use std::io::IsTerminal;

fn main() {
    let stderr = std::io::stderr();
    let color = amdsl_cli::color_enabled(
        std::env::var("AMDSL_COLOR").ok().as_deref(),
        stderr.is_terminal(),
    );
    let mut out = std::io::stdout().lock();
    let mut err = stderr.lock();
    let code = amdsl_cli::run(
        std::env::args_os(),
        &mut amdsl_cli::Io {
            out: &mut out,
            err: &mut err,
            color,
        },
    );
    std::io::Write::flush(&mut out).ok();
    std::process::exit(code);
}
