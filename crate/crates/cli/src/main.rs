use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use gpfkit::{parse_field, run, Options};
use gpfkit_core::{Field, TieBreak};

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Lex,
    Revlex,
}

/// Generalized prime ideal factorizations from a script.
#[derive(Parser)]
#[command(name = "gpfkit", version)]
struct Cli {
    /// Script file; reads stdin when absent or `-`.
    input: Option<PathBuf>,
    /// One JSON object per command.
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value = "lex")]
    tie_break: Tie,
    /// Upper bound on filtration length.
    #[arg(long, env = "GPFKIT_MAX_STEPS")]
    max_steps: Option<usize>,
    /// Cross-check monomial inputs by brute force.
    #[arg(long)]
    oracle: bool,
    /// Coefficient field, `QQ` or `Fp:q`.
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
    /// Report per-command wall time.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let text = match cli.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s).map_err(|e| format!("stdin: {e}"))
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let opts = Options {
        json: cli.json,
        tie_break: match cli.tie_break {
            Tie::Lex => TieBreak::Lex,
            Tie::Revlex => TieBreak::Revlex,
        },
        max_steps: cli.max_steps,
        oracle: cli.oracle,
        field: cli.field,
        timing: cli.timing,
    };
    let out = run(&text, &opts);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
