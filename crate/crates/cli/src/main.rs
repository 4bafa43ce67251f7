use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cda_cli::{
    cmd_congruence, cmd_lattice_verify, cmd_symbol, cmd_sweep, cmd_tilt, parse_field, parse_json, CliError, RunReport,
    Target,
};
use clap::{Parser, Subcommand};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "cda", version, about = "Exact verification of squid, Coxeter-Dynkin and canonical algebras")]
struct Cli {
    /// Base field: Q or Fp:<p>.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Input JSON file; standard input when omitted or "-".
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for lattice-verify and sweep.
    #[arg(long, env = "CDA_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, Gram matrices and Coxeter matrix of a symbol.
    Symbol,
    /// Lattice axioms and Gram displays over enumerated symbols.
    LatticeVerify,
    /// Tilting module from the squid algebra to a target algebra.
    Tilt {
        #[arg(long, default_value = "cd")]
        target: String,
    },
    /// All suites over bounded enumerations of symbols and instances.
    Sweep,
    /// Pairwise congruence of the three projective-basis Gram matrices.
    Congruence,
}

fn read_input(path: &Option<PathBuf>) -> Result<Value, CliError> {
    let (text, name) = match path {
        Some(p) if p.as_os_str() != "-" => (
            std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("cannot read {}: {e}", p.display())))?,
            p.display().to_string(),
        ),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
            (s, "<stdin>".to_string())
        }
    };
    parse_json(&text, &name)
}

fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let field = cli.field.as_deref().map(parse_field).transpose()?;
    let v = read_input(&cli.json)?;
    match &cli.command {
        Command::Symbol => cmd_symbol(&v, field),
        Command::LatticeVerify => cmd_lattice_verify(&v, field, cli.threads),
        Command::Tilt { target } => cmd_tilt(&v, target.parse::<Target>()?, field),
        Command::Sweep => cmd_sweep(&v, field, cli.threads),
        Command::Congruence => cmd_congruence(&v, field),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = report.to_json_string();
            if let Err(e) = writeln!(std::io::stdout(), "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write report: {e}");
                    return ExitCode::from(2);
                }
            }
            if let Some(out) = &cli.out {
                if let Err(e) = std::fs::write(out, format!("{text}\n")) {
                    eprintln!("error: cannot write {}: {e}", out.display());
                    return ExitCode::from(2);
                }
            }
            for c in report.checks.iter().filter(|c| !c.pass) {
                eprintln!("FAIL {}", c.name);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
