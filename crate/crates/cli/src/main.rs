use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use jz_cli::check::{run_checks, CheckSummary};
use jz_cli::error::{CliError, EXIT_INVARIANT, EXIT_OK};
use jz_cli::render::{check_table, run_table};
use jz_cli::{build, corpus, parse_document, run, to_json, Command, Overrides};

#[derive(Parser)]
#[command(name = "jz", version, about = "Relative Hochschild homology and the Jacobi-Zariski sequence of an algebra extension")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Hochschild homology H_m(A, X) for 0 <= m <= N - 2.
    Hh(Common),
    /// Relative Hochschild homology H_m(A|B, X) for 0 <= m <= N - 2.
    RelHh(Common),
    /// The long nearly exact sequence with its gap and exactness verdicts.
    Jz(Common),
    /// Tor vanishing hypothesis and the E1 page.
    Tor(Common),
    /// Tensor powers of A/B over B and the projective dimension of A/B.
    Nilpotency(Common),
    /// Runs every invariant on the given inputs.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Args)]
struct Options {
    /// Degree bound N.
    #[arg(long)]
    degree: Option<usize>,
    /// Ground field, `Q` or `Fp:<p>`.
    #[arg(long)]
    field: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct Common {
    /// Input document, or `-` for standard input.
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    options: Options,
}

#[derive(Args)]
struct CheckArgs {
    /// Input documents.
    #[arg(long)]
    input: Vec<PathBuf>,
    /// A directory of input documents; the shipped corpus when no directory is given.
    #[arg(long)]
    corpus: Option<Option<PathBuf>>,
    #[command(flatten)]
    options: Options,
    /// Corrupts one Hochschild differential before validation.
    #[arg(long, hide = true)]
    corrupt_differential: bool,
}

#[derive(Serialize)]
struct InputRecord {
    input: String,
    sha256: String,
}

#[derive(Serialize)]
struct CheckReport {
    schema_version: u32,
    command: &'static str,
    tool_version: &'static str,
    inputs: Vec<InputRecord>,
    summary: CheckSummary,
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn overrides(o: &Options) -> Overrides {
    Overrides {
        field: o.field.clone(),
        degree: o.degree,
    }
}

fn analyse(command: Command, args: &Common) -> Result<i32, CliError> {
    let text = read_input(&args.input)?;
    let doc = parse_document(&text)?;
    let input = build(&doc, &overrides(&args.options))?;
    let result = run(command, &input, text.as_bytes())?;
    match args.options.format {
        Format::Table => print!("{}", run_table(&result)),
        Format::Json => print!("{}", to_json(&result.report())),
    }
    Ok(result.exit_code())
}

fn check(args: &CheckArgs) -> Result<i32, CliError> {
    let mut sources = Vec::new();
    for p in &args.input {
        sources.push((p.display().to_string(), read_input(p)?));
    }
    match &args.corpus {
        Some(None) => sources.extend(corpus::shipped()),
        Some(Some(dir)) => sources.extend(corpus::load_dir(dir)?),
        None => {}
    }
    let mut lines = Vec::new();
    let mut records = Vec::new();
    for (source, text) in &sources {
        let doc = parse_document(text).map_err(|e| within(source, e))?;
        let mut input = build(&doc, &overrides(&args.options)).map_err(|e| within(source, e))?;
        if input.name.is_empty() {
            input.name = source.clone();
        }
        records.push(InputRecord {
            input: input.name.clone(),
            sha256: hex::encode(Sha256::digest(text.as_bytes())),
        });
        lines.extend(run_checks(&input, args.corrupt_differential));
    }
    let summary = CheckSummary::new(lines);
    match args.options.format {
        Format::Table => print!("{}", check_table(&summary, sources.len())),
        Format::Json => {
            if summary.checks.is_empty() {
                eprintln!("warning: 0 checks");
            }
            print!(
                "{}",
                to_json(&CheckReport {
                    schema_version: jz_cli::document::SCHEMA_VERSION,
                    command: "check",
                    tool_version: env!("CARGO_PKG_VERSION"),
                    inputs: records,
                    summary: summary.clone(),
                })
            )
        }
    }
    Ok(if summary.failed == 0 { EXIT_OK } else { EXIT_INVARIANT })
}

/// Prefixes input errors with the document they come from.
fn within(source: &str, e: CliError) -> CliError {
    match e {
        CliError::Input { field, constraint } => CliError::Input {
            field: format!("{source}: {field}"),
            constraint,
        },
        other => other,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Sub::Hh(a) => analyse(Command::Hh, a),
        Sub::RelHh(a) => analyse(Command::RelHh, a),
        Sub::Jz(a) => analyse(Command::Jz, a),
        Sub::Tor(a) => analyse(Command::Tor, a),
        Sub::Nilpotency(a) => analyse(Command::Nilpotency, a),
        Sub::Check(a) => check(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
