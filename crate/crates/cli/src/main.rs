use std::io::Write;
use std::process::ExitCode;

use braidtn_core::analysis::BasisTag;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use braidtn_cli::commands::{
    cmd_analyze, cmd_matrices, cmd_oracle, cmd_verify, CommandOutput, OutputFormat, RunConfig,
};
use braidtn_cli::{CliError, EXIT_CHECK_FAILED, EXIT_USAGE};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Full,
    Subspace,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Latex,
}

#[derive(Parser, Debug)]
#[command(name = "braidtn", version, about = "Exact braid-group matrices from a handlebody algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of strands / algebra rank parameter
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,

    /// Parameter value: "symbolic" or an exact rational "p/q"
    #[arg(long, global = true, default_value = "symbolic", allow_hyphen_values = true)]
    mu: String,

    /// JSON file with an explicit parameter tuple (c, alpha, beta)
    #[arg(long, global = true)]
    params_file: Option<String>,

    /// Basis: full (n^2+1) or the invariant f-span (n^2)
    #[arg(long, global = true, value_enum, default_value_t = BasisArg::Full)]
    basis: BasisArg,

    /// Number of sampled tuples / words / mu values per sweep
    #[arg(long, global = true, default_value_t = 5)]
    samples: usize,

    /// PRNG seed; same seed gives byte-identical output
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the generator matrices at the chosen parameters
    Matrices,
    /// Check braid relations, inverses, obstructions, subspace invariance
    Verify,
    /// Characteristic polynomials, conjecture verdicts, algebra dimensions
    Analyze,
    /// Independent free-group oracle and bridge checks
    Oracle,
}

fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let format = match cli.format {
        FormatArg::Json => OutputFormat::Json,
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Latex => OutputFormat::Latex,
    };
    let cfg = RunConfig {
        n: cli.n,
        mu: cli.mu.clone(),
        params_file: cli.params_file.clone(),
        basis: match cli.basis {
            BasisArg::Full => BasisTag::Full,
            BasisArg::Subspace => BasisTag::Subspace,
        },
        samples: cli.samples,
        seed: cli.seed,
        format,
    };
    let (name, out): (&str, CommandOutput) = match cli.command {
        Command::Matrices => ("matrices", cmd_matrices(&cfg)?),
        Command::Verify => {
            if format == OutputFormat::Latex {
                return Err(CliError::Usage("--format latex is only supported for the matrices command".into()));
            }
            ("verify", cmd_verify(&cfg)?)
        }
        Command::Analyze => {
            if format != OutputFormat::Json {
                return Err(CliError::Usage("analyze only supports --format json".into()));
            }
            ("analyze", cmd_analyze(&cfg)?)
        }
        Command::Oracle => {
            if format == OutputFormat::Latex {
                return Err(CliError::Usage("--format latex is only supported for the matrices command".into()));
            }
            ("oracle", cmd_oracle(&cfg)?)
        }
    };
    let text = match (&out.rendered, format) {
        (Some(r), _) => r.clone(),
        (None, _) => {
            let doc = json!({
                "command": name,
                "config": cfg.to_json(),
                "results": out.results,
                "version": VERSION,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("json");
            s.push('\n');
            s
        }
    };
    Ok((text, out.all_pass))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version requests are successes; real parse errors map to 64
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok((text, all_pass)) => {
            let wrote = match &cli.out {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|e| CliError::Usage(format!("cannot write {path}: {e}"))),
                None => {
                    print!("{text}");
                    std::io::stdout().flush().ok();
                    Ok(())
                }
            };
            if let Err(e) = wrote {
                eprintln!("error: {}", e.message());
                return ExitCode::from(e.exit_code() as u8);
            }
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
