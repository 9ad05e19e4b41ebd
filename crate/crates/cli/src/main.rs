use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tilting_cli::commands::{self, Options, Outcome};
use tilting_cli::CliError;

#[derive(Parser)]
#[command(name = "tiltlab", version, about = "Tilting complexes, tensor constructions and derived invariants")]
struct Cli {
    /// Print a JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Write a Graphviz DOT file (quiver or AR quiver).
    #[arg(long, global = true, value_name = "FILE")]
    dot: Option<String>,
    /// Per-orbit bound on AR knitting steps.
    #[arg(long, global = true, value_name = "N")]
    max_steps: Option<usize>,
    /// Scan Hom(T, T[r]) at least for |r| <= N.
    #[arg(long, global = true, value_name = "N")]
    hom_range: Option<i32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its basis, products and Gabriel quiver.
    Construct { spec: String },
    /// Certify a list of summands as a tilting complex.
    CheckTilting {
        spec: String,
        /// `P`, `I`, `S`, `regular` or a list such as `P1,S2[1],I3`.
        summands: String,
    },
    /// Compare derived invariants of two or more algebras.
    Compare {
        #[arg(num_args = 2.., required = true)]
        specs: Vec<String>,
    },
    /// Knit the preprojective component of a hereditary algebra.
    Knit { spec: String },
    /// Run the tensor construction on a built-in instance.
    VerifyTensor {
        /// `shifted-simple:N`, `dual-pair:M` or `corrupted-sign`.
        instance: String,
        /// Bound on dim(A ⊗ B).
        #[arg(long, value_name = "N")]
        dim_bound: Option<usize>,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = Options { max_steps: cli.max_steps, hom_range: cli.hom_range };
    match &cli.command {
        Command::Construct { spec } => commands::construct(spec, &opts),
        Command::CheckTilting { spec, summands } => commands::check_tilting(spec, summands, &opts),
        Command::Compare { specs } => commands::compare(specs, &opts),
        Command::Knit { spec } => commands::knit_command(spec, &opts),
        Command::VerifyTensor { instance, dim_bound } => commands::verify_tensor(instance, *dim_bound),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable"))
            } else {
                out.text.clone()
            };
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {}", CliError::from(e));
                    return ExitCode::from(2);
                }
            }
            if let Some(path) = &cli.dot {
                let Some(dot) = &out.dot else {
                    eprintln!("error: this command has no DOT output");
                    return ExitCode::from(2);
                };
                if let Err(e) = std::fs::write(path, dot) {
                    eprintln!("error: {}", CliError::from(e));
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
