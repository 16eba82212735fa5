use clap::{Parser, Subcommand};
use paracyclic::run;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "paracyclic", about = "Exact checker for para-cocyclic towers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the structural axioms of an instance file.
    Validate { file: PathBuf },
    /// Run the full law suite of an instance file.
    Laws {
        file: PathBuf,
        /// Keep only checks whose name starts with this prefix.
        #[arg(long)]
        only: Option<String>,
        /// Accepted for interface stability; checks always run sequentially.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Build the cosimplex up to a degree and optionally check its relations.
    Complex {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        check_relations: bool,
        #[arg(long)]
        emit_matrices: bool,
        /// Accepted for interface stability; stages always run sequentially.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Search diagonal transpositions with coefficients among m-th roots of unity.
    SolveTransposition {
        file: PathBuf,
        #[arg(long)]
        order: u64,
    },
}

fn read(file: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (file, outcome) = match &cli.command {
        Command::Validate { file } => (file, read(file).map(|t| run::validate(&t, &name(file)))),
        Command::Laws { file, only, jobs } => (
            file,
            read(file).map(|t| run::laws(&t, &name(file), only.as_deref(), *jobs)),
        ),
        Command::Complex { file, max_degree, check_relations, emit_matrices, jobs } => {
            let _ = jobs;
            (
                file,
                read(file).map(|t| {
                    run::complex(&t, &name(file), *max_degree, *check_relations, *emit_matrices)
                }),
            )
        }
        Command::SolveTransposition { file, order } => (
            file,
            read(file).map(|t| run::solve_transposition(&t, &name(file), *order)),
        ),
    };
    let _ = file;
    match outcome {
        Ok(mut o) => {
            print!("{}", o.report.render());
            ExitCode::from(o.exit_code as u8)
        }
        Err(msg) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn name(file: &PathBuf) -> String {
    file.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}
