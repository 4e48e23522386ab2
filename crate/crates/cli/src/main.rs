mod commands;
mod report;
mod shapes;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use brokentoric::Engine;
use clap::{Args, Parser, Subcommand};

use commands::{CliError, Input, Outcome, SheafChoice};
use report::{Provenance, ReportDocument};

#[derive(Parser)]
#[command(name = "brokentoric", version, about = "Cohomology of broken toric varieties from their polytope complexes")]
struct Cli {
    /// Emit a JSON report instead of text tables.
    #[arg(long, global = true)]
    json: bool,
    /// Cohomology engine.
    #[arg(long, global = true, default_value = "both")]
    engine: Engine,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a complex document, e.g. `generate cube 3` or `generate skeleton cube 3 --k 2`.
    Generate {
        #[arg(required = true, num_args = 1..)]
        shape: Vec<String>,
        /// Skeleton dimension.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a document describes a valid polytope complex.
    Validate { input: PathBuf },
    /// E₂ page, Betti numbers and Euler check.
    Betti { input: PathBuf },
    /// E₂ page only.
    E2 { input: PathBuf },
    /// Leray filtration with its weight labels.
    Filtration { input: PathBuf },
    /// h-vector, or with --skeletal the skeleton formulas of a solid polytope.
    Formulas {
        input: PathBuf,
        #[arg(long)]
        skeletal: bool,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Cohomology and stalks of a single sheaf.
    Sheaf {
        input: PathBuf,
        #[command(flatten)]
        choice: SheafArgs,
        /// Print the stalk of every cell.
        #[arg(long)]
        stalks: bool,
    },
    /// Vanishing, Euler and optionally Mayer-Vietoris checks.
    Verify {
        input: PathBuf,
        /// Require a single polytope and check the diagonal E₂ page.
        #[arg(long)]
        toric: bool,
        #[arg(long)]
        mv: bool,
    },
}

#[derive(Args)]
struct SheafArgs {
    /// Exterior degree of the moment (or structural) sheaf.
    #[arg(long)]
    moment: Option<usize>,
    /// Constant sheaf of this rank.
    #[arg(long, conflicts_with_all = ["moment", "facets"])]
    constant: Option<usize>,
    /// Facet cell ids for the structural sheaf, comma separated.
    #[arg(long, value_delimiter = ',')]
    facets: Option<Vec<usize>>,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("BROKENTORIC_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("BROKENTORIC_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    configure_threads()?;
    let command_line = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let engine = cli.engine;
    let (outcome, input): (Outcome, Input) = match cli.command {
        Command::Generate { shape, k, out } => {
            let doc = commands::generate_document(&shape, k)?;
            match out {
                Some(path) => fs::write(&path, doc)
                    .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{doc}"),
            }
            return Ok(true);
        }
        Command::Validate { input } => {
            let i = commands::load(&input)?;
            (commands::validate(&i)?, i)
        }
        Command::Betti { input } => {
            let i = commands::load(&input)?;
            (commands::betti(&i, engine)?, i)
        }
        Command::E2 { input } => {
            let i = commands::load(&input)?;
            (commands::e2(&i, engine)?, i)
        }
        Command::Filtration { input } => {
            let i = commands::load(&input)?;
            (commands::filtration(&i, engine)?, i)
        }
        Command::Formulas { input, skeletal, k } => {
            let i = commands::load(&input)?;
            (commands::formulas(&i, skeletal, k)?, i)
        }
        Command::Sheaf { input, choice, stalks } => {
            let i = commands::load(&input)?;
            let choice = SheafChoice {
                moment: choice.moment,
                constant: choice.constant,
                facets: choice.facets,
            };
            (commands::sheaf(&i, &choice, stalks, engine)?, i)
        }
        Command::Verify { input, toric, mv } => {
            let i = commands::load(&input)?;
            (commands::verify(&i, toric, mv, engine)?, i)
        }
    };
    if cli.json {
        let doc = ReportDocument {
            kind: outcome.kind,
            payload: outcome.payload,
            provenance: Provenance {
                command: command_line,
                input_sha256: Some(input.sha256),
            },
        };
        print!("{}", doc.to_json());
    } else {
        print!("{}", outcome.text);
    }
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: one or more checks failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
