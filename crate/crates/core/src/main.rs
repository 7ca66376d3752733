//! Command-line front end: build or load character tables, run power and
//! twist analyses, Clifford decompositions, weight recovery and density
//! reports, and the canned Heisenberg demonstration. All output is JSON.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twistcheck::reports::{
    self, AppError, CharPowerMode, ErrorReport,
};
use twistcheck::groups::io::save_character_table;
use twistcheck::groups::structure::CharacterTable;
use twistcheck::weights::{RecoverMode, WeightMultiset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
}

#[derive(Parser)]
#[command(
    name = "twistcheck",
    about = "Exact twist-equivalence workbench for finite-group characters",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Output path; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format (only json).
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a power character (tensor, sym, ext, adjoint) of one row.
    Powers {
        /// Table document path or built-in spec (s3, d4, q8, cyclic:N,
        /// heisenberg:P, product:<spec>,<spec>).
        #[arg(long)]
        input: String,
        /// Row index of the character.
        #[arg(long)]
        chi: usize,
        /// Power exponent.
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// tensor | sym | ext | adjoint.
        #[arg(long)]
        mode: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Power-equality test, twist search and adjoint twist-or-dual search for
    /// a pair of rows.
    Twist {
        #[arg(long)]
        input: String,
        #[arg(long)]
        chi1: usize,
        #[arg(long)]
        chi2: usize,
        /// Exponent for the pointwise power comparison.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Embedding index for an additional restricted twist search.
        #[arg(long)]
        subgroup: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decompose a restriction to a normal subgroup and analyze the
    /// conjugation orbits of its constituents.
    Clifford {
        #[arg(long)]
        input: String,
        #[arg(long)]
        chi: usize,
        /// Embedding index.
        #[arg(long)]
        subgroup: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Recover a weight multiset from its k-th power image.
    Recover {
        /// Weight multiset document path.
        #[arg(long)]
        input: PathBuf,
        /// tensor | sym.
        #[arg(long)]
        mode: String,
        /// Dimension of the multiset to recover.
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact agreement density, mean-square trace difference and the named
    /// inequality verdicts for a pair of rows.
    Density {
        #[arg(long)]
        input: String,
        #[arg(long)]
        chi1: usize,
        #[arg(long)]
        chi2: usize,
        /// Embedding index for component-level densities.
        #[arg(long)]
        subgroup: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Canned demonstrations.
    Demo {
        #[command(subcommand)]
        demo: DemoCommand,
    },
    /// Parse a table document and run every invariant check.
    Validate {
        #[arg(long)]
        input: String,
        /// Also write the canonical serialization of the table here.
        #[arg(long)]
        write_table: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Heisenberg pipeline for an odd prime n: relations, power-character
    /// equality, twist obstruction, Clifford analysis and induction.
    Heisenberg {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn load_table(input: &str) -> Result<CharacterTable, AppError> {
    if let Some(built) = reports::builtin_table(input) {
        return built;
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| AppError::parse(format!("cannot read {input:?}: {e}")))?;
    reports::table_from_spec_or_document(input, Some(&text))
}

fn load_weights(path: &PathBuf) -> Result<WeightMultiset, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::parse(format!("cannot read {path:?}: {e}")))?;
    serde_json::from_str(&text).map_err(AppError::parse)
}

fn emit(common: &CommonArgs, body: String) -> Result<(), AppError> {
    match &common.output {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| AppError::precondition(format!("cannot write {path:?}: {e}"))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Runs one subcommand; the returned flag requests exit code 1 even though
/// a report was produced (failed validation / failed demo).
fn run(cli: Cli) -> Result<bool, AppError> {
    match cli.command {
        Command::Powers {
            input,
            chi,
            k,
            mode,
            common,
        } => {
            let table = load_table(&input)?;
            let mode: CharPowerMode = mode.parse().map_err(AppError::parse)?;
            let report = reports::powers_report(&table, chi, mode, k)?;
            emit(&common, reports::to_json_string(&report))?;
            Ok(false)
        }
        Command::Twist {
            input,
            chi1,
            chi2,
            k,
            subgroup,
            common,
        } => {
            let table = load_table(&input)?;
            let report = reports::twist_report(&table, chi1, chi2, k, subgroup)?;
            emit(&common, reports::to_json_string(&report))?;
            Ok(false)
        }
        Command::Clifford {
            input,
            chi,
            subgroup,
            common,
        } => {
            let table = load_table(&input)?;
            let report = reports::clifford_report(&table, chi, subgroup)?;
            emit(&common, reports::to_json_string(&report))?;
            Ok(false)
        }
        Command::Recover {
            input,
            mode,
            n,
            k,
            common,
        } => {
            let weights = load_weights(&input)?;
            let mode: RecoverMode = mode.parse().map_err(AppError::parse)?;
            let report = reports::recover_report(&weights, n, k, mode)?;
            emit(&common, reports::to_json_string(&report))?;
            Ok(false)
        }
        Command::Density {
            input,
            chi1,
            chi2,
            subgroup,
            common,
        } => {
            let table = load_table(&input)?;
            let report = reports::density_report(&table, chi1, chi2, subgroup)?;
            emit(&common, reports::to_json_string(&report))?;
            Ok(false)
        }
        Command::Demo {
            demo: DemoCommand::Heisenberg { n, common },
        } => {
            let report = reports::demo_heisenberg(n)?;
            let failed = !report.all_passed;
            emit(&common, reports::to_json_string(&report))?;
            Ok(failed)
        }
        Command::Validate {
            input,
            write_table,
            common,
        } => {
            // Validation failures must land in the report, so parse without
            // the load-time validation and run the checks explicitly.
            let table = if let Some(built) = reports::builtin_table(&input) {
                built?
            } else {
                let text = std::fs::read_to_string(&input)
                    .map_err(|e| AppError::parse(format!("cannot read {input:?}: {e}")))?;
                twistcheck::groups::io::load_character_table_unvalidated(&text)
                    .map_err(AppError::from)?
            };
            let report = reports::validate_report(&table);
            let failed = !report.all_passed;
            if let Some(path) = write_table {
                std::fs::write(&path, save_character_table(&table))
                    .map_err(|e| AppError::precondition(format!("cannot write {path:?}: {e}")))?;
            }
            emit(&common, reports::to_json_string(&report))?;
            Ok(failed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(err) => {
            let code = err.exit_code();
            print!("{}", reports::to_json_string(&ErrorReport { error: err }));
            ExitCode::from(code as u8)
        }
    }
}
