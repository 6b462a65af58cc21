mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quipu_core::search::{Scope, DEFAULT_TREE_CAP};
use quipu_core::spectral::{SolveOptions, DEFAULT_TOL};
use quipu_core::{FamilyId, Precision};

use error::{CliError, EXIT_CHECK};

#[derive(Parser, Debug)]
#[command(name = "quipu", version, about = "Trees of given order and diameter with minimal spectral radius")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Working precision in decimal digits (at least 30).
    #[arg(long, global = true, env = "QUIPU_PRECISION", default_value_t = 100)]
    precision: u32,
    /// Width of root enclosures; at least 10^-(precision-20).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Largest order accepted by brute-force searches.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Print scalars at full working precision.
    #[arg(long, global = true)]
    full: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact characteristic polynomial of a tree.
    Charpoly {
        /// Edge-list file or k-vector such as `P:e=6:k=3,4`.
        input: String,
    },
    /// Spectral radius of a tree.
    Rho { input: String },
    /// Minimizer of the spectral radius over one family.
    FamilyMin {
        n: usize,
        e: usize,
        #[arg(long, default_value = "P", value_parser = parse_family)]
        family: FamilyId,
        /// List every tied minimizer instead of the first.
        #[arg(long)]
        all_ties: bool,
    },
    /// Minimizer over all trees (or small connected graphs) of order n and diameter D.
    BruteMin {
        n: usize,
        d: usize,
        #[arg(long, default_value = "trees")]
        scope: Scope,
    },
    /// Certificates for the family-P minimizer, or for a given member.
    Verify {
        n: usize,
        e: usize,
        /// Certify this k-vector instead of the minimizer found by search.
        #[arg(long)]
        member: Option<String>,
    },
    /// A limit radius (`rho`, `rho1`, `rho2`) or a convergence table (`ikj`, `kj`, `ki`).
    Limits {
        kind: String,
        k: i64,
        /// Sequence sizes for convergence tables.
        #[arg(long, value_delimiter = ',', default_value = "10,20,40")]
        sizes: Vec<usize>,
    },
    /// Predicted and found family-P minimizers for a range of orders, e.g. `29..44`.
    Table { e: usize, range: String },
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse::<FamilyId>().map_err(|e| e.to_string())
}

/// Settings shared by every command.
pub struct Config {
    pub solve: SolveOptions,
    pub format: Format,
    pub cap: Option<usize>,
    /// `None` prints at full precision.
    pub digits: Option<usize>,
}

impl Config {
    fn from_args(g: &GlobalArgs) -> Result<Config, CliError> {
        if g.precision < 30 {
            return Err(CliError::Parse(format!("precision must be at least 30 digits, got {}", g.precision)));
        }
        let precision = Precision::digits(g.precision);
        let floor = precision.min_tolerance();
        let tol = match g.tol {
            Some(t) => t,
            None => DEFAULT_TOL.max(floor),
        };
        let solve = SolveOptions::new(precision, tol);
        solve.check()?;
        Ok(Config {
            solve,
            format: g.format,
            cap: g.cap,
            digits: if g.full { None } else { Some(g.precision.min(50) as usize) },
        })
    }

    pub fn tree_cap(&self) -> usize {
        self.cap.unwrap_or(DEFAULT_TREE_CAP)
    }
}

/// What a command produced: text for stdout and whether every check held.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let cfg = Config::from_args(&cli.global)?;
    match cli.command {
        Command::Charpoly { input } => commands::charpoly(&cfg, &input),
        Command::Rho { input } => commands::rho(&cfg, &input),
        Command::FamilyMin { n, e, family, all_ties } => commands::family_min(&cfg, n, e, family, all_ties),
        Command::BruteMin { n, d, scope } => commands::brute_min(&cfg, n, d, scope),
        Command::Verify { n, e, member } => commands::verify(&cfg, n, e, member.as_deref()),
        Command::Limits { kind, k, sizes } => commands::limits(&cfg, &kind, k, &sizes),
        Command::Table { e, range } => commands::table(&cfg, e, &range),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if !out.text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}
