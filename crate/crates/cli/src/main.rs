use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chern_seifert::seifert::parse_seifert;
use chern_seifert::TorusRank;
use chern_seifert_cli::catalog::{builtin_catalog, read_catalog};
use chern_seifert_cli::report::{self, ComputeRequest, OutputFormat, PhaseMode, DEFAULT_PRECISION};
use chern_seifert_cli::suite::{self, Suite};
use chern_seifert_cli::CliError;
use clap::{Parser, Subcommand};

/// Exact invariants and partition-function magnitudes of abelian
/// Chern–Simons theory on Seifert-fibered three-manifolds.
#[derive(Parser)]
#[command(name = "chern-seifert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant and |Z| for one manifold.
    Compute {
        /// Seifert invariants, e.g. "[0,-1;(2,1),(3,1),(5,1)]".
        #[arg(long, allow_hyphen_values = true)]
        seifert: String,
        /// Torus rank N.
        #[arg(long, default_value_t = 1)]
        rank: u32,
        /// Level k.
        #[arg(long, default_value_t = 1)]
        level: u64,
        /// Framing twist F.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        framing: i64,
        /// `trivial` or `file:PATH` (JSON phase file).
        #[arg(long, default_value = "trivial")]
        phases: PhaseMode,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Significant digits of the magnitude (at least 20).
        #[arg(long, env = "CHERN_SEIFERT_PRECISION", default_value_t = DEFAULT_PRECISION)]
        precision: u32,
    },
    /// Tabulate invariants for every manifold in a catalog file as CSV.
    Catalog {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        rank: u32,
        #[arg(long, default_value_t = 1)]
        level: u64,
    },
    /// Run internal-consistency suites.
    Check {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Extra manifolds for the torsion, regularization and partition suites.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

fn torus_rank(n: u32) -> Result<TorusRank, CliError> {
    TorusRank::new(n).ok_or_else(|| CliError::Usage("--rank must be at least 1".into()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let write = |out: &mut std::io::StdoutLock, s: &str| {
        out.write_all(s.as_bytes())
            .map_err(|e| CliError::Output(e.to_string()))
    };
    match cli.command {
        Command::Compute {
            seifert,
            rank,
            level,
            framing,
            phases,
            format,
            precision,
        } => {
            let req = ComputeRequest {
                seifert: parse_seifert(&seifert)?,
                rank: torus_rank(rank)?,
                level,
                framing,
                phases,
                output: format,
                precision,
            };
            let doc = report::compute(&req)?;
            let text = match req.output {
                OutputFormat::Json => report::render_json(&doc),
                OutputFormat::Csv => report::render_csv(&doc)?,
            };
            write(&mut out, &text)
        }
        Command::Catalog { path, rank, level } => {
            if level == 0 {
                return Err(CliError::Usage("--level must be at least 1".into()));
            }
            let entries = read_catalog(&path)?;
            let rows = report::catalog_rows(&entries, torus_rank(rank)?, level);
            write(&mut out, &report::render_catalog_csv(&rows)?)?;
            let failed = rows.iter().filter(|r| r.error.is_some()).count();
            if failed > 0 {
                return Err(CliError::CatalogRows(failed));
            }
            Ok(())
        }
        Command::Check {
            suite: which,
            catalog,
        } => {
            let mut manifolds = builtin_catalog();
            if let Some(path) = &catalog {
                for entry in read_catalog(path)? {
                    manifolds.push(entry.parsed?);
                }
            }
            if which == Suite::Torsion || (which == Suite::All && catalog.is_some()) {
                for (label, outcome) in suite::torsion_rows(&manifolds) {
                    let line = match outcome {
                        Ok(detail) => format!("  ok   {label}: {detail}\n"),
                        Err(e) => format!("  FAIL {label}: {e}\n"),
                    };
                    write(&mut out, &line)?;
                }
            }
            let checks = suite::run_suite(which, &manifolds);
            for c in &checks {
                write(&mut out, &format!("{}\n", c.line()))?;
            }
            let failures: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
            write(
                &mut out,
                &format!(
                    "{} of {} checks passed\n",
                    checks.len() - failures.len(),
                    checks.len()
                ),
            )?;
            match failures.first() {
                None => Ok(()),
                Some(first) => Err(CliError::ChecksFailed {
                    failed: failures.len(),
                    total: checks.len(),
                    first: first.line(),
                }),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
