//! `supermod`: verify category data, classify super-modular fusion rules,
//! and tabulate spin modular rank profiles.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "supermod", version, about = "Exact checks for low-rank super-modular data")]
struct Cli {
    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, global = true, env = "SUPERMOD_WORKERS")]
    workers: Option<usize>,
    /// Suppress the human-readable summary on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a category file: fusion axioms, S̃/θ, Müger center, quotient.
    Verify { file: PathBuf },
    /// Classify super-modular fusion classes of every even rank up to N.
    Classify {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = supermod::classify::DEFAULT_BOUND)]
        bound: u32,
        /// Write one category file per record plus report.json here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fermionic quotient (N̂, Ŝ, indicators) of a super-modular file.
    Quotient { file: PathBuf },
    /// Sector profiles and structural descriptors for totals 2..=K.
    SpinProfiles {
        #[arg(long)]
        max_rank: usize,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Re-verify and write every catalog entry as a category file.
    Emit {
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    if let Some(n) = cli.workers {
        if n == 0 {
            return Err(CliError::Usage("worker count must be positive".into()));
        }
        // fails only if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match cli.command {
        Command::Verify { file } => commands::verify(&file),
        Command::Classify { rank, bound, out } => commands::classify(rank, bound, out.as_deref()),
        Command::Quotient { file } => commands::quotient(&file),
        Command::SpinProfiles { max_rank } => commands::spin_profiles(max_rank),
        Command::Catalog { action: CatalogAction::Emit { out } } => commands::catalog_emit(&out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let quiet = cli.quiet;
    match run(cli) {
        Ok(out) => {
            print!("{}", out.report.to_json());
            if !quiet {
                eprint!("{}", out.summary);
            }
            ExitCode::from(if out.report.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
