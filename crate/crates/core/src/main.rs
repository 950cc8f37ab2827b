use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fmrep::catalog::{catalog, load_catalog};
use fmrep::perm::DEFAULT_CONJUGACY_CAP;
use fmrep::report::{load_partition_file, run, verify_catalog, verify_entries, GroupSource, Mode, RunOptions, TierSelection};
use fmrep::Error;

#[derive(Parser)]
#[command(name = "fmrep", version, about = "Atoms of monoids of fusion-invariant representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    Fusion,
    Lattice,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Fast,
    Table,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one group.
    Run {
        /// Catalog name or generator file.
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: Option<u64>,
        /// JSON list of 1-based class blocks; the group must be the p-group.
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        /// Write the JSON report here instead of printing text.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_CONJUGACY_CAP)]
        conjugacy_cap: u64,
        /// Include per-stage timings.
        #[arg(long)]
        timings: bool,
    },
    /// Compare catalog entries with their expected values.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        tier: TierArg,
        /// Catalog file to use instead of the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the built-in groups.
    List,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Internal(_) | Error::Overflow(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { group, prime, partition, mode, out, json, conjugacy_cap, timings } => {
            let mut opts = RunOptions::new(GroupSource::detect(&group));
            opts.prime = prime;
            opts.mode = match mode {
                ModeArg::Full => Mode::Full,
                ModeArg::Fusion => Mode::Fusion,
                ModeArg::Lattice => Mode::Lattice,
            };
            opts.conjugacy_cap = conjugacy_cap;
            opts.timings = timings;
            let result = partition
                .map(|p| load_partition_file(&p))
                .transpose()
                .and_then(|p| {
                    opts.partition = p;
                    run(&opts)
                });
            match result {
                Ok(report) => {
                    if let Some(path) = out {
                        if let Err(e) = std::fs::write(&path, report.to_json() + "\n") {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(2);
                        }
                        print!("{}", report.to_text());
                    } else if json {
                        println!("{}", report.to_json());
                    } else {
                        print!("{}", report.to_text());
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(exit_code(&e))
                }
            }
        }
        Command::Verify { tier, catalog: file, json } => {
            let tiers = match tier {
                TierArg::Fast => TierSelection::Fast,
                TierArg::Table => TierSelection::Table,
                TierArg::All => TierSelection::All,
            };
            let summary = match file {
                None => verify_catalog(tiers),
                Some(path) => {
                    let loaded = std::fs::read_to_string(&path)
                        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
                        .and_then(|text| load_catalog(&text));
                    match loaded {
                        Ok(entries) => verify_entries(&entries, tiers),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return ExitCode::from(exit_code(&e));
                        }
                    }
                }
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
            } else {
                print!("{}", summary.to_text());
            }
            if summary.all_ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Command::Catalog { action: CatalogAction::List } => {
            for e in catalog() {
                println!("{:<10} p={:<2} {:<6} order {:<12} {}", e.name, e.prime, e.tier.to_string(), e.order, e.description);
            }
            ExitCode::SUCCESS
        }
    }
}
