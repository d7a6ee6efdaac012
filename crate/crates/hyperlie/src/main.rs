use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use hyperlie::commands::{self, ConstantsSpec, Settings};
use hyperlie::compute::{parse_bounds, parse_selector};
use hyperlie::{exit_code, Output};
use hyperlie_core::analysis::DEFAULT_N_CAP;
use hyperlie_core::relation::Engine;

#[derive(Parser)]
#[command(name = "hyperlie", version, about = "Fundamental relations and solvable quotients of finite Lie hyperalgebras")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Expression bounds T,M,P,Q.
    #[arg(long, default_value = "2,2,1,1")]
    bounds: String,
    /// `auto` escalates bounds until the exact answer is matched where one
    /// is known; `off` computes once at the given bounds.
    #[arg(long, default_value = "auto", value_parser = ["auto", "off"])]
    oracle: String,
}

impl Common {
    fn settings(&self) -> Result<Settings> {
        Ok(Settings { engine: Engine::default(), bounds: parse_bounds(&self.bounds)?, oracle: self.oracle == "auto" })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the axioms of a structure file.
    Check { file: PathBuf },
    /// Compute the closure of L, A, Sn or alpha.
    Relation {
        file: PathBuf,
        #[arg(long)]
        rel: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Build the quotient Lie algebra and its derived series.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        rel: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Parts, transitivity, stabilization and minimality.
    Analyze {
        #[command(subcommand)]
        what: Analysis,
    },
    /// Write a generated structure file.
    Gen {
        /// Output path (default: stdout).
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
        #[command(subcommand)]
        what: Generator,
    },
}

#[derive(Subcommand)]
enum Analysis {
    /// Is the set an Sn-part?
    Snpart {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        /// Comma-separated element identifiers.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the three transitivity criteria for Sn.
    Transitivity {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate all partitions and certify the smallest solvable relation.
    Smallest {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        n_cap: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Compute Sn* for increasing n until it stabilizes.
    SStabilize {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        n_cap: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Look for a non-transitive Sn among generated structures.
    Search {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct ConstantsArgs {
    /// Field order.
    #[arg(long)]
    q: usize,
    /// ex1, ex2, sl2, abelian, random-perfect or random-solvable.
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    dim: Option<usize>,
    /// Basis bracket such as `b,c=a` (repeatable; unlisted pairs are 0).
    #[arg(long)]
    bracket: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl ConstantsArgs {
    fn spec(&self) -> ConstantsSpec {
        ConstantsSpec { q: self.q, preset: self.preset.clone(), dim: self.dim, brackets: self.bracket.clone(), seed: self.seed }
    }
}

#[derive(Subcommand)]
enum Generator {
    /// A classical Lie algebra over F_q with singleton-valued tables.
    Trivial {
        #[command(flatten)]
        constants: ConstantsArgs,
    },
    /// Coset hypergroup G/H for G = Z<n> or S3.
    Coset {
        #[arg(long)]
        group: String,
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<usize>,
    },
    /// Quotient hyperfield F_q/G for a multiplicative subgroup G.
    Qhyperfield {
        #[arg(long)]
        q: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<usize>,
    },
    /// Orbit Lie hyperalgebra V/G over F_q/G.
    CosetLie {
        #[command(flatten)]
        constants: ConstantsArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<usize>,
    },
}

fn run(cli: &Cli) -> Result<(Output, Option<PathBuf>)> {
    let out = match &cli.cmd {
        Cmd::Check { file } => commands::check(file)?,
        Cmd::Relation { file, rel, n, common } => {
            let kind = parse_selector(rel, *n)?;
            let s = common.settings()?;
            commands::relation(&commands::load_lie(file)?, kind, &s)?
        }
        Cmd::Quotient { file, rel, n, common } => {
            let kind = parse_selector(rel, *n)?;
            let s = common.settings()?;
            commands::quotient(&commands::load_lie(file)?, kind, &s)?
        }
        Cmd::Analyze { what } => match what {
            Analysis::Snpart { file, n, set, common } => {
                let s = common.settings()?;
                commands::snpart(&commands::load_lie(file)?, *n, set, &s)?
            }
            Analysis::Transitivity { file, n, common } => {
                let s = common.settings()?;
                commands::transitivity(&commands::load_lie(file)?, *n, &s)?
            }
            Analysis::Smallest { file, n_cap, common } => {
                let s = common.settings()?;
                commands::smallest(&commands::load_lie(file)?, *n_cap, &s)?
            }
            Analysis::SStabilize { file, n_cap, common } => {
                let s = common.settings()?;
                commands::s_stabilize(&commands::load_lie(file)?, *n_cap, &s)?
            }
            Analysis::Search { seed, common } => commands::search(*seed, &common.settings()?)?,
        },
        Cmd::Gen { out, what } => {
            let o = match what {
                Generator::Trivial { constants } => commands::gen_trivial(&constants.spec())?,
                Generator::Coset { group, subgroup } => commands::gen_coset(group, subgroup)?,
                Generator::Qhyperfield { q, subgroup } => commands::gen_qhyperfield(*q, subgroup)?,
                Generator::CosetLie { constants, subgroup } => commands::gen_coset_lie(&constants.spec(), subgroup)?,
            };
            return Ok((o, out.clone()));
        }
    };
    Ok((out, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(hyperlie::EXIT_RESOURCE);
        }
    }
    match run(&cli) {
        Ok((out, Some(path))) => match std::fs::write(&path, out.render(cli.json)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(hyperlie::EXIT_INPUT)
            }
        },
        Ok((out, None)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(cli.json).as_bytes());
            ExitCode::from(out.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
