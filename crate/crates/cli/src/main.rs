use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use wavechan_cli::commands::{
    output_dir, run_bounds, run_capacity, run_count, run_oracle, Overrides,
};
use wavechan_cli::output::write_atomic;
use wavechan_cli::scenario::Scenario;
use wavechan_cli::verify;

/// Shape-independent bounds on wave communication channels.
#[derive(Parser)]
#[command(name = "wavechan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bound spectra (bounds2d.csv / bounds3d.csv), with numerical spectra
    /// of the configured domains alongside.
    Bounds(RunArgs),
    /// Channel counts against the spherical heuristic (count.csv).
    Count(RunArgs),
    /// Capacity bounds over SNR and antenna counts (capacity.csv).
    Capacity(RunArgs),
    /// Discretized-operator spectra and monotonicity checks.
    Oracle(RunArgs),
    /// Runs the acceptance criteria; exit status 0 iff all pass.
    Verify {
        /// Only these criteria, e.g. `--only 3,4`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        /// Also write the results as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// Output directory; defaults to the scenario's `output_dir`, then
    /// out/<name>.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Truncation order: q_max in 2D, n_max in 3D.
    #[arg(long)]
    max_n: Option<usize>,
    /// Grid spacing for discretized domains.
    #[arg(long)]
    resolution: Option<f64>,
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("WAVECHAN_THREADS") {
        let n: usize = v.parse().with_context(|| format!("WAVECHAN_THREADS={v}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()?;
    }
    Ok(())
}

fn run(cmd: Command) -> Result<bool> {
    let (args, f): (
        RunArgs,
        fn(&Scenario) -> Result<wavechan_cli::output::Outputs>,
    ) = match cmd {
        Command::Bounds(a) => (a, run_bounds),
        Command::Count(a) => (a, run_count),
        Command::Capacity(a) => (a, run_capacity),
        Command::Oracle(a) => (a, run_oracle),
        Command::Verify { only, json } => {
            let ids: Vec<u8> = if only.is_empty() {
                (1..=12).collect()
            } else {
                only
            };
            let results = verify::run_all(&ids, |o| println!("{o}"));
            let passed = results.iter().filter(|o| o.passed).count();
            println!("{passed}/{} criteria passed", results.len());
            if let Some(path) = json {
                write_atomic(&path, &serde_json::to_vec_pretty(&results)?)?;
            }
            return Ok(passed == results.len());
        }
    };
    let mut sc = Scenario::load(&args.scenario)?;
    Overrides {
        out: args.out,
        seed: args.seed,
        max_n: args.max_n,
        resolution: args.resolution,
    }
    .apply(&mut sc)?;
    let dir = output_dir(&sc);
    for path in f(&sc)?.commit(&dir)? {
        println!("{}", path.display());
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // geometry warnings would drown the verify table
    let level = if matches!(cli.command, Command::Verify { .. }) {
        "error"
    } else {
        "warn"
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    let result = init_threads().and_then(|_| run(cli.command));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
