//! `hybat` command line: `run` executes a configurable experiment matrix,
//! `replicate-paper` executes the full five-function replication protocol.

use clap::{Args, Parser, Subcommand};
use hybat::harness::{self, Algorithm, CellSummary, ExperimentConfig};
use hybat::settings::Settings;
use hybat::Result;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "hybat",
    version,
    about = "Bat algorithm vs. DE-hybridized bat algorithm benchmark runner"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a custom matrix of functions, dimensions and algorithms.
    Run(Box<RunArgs>),
    /// Run the full replication protocol: f1..f5, D=10/20/30 with budgets
    /// 1000/2000/3000, BA and HBA, 25 runs per cell.
    ReplicatePaper(ReplicateArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Benchmark functions (f1..f5 or names), comma separated.
    #[arg(long, value_delimiter = ',')]
    function: Vec<String>,
    /// Problem dimensions, comma separated.
    #[arg(long, value_delimiter = ',')]
    dim: Vec<usize>,
    /// Algorithms to run: ba, hba.
    #[arg(long, value_delimiter = ',')]
    algo: Vec<String>,
    /// Seeded runs per matrix cell.
    #[arg(long)]
    runs: Option<usize>,
    /// Master seed; per-run seeds are derived from it.
    #[arg(long)]
    seed: Option<u64>,
    /// Generation budget for every requested dimension (required for
    /// dimensions other than 10/20/30).
    #[arg(long)]
    generations: Option<usize>,
    /// Population size.
    #[arg(long)]
    pop_size: Option<usize>,
    /// Loudness decay factor.
    #[arg(long)]
    alpha: Option<f64>,
    /// Pulse-rate growth constant.
    #[arg(long)]
    gamma: Option<f64>,
    /// Random-walk scale of the plain bat algorithm.
    #[arg(long)]
    epsilon: Option<f64>,
    /// DE scale factor F.
    #[arg(long)]
    de_f: Option<f64>,
    /// DE crossover rate CR.
    #[arg(long)]
    de_cr: Option<f64>,
    /// DE strategy notation; only DE/rand/1/bin is executable.
    #[arg(long)]
    strategy: Option<String>,
    /// Output directory for results.csv and plot files.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Worker threads (default: one per CPU).
    #[arg(long)]
    workers: Option<usize>,
    /// Config file with `key = value` lines; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct ReplicateArgs {
    /// Master seed; per-run seeds are derived from it.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output directory for results.csv and f1.dat..f5.dat.
    #[arg(long, default_value = "results")]
    out_dir: PathBuf,
    /// Worker threads (default: one per CPU).
    #[arg(long)]
    workers: Option<usize>,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(*args),
        Command::ReplicatePaper(args) => replicate_paper(args),
    };
    if let Err(e) = outcome {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn run(args: RunArgs) -> Result<()> {
    let mut settings = Settings::default();
    if let Some(path) = &args.config {
        settings.apply_file(path)?;
    }
    apply_flags(&mut settings, &args)?;
    settings.experiment.normalize();
    settings.experiment.validate()?;
    execute(settings)
}

fn replicate_paper(args: ReplicateArgs) -> Result<()> {
    let settings = Settings {
        experiment: ExperimentConfig {
            master_seed: args.seed,
            ..Default::default()
        },
        out_dir: args.out_dir,
        workers: args.workers,
    };
    settings.experiment.validate()?;
    execute(settings)
}

fn apply_flags(settings: &mut Settings, args: &RunArgs) -> Result<()> {
    if !args.function.is_empty() {
        settings.apply("function", &args.function.join(","))?;
    }
    if !args.dim.is_empty() {
        settings.experiment.dimensions = args.dim.clone();
    }
    if !args.algo.is_empty() {
        settings.apply("algo", &args.algo.join(","))?;
    }
    if let Some(runs) = args.runs {
        settings.experiment.runs_per_cell = runs;
    }
    if let Some(seed) = args.seed {
        settings.experiment.master_seed = seed;
    }
    if let Some(generations) = args.generations {
        settings.experiment.budget_override = Some(generations);
    }
    if let Some(pop_size) = args.pop_size {
        settings.experiment.bat.population_size = pop_size;
    }
    if let Some(alpha) = args.alpha {
        settings.experiment.bat.loudness_decay = alpha;
    }
    if let Some(gamma) = args.gamma {
        settings.experiment.bat.pulse_rate_growth = gamma;
    }
    if let Some(epsilon) = args.epsilon {
        settings.experiment.bat.walk_scale = epsilon;
    }
    if let Some(de_f) = args.de_f {
        settings.experiment.de.scale_factor = de_f;
    }
    if let Some(de_cr) = args.de_cr {
        settings.experiment.de.crossover_rate = de_cr;
    }
    if let Some(strategy) = &args.strategy {
        settings.apply("strategy", strategy)?;
    }
    if let Some(out_dir) = &args.out_dir {
        settings.out_dir = out_dir.clone();
    }
    if let Some(workers) = args.workers {
        settings.workers = Some(workers);
    }
    Ok(())
}

fn execute(settings: Settings) -> Result<()> {
    let summaries = match settings.workers {
        Some(workers) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| hybat::Error::InvalidParameter {
                    name: "workers",
                    reason: e.to_string(),
                })?;
            pool.install(|| harness::run_matrix(&settings.experiment))?
        }
        None => harness::run_matrix(&settings.experiment)?,
    };

    std::fs::create_dir_all(&settings.out_dir)?;
    let csv_path = settings.out_dir.join("results.csv");
    harness::emit_results_csv(&summaries, &settings.experiment, &csv_path)?;
    println!("wrote {}", csv_path.display());

    let both_algorithms = settings.experiment.algorithms.contains(&Algorithm::Ba)
        && settings.experiment.algorithms.contains(&Algorithm::Hba);
    if both_algorithms {
        for &function in &settings.experiment.functions {
            let path = settings
                .out_dir
                .join(format!("{}.dat", function.short_name()));
            harness::emit_plot_data(&summaries, function, &settings.experiment, &path)?;
            println!("wrote {}", path.display());
        }
    }

    print_summary_table(&summaries);
    Ok(())
}

fn print_summary_table(summaries: &[CellSummary]) {
    println!();
    println!(
        "{:<5} {:<4} {:>3}  {:>13} {:>13} {:>13} {:>13} {:>13}",
        "algo", "func", "D", "best", "worst", "mean", "median", "stdev"
    );
    for cell in summaries {
        let s = cell.stats;
        println!(
            "{:<5} {:<4} {:>3}  {:>13.6E} {:>13.6E} {:>13.6E} {:>13.6E} {:>13.6E}",
            cell.algorithm.name(),
            cell.function.short_name(),
            cell.dimension,
            s.best,
            s.worst,
            s.mean,
            s.median,
            s.stdev
        );
    }
}
