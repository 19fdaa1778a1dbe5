//! Experiment driver: runs an (algorithm x function x dimension) matrix of
//! repeated seeded runs, summarizes each cell with best/worst/mean/median/
//! stdev, and writes the results table plus per-function plot data.
//!
//! Determinism contract: the experiment configuration and master seed fully
//! determine every output byte. Per-run seeds are derived from the master
//! seed and the run coordinates, never from a shared sequence, so cells are
//! independent of each other and of scheduling. Runs execute in parallel
//! and are gathered in canonical order before any aggregation.

use crate::bat::{run_ba, BatParams, RunTrace};
use crate::de::{DeParams, Strategy};
use crate::error::{Error, Result};
use crate::functions::{Function, ObjectiveSpec};
use crate::hba::{run_hba, HbaParams};
use crate::rng;
use rayon::prelude::*;
use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Ba,
    Hba,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Ba, Algorithm::Hba];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ba => "ba",
            Algorithm::Hba => "hba",
        }
    }

    pub fn parse(name: &str) -> Result<Algorithm> {
        match name.trim().to_ascii_lowercase().as_str() {
            "ba" => Ok(Algorithm::Ba),
            "hba" => Ok(Algorithm::Hba),
            other => Err(Error::InvalidParameter {
                name: "algo",
                reason: format!("expected ba or hba, got `{other}`"),
            }),
        }
    }

    fn seed_id(self) -> u64 {
        match self {
            Algorithm::Ba => 1,
            Algorithm::Hba => 2,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Standard generation budget per dimension; other dimensions need an
/// explicit override.
fn default_budget(dimension: usize) -> Option<usize> {
    match dimension {
        10 => Some(1000),
        20 => Some(2000),
        30 => Some(3000),
        _ => None,
    }
}

/// Full description of an experiment. [`ExperimentConfig::default`] is the
/// five-function replication protocol: dimensions 10/20/30 with budgets
/// 1000/2000/3000 generations, both algorithms, 25 runs per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub functions: Vec<Function>,
    pub dimensions: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub runs_per_cell: usize,
    pub master_seed: u64,
    /// When set, replaces the per-dimension budget for every requested
    /// dimension.
    pub budget_override: Option<usize>,
    /// Bat tunables; `max_generations` is set per cell from the budget.
    pub bat: BatParams,
    pub de: DeParams,
    pub strategy: Strategy,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            functions: Function::ALL.to_vec(),
            dimensions: vec![10, 20, 30],
            algorithms: Algorithm::ALL.to_vec(),
            runs_per_cell: 25,
            master_seed: 42,
            budget_override: None,
            bat: BatParams::default(),
            de: DeParams::default(),
            strategy: Strategy::default(),
        }
    }
}

impl ExperimentConfig {
    /// Generation budget for one dimension.
    pub fn budget_for(&self, dimension: usize) -> Result<usize> {
        self.budget_override
            .or_else(|| default_budget(dimension))
            .ok_or(Error::MissingBudget { dimension })
    }

    /// Sorts and deduplicates the matrix axes into canonical order.
    pub fn normalize(&mut self) {
        self.functions.sort();
        self.functions.dedup();
        self.dimensions.sort_unstable();
        self.dimensions.dedup();
        self.algorithms.sort();
        self.algorithms.dedup();
    }

    pub fn validate(&self) -> Result<()> {
        let non_empty = |ok: bool, name: &'static str| {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    reason: "list must not be empty".into(),
                })
            }
        };
        non_empty(!self.functions.is_empty(), "function")?;
        non_empty(!self.dimensions.is_empty(), "dim")?;
        non_empty(!self.algorithms.is_empty(), "algo")?;
        if self.runs_per_cell == 0 {
            return Err(Error::InvalidParameter {
                name: "runs",
                reason: "need at least one run per cell".into(),
            });
        }
        for &dimension in &self.dimensions {
            self.budget_for(dimension)?;
            for &function in &self.functions {
                if dimension < function.min_dimension() {
                    return Err(Error::InvalidParameter {
                        name: "dim",
                        reason: format!(
                            "{} needs dimension >= {}, got {dimension}",
                            function.long_name(),
                            function.min_dimension()
                        ),
                    });
                }
            }
        }
        self.bat.validate()?;
        if self.algorithms.contains(&Algorithm::Hba) {
            HbaParams {
                bat: self.bat.clone(),
                de: self.de,
                strategy: self.strategy,
            }
            .validate()?;
        }
        Ok(())
    }

    /// Cells in canonical (algorithm, dimension, function) order.
    pub fn cells(&self) -> Vec<(Algorithm, Function, usize)> {
        let mut cells = Vec::new();
        for &algorithm in &self.algorithms {
            for &dimension in &self.dimensions {
                for &function in &self.functions {
                    cells.push((algorithm, function, dimension));
                }
            }
        }
        cells
    }
}

/// One completed run with its cell coordinates and derived seed.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub algorithm: Algorithm,
    pub function: Function,
    pub dimension: usize,
    pub run_index: usize,
    pub seed: u64,
    pub trace: RunTrace,
}

/// Order statistics over the final fitnesses of one cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatsSummary {
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    pub median: f64,
    pub stdev: f64,
}

/// A summarized cell of the experiment matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub algorithm: Algorithm,
    pub function: Function,
    pub dimension: usize,
    pub stats: StatsSummary,
}

/// Executes one run of one cell. The run seed depends only on the master
/// seed and the (algorithm, function, dimension, run) coordinates.
pub fn run_single(
    config: &ExperimentConfig,
    function: Function,
    dimension: usize,
    algorithm: Algorithm,
    run_index: usize,
) -> Result<RunRecord> {
    let spec = ObjectiveSpec::new(function, dimension)?;
    let mut bat = config.bat.clone();
    bat.max_generations = config.budget_for(dimension)?;
    let seed = rng::derive_seed(
        config.master_seed,
        &[
            algorithm.seed_id(),
            (Function::ALL.iter().position(|&f| f == function).unwrap() + 1) as u64,
            dimension as u64,
            run_index as u64,
        ],
    );
    let trace = match algorithm {
        Algorithm::Ba => run_ba(&spec, &bat, seed)?,
        Algorithm::Hba => {
            let params = HbaParams {
                bat,
                de: config.de,
                strategy: config.strategy,
            };
            run_hba(&spec, &params, seed)?
        }
    };
    Ok(RunRecord {
        algorithm,
        function,
        dimension,
        run_index,
        seed,
        trace,
    })
}

/// All runs of one cell, in run-index order.
pub fn run_cell(
    config: &ExperimentConfig,
    function: Function,
    dimension: usize,
    algorithm: Algorithm,
) -> Result<Vec<RunRecord>> {
    (0..config.runs_per_cell)
        .into_par_iter()
        .map(|run_index| run_single(config, function, dimension, algorithm, run_index))
        .collect()
}

/// Runs the whole matrix and summarizes each cell, in canonical cell order.
pub fn run_matrix(config: &ExperimentConfig) -> Result<Vec<CellSummary>> {
    config.validate()?;
    config
        .cells()
        .into_par_iter()
        .map(|(algorithm, function, dimension)| {
            let records = run_cell(config, function, dimension, algorithm)?;
            Ok(CellSummary {
                algorithm,
                function,
                dimension,
                stats: summarize(&records)?,
            })
        })
        .collect()
}

/// Summary statistics over the final best fitnesses of a batch of runs.
pub fn summarize(records: &[RunRecord]) -> Result<StatsSummary> {
    summarize_values(
        &records
            .iter()
            .map(|r| r.trace.best_fitness)
            .collect::<Vec<_>>(),
    )
}

/// Best = min, worst = max, arithmetic mean, median (mean of the two middle
/// order statistics for even counts), and sample standard deviation with
/// the n-1 denominator (0 for a single value).
pub fn summarize_values(values: &[f64]) -> Result<StatsSummary> {
    if values.is_empty() {
        return Err(Error::EmptyBatch);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let mean = sorted.iter().sum::<f64>() / n as f64;
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    };
    let stdev = if n == 1 {
        0.0
    } else {
        (sorted.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64).sqrt()
    };
    Ok(StatsSummary {
        best: sorted[0],
        worst: sorted[n - 1],
        mean,
        median,
        stdev,
    })
}

/// Commented parameter block embedded at the top of every output file, so a
/// result is reproducible from its own header. Keys match the config-file
/// schema.
pub fn metadata_lines(config: &ExperimentConfig) -> Vec<String> {
    let join = |items: Vec<String>| items.join(",");
    let budgets = join(
        config
            .dimensions
            .iter()
            .map(|&d| format!("{d}:{}", config.budget_for(d).unwrap_or(0)))
            .collect(),
    );
    vec![
        format!(
            "function={}",
            join(
                config
                    .functions
                    .iter()
                    .map(|f| f.short_name().to_string())
                    .collect()
            )
        ),
        format!(
            "dim={}",
            join(config.dimensions.iter().map(|d| d.to_string()).collect())
        ),
        format!(
            "algo={}",
            join(config.algorithms.iter().map(|a| a.to_string()).collect())
        ),
        format!("runs={}", config.runs_per_cell),
        format!("seed={}", config.master_seed),
        format!("budgets={budgets}"),
        format!("pop_size={}", config.bat.population_size),
        format!("q_min={}", config.bat.frequency_min),
        format!("q_max={}", config.bat.frequency_max),
        format!("a0={}", config.bat.initial_loudness),
        format!("r0={}", config.bat.initial_pulse_rate),
        format!("alpha={}", config.bat.loudness_decay),
        format!("gamma={}", config.bat.pulse_rate_growth),
        format!("epsilon={}", config.bat.walk_scale),
        format!("de_f={}", config.de.scale_factor),
        format!("de_cr={}", config.de.crossover_rate),
        format!("strategy={}", config.strategy),
    ]
}

fn find_cell(
    summaries: &[CellSummary],
    algorithm: Algorithm,
    function: Function,
    dimension: usize,
) -> Result<&CellSummary> {
    summaries
        .iter()
        .find(|s| s.algorithm == algorithm && s.function == function && s.dimension == dimension)
        .ok_or_else(|| Error::MissingCell {
            detail: format!("{algorithm} {} D={dimension}", function.short_name()),
        })
}

/// Renders the results table: a commented metadata block, the fixed header
/// line, then one row per cell in (algorithm, dimension, function) order,
/// values in scientific notation with seven significant digits.
pub fn render_results_csv(summaries: &[CellSummary], config: &ExperimentConfig) -> Result<String> {
    let mut out = String::new();
    for line in metadata_lines(config) {
        out.push_str("# ");
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str("algorithm,function,dimension,best,worst,mean,median,stdev\n");
    let mut algorithms = config.algorithms.clone();
    algorithms.sort();
    let mut dimensions = config.dimensions.clone();
    dimensions.sort_unstable();
    let mut functions = config.functions.clone();
    functions.sort();
    for &algorithm in &algorithms {
        for &dimension in &dimensions {
            for &function in &functions {
                let cell = find_cell(summaries, algorithm, function, dimension)?;
                let s = cell.stats;
                out.push_str(&format!(
                    "{algorithm},{},{dimension},{:.6E},{:.6E},{:.6E},{:.6E},{:.6E}\n",
                    function.short_name(),
                    s.best,
                    s.worst,
                    s.mean,
                    s.median,
                    s.stdev
                ));
            }
        }
    }
    Ok(out)
}

pub fn emit_results_csv(
    summaries: &[CellSummary],
    config: &ExperimentConfig,
    path: &Path,
) -> Result<()> {
    std::fs::write(path, render_results_csv(summaries, config)?)?;
    Ok(())
}

/// Renders plot data for one function: one row per dimension with the BA
/// and HBA mean final fitnesses, ready for log-scale plotting. The last
/// column is 1 when both means are strictly positive (safe to plot on a log
/// axis) and 0 when a mean is exactly zero.
pub fn render_plot_data(
    summaries: &[CellSummary],
    function: Function,
    config: &ExperimentConfig,
) -> Result<String> {
    let mut out = String::new();
    for line in metadata_lines(config) {
        out.push_str("# ");
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str(&format!(
        "# columns: dimension ba_mean_{name} hba_mean_{name} log_plottable\n",
        name = function.short_name()
    ));
    let mut dimensions = config.dimensions.clone();
    dimensions.sort_unstable();
    for dimension in dimensions {
        let ba = find_cell(summaries, Algorithm::Ba, function, dimension)?
            .stats
            .mean;
        let hba = find_cell(summaries, Algorithm::Hba, function, dimension)?
            .stats
            .mean;
        let log_plottable = u8::from(ba > 0.0 && hba > 0.0);
        out.push_str(&format!("{dimension} {ba:.6E} {hba:.6E} {log_plottable}\n"));
    }
    Ok(out)
}

pub fn emit_plot_data(
    summaries: &[CellSummary],
    function: Function,
    config: &ExperimentConfig,
    path: &Path,
) -> Result<()> {
    std::fs::write(path, render_plot_data(summaries, function, config)?)?;
    Ok(())
}
