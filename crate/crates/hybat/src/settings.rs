//! Flat key/value configuration: file parsing and the shared override
//! plumbing used by both the config file and the CLI flags.
//!
//! A config file holds one `key = value` pair per line; `#` starts a
//! comment. Keys mirror the CLI long flags (`function`, `dim`, `algo`,
//! `runs`, `seed`, `generations`, `pop_size`, `q_min`, `q_max`, `a0`, `r0`,
//! `alpha`, `gamma`, `epsilon`, `de_f`, `de_cr`, `strategy`, `out_dir`,
//! `workers`). List values are comma-separated. CLI flags override file
//! values, which override the defaults.

use crate::de::Strategy;
use crate::error::{Error, Result};
use crate::functions::Function;
use crate::harness::{Algorithm, ExperimentConfig};
use std::path::{Path, PathBuf};

/// Everything the CLI needs to execute: the experiment itself plus output
/// and scheduling choices that do not affect the results.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub experiment: ExperimentConfig,
    pub out_dir: PathBuf,
    pub workers: Option<usize>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            experiment: ExperimentConfig::default(),
            out_dir: PathBuf::from("results"),
            workers: None,
        }
    }
}

impl Settings {
    /// Applies every `key = value` pair from a config file.
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        for (index, raw_line) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
                line: line_no,
                reason: format!("expected `key = value`, got `{line}`"),
            })?;
            self.apply(key.trim(), value.trim())
                .map_err(|e| Error::Config {
                    line: line_no,
                    reason: e.to_string(),
                })?;
        }
        Ok(())
    }

    /// Applies one override by key name.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        let experiment = &mut self.experiment;
        match key {
            "function" => {
                experiment.functions = value
                    .split(',')
                    .map(Function::parse)
                    .collect::<Result<Vec<_>>>()?;
            }
            "dim" => experiment.dimensions = parse_list("dim", value)?,
            "algo" => {
                experiment.algorithms = value
                    .split(',')
                    .map(Algorithm::parse)
                    .collect::<Result<Vec<_>>>()?;
            }
            "runs" => experiment.runs_per_cell = parse_scalar("runs", value)?,
            "seed" => experiment.master_seed = parse_scalar("seed", value)?,
            "generations" => experiment.budget_override = Some(parse_scalar("generations", value)?),
            "pop_size" => experiment.bat.population_size = parse_scalar("pop_size", value)?,
            "q_min" => experiment.bat.frequency_min = parse_scalar("q_min", value)?,
            "q_max" => experiment.bat.frequency_max = parse_scalar("q_max", value)?,
            "a0" => experiment.bat.initial_loudness = parse_scalar("a0", value)?,
            "r0" => experiment.bat.initial_pulse_rate = parse_scalar("r0", value)?,
            "alpha" => experiment.bat.loudness_decay = parse_scalar("alpha", value)?,
            "gamma" => experiment.bat.pulse_rate_growth = parse_scalar("gamma", value)?,
            "epsilon" => experiment.bat.walk_scale = parse_scalar("epsilon", value)?,
            "de_f" => experiment.de.scale_factor = parse_scalar("de_f", value)?,
            "de_cr" => experiment.de.crossover_rate = parse_scalar("de_cr", value)?,
            "strategy" => experiment.strategy = Strategy::parse(value)?,
            "out_dir" => self.out_dir = PathBuf::from(value),
            "workers" => self.workers = Some(parse_scalar("workers", value)?),
            other => {
                return Err(Error::InvalidParameter {
                    name: "config",
                    reason: format!("unknown key `{other}`"),
                })
            }
        }
        Ok(())
    }
}

fn parse_scalar<T: std::str::FromStr>(key: &'static str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::InvalidParameter {
        name: key,
        reason: format!("cannot parse `{value}`"),
    })
}

fn parse_list<T: std::str::FromStr>(key: &'static str, value: &str) -> Result<Vec<T>> {
    value
        .split(',')
        .map(|item| parse_scalar(key, item))
        .collect()
}
