//! Continuous black-box optimization with the bat algorithm and its
//! DE-hybridized variant, plus a replication harness.
//!
//! The library has four layers:
//!
//! * [`rng`] — a seedable generator whose draws depend only on seed and
//!   draw order, with substream derivation for independent repeated runs;
//! * [`functions`] — the five-function benchmark suite (Griewank,
//!   Rosenbrock, sphere, Rastrigin, chained Ackley) with fixed domains;
//! * [`bat`], [`de`], [`hba`] — the plain bat algorithm, the
//!   differential-evolution operator kit, and the hybrid that swaps the
//!   bat's random-walk local search for a DE/rand/1/bin trial;
//! * [`harness`] — the experiment matrix runner with per-cell statistics,
//!   CSV results, and per-function plot data.
//!
//! Every stochastic component draws from [`rng::Rng`], so a run is
//! bit-reproducible from its seed and an experiment is byte-reproducible
//! from its configuration.
//!
//! # Example
//!
//! ```
//! use hybat::bat::{run_ba, BatParams};
//! use hybat::functions::{Function, ObjectiveSpec};
//! use hybat::hba::{run_hba, HbaParams};
//!
//! let spec = ObjectiveSpec::new(Function::Sphere, 4)?;
//! let params = BatParams { population_size: 20, max_generations: 150, ..Default::default() };
//!
//! let plain = run_ba(&spec, &params, 42)?;
//! let hybrid = run_hba(&spec, &HbaParams { bat: params, ..Default::default() }, 42)?;
//!
//! assert_eq!(plain.best_per_generation.len(), 151);
//! assert!(hybrid.best_fitness <= plain.best_fitness);
//! # Ok::<(), hybat::Error>(())
//! ```

pub mod bat;
pub mod de;
mod error;
pub mod functions;
pub mod harness;
pub mod hba;
pub mod rng;
pub mod settings;

pub use error::{Error, Result};
