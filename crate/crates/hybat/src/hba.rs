//! Hybrid bat algorithm: the bat loop of [`crate::bat`] with the local
//! random walk replaced by a DE/rand/1/bin trial built over the swarm. The
//! trial competes against its target greedily, as in differential
//! selection: it replaces the candidate whenever its fitness does not
//! worsen, and the replacement anneals loudness and pulse rate exactly like
//! a gated acceptance. Everything else (frequency move, pulse-rate gate,
//! loudness gate on non-branch proposals, best tracking) is the shared
//! bat-core code, so disabling the local-search branch makes the two
//! algorithms trace-identical.
//!
//! When the branch fires for candidate `i`, the draws are: donor indices
//! until three are distinct from each other and from `i`, the forced
//! crossover index, then one uniform per coordinate; no acceptance draw
//! follows a greedy trial.

use crate::bat::{self, BatParams, Candidate, RunTrace};
use crate::de::{self, DeParams, Strategy};
use crate::error::Result;
use crate::functions::ObjectiveSpec;
use crate::rng::Rng;

/// Bat tunables plus the DE operator settings for the local-search channel.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HbaParams {
    pub bat: BatParams,
    pub de: DeParams,
    pub strategy: Strategy,
}

impl HbaParams {
    /// Validates the bat ranges, the DE ranges, the donor requirement
    /// (population of at least 4), and that the strategy is executable.
    pub fn validate(&self) -> Result<()> {
        self.bat.validate()?;
        self.de.validate()?;
        if self.bat.population_size < 4 {
            return Err(crate::error::Error::PopulationTooSmall {
                required: 4,
                actual: self.bat.population_size,
            });
        }
        self.strategy.require_executable()
    }
}

/// DE/rand/1/bin proposal for candidate `target`: differential mutation over
/// the current candidate positions, binomial crossover against the target's
/// position, then a clamp into the search domain.
pub fn de_local_modify(
    candidates: &[Candidate],
    target: usize,
    params: &HbaParams,
    spec: &ObjectiveSpec,
    rng: &mut Rng,
) -> Result<Vec<f64>> {
    let positions: Vec<&[f64]> = candidates.iter().map(|c| c.position.as_slice()).collect();
    let mutant = de::mutate(&positions, target, params.de.scale_factor, rng)?;
    let trial = de::crossover_bin(
        &candidates[target].position,
        &mutant,
        params.de.crossover_rate,
        rng,
    )?;
    Ok(trial
        .into_iter()
        .map(|x| x.clamp(spec.lower_bound, spec.upper_bound))
        .collect())
}

/// One hybrid generation: identical to [`bat::step`] except that the
/// local-search channel produces the DE trial, which competes greedily.
pub fn step(
    state: &mut bat::SwarmState,
    spec: &ObjectiveSpec,
    params: &HbaParams,
    rng: &mut Rng,
) -> Result<()> {
    bat::advance(
        state,
        spec,
        &params.bat,
        rng,
        |candidates, _best, i, rng| {
            Ok(bat::LocalProposal::Greedy(de_local_modify(
                candidates, i, params, spec, rng,
            )?))
        },
    )
}

/// Full hybrid run from a fresh seeded swarm.
pub fn run_hba(spec: &ObjectiveSpec, params: &HbaParams, seed: u64) -> Result<RunTrace> {
    params.validate()?;
    bat::run_loop(spec, &params.bat, seed, |state, rng| {
        step(state, spec, params, rng)
    })
}
