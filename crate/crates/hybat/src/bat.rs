//! Bat algorithm core: population initialization, the frequency-scaled
//! velocity/position move, the random walk around the incumbent best,
//! loudness/pulse-rate annealing, and the per-generation update loop.
//!
//! One generation processes candidates in index order, all reading the best
//! position frozen at the start of the generation. The per-candidate draw
//! sequence is fixed and is part of the reproducibility contract:
//!
//! 1. one uniform for the frequency,
//! 2. one uniform for the local-search gate (`draw > pulse_rate`),
//! 3. if the gate fired, the draws of the local-search channel
//!    (one uniform per coordinate for the random walk),
//! 4. for a loudness-gated proposal, one uniform for the acceptance gate
//!    (`draw < loudness`); a greedy local-search channel consumes none.
//!
//! Each candidate's proposal is evaluated exactly once per generation, so a
//! run of `T` generations with population `n` costs `n * (T + 1)`
//! evaluations including initialization.

use crate::error::Result;
use crate::functions::ObjectiveSpec;
use crate::rng::Rng;

/// One virtual bat.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub frequency: f64,
    pub loudness: f64,
    pub pulse_rate: f64,
    /// Cached objective value of `position`.
    pub fitness: f64,
}

/// Tunables of the plain bat algorithm.
#[derive(Debug, Clone, PartialEq)]
pub struct BatParams {
    pub population_size: usize,
    pub max_generations: usize,
    pub frequency_min: f64,
    pub frequency_max: f64,
    /// Initial loudness A0.
    pub initial_loudness: f64,
    /// Initial pulse rate r0, also the asymptote the annealed rate grows to.
    pub initial_pulse_rate: f64,
    /// Loudness decay factor alpha in (0, 1), applied on each acceptance.
    pub loudness_decay: f64,
    /// Pulse-rate growth constant gamma > 0.
    pub pulse_rate_growth: f64,
    /// Random-walk scale epsilon > 0.
    pub walk_scale: f64,
}

impl Default for BatParams {
    fn default() -> Self {
        BatParams {
            population_size: 30,
            max_generations: 1000,
            frequency_min: 0.0,
            frequency_max: 2.0,
            initial_loudness: 0.5,
            initial_pulse_rate: 0.5,
            loudness_decay: 0.9,
            pulse_rate_growth: 0.9,
            walk_scale: 0.1,
        }
    }
}

impl BatParams {
    pub fn validate(&self) -> Result<()> {
        use crate::error::Error::InvalidParameter;
        let check = |ok: bool, name: &'static str, reason: String| {
            if ok {
                Ok(())
            } else {
                Err(InvalidParameter { name, reason })
            }
        };
        check(
            self.population_size >= 1,
            "population_size",
            "must be at least 1".into(),
        )?;
        check(
            self.frequency_min.is_finite()
                && self.frequency_max.is_finite()
                && self.frequency_min <= self.frequency_max,
            "frequency_min",
            format!(
                "need finite Qmin <= Qmax, got [{}, {}]",
                self.frequency_min, self.frequency_max
            ),
        )?;
        check(
            self.initial_loudness.is_finite() && self.initial_loudness > 0.0,
            "initial_loudness",
            format!("A0 must be positive, got {}", self.initial_loudness),
        )?;
        check(
            self.initial_pulse_rate.is_finite() && (0.0..=1.0).contains(&self.initial_pulse_rate),
            "initial_pulse_rate",
            format!("r0 must lie in [0, 1], got {}", self.initial_pulse_rate),
        )?;
        check(
            self.loudness_decay.is_finite()
                && self.loudness_decay > 0.0
                && self.loudness_decay < 1.0,
            "loudness_decay",
            format!("alpha must lie in (0, 1), got {}", self.loudness_decay),
        )?;
        check(
            self.pulse_rate_growth.is_finite() && self.pulse_rate_growth > 0.0,
            "pulse_rate_growth",
            format!("gamma must be positive, got {}", self.pulse_rate_growth),
        )?;
        check(
            self.walk_scale.is_finite() && self.walk_scale >= 0.0,
            "walk_scale",
            format!("epsilon must be non-negative, got {}", self.walk_scale),
        )?;
        Ok(())
    }
}

/// The swarm between generations.
#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    /// Completed generations; 0 right after initialization.
    pub generation: usize,
    pub candidates: Vec<Candidate>,
    /// Best position ever accepted into the swarm.
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// Objective evaluations consumed so far.
    pub evaluations: u64,
}

/// Per-run output: the best-fitness trace (one entry per generation plus the
/// initial state) and the final incumbent.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    pub seed: u64,
    pub best_per_generation: Vec<f64>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub evaluations: u64,
}

/// Draws the initial swarm: positions uniform inside the bounds, zero
/// velocities, loudness A0 and pulse rate r0 on every candidate.
pub fn init_swarm(spec: &ObjectiveSpec, params: &BatParams, rng: &mut Rng) -> Result<SwarmState> {
    let mut candidates = Vec::with_capacity(params.population_size);
    for _ in 0..params.population_size {
        let position: Vec<f64> = (0..spec.dimension)
            .map(|_| rng.uniform_range(spec.lower_bound, spec.upper_bound))
            .collect();
        let fitness = spec.evaluate(&position)?;
        candidates.push(Candidate {
            velocity: vec![0.0; spec.dimension],
            position,
            frequency: 0.0,
            loudness: params.initial_loudness,
            pulse_rate: params.initial_pulse_rate,
            fitness,
        });
    }
    // First-found candidate wins fitness ties.
    let mut best_index = 0;
    for (i, candidate) in candidates.iter().enumerate() {
        if candidate.fitness < candidates[best_index].fitness {
            best_index = i;
        }
    }
    Ok(SwarmState {
        generation: 0,
        best_position: candidates[best_index].position.clone(),
        best_fitness: candidates[best_index].fitness,
        evaluations: params.population_size as u64,
        candidates,
    })
}

/// The frequency/velocity/position move without the objective call:
/// `Q' = Qmin + (Qmax - Qmin) u`, `v' = v + (x - best) Q'`, `x' = x + v'`,
/// then `x'` is clamped per coordinate. Velocities are not altered by the
/// clamp. Consumes exactly one uniform draw.
fn frequency_move(
    candidate: &Candidate,
    best: &[f64],
    spec: &ObjectiveSpec,
    params: &BatParams,
    rng: &mut Rng,
) -> (f64, Vec<f64>, Vec<f64>) {
    let frequency =
        params.frequency_min + (params.frequency_max - params.frequency_min) * rng.uniform01();
    let velocity: Vec<f64> = candidate
        .velocity
        .iter()
        .zip(candidate.position.iter().zip(best))
        .map(|(v, (x, b))| v + (x - b) * frequency)
        .collect();
    let position: Vec<f64> = candidate
        .position
        .iter()
        .zip(&velocity)
        .map(|(x, v)| (x + v).clamp(spec.lower_bound, spec.upper_bound))
        .collect();
    (frequency, velocity, position)
}

/// [`frequency_move`] plus evaluation of the moved position.
pub fn move_candidate(
    candidate: &Candidate,
    best: &[f64],
    spec: &ObjectiveSpec,
    params: &BatParams,
    rng: &mut Rng,
) -> Result<Candidate> {
    let (frequency, velocity, position) = frequency_move(candidate, best, spec, params, rng);
    let fitness = spec.evaluate(&position)?;
    Ok(Candidate {
        position,
        velocity,
        frequency,
        loudness: candidate.loudness,
        pulse_rate: candidate.pulse_rate,
        fitness,
    })
}

/// Random walk around `best`: each coordinate moves by
/// `epsilon * loudness * (2 u - 1)` with its own uniform draw, then clamps.
pub fn local_walk(
    best: &[f64],
    loudness: f64,
    spec: &ObjectiveSpec,
    params: &BatParams,
    rng: &mut Rng,
) -> Vec<f64> {
    best.iter()
        .map(|b| {
            let step = params.walk_scale * loudness * (2.0 * rng.uniform01() - 1.0);
            (b + step).clamp(spec.lower_bound, spec.upper_bound)
        })
        .collect()
}

/// Loudness after one acceptance: `alpha * loudness`.
pub fn annealed_loudness(loudness: f64, params: &BatParams) -> f64 {
    params.loudness_decay * loudness
}

/// Pulse rate for an acceptance at `generation`:
/// `r0 (1 - exp(-gamma * t))`, monotone in `t` with asymptote r0.
pub fn annealed_pulse_rate(generation: usize, params: &BatParams) -> f64 {
    params.initial_pulse_rate * (1.0 - (-params.pulse_rate_growth * generation as f64).exp())
}

/// Applies both annealing rules to a candidate that just accepted a
/// proposal during `generation`.
pub fn anneal(candidate: &mut Candidate, generation: usize, params: &BatParams) {
    candidate.loudness = annealed_loudness(candidate.loudness, params);
    candidate.pulse_rate = annealed_pulse_rate(generation, params);
}

/// A local-search proposal position together with its acceptance rule.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LocalProposal {
    /// Goes through the loudness gate: accepted when the acceptance draw is
    /// below the candidate's loudness and the fitness strictly improves.
    Gated(Vec<f64>),
    /// Competes greedily: accepted when the fitness does not worsen. No
    /// acceptance draw is consumed.
    Greedy(Vec<f64>),
}

/// One generation with a pluggable local-search channel. The channel
/// receives the live candidate list (earlier indices may already hold this
/// generation's accepted states), the frozen best position, and the target
/// index; it returns the replacement proposal position, already clamped,
/// tagged with its acceptance rule.
///
/// The frequency move updates every candidate's velocity and frequency
/// unconditionally; acceptance gates only the position, its fitness, and
/// the annealing.
pub(crate) fn advance<L>(
    state: &mut SwarmState,
    spec: &ObjectiveSpec,
    params: &BatParams,
    rng: &mut Rng,
    mut local: L,
) -> Result<()>
where
    L: FnMut(&[Candidate], &[f64], usize, &mut Rng) -> Result<LocalProposal>,
{
    let generation_now = state.generation + 1;
    for i in 0..state.candidates.len() {
        let (frequency, velocity, position) = frequency_move(
            &state.candidates[i],
            &state.best_position,
            spec,
            params,
            rng,
        );
        let proposal = if rng.uniform01() > state.candidates[i].pulse_rate {
            local(&state.candidates, &state.best_position, i, rng)?
        } else {
            LocalProposal::Gated(position)
        };
        let (position, greedy) = match proposal {
            LocalProposal::Gated(position) => (position, false),
            LocalProposal::Greedy(position) => (position, true),
        };
        let fitness = spec.evaluate(&position)?;
        state.evaluations += 1;
        let accepted = if greedy {
            fitness <= state.candidates[i].fitness
        } else {
            let acceptance_draw = rng.uniform01();
            acceptance_draw < state.candidates[i].loudness && fitness < state.candidates[i].fitness
        };
        let candidate = &mut state.candidates[i];
        candidate.velocity = velocity;
        candidate.frequency = frequency;
        if accepted {
            candidate.position = position;
            candidate.fitness = fitness;
            anneal(candidate, generation_now, params);
        }
    }
    for candidate in &state.candidates {
        if candidate.fitness < state.best_fitness {
            state.best_fitness = candidate.fitness;
            state.best_position.clone_from(&candidate.position);
        }
    }
    state.generation = generation_now;
    Ok(())
}

/// One plain bat-algorithm generation: the local-search channel is the
/// random walk around the best, scaled by the candidate's own loudness,
/// evaluated through the loudness gate like any other move.
pub fn step(
    state: &mut SwarmState,
    spec: &ObjectiveSpec,
    params: &BatParams,
    rng: &mut Rng,
) -> Result<()> {
    advance(state, spec, params, rng, |candidates, best, i, rng| {
        Ok(LocalProposal::Gated(local_walk(
            best,
            candidates[i].loudness,
            spec,
            params,
            rng,
        )))
    })
}

pub(crate) fn run_loop<S>(
    spec: &ObjectiveSpec,
    params: &BatParams,
    seed: u64,
    mut step_fn: S,
) -> Result<RunTrace>
where
    S: FnMut(&mut SwarmState, &mut Rng) -> Result<()>,
{
    let mut rng = Rng::from_seed(seed);
    let mut state = init_swarm(spec, params, &mut rng)?;
    let mut trace = Vec::with_capacity(params.max_generations + 1);
    trace.push(state.best_fitness);
    for _ in 0..params.max_generations {
        step_fn(&mut state, &mut rng)?;
        trace.push(state.best_fitness);
    }
    Ok(RunTrace {
        seed,
        best_per_generation: trace,
        best_position: state.best_position,
        best_fitness: state.best_fitness,
        evaluations: state.evaluations,
    })
}

/// Full bat-algorithm run from a fresh seeded swarm.
pub fn run_ba(spec: &ObjectiveSpec, params: &BatParams, seed: u64) -> Result<RunTrace> {
    params.validate()?;
    run_loop(spec, params, seed, |state, rng| {
        step(state, spec, params, rng)
    })
}
