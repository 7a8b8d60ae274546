//! Sampling of comparison experiments.
//!
//! Each trial draws the prepared states `(i₁, …, i_C)` with probability
//! `q_{i₁}⋯q_{i_C}`, then draws a measurement outcome from
//! `tr(F_k π_{i₁}⊗…⊗π_{i_C})`, taking the elements in their stored order and
//! assigning any residual mass to `F_?`. Outcome probabilities are computed
//! once per product state, so a trial costs `C + 1` uniform draws.
//!
//! Trials are grouped in blocks of [`BLOCK_TRIALS`]; block `b` uses the stream
//! [`Xoshiro256StarStar::for_shard`]`(seed, b)`. Shards are contiguous runs of
//! blocks, so a run is determined by the seed alone: the shard count and
//! whether shards execute sequentially or in parallel do not change it.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::ensemble::{MixedEnsemble, Outcome, Povm};
use crate::error::{Error, Result};
use crate::rng::Xoshiro256StarStar;

/// Largest tolerated deviation of outcome probabilities from one.
pub const PROBABILITY_SUM_TOL: f64 = 1e-8;

/// Trials per random stream.
pub const BLOCK_TRIALS: u64 = 1 << 14;

/// What was actually prepared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Truth {
    /// All systems in the same state.
    Equal,
    /// At least two systems differ.
    Different,
    /// Single-system identification: the prepared state.
    State(usize),
}

impl Truth {
    /// Whether a conclusive `outcome` contradicts this truth.
    pub fn contradicted_by(self, outcome: Outcome) -> bool {
        match (self, outcome) {
            (_, Outcome::Inconclusive) => false,
            (Truth::Equal, Outcome::Different) | (Truth::Different, Outcome::Same) => true,
            (Truth::State(i), Outcome::State(j)) => i != j,
            (Truth::State(_), _) | (_, Outcome::State(_)) => true,
            _ => false,
        }
    }

    /// Whether `outcome` is the correct conclusive answer.
    pub fn confirmed_by(self, outcome: Outcome) -> bool {
        outcome != Outcome::Inconclusive && !self.contradicted_by(outcome)
    }
}

#[derive(Clone, Debug)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
    pub povm: Povm,
    pub ensemble: MixedEnsemble,
    pub copies: usize,
    /// Number of independent shards (at least one).
    pub shards: u32,
}

impl SimConfig {
    pub fn new(povm: Povm, ensemble: MixedEnsemble, copies: usize, trials: u64, seed: u64) -> Self {
        Self {
            trials,
            seed,
            povm,
            ensemble,
            copies,
            shards: 1,
        }
    }

    pub fn with_shards(mut self, shards: u32) -> Self {
        self.shards = shards;
        self
    }

    fn blocks(&self) -> u64 {
        self.trials.div_ceil(BLOCK_TRIALS)
    }

    /// Blocks handled by `shard`.
    fn shard_blocks(&self, shard: u32) -> std::ops::Range<u64> {
        let (n, shards) = (self.blocks(), u64::from(self.shards));
        let s = u64::from(shard);
        (s * n / shards)..((s + 1) * n / shards)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimReport {
    pub trials: u64,
    /// Counts per `(truth, outcome)`.
    #[serde(serialize_with = "serialize_counts")]
    pub counts: BTreeMap<(Truth, Outcome), u64>,
    pub conclusive: u64,
    pub error_count: u64,
    /// Conclusive fraction.
    pub empirical_p: f64,
    /// `√(p̂(1 − p̂)/trials)`.
    pub std_error: f64,
}

impl SimReport {
    fn from_counts(trials: u64, counts: BTreeMap<(Truth, Outcome), u64>) -> Self {
        let conclusive = counts
            .iter()
            .filter(|((_, o), _)| *o != Outcome::Inconclusive)
            .map(|(_, &n)| n)
            .sum();
        let error_count = counts
            .iter()
            .filter(|((t, o), _)| t.contradicted_by(*o))
            .map(|(_, &n)| n)
            .sum();
        let p = conclusive as f64 / trials as f64;
        Self {
            trials,
            counts,
            conclusive,
            error_count,
            empirical_p: p,
            std_error: (p * (1.0 - p) / trials as f64).sqrt(),
        }
    }

    /// `|p̂ − target|` in units of the standard error.
    pub fn deviation_sigmas(&self, target: f64) -> f64 {
        let diff = (self.empirical_p - target).abs();
        if self.std_error > 0.0 {
            diff / self.std_error
        } else if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }

    /// Serialisable counts as `(truth, outcome, count)` rows.
    pub fn count_rows(&self) -> Vec<(Truth, Outcome, u64)> {
        self.counts.iter().map(|(&(t, o), &n)| (t, o, n)).collect()
    }
}

fn serialize_counts<S: serde::Serializer>(
    counts: &BTreeMap<(Truth, Outcome), u64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(counts.iter().map(|(&(t, o), &n)| (t, o, n)))
}

/// Sampling table for one product state.
struct Preparation {
    truth: Truth,
    cumulative: Vec<f64>,
}

struct Table {
    prior_cumulative: Vec<f64>,
    preparations: Vec<Preparation>,
    outcomes: Vec<Outcome>,
    n: usize,
    copies: usize,
}

fn truth_for(indices: &[usize], identify: bool) -> Truth {
    if identify {
        Truth::State(indices[0])
    } else if indices.iter().all(|&i| i == indices[0]) {
        Truth::Equal
    } else {
        Truth::Different
    }
}

fn validate(povm: &Povm, ens: &MixedEnsemble, copies: usize) -> Result<bool> {
    if copies == 0 {
        return Err(Error::Domain("copies must be positive".into()));
    }
    let expected = ens.dim().pow(copies as u32);
    if povm.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: povm.dim(),
        });
    }
    let identify = povm
        .elements()
        .iter()
        .any(|(l, _)| matches!(l, Outcome::State(_)));
    if identify && copies != 1 {
        return Err(Error::InvalidPovm(
            "state-identification outcomes need a single copy".into(),
        ));
    }
    Ok(identify)
}

fn build_table(povm: &Povm, ens: &MixedEnsemble, copies: usize) -> Result<Table> {
    let identify = validate(povm, ens, copies)?;
    let mut acc = 0.0;
    let prior_cumulative = ens
        .priors()
        .iter()
        .map(|q| {
            acc += q;
            acc
        })
        .collect();
    let outcomes: Vec<Outcome> = povm.elements().iter().map(|(l, _)| *l).collect();
    let mut preparations = Vec::new();
    for indices in ens.index_tuples(copies) {
        let (_, state) = ens.product_state(&indices);
        let probs: Vec<f64> = povm
            .elements()
            .iter()
            .map(|(_, f)| f.trace_with(&state))
            .collect();
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > PROBABILITY_SUM_TOL {
            return Err(Error::InvalidPovm(format!(
                "outcome probabilities for {indices:?} sum to {total}"
            )));
        }
        let mut acc = 0.0;
        let cumulative = probs
            .iter()
            .map(|p| {
                acc += p.max(0.0);
                acc
            })
            .collect();
        preparations.push(Preparation {
            truth: truth_for(&indices, identify),
            cumulative,
        });
    }
    Ok(Table {
        prior_cumulative,
        preparations,
        outcomes,
        n: ens.len(),
        copies,
    })
}

fn pick(cumulative: &[f64], u: f64) -> Option<usize> {
    cumulative.iter().position(|&c| u < c)
}

fn run_shard(table: &Table, config: &SimConfig, shard: u32) -> BTreeMap<(Truth, Outcome), u64> {
    let mut counts = BTreeMap::new();
    for b in config.shard_blocks(shard) {
        let trials = BLOCK_TRIALS.min(config.trials - b * BLOCK_TRIALS);
        let mut rng = Xoshiro256StarStar::for_shard(config.seed, b);
        run_block(table, trials, &mut rng, &mut counts);
    }
    counts
}

fn run_block(
    table: &Table,
    trials: u64,
    rng: &mut Xoshiro256StarStar,
    counts: &mut BTreeMap<(Truth, Outcome), u64>,
) {
    let inconclusive = table
        .outcomes
        .iter()
        .position(|&o| o == Outcome::Inconclusive);
    for _ in 0..trials {
        let mut flat = 0usize;
        for _ in 0..table.copies {
            let i = pick(&table.prior_cumulative, rng.next_f64()).unwrap_or(table.n - 1);
            flat = flat * table.n + i;
        }
        let prep = &table.preparations[flat];
        let outcome = match pick(&prep.cumulative, rng.next_f64()) {
            Some(k) => table.outcomes[k],
            // residual mass goes to F_?
            None => inconclusive.map_or(Outcome::Inconclusive, |k| table.outcomes[k]),
        };
        *counts.entry((prep.truth, outcome)).or_insert(0) += 1;
    }
}

fn merge(parts: Vec<BTreeMap<(Truth, Outcome), u64>>) -> BTreeMap<(Truth, Outcome), u64> {
    let mut out = BTreeMap::new();
    for part in parts {
        for (k, v) in part {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out
}

fn check_config(config: &SimConfig) -> Result<()> {
    if config.trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    if config.shards == 0 {
        return Err(Error::Domain("shards must be at least 1".into()));
    }
    Ok(())
}

/// Runs all shards sequentially.
pub fn simulate(config: &SimConfig) -> Result<SimReport> {
    check_config(config)?;
    let table = build_table(&config.povm, &config.ensemble, config.copies)?;
    let parts = (0..config.shards)
        .map(|s| run_shard(&table, config, s))
        .collect();
    Ok(SimReport::from_counts(config.trials, merge(parts)))
}

/// Runs shards on the rayon pool; identical to [`simulate`] for the same
/// configuration.
pub fn simulate_parallel(config: &SimConfig) -> Result<SimReport> {
    check_config(config)?;
    let table = build_table(&config.povm, &config.ensemble, config.copies)?;
    let parts = (0..config.shards)
        .into_par_iter()
        .map(|s| run_shard(&table, config, s))
        .collect();
    Ok(SimReport::from_counts(config.trials, merge(parts)))
}

/// Exact probability of a correct conclusive answer,
/// `Σ_k p_k tr(F_{correct(k)} ϱ_k)`; equals `η_a tr(F_a ρ_a) + η_b tr(F_b ρ_b)`
/// for comparison measurements.
pub fn exact_success(povm: &Povm, ens: &MixedEnsemble, copies: usize) -> Result<f64> {
    let identify = validate(povm, ens, copies)?;
    let mut total = 0.0;
    for indices in ens.index_tuples(copies) {
        let (prior, state) = ens.product_state(&indices);
        let truth = truth_for(&indices, identify);
        for (label, f) in povm.elements() {
            if truth.confirmed_by(*label) {
                total += prior * f.trace_with(&state);
            }
        }
    }
    Ok(total)
}
