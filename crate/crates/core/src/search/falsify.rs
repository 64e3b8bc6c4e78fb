use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::formula::{Assignment, Equation, Evaluator};
use crate::lattice::{random_subspace_with, DEFAULT_ENTRY_BOUND};

use super::{Gap, SearchError, Verdict};

/// How subspace dimensions are chosen for each variable of a trial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum DimSchedule {
    /// Each variable independently uniform in 0..=n.
    #[default]
    Uniform,
    /// Every variable gets this dimension.
    Pinned(usize),
    /// The first `pinned_trials` trials give all variables one common proper
    /// dimension, cycling through 1..n-1 ordered by distance from n/2;
    /// later trials are uniform.
    NearHalfFirst { pinned_trials: usize },
}

impl DimSchedule {
    fn dims_for_trial<R: Rng>(&self, rng: &mut R, ambient: usize, index: usize, count: usize) -> Vec<usize> {
        let uniform = |rng: &mut R| (0..count).map(|_| rng.random_range(0..=ambient)).collect();
        match self {
            DimSchedule::Uniform => uniform(rng),
            DimSchedule::Pinned(d) => vec![(*d).min(ambient); count],
            DimSchedule::NearHalfFirst { pinned_trials } => {
                let order = near_half_order(ambient);
                if index < *pinned_trials && !order.is_empty() {
                    vec![order[index % order.len()]; count]
                } else {
                    uniform(rng)
                }
            }
        }
    }
}

/// Proper dimensions 1..n-1, closest to n/2 first (smaller first on ties).
pub fn near_half_order(ambient: usize) -> Vec<usize> {
    let mut dims: Vec<usize> = (1..ambient).collect();
    dims.sort_by_key(|&k| ((2 * k).abs_diff(ambient), k));
    dims
}

/// Parameters of a falsification run. Trial `i` draws its subspaces from a
/// ChaCha8 stream keyed by `(seed, i)`, so trials are independent and a run
/// can be split or parallelized without changing any draw.
#[derive(Debug, Clone)]
pub struct FalsifyParams {
    pub ambient: usize,
    pub trials: usize,
    pub seed: u64,
    pub entry_bound: i64,
    pub schedule: DimSchedule,
    pub parallel: bool,
    /// Index of the first trial; a continuation of an earlier run starts
    /// where that run stopped.
    pub first_trial: usize,
}

impl FalsifyParams {
    pub fn new(ambient: usize, trials: usize, seed: u64) -> Self {
        Self {
            ambient,
            trials,
            seed,
            entry_bound: DEFAULT_ENTRY_BOUND,
            schedule: DimSchedule::Uniform,
            parallel: false,
            first_trial: 0,
        }
    }

    pub fn schedule(mut self, schedule: DimSchedule) -> Self {
        self.schedule = schedule;
        self
    }

    pub fn entry_bound(mut self, bound: i64) -> Self {
        self.entry_bound = bound;
        self
    }

    pub fn parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn first_trial(mut self, first: usize) -> Self {
        self.first_trial = first;
        self
    }
}

/// The assignment used by trial `index`: variables in sorted order, each
/// drawn from the trial's own stream.
pub fn trial_assignment(
    vars: &[String],
    ambient: usize,
    seed: u64,
    index: usize,
    schedule: &DimSchedule,
    entry_bound: i64,
) -> Result<Assignment, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let dims = schedule.dims_for_trial(&mut rng, ambient, index, vars.len());
    let mut a = Assignment::new(ambient)?;
    for (name, dim) in vars.iter().zip(dims) {
        a.insert(name.clone(), random_subspace_with(&mut rng, ambient, dim, entry_bound)?)?;
    }
    Ok(a)
}

/// Per-trial hook run on every sampled assignment before the equation is
/// checked; an error aborts the run.
pub type TrialCheck<'c> = &'c (dyn Fn(&Assignment) -> Result<(), SearchError> + Sync);

enum TrialOutcome {
    Holds,
    Fails(Assignment, Gap),
}

fn run_trial(
    eq: &Equation,
    vars: &[String],
    params: &FalsifyParams,
    index: usize,
    check: Option<TrialCheck<'_>>,
) -> Result<TrialOutcome, SearchError> {
    let a = trial_assignment(vars, params.ambient, params.seed, index, &params.schedule, params.entry_bound)?;
    if let Some(check) = check {
        check(&a)?;
    }
    let value = Evaluator::new(&a).eval_equation(eq)?;
    if value.holds {
        Ok(TrialOutcome::Holds)
    } else {
        Ok(TrialOutcome::Fails(a, Gap { lhs: value.lhs, rhs: value.rhs }))
    }
}

/// Evaluates `eq` at `trials` seeded random assignments in ℂⁿ with uniformly
/// drawn dimensions (unless `schedule` pins them) and returns the first
/// counterexample.
pub fn falsify(
    eq: &Equation,
    ambient: usize,
    trials: usize,
    seed: u64,
    schedule: Option<DimSchedule>,
) -> Result<Verdict, SearchError> {
    falsify_with(eq, &FalsifyParams::new(ambient, trials, seed).schedule(schedule.unwrap_or_default()), None)
}

/// Full-control variant of [`falsify`]. With `parallel` set, trials run on
/// the rayon pool; the reported witness is still the one with the smallest
/// trial index, so output is identical to a sequential run.
pub fn falsify_with(
    eq: &Equation,
    params: &FalsifyParams,
    check: Option<TrialCheck<'_>>,
) -> Result<Verdict, SearchError> {
    if params.trials == 0 {
        return Err(SearchError::ZeroTrials);
    }
    if params.ambient == 0 {
        return Err(crate::lattice::LatticeError::ZeroAmbient.into());
    }
    let vars: Vec<String> = eq.vars().into_iter().collect();
    let range = params.first_trial..params.first_trial + params.trials;

    let first_hit = |index: usize| match run_trial(eq, &vars, params, index, check) {
        Ok(TrialOutcome::Holds) => None,
        Ok(TrialOutcome::Fails(a, gap)) => Some(Ok((index, a, gap))),
        Err(e) => Some(Err(e)),
    };
    let hit = if params.parallel {
        range.into_par_iter().find_map_first(first_hit)
    } else {
        range.into_iter().find_map(first_hit)
    };

    match hit {
        None => Ok(Verdict::no_counterexample(eq.clone(), params.ambient, params.first_trial + params.trials, params.seed)),
        Some(Err(e)) => Err(e),
        Some(Ok((index, witness, gap))) => {
            Ok(Verdict::counterexample(eq.clone(), params.ambient, index + 1, params.seed, witness, gap))
        }
    }
}
