//! Randomized falsification, structured witnesses and dimension separation.
//!
//! Sampling can only refute. A run that finds nothing reports
//! `no_counterexample`, never "valid"; every counterexample carries an exact
//! witness that replays to the same gap.

mod audit;
mod falsify;
mod separate;
mod verdict;
mod witness;

pub use audit::{audit_invariants, AuditEntry, AuditReport};
pub use falsify::{falsify, falsify_with, near_half_order, trial_assignment, DimSchedule, FalsifyParams, TrialCheck};
pub use separate::{
    alpha_level_bound_check, escalating_search, lift_counterexample, qubit_alpha_separator, separate_dims,
    SeparationCertificate, SeparationRoute,
};
pub use verdict::{Gap, Verdict, VerdictStatus, VERSION};
pub use witness::{
    chained_alpha_witness, search_nonvanishing, structured_alpha_witness, structured_triple_in, ChainedWitness,
};

use crate::formula::{EvalError, GeneratorError, ParseError};
use crate::lattice::{LatticeError, DEFAULT_ENTRY_BOUND};

/// Environment variable overriding [`SearchConfig::size_cap`].
pub const SIZE_CAP_ENV: &str = "QLAT_SIZE_CAP";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("structured witness needs an even positive dimension, got {0}")]
    OddDimension(usize),
    #[error("ambient dimension {requested} exceeds the size cap {cap} (set {SIZE_CAP_ENV} to raise it)")]
    SizeCap { requested: usize, cap: usize },
    #[error("separation needs 1 <= low < high, got low={low}, high={high}")]
    BadOrder { low: usize, high: usize },
    #[error("inconclusive: no counterexample in C^{ambient} after {trials} trials (seed {seed})")]
    Inconclusive { ambient: usize, trials: usize, seed: u64 },
    #[error("separator failed in the low dimension C^{dim}")]
    HoldsEvidenceFailed { dim: usize },
    #[error("verdict has no counterexample to lift")]
    NotACounterexample,
    #[error("alpha bound violated at level {level}: dim {dim} > {ambient}/2^{level}")]
    AlphaBound { level: usize, dim: usize, ambient: usize },
    #[error("witness does not reproduce the recorded gap")]
    WitnessMismatch,
    #[error("malformed report: {0}")]
    Json(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
}

/// Budgets and limits for searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest ambient dimension any search may use.
    pub size_cap: usize,
    pub entry_bound: i64,
    /// Trials backing "holds in the low dimension" for m-distributivity.
    pub holds_trials: usize,
    /// Trials backing αᵏ = 0 in the low dimension.
    pub alpha_holds_trials: usize,
    /// Cumulative trial budgets for counterexample searches.
    pub escalation: Vec<usize>,
    /// Leading trials of a counterexample search that pin all dimensions
    /// near n/2 (see [`DimSchedule::NearHalfFirst`]).
    pub pinned_trials: usize,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            size_cap: 16,
            entry_bound: DEFAULT_ENTRY_BOUND,
            holds_trials: 500,
            alpha_holds_trials: 200,
            escalation: vec![1_000, 10_000, 100_000],
            pinned_trials: 1_000,
            parallel: false,
        }
    }
}

impl SearchConfig {
    /// Defaults, with the size cap taken from `QLAT_SIZE_CAP` when set.
    pub fn from_env() -> Result<Self, String> {
        let mut cfg = Self::default();
        if let Ok(v) = std::env::var(SIZE_CAP_ENV) {
            cfg.size_cap = v
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&c| c >= 1)
                .ok_or_else(|| format!("{SIZE_CAP_ENV} must be a positive integer, got {v:?}"))?;
        }
        Ok(cfg)
    }
}
