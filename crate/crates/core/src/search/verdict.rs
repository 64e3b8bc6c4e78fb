use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::formula::{eval_equation, parse_equation, Assignment, Equation};
use crate::lattice::Subspace;

use super::SearchError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Outcome of a batch of evaluations. Sampling can only ever refute a law,
/// so there is no "valid" status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    CounterexampleFound,
    NoCounterexample,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::CounterexampleFound => "counterexample_found",
            VerdictStatus::NoCounterexample => "no_counterexample",
        })
    }
}

/// Evaluated sides of an equation at a failing assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gap {
    pub lhs: Subspace,
    pub rhs: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub equation: Equation,
    pub ambient: usize,
    pub trials_run: usize,
    pub seed: u64,
    pub witness: Option<Assignment>,
    pub gap: Option<Gap>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct VerdictJson {
    status: VerdictStatus,
    equation: String,
    ambient: usize,
    trials: usize,
    seed: u64,
    witness: Option<BTreeMap<String, Subspace>>,
    gap: Option<Gap>,
    version: String,
}

impl Verdict {
    pub fn no_counterexample(equation: Equation, ambient: usize, trials_run: usize, seed: u64) -> Self {
        Self { status: VerdictStatus::NoCounterexample, equation, ambient, trials_run, seed, witness: None, gap: None }
    }

    pub fn counterexample(
        equation: Equation,
        ambient: usize,
        trials_run: usize,
        seed: u64,
        witness: Assignment,
        gap: Gap,
    ) -> Self {
        Self {
            status: VerdictStatus::CounterexampleFound,
            equation,
            ambient,
            trials_run,
            seed,
            witness: Some(witness),
            gap: Some(gap),
        }
    }

    pub fn is_counterexample(&self) -> bool {
        self.status == VerdictStatus::CounterexampleFound
    }

    /// Re-evaluates the equation at the witness and checks that the recorded
    /// gap comes back exactly. `Ok(false)` for a verdict without a witness.
    pub fn replay(&self) -> Result<bool, SearchError> {
        let (Some(witness), Some(gap)) = (&self.witness, &self.gap) else {
            return Ok(false);
        };
        let value = eval_equation(&self.equation, witness)?;
        Ok(!value.holds && value.lhs == gap.lhs && value.rhs == gap.rhs)
    }

    pub(crate) fn to_json_repr(&self) -> VerdictJson {
        VerdictJson {
            status: self.status,
            equation: self.equation.to_string(),
            ambient: self.ambient,
            trials: self.trials_run,
            seed: self.seed,
            witness: self.witness.as_ref().map(|w| w.iter().map(|(k, v)| (k.clone(), v.clone())).collect()),
            gap: self.gap.clone(),
            version: VERSION.to_string(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_repr()).expect("verdict serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_repr()).expect("verdict serializes")
    }

    pub(crate) fn from_json_repr(raw: VerdictJson) -> Result<Self, SearchError> {
        let equation = parse_equation(&raw.equation)?;
        let witness = match raw.witness {
            Some(map) => Some(Assignment::from_pairs(raw.ambient, map)?),
            None => None,
        };
        let v = Verdict {
            status: raw.status,
            equation,
            ambient: raw.ambient,
            trials_run: raw.trials,
            seed: raw.seed,
            witness,
            gap: raw.gap,
        };
        let consistent = match v.status {
            VerdictStatus::CounterexampleFound => v.replay()?,
            VerdictStatus::NoCounterexample => v.witness.is_none() && v.gap.is_none(),
        };
        if !consistent {
            return Err(SearchError::WitnessMismatch);
        }
        Ok(v)
    }

    /// Parses a verdict report and replays its witness; a witness that does
    /// not reproduce the recorded gap is rejected.
    pub fn from_json(text: &str) -> Result<Self, SearchError> {
        let raw: VerdictJson = serde_json::from_str(text).map_err(|e| SearchError::Json(e.to_string()))?;
        Self::from_json_repr(raw)
    }
}
