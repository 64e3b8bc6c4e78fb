use serde_json::json;

use crate::formula::{alpha_levels, eval_equation, m_distributive, Equation, Evaluator, Formula};
use crate::lattice::Side;

use super::falsify::{falsify_with, DimSchedule, FalsifyParams};
use super::verdict::{Gap, Verdict, VERSION};
use super::witness::chained_from_formulas;
use super::{SearchConfig, SearchError};

/// Which family of formulas separates the two dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparationRoute {
    /// `αᵏ = 0` with k = `levels`.
    Alpha { levels: usize },
    /// Huhn's m-distributive law.
    MDistributive { m: usize },
}

/// Evidence that the logics of ℂ^low and ℂ^high differ: a law that survives
/// sampling in the low dimension and has an exact counterexample in the
/// high one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub low_dim: usize,
    pub high_dim: usize,
    pub route: SeparationRoute,
    pub separator: Equation,
    pub holds_evidence: Verdict,
    pub fails_witness: Verdict,
}

impl SeparationCertificate {
    pub fn to_json_value(&self) -> serde_json::Value {
        let route = match self.route {
            SeparationRoute::Alpha { levels } => json!({"kind": "alpha", "levels": levels}),
            SeparationRoute::MDistributive { m } => json!({"kind": "m_distributive", "m": m}),
        };
        json!({
            "low_dim": self.low_dim,
            "high_dim": self.high_dim,
            "route": route,
            "separator": self.separator.to_string(),
            "holds_evidence": self.holds_evidence.to_json_value(),
            "fails_witness": self.fails_witness.to_json_value(),
            "seed": self.fails_witness.seed,
            "version": VERSION,
        })
    }

    /// Both verdicts replay: the holds side has no witness, the fails side
    /// reproduces its gap.
    pub fn verify(&self) -> Result<bool, SearchError> {
        Ok(!self.holds_evidence.is_counterexample()
            && self.fails_witness.is_counterexample()
            && self.fails_witness.replay()?
            && self.low_dim < self.high_dim)
    }
}

fn check_cap(dim: usize, config: &SearchConfig) -> Result<(), SearchError> {
    if dim > config.size_cap {
        return Err(SearchError::SizeCap { requested: dim, cap: config.size_cap });
    }
    Ok(())
}

/// Runtime audit for αᵏ: at every sampled assignment in ℂⁿ each level obeys
/// dim αᵏ ≤ n / 2ᵏ.
pub fn alpha_level_bound_check(levels: &[Formula], a: &crate::formula::Assignment) -> Result<(), SearchError> {
    let mut ev = Evaluator::new(a);
    let n = a.ambient();
    for (k, f) in levels.iter().enumerate() {
        let level = k + 1;
        let dim = ev.eval(f)?.dim();
        // dim ≤ n / 2^level, compared without rounding
        let scaled = (dim as u128).checked_shl(level as u32).unwrap_or(u128::MAX);
        if dim > 0 && scaled > n as u128 {
            return Err(SearchError::AlphaBound { level, dim, ambient: n });
        }
    }
    Ok(())
}

/// Separates ℂ^(2ⁿ) from ℂ^(2ⁿ⁺¹) with αⁿ⁺¹ = 0: sampled with the level
/// bound audited in the low dimension, refuted by the chained structured
/// witness in the high one.
pub fn qubit_alpha_separator(n: u32, seed: u64, config: &SearchConfig) -> Result<SeparationCertificate, SearchError> {
    let low = 1usize.checked_shl(n).ok_or(SearchError::SizeCap { requested: usize::MAX, cap: config.size_cap })?;
    let high = low * 2;
    check_cap(high, config)?;
    let levels = alpha_levels(n as usize + 1)?;
    let top = levels.last().expect("at least one level").clone();
    let separator = Equation::eq(top, Formula::Zero);

    let check = |a: &crate::formula::Assignment| alpha_level_bound_check(&levels, a);
    let params = FalsifyParams::new(low, config.alpha_holds_trials, seed)
        .entry_bound(config.entry_bound)
        .parallel(config.parallel);
    let holds_evidence = falsify_with(&separator, &params, Some(&check))?;
    if holds_evidence.is_counterexample() {
        return Err(SearchError::HoldsEvidenceFailed { dim: low });
    }

    let chained = chained_from_formulas(&levels, high)?;
    let value = eval_equation(&separator, &chained.assignment)?;
    if value.holds {
        return Err(SearchError::WitnessMismatch);
    }
    let fails_witness = Verdict::counterexample(
        separator.clone(),
        high,
        1,
        seed,
        chained.assignment,
        Gap { lhs: value.lhs, rhs: value.rhs },
    );
    Ok(SeparationCertificate {
        low_dim: low,
        high_dim: high,
        route: SeparationRoute::Alpha { levels: n as usize + 1 },
        separator,
        holds_evidence,
        fails_witness,
    })
}

/// Separates ℂᵐ from ℂⁿ (m < n) with the m-distributive law: sampled in ℂᵐ,
/// refuted in ℂⁿ by a seeded search whose budget escalates through
/// `config.escalation`. Exhausting the budget is reported as
/// [`SearchError::Inconclusive`].
pub fn separate_dims(m: usize, n: usize, seed: u64, config: &SearchConfig) -> Result<SeparationCertificate, SearchError> {
    if m == 0 || m >= n {
        return Err(SearchError::BadOrder { low: m, high: n });
    }
    check_cap(n, config)?;
    let separator = m_distributive(m)?;

    let params = FalsifyParams::new(m, config.holds_trials, seed)
        .entry_bound(config.entry_bound)
        .parallel(config.parallel);
    let holds_evidence = falsify_with(&separator, &params, None)?;
    if holds_evidence.is_counterexample() {
        return Err(SearchError::HoldsEvidenceFailed { dim: m });
    }

    let fails_witness = escalating_search(&separator, n, seed, config)?;
    Ok(SeparationCertificate {
        low_dim: m,
        high_dim: n,
        route: SeparationRoute::MDistributive { m },
        separator,
        holds_evidence,
        fails_witness,
    })
}

/// Runs the trial stream in stages of cumulative size `config.escalation`,
/// stopping at the first counterexample.
pub fn escalating_search(eq: &Equation, ambient: usize, seed: u64, config: &SearchConfig) -> Result<Verdict, SearchError> {
    let schedule = DimSchedule::NearHalfFirst { pinned_trials: config.pinned_trials };
    let mut done = 0;
    for &budget in &config.escalation {
        if budget <= done {
            continue;
        }
        let params = FalsifyParams::new(ambient, budget - done, seed)
            .schedule(schedule.clone())
            .entry_bound(config.entry_bound)
            .parallel(config.parallel)
            .first_trial(done);
        let v = falsify_with(eq, &params, None)?;
        if v.is_counterexample() {
            return Ok(v);
        }
        done = budget;
    }
    Err(SearchError::Inconclusive { ambient, trials: done, seed })
}

/// Pushes a counterexample along ℂⁿ ↪ ℂⁿ ⊗ ℂᵏ (embedding as p ⊗ ℂᵏ). The
/// embedding is a lattice homomorphism, so the gap survives.
pub fn lift_counterexample(v: &Verdict, factor_dim: usize) -> Result<Verdict, SearchError> {
    let (Some(witness), true) = (&v.witness, v.is_counterexample()) else {
        return Err(SearchError::NotACounterexample);
    };
    let ambient = v.ambient * factor_dim;
    let lifted = witness.try_map(ambient, |s| s.tensor_embed(factor_dim, Side::Right))?;
    let value = eval_equation(&v.equation, &lifted)?;
    if value.holds {
        return Err(SearchError::WitnessMismatch);
    }
    Ok(Verdict::counterexample(
        v.equation.clone(),
        ambient,
        v.trials_run,
        v.seed,
        lifted,
        Gap { lhs: value.lhs, rhs: value.rhs },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::law;

    fn quick() -> SearchConfig {
        SearchConfig { holds_trials: 100, alpha_holds_trials: 50, ..SearchConfig::default() }
    }

    #[test]
    fn qubit_n0() {
        let c = qubit_alpha_separator(0, 1, &quick()).unwrap();
        assert_eq!((c.low_dim, c.high_dim), (1, 2));
        assert_eq!(c.fails_witness.gap.as_ref().unwrap().lhs.dim(), 1);
        assert!(c.verify().unwrap());
    }

    #[test]
    fn qubit_n1() {
        let c = qubit_alpha_separator(1, 1, &quick()).unwrap();
        assert_eq!((c.low_dim, c.high_dim), (2, 4));
        assert_eq!(c.fails_witness.gap.as_ref().unwrap().lhs.dim(), 1);
        assert!(c.verify().unwrap());
    }

    #[test]
    fn size_cap_enforced() {
        let cfg = SearchConfig { size_cap: 4, ..quick() };
        assert!(matches!(qubit_alpha_separator(2, 0, &cfg), Err(SearchError::SizeCap { requested: 8, cap: 4 })));
        assert!(matches!(separate_dims(2, 5, 0, &cfg), Err(SearchError::SizeCap { .. })));
    }

    #[test]
    fn huhn_separations() {
        let c = separate_dims(1, 2, 3, &quick()).unwrap();
        assert!(c.verify().unwrap());
        let c = separate_dims(2, 3, 3, &quick()).unwrap();
        assert!(c.verify().unwrap());
        assert_eq!(c.fails_witness.ambient, 3);
        assert!(matches!(separate_dims(2, 2, 0, &quick()), Err(SearchError::BadOrder { .. })));
        assert!(matches!(separate_dims(3, 2, 0, &quick()), Err(SearchError::BadOrder { .. })));
    }

    #[test]
    fn exhausted_budget_is_inconclusive() {
        // x = x never fails, so the search must give up and say so
        let eq = crate::formula::parse_equation("x = x").unwrap();
        let cfg = SearchConfig { escalation: vec![10, 20], ..quick() };
        assert!(matches!(escalating_search(&eq, 3, 0, &cfg), Err(SearchError::Inconclusive { trials: 20, .. })));
    }

    #[test]
    fn lifting() {
        let v = crate::search::falsify(&law("distributivity").unwrap(), 2, 1000, 4, None).unwrap();
        assert!(v.is_counterexample());
        let lifted = lift_counterexample(&v, 2).unwrap();
        assert_eq!(lifted.ambient, 4);
        assert!(lifted.replay().unwrap());
        let (g, lg) = (v.gap.as_ref().unwrap(), lifted.gap.as_ref().unwrap());
        assert_eq!(lg.lhs.dim(), 2 * g.lhs.dim());
        assert_eq!(lg.rhs.dim(), 2 * g.rhs.dim());
        let none = crate::search::falsify(&law("modularity").unwrap(), 2, 10, 4, None).unwrap();
        assert!(matches!(lift_counterexample(&none, 2), Err(SearchError::NotACounterexample)));
    }
}
