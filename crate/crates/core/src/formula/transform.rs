use std::collections::HashMap;
use std::sync::Arc;

use super::Formula;

fn into_formula(f: Arc<Formula>) -> Formula {
    Arc::try_unwrap(f).unwrap_or_else(|a| (*a).clone())
}

/// Negation normal form: De Morgan pushes every `~` down onto a variable or
/// a constant, and double negations cancel.
pub fn to_nnf(f: &Formula) -> Formula {
    let mut memo = HashMap::new();
    into_formula(nnf(f, false, &mut memo))
}

fn nnf(f: &Formula, negated: bool, memo: &mut HashMap<(*const Formula, bool), Arc<Formula>>) -> Arc<Formula> {
    let key = (f as *const Formula, negated);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let out = match (f, negated) {
        (Formula::Not(c), _) => nnf(c, !negated, memo),
        (Formula::Var(_) | Formula::Zero | Formula::One, false) => Arc::new(f.clone()),
        (Formula::Var(_) | Formula::Zero | Formula::One, true) => Arc::new(Formula::Not(Arc::new(f.clone()))),
        (Formula::And(a, b), false) => Arc::new(Formula::And(nnf(a, false, memo), nnf(b, false, memo))),
        (Formula::Or(a, b), false) => Arc::new(Formula::Or(nnf(a, false, memo), nnf(b, false, memo))),
        (Formula::And(a, b), true) => Arc::new(Formula::Or(nnf(a, true, memo), nnf(b, true, memo))),
        (Formula::Or(a, b), true) => Arc::new(Formula::And(nnf(a, true, memo), nnf(b, true, memo))),
    };
    memo.insert(key, out.clone());
    out
}

/// The restriction φ|β. After normalizing φ, each literal u becomes `u & β`
/// and each `~u` becomes `~(u & β) & β`. The constant 1 becomes β (the top of
/// the interval below β) and 0 stays 0, so the result always evaluates
/// inside β.
pub fn restrict(phi: &Formula, beta: &Formula) -> Formula {
    let beta = Arc::new(beta.clone());
    let normal = to_nnf(phi);
    let mut memo = HashMap::new();
    into_formula(relativize(&normal, &beta, &mut memo))
}

fn relativize(f: &Formula, beta: &Arc<Formula>, memo: &mut HashMap<*const Formula, Arc<Formula>>) -> Arc<Formula> {
    let key = f as *const Formula;
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let inside = |lit: &Formula| -> Arc<Formula> {
        match lit {
            Formula::One => beta.clone(),
            Formula::Zero => Arc::new(Formula::Zero),
            _ => Arc::new(Formula::And(Arc::new(lit.clone()), beta.clone())),
        }
    };
    let out = match f {
        Formula::Var(_) | Formula::Zero | Formula::One => inside(f),
        Formula::Not(lit) => match &**lit {
            Formula::One => Arc::new(Formula::Zero),
            Formula::Zero => beta.clone(),
            _ => Arc::new(Formula::And(Arc::new(Formula::Not(inside(lit))), beta.clone())),
        },
        Formula::And(a, b) => Arc::new(Formula::And(relativize(a, beta, memo), relativize(b, beta, memo))),
        Formula::Or(a, b) => Arc::new(Formula::Or(relativize(a, beta, memo), relativize(b, beta, memo))),
    };
    memo.insert(key, out.clone());
    out
}

/// True when every `~` wraps a variable or constant.
pub fn is_nnf(f: &Formula) -> bool {
    match f {
        Formula::Var(_) | Formula::Zero | Formula::One => true,
        Formula::Not(c) => matches!(**c, Formula::Var(_) | Formula::Zero | Formula::One),
        Formula::And(a, b) | Formula::Or(a, b) => is_nnf(a) && is_nnf(b),
    }
}
