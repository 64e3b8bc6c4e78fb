use std::fmt;

use serde::Serialize;

use crate::formula::{alpha_sides, alpha_with, Assignment, Evaluator, Formula};
use num_traits::{One, Signed};

use crate::lattice::Subspace;
use crate::linalg::Rational;

use super::SearchError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail for each invariant checked at one assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub ambient: usize,
    pub entries: Vec<AuditEntry>,
    /// dim α at the audited triple, when the assignment has three variables.
    pub alpha_dim: Option<usize>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    fn push(&mut self, name: String, passed: bool, detail: String) {
        self.entries.push(AuditEntry { name, passed, detail });
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "  [{}] {}: {}", if e.passed { "pass" } else { "FAIL" }, e.name, e.detail)?;
        }
        Ok(())
    }
}

/// The triple whose α is audited: p, q, r when all are bound, otherwise the
/// first three variables in sorted order.
fn audit_triple(a: &Assignment) -> Option<[String; 3]> {
    if ["p", "q", "r"].iter().all(|v| a.get(v).is_some()) {
        return Some(["p".into(), "q".into(), "r".into()]);
    }
    let names: Vec<&String> = a.iter().map(|(k, _)| k).take(3).collect();
    (names.len() == 3).then(|| [names[0].clone(), names[1].clone(), names[2].clone()])
}

/// Runs the invariant battery at `a`: ortholattice laws per variable,
/// valuation, equality lemma, De Morgan, order reversal and orthomodularity
/// per pair, and the α bounds at one triple.
pub fn audit_invariants(a: &Assignment) -> Result<AuditReport, SearchError> {
    let n = a.ambient();
    let mut report = AuditReport { ambient: n, entries: Vec::new(), alpha_dim: None };
    let full = Subspace::full(n)?;
    let zero = Subspace::zero(n)?;
    let vars: Vec<(&String, &Subspace)> = a.iter().collect();

    for (name, p) in &vars {
        let po = p.ortho();
        report.push(format!("ortho_period_two[{name}]"), po.ortho() == **p, format!("dim {}", p.dim()));
        report.push(format!("excluded_middle[{name}]"), p.join(&po)? == full, format!("dim(p|~p) = {}", p.join(&po)?.dim()));
        report.push(format!("non_contradiction[{name}]"), p.meet(&po)? == zero, format!("dim(p&~p) = {}", p.meet(&po)?.dim()));
        report.push(
            format!("normalized_dim[{name}]"),
            !p.normalized_dim().value().is_negative() && *p.normalized_dim().value() <= Rational::one(),
            format!("{}", p.normalized_dim().value()),
        );
    }

    for (i, (pn, p)) in vars.iter().enumerate() {
        for (qn, q) in &vars[i + 1..] {
            let tag = format!("[{pn},{qn}]");
            let (join, meet) = (p.join(q)?, p.meet(q)?);
            report.push(
                format!("valuation{tag}"),
                p.dim() + q.dim() == join.dim() + meet.dim(),
                format!("{} + {} = {} + {}", p.dim(), q.dim(), join.dim(), meet.dim()),
            );
            let (po, qo) = (p.ortho(), q.ortho());
            let lemma = join.meet(&po.join(&qo)?)?;
            report.push(
                format!("equality_lemma{tag}"),
                (p == q) == lemma.is_zero(),
                format!("equal = {}, dim((p|q)&(~p|~q)) = {}", p == q, lemma.dim()),
            );
            report.push(format!("de_morgan{tag}"), meet.ortho() == po.join(&qo)?, String::from("~(p&q) = ~p|~q"));
            report.push(format!("de_morgan_dual{tag}"), join.ortho() == po.meet(&qo)?, String::from("~(p|q) = ~p&~q"));
            let order_ok = |x: &Subspace, y: &Subspace| -> Result<bool, SearchError> {
                if !x.leq(y)? {
                    return Ok(true);
                }
                let reverses = y.ortho().leq(&x.ortho())?;
                let strict = x == y || x.dim() < y.dim();
                Ok(reverses && strict)
            };
            report.push(
                format!("order{tag}"),
                order_ok(p, q)? && order_ok(q, p)?,
                String::from("p <= q implies ~q <= ~p and dim(p) < dim(q) when strict"),
            );
            let sasaki = p.meet(&po.join(&meet)?)?;
            report.push(format!("orthomodular{tag}"), sasaki.leq(q)?, format!("dim(p&(~p|p&q)) = {}", sasaki.dim()));
        }
    }

    if let Some([x, y, z]) = audit_triple(a) {
        let (fx, fy, fz) = (Formula::var(&x), Formula::var(&y), Formula::var(&z));
        let alpha_f = alpha_with(&fx, &fy, &fz);
        let (a_side, b_side) = alpha_sides(&fx, &fy, &fz);
        let b_not_a = b_side.clone().and(a_side.clone().not());
        let modular = fx.clone().and(fy.clone().or(fx.clone().and(fz.clone())));
        let modular_rhs = fx.clone().and(fy.clone()).or(fz.clone());
        let mut ev = Evaluator::new(a);
        let alpha_v = ev.eval(&alpha_f)?;
        let av = ev.eval(&a_side)?;
        let bv = ev.eval(&b_side)?;
        let bna = ev.eval(&b_not_a)?;
        let ml = ev.eval(&modular)?;
        let mr = ev.eval(&modular_rhs)?;
        let p = a.get(&x).expect("bound");
        let tag = format!("[{x},{y},{z}]");
        let d = alpha_v.dim();
        report.alpha_dim = Some(d);
        report.push(format!("alpha_in_ortho{tag}"), alpha_v.leq(&p.ortho())?, format!("dim alpha = {d}"));
        report.push(format!("alpha_dim_le_dim{tag}"), d <= p.dim(), format!("{d} <= {}", p.dim()));
        report.push(format!("alpha_dim_le_codim{tag}"), d <= n - p.dim(), format!("{d} <= {}", n - p.dim()));
        report.push(format!("alpha_dim_le_half{tag}"), 2 * d <= n, format!("2*{d} <= {n}"));
        report.push(format!("alpha_a_le_b{tag}"), av.leq(&bv)?, format!("dim a = {}, dim b = {}", av.dim(), bv.dim()));
        report.push(format!("alpha_equals_b_and_not_a{tag}"), alpha_v == bna, format!("dim(b&~a) = {}", bna.dim()));
        report.push(format!("modularity{tag}"), ml.leq(&mr)?, format!("dim lhs = {}, dim rhs = {}", ml.dim(), mr.dim()));
    }
    Ok(report)
}
