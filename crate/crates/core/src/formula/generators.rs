//! Generated formulas: the distribution test term α, its iterated
//! restrictions, Huhn's m-distributive law, the nested distinctness term,
//! and a small catalog of lattice laws.

use std::fmt;
use std::str::FromStr;

use super::{parse_equation, restrict, Equation, Formula};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("{what} requires m >= 1")]
    ZeroIndex { what: &'static str },
    #[error("distinctness formula needs at least 3 variables, got {0}")]
    TooFewLines(usize),
    #[error("unknown law `{0}` (known: {known})", known = Law::ALL.iter().map(|l| l.name()).collect::<Vec<_>>().join(", "))]
    UnknownLaw(String),
}

/// The two sides of the distributive law for (x, y, z):
/// `a = x ∨ (y ∧ z)` and `b = (x ∨ y) ∧ (x ∨ z)`. Always a ≤ b.
pub fn alpha_sides(x: &Formula, y: &Formula, z: &Formula) -> (Formula, Formula) {
    let a = x.clone().or(y.clone().and(z.clone()));
    let b = x.clone().or(y.clone()).and(x.clone().or(z.clone()));
    (a, b)
}

/// α(x, y, z) = (a ∨ b) ∧ (¬a ∨ ¬b) with a, b from [`alpha_sides`]. It vanishes
/// exactly when a = b, i.e. when distributivity holds at (x, y, z).
pub fn alpha_with(x: &Formula, y: &Formula, z: &Formula) -> Formula {
    let (a, b) = alpha_sides(x, y, z);
    a.clone().or(b.clone()).and(a.not().or(b.not()))
}

/// α over the variables p, q, r.
pub fn alpha() -> Formula {
    alpha_with(&Formula::var("p"), &Formula::var("q"), &Formula::var("r"))
}

/// Variable names (p_k, q_k, r_k) used by level k of [`alpha_iter`].
pub fn alpha_level_vars(level: usize) -> [String; 3] {
    [format!("p{level}"), format!("q{level}"), format!("r{level}")]
}

fn alpha_at_level(level: usize) -> Formula {
    let [p, q, r] = alpha_level_vars(level);
    alpha_with(&Formula::var(&p), &Formula::var(&q), &Formula::var(&r))
}

/// α¹, α², …, αᵐ where α¹ = α(p1, q1, r1) and αᵏ = α(pk, qk, rk) restricted
/// to αᵏ⁻¹. Each level holds a shared reference to the previous one.
pub fn alpha_levels(m: usize) -> Result<Vec<Formula>, GeneratorError> {
    if m == 0 {
        return Err(GeneratorError::ZeroIndex { what: "alpha_iter" });
    }
    let mut levels = vec![alpha_at_level(1)];
    for k in 2..=m {
        let prev = levels.last().expect("nonempty");
        levels.push(restrict(&alpha_at_level(k), prev));
    }
    Ok(levels)
}

/// αᵐ over 3m variables p1, q1, r1, …, pm, qm, rm.
pub fn alpha_iter(m: usize) -> Result<Formula, GeneratorError> {
    Ok(alpha_levels(m)?.pop().expect("m >= 1"))
}

/// Huhn's m-distributive law over x, y0, …, ym:
/// `x ∧ (y0 ∨ … ∨ ym) = ⋁ᵢ (x ∧ ⋁_{j≠i} yⱼ)`.
pub fn m_distributive(m: usize) -> Result<Equation, GeneratorError> {
    if m == 0 {
        return Err(GeneratorError::ZeroIndex { what: "m_distributive" });
    }
    let x = Formula::var("x");
    let ys: Vec<Formula> = (0..=m).map(|i| Formula::var(&format!("y{i}"))).collect();
    let lhs = x.clone().and(Formula::join_all(ys.iter().cloned()));
    let rhs = Formula::join_all((0..=m).map(|i| {
        let others = ys.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, y)| y.clone());
        x.clone().and(Formula::join_all(others))
    }));
    Ok(Equation::eq(lhs, rhs))
}

/// The nested α term that vanishes whenever two of `lines` coincide.
///
/// For three names it is α(l0, l1, l2). Each further name v is folded in
/// against every earlier name w in order, γ ← α(γ, w, v); for four names
/// this is α(α(α(α(p,q,r),p,s),q,s),r,s).
pub fn distinctness_formula(lines: &[&str]) -> Result<Formula, GeneratorError> {
    if lines.len() < 3 {
        return Err(GeneratorError::TooFewLines(lines.len()));
    }
    let vars: Vec<Formula> = lines.iter().map(|n| Formula::var(n)).collect();
    let mut gamma = alpha_with(&vars[0], &vars[1], &vars[2]);
    for (k, v) in vars.iter().enumerate().skip(3) {
        for w in &vars[..k] {
            gamma = alpha_with(&gamma, w, v);
        }
    }
    Ok(gamma)
}

/// Named lattice laws. Variables are x, y, z.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Distributivity,
    Modularity,
    Orthomodularity,
    DeMorgan,
    DeMorganDual,
    DoubleNegation,
    ExcludedMiddle,
    NonContradiction,
}

impl Law {
    pub const ALL: [Law; 8] = [
        Law::Distributivity,
        Law::Modularity,
        Law::Orthomodularity,
        Law::DeMorgan,
        Law::DeMorganDual,
        Law::DoubleNegation,
        Law::ExcludedMiddle,
        Law::NonContradiction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Distributivity => "distributivity",
            Law::Modularity => "modularity",
            Law::Orthomodularity => "orthomodularity",
            Law::DeMorgan => "de_morgan",
            Law::DeMorganDual => "de_morgan_dual",
            Law::DoubleNegation => "double_negation",
            Law::ExcludedMiddle => "excluded_middle",
            Law::NonContradiction => "non_contradiction",
        }
    }

    pub fn source(self) -> &'static str {
        match self {
            Law::Distributivity => "x & (y | z) <= x & y | x & z",
            // unconditional form of modularity
            Law::Modularity => "x & (y | x & z) <= x & y | z",
            // Sasaki-hook form
            Law::Orthomodularity => "x & (~x | x & y) <= y",
            Law::DeMorgan => "~(x & y) = ~x | ~y",
            Law::DeMorganDual => "~(x | y) = ~x & ~y",
            Law::DoubleNegation => "~~x = x",
            Law::ExcludedMiddle => "x | ~x = 1",
            Law::NonContradiction => "x & ~x = 0",
        }
    }

    pub fn equation(self) -> Equation {
        parse_equation(self.source()).expect("catalog laws parse")
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = GeneratorError;

    /// Accepts the snake_case name; hyphens are treated as underscores.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Law::ALL
            .into_iter()
            .find(|l| l.name() == key)
            .ok_or_else(|| GeneratorError::UnknownLaw(s.to_string()))
    }
}

/// Looks up a law by name.
pub fn law(name: &str) -> Result<Equation, GeneratorError> {
    Ok(name.parse::<Law>()?.equation())
}
