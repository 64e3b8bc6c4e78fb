use std::collections::{BTreeMap, HashMap};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::{LatticeError, Subspace};

use super::{Equation, Formula, Relation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Variable name → subspace, all in the same ℂⁿ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Assignment {
    ambient: usize,
    values: BTreeMap<String, Subspace>,
}

impl Assignment {
    pub fn new(ambient: usize) -> Result<Self, LatticeError> {
        if ambient == 0 {
            return Err(LatticeError::ZeroAmbient);
        }
        Ok(Self { ambient, values: BTreeMap::new() })
    }

    pub fn from_pairs<I, S>(ambient: usize, pairs: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = (S, Subspace)>,
        S: Into<String>,
    {
        let mut a = Self::new(ambient)?;
        for (k, v) in pairs {
            a.insert(k, v)?;
        }
        Ok(a)
    }

    pub fn insert(&mut self, name: impl Into<String>, value: Subspace) -> Result<(), LatticeError> {
        if value.ambient() != self.ambient {
            return Err(LatticeError::AmbientMismatch { left: self.ambient, right: value.ambient() });
        }
        self.values.insert(name.into(), value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Subspace> {
        self.values.get(name)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Subspace)> {
        self.values.iter()
    }

    /// Applies `f` to every bound subspace.
    pub fn try_map(
        &self,
        ambient: usize,
        mut f: impl FnMut(&Subspace) -> Result<Subspace, LatticeError>,
    ) -> Result<Self, LatticeError> {
        let mut out = Self::new(ambient)?;
        for (k, v) in &self.values {
            out.insert(k.clone(), f(v)?)?;
        }
        Ok(out)
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Assignment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let values = BTreeMap::<String, Subspace>::deserialize(d)?;
        let ambient = values
            .values()
            .next()
            .map(Subspace::ambient)
            .ok_or_else(|| D::Error::custom("assignment binds no variables"))?;
        let mut a = Assignment::new(ambient).map_err(D::Error::custom)?;
        for (k, v) in values {
            a.insert(k, v).map_err(D::Error::custom)?;
        }
        Ok(a)
    }
}

/// Memoizing evaluator. Results are cached per formula node, so shared
/// subterms are computed once; the cache lives as long as the borrowed
/// formulas, which keeps node addresses stable.
pub struct Evaluator<'a> {
    assignment: &'a Assignment,
    cache: HashMap<*const Formula, Subspace>,
}

impl<'a> Evaluator<'a> {
    pub fn new(assignment: &'a Assignment) -> Self {
        Self { assignment, cache: HashMap::new() }
    }

    pub fn assignment(&self) -> &'a Assignment {
        self.assignment
    }

    /// And → meet, Or → join, Not → orthocomplement, 0 → 𝟎, 1 → 𝟏.
    pub fn eval(&mut self, f: &'a Formula) -> Result<Subspace, EvalError> {
        let key = f as *const Formula;
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let n = self.assignment.ambient;
        let value = match f {
            Formula::Var(v) => {
                self.assignment.get(v).cloned().ok_or_else(|| EvalError::Unbound(v.to_string()))?
            }
            Formula::Zero => Subspace::zero(n)?,
            Formula::One => Subspace::full(n)?,
            Formula::Not(c) => self.eval(c)?.ortho(),
            Formula::And(a, b) => self.eval(a)?.meet(&self.eval(b)?)?,
            Formula::Or(a, b) => self.eval(a)?.join(&self.eval(b)?)?,
        };
        self.cache.insert(key, value.clone());
        Ok(value)
    }

    pub fn eval_equation(&mut self, eq: &'a Equation) -> Result<EquationValue, EvalError> {
        let lhs = self.eval(&eq.lhs)?;
        let rhs = self.eval(&eq.rhs)?;
        let holds = match eq.relation {
            Relation::Equal => lhs == rhs,
            Relation::Leq => lhs.meet(&rhs)? == lhs,
        };
        Ok(EquationValue { lhs, rhs, holds })
    }
}

/// Both sides of an evaluated equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationValue {
    pub lhs: Subspace,
    pub rhs: Subspace,
    pub holds: bool,
}

/// One-shot evaluation of φ under `assignment`.
pub fn eval(f: &Formula, assignment: &Assignment) -> Result<Subspace, EvalError> {
    Evaluator::new(assignment).eval(f)
}

pub fn eval_equation(eq: &Equation, assignment: &Assignment) -> Result<EquationValue, EvalError> {
    Evaluator::new(assignment).eval_equation(eq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::linalg::GaussianRational;

    fn line(a: i64, b: i64) -> Subspace {
        Subspace::span(&[vec![GaussianRational::real(a), GaussianRational::real(b)]], 2).unwrap()
    }

    fn triple() -> Assignment {
        Assignment::from_pairs(2, [("p", line(1, 0)), ("q", line(0, 1)), ("r", line(1, 1))]).unwrap()
    }

    #[test]
    fn excluded_middle_and_contradiction() {
        let a = Assignment::from_pairs(2, [("p", line(2, 3))]).unwrap();
        assert!(eval(&parse_formula("p | ~p").unwrap(), &a).unwrap().is_full());
        assert!(eval(&parse_formula("p & ~p").unwrap(), &a).unwrap().is_zero());
    }

    #[test]
    fn distributivity_gap_at_standard_triple() {
        let a = triple();
        let lhs = eval(&parse_formula("p | q & r").unwrap(), &a).unwrap();
        let rhs = eval(&parse_formula("(p | q) & (p | r)").unwrap(), &a).unwrap();
        assert_eq!(lhs, line(1, 0));
        assert!(rhs.is_full());
    }

    #[test]
    fn unbound_variable_is_named() {
        let a = triple();
        let err = eval(&parse_formula("p & zz").unwrap(), &a).unwrap_err();
        assert_eq!(err, EvalError::Unbound("zz".into()));
    }

    #[test]
    fn leq_relation() {
        let a = triple();
        let e = crate::formula::parse_equation("p & q <= r").unwrap();
        assert!(eval_equation(&e, &a).unwrap().holds);
        let e = crate::formula::parse_equation("p <= r").unwrap();
        assert!(!eval_equation(&e, &a).unwrap().holds);
    }

    #[test]
    fn assignment_rejects_mixed_ambient() {
        let mut a = Assignment::new(2).unwrap();
        assert!(a.insert("p", Subspace::full(3).unwrap()).is_err());
    }

    #[test]
    fn assignment_json() {
        let a = triple();
        let s = serde_json::to_string(&a).unwrap();
        let back: Assignment = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Assignment>("{}").is_err());
        let mixed = r#"{"p":{"ambient":2,"basis":[]},"q":{"ambient":3,"basis":[]}}"#;
        assert!(serde_json::from_str::<Assignment>(mixed).is_err());
    }
}
