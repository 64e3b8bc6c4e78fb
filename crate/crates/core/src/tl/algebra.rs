use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{chebyshev, PlanarDiagram, RationalFunction, TLElement, TlError};

/// Generator eᵢ = Uᵢ / d of TLₙ, idempotent.
pub fn generator_e(n: usize, i: usize) -> Result<TLElement, TlError> {
    Ok(TLElement::cup_cap(n, i)?.scale(&RationalFunction::d_pow(-1)))
}

/// Δₙ(d) as an element of ℚ(d).
pub fn delta(n: usize) -> RationalFunction {
    RationalFunction::from_poly(chebyshev(n).to_poly())
}

/// Normalized closure trace: a diagram with L loops in its closure maps to
/// d^(L - n), extended linearly.
pub fn markov_trace(x: &TLElement) -> RationalFunction {
    let n = x.strands() as i64;
    let mut by_loops: BTreeMap<usize, RationalFunction> = BTreeMap::new();
    for (d, c) in x.terms() {
        let slot = by_loops.entry(d.closure_loops()).or_default();
        *slot = &*slot + c;
    }
    by_loops
        .into_iter()
        .fold(RationalFunction::zero(), |acc, (loops, c)| &acc + &(&c * &RationalFunction::d_pow(loops as i64 - n)))
}

/// Why a candidate fails to be the Jones-Wenzl projector, or `None`.
pub fn jw_characterization_failure(p: &TLElement) -> Result<Option<String>, TlError> {
    let n = p.strands();
    if p.is_zero() {
        return Ok(Some("projector is zero".into()));
    }
    if !p.identity_coeff().is_one() {
        return Ok(Some(format!("identity coefficient is {}", p.identity_coeff())));
    }
    if p.mul(p)? != *p {
        return Ok(Some("not idempotent".into()));
    }
    for i in 1..n {
        let e = generator_e(n, i)?;
        if !e.mul(p)?.is_zero() {
            return Ok(Some(format!("e_{i} p != 0")));
        }
        if !p.mul(&e)?.is_zero() {
            return Ok(Some(format!("p e_{i} != 0")));
        }
    }
    Ok(None)
}

fn jw_unchecked(n: usize) -> Result<TLElement, TlError> {
    let mut p = TLElement::identity(1);
    for k in 1..n {
        let lifted = p.include();
        let u = TLElement::cup_cap(k + 1, k)?;
        let ratio = delta(k - 1).div(&delta(k))?;
        let correction = lifted.mul(&u)?.mul(&lifted)?.scale(&ratio);
        p = lifted.sub(&correction)?;
    }
    Ok(p)
}

/// The Jones-Wenzl projector pₙ over ℚ(d), built by the recursion
/// pₖ₊₁ = pₖ⊗1 − (Δₖ₋₁/Δₖ)·(pₖ⊗1)·Uₖ·(pₖ⊗1) and checked against
/// pₙ² = pₙ ≠ 0, eᵢpₙ = pₙeᵢ = 0 and unit identity coefficient before it is
/// returned.
pub fn jones_wenzl(n: usize) -> Result<TLElement, TlError> {
    if n == 0 {
        return Err(TlError::ZeroStrands);
    }
    let p = jw_unchecked(n)?;
    if let Some(reason) = jw_characterization_failure(&p)? {
        return Err(TlError::VerificationFailed { n, reason });
    }
    Ok(p)
}

/// Parameters at the r-th root of unity: A = i·e^(2πi/4r) and
/// d = −A² − A⁻² = 2cos(π/r).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootParams {
    pub r: u32,
    #[serde(serialize_with = "ser_complex")]
    pub a: Complex64,
    pub d: f64,
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

pub fn root_params(r: u32) -> Result<RootParams, TlError> {
    if r < 3 {
        return Err(TlError::RootTooSmall(r));
    }
    let a = Complex64::i() * Complex64::from_polar(1.0, 2.0 * PI / (4.0 * r as f64));
    Ok(RootParams { r, a, d: 2.0 * (PI / r as f64).cos() })
}

pub fn eval_at_root(f: &RationalFunction, r: u32) -> Result<f64, TlError> {
    f.eval_f64(root_params(r)?.d)
}

/// TLₙ element with real coefficients, the specialization of an exact one.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericTLElement {
    pub n: usize,
    pub d: f64,
    pub terms: BTreeMap<PlanarDiagram, f64>,
}

impl NumericTLElement {
    pub fn specialize(x: &TLElement, d: f64) -> Result<Self, TlError> {
        let terms = x.terms().map(|(g, c)| Ok((g.clone(), c.eval_f64(d)?))).collect::<Result<_, TlError>>()?;
        Ok(Self { n: x.strands(), d, terms })
    }

    pub fn coeff(&self, g: &PlanarDiagram) -> f64 {
        self.terms.get(g).copied().unwrap_or(0.0)
    }

    pub fn markov_trace(&self) -> f64 {
        self.terms.iter().map(|(g, c)| c * self.d.powi(g.closure_loops() as i32 - self.n as i32)).sum()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch { left: self.n, right: other.n });
        }
        let mut terms: BTreeMap<PlanarDiagram, f64> = BTreeMap::new();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let (xy, loops) = x.compose(y)?;
                *terms.entry(xy).or_default() += cx * cy * self.d.powi(loops as i32);
            }
        }
        Ok(Self { n: self.n, d: self.d, terms })
    }

    /// Largest coefficient difference against `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .map(|g| (self.coeff(g) - other.coeff(g)).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(g, c)| serde_json::json!({"pairing": g.pairs().into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(), "coeff": c}))
            .collect();
        serde_json::json!({"n": self.n, "d": self.d, "terms": terms})
    }
}

/// pₙ at d = 2cos(π/r). Only n ≤ r−1 exist there: Δ_{r−1} vanishes, so the
/// recursion would divide by zero at the next step.
pub fn jw_at_root(n: usize, r: u32) -> Result<NumericTLElement, TlError> {
    let params = root_params(r)?;
    if n == 0 {
        return Err(TlError::ZeroStrands);
    }
    if n > r as usize - 1 {
        return Err(TlError::BeyondRootBound { n, r });
    }
    NumericTLElement::specialize(&jones_wenzl(n)?, params.d)
}

/// One instance of a defining relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub i: usize,
    pub j: usize,
    pub holds: bool,
}

/// eᵢ² = eᵢ, eᵢeⱼeᵢ = d⁻²eᵢ for |i−j| = 1, eᵢeⱼ = eⱼeᵢ for |i−j| ≥ 2, over
/// every valid index pair of TLₙ.
pub fn relation_checks(n: usize) -> Result<Vec<RelationCheck>, TlError> {
    let gens: Vec<TLElement> = (1..n).map(|i| generator_e(n, i)).collect::<Result<_, _>>()?;
    let inv_d2 = RationalFunction::d_pow(-2);
    let mut out = Vec::new();
    for i in 1..n {
        let ei = &gens[i - 1];
        out.push(RelationCheck { relation: "idempotent", i, j: i, holds: ei.mul(ei)? == *ei });
        for j in 1..n {
            let ej = &gens[j - 1];
            if i.abs_diff(j) == 1 {
                let lhs = ei.mul(ej)?.mul(ei)?;
                out.push(RelationCheck { relation: "adjacent", i, j, holds: lhs == ei.scale(&inv_d2) });
            } else if i < j && j - i >= 2 {
                out.push(RelationCheck { relation: "far_commute", i, j, holds: ei.mul(ej)? == ej.mul(ei)? });
            }
        }
    }
    Ok(out)
}
