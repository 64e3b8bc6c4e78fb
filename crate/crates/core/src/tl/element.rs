use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PlanarDiagram, Poly, RationalFunction, TlError};

/// Element of TLₙ: a finite ℚ(d)-combination of planar diagrams. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<PlanarDiagram, RationalFunction>,
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(PlanarDiagram::identity(n), RationalFunction::one())
    }

    pub fn from_diagram(d: PlanarDiagram, coeff: RationalFunction) -> Self {
        let mut e = Self::zero(d.strands());
        e.add_term(d, coeff);
        e
    }

    /// Raw cup-cap diagram Uᵢ, with Uᵢ² = d·Uᵢ.
    pub fn cup_cap(n: usize, i: usize) -> Result<Self, TlError> {
        Ok(Self::from_diagram(PlanarDiagram::cup_cap(n, i)?, RationalFunction::one()))
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarDiagram, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &PlanarDiagram) -> RationalFunction {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    /// Coefficient of the identity diagram.
    pub fn identity_coeff(&self) -> RationalFunction {
        self.coeff(&PlanarDiagram::identity(self.n))
    }

    fn add_term(&mut self, d: PlanarDiagram, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TlError> {
        self.add(&other.scale(&RationalFunction::from_int(-1)))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, terms: self.terms.iter().map(|(d, k)| (d.clone(), k * c)).collect() }
    }

    /// Least common multiple of the coefficient denominators.
    fn common_denominator(&self) -> Poly {
        let mut den = Poly::one();
        for c in self.terms.values() {
            if c.denom() != &den && !den.div_rem(c.denom()).1.is_zero() {
                let g = den.gcd(c.denom());
                den = &den * &c.denom().div_rem(&g).0;
            }
        }
        den
    }

    /// Coefficients rescaled to polynomials over `den`.
    fn numerators(&self, den: &Poly) -> Vec<(&PlanarDiagram, Poly)> {
        self.terms
            .iter()
            .map(|(d, c)| {
                let scale = if c.denom() == den { Poly::one() } else { den.div_rem(c.denom()).0 };
                (d, c.numer() * &scale)
            })
            .collect()
    }

    /// Product with `self` stacked on top of `other`; each closed loop
    /// contributes a factor d.
    pub fn mul(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        let (dx, dy) = (self.common_denominator(), other.common_denominator());
        let (nx, ny) = (self.numerators(&dx), other.numerators(&dy));
        let mut acc: BTreeMap<PlanarDiagram, Poly> = BTreeMap::new();
        for (x, px) in &nx {
            for (y, py) in &ny {
                let (xy, loops) = x.compose(y)?;
                let term = (px * py).shift(loops);
                let slot = acc.entry(xy).or_default();
                *slot = &*slot + &term;
            }
        }
        let den = &dx * &dy;
        let mut out = Self::zero(self.n);
        for (d, num) in acc {
            out.add_term(d, RationalFunction::new(num, den.clone())?);
        }
        Ok(out)
    }

    /// TLₙ ↪ TLₙ₊₁ by a through-strand on the right.
    pub fn include(&self) -> Self {
        Self { n: self.n + 1, terms: self.terms.iter().map(|(d, c)| (d.include(), c.clone())).collect() }
    }

    /// Builds an element from `(diagram, coefficient)` pairs, summing
    /// repeats.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (PlanarDiagram, RationalFunction)>) -> Result<Self, TlError> {
        let mut out = Self::zero(n);
        for (d, c) in terms {
            if d.strands() != n {
                return Err(TlError::StrandMismatch { left: n, right: d.strands() });
            }
            out.add_term(d, c);
        }
        Ok(out)
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if d.is_identity() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{d}")?;
            } else {
                write!(f, "({c})·{d}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    pairing: Vec<[usize; 2]>,
    coeff: RationalFunction,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for TLElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermJson { pairing: d.pairs().into_iter().map(|(a, b)| [a, b]).collect(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TLElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let pairs: Vec<(usize, usize)> = t.pairing.iter().map(|p| (p[0], p[1])).collect();
                Ok((PlanarDiagram::from_pairs(raw.n, &pairs)?, t.coeff))
            })
            .collect::<Result<Vec<_>, TlError>>()
            .map_err(D::Error::custom)?;
        TLElement::from_terms(raw.n, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raw_cup_cap_squares_to_d_times_itself() {
        let u = TLElement::cup_cap(2, 1).unwrap();
        assert_eq!(u.mul(&u).unwrap(), u.scale(&RationalFunction::d()));
    }

    #[test]
    fn identity_is_unit() {
        let u = TLElement::cup_cap(3, 2).unwrap();
        let one = TLElement::identity(3);
        assert_eq!(one.mul(&u).unwrap(), u);
        assert_eq!(u.mul(&one).unwrap(), u);
    }

    #[test]
    fn cancellation_drops_terms() {
        let u = TLElement::cup_cap(3, 1).unwrap();
        assert!(u.sub(&u).unwrap().is_zero());
        assert!(u.add(&TLElement::identity(2)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = TLElement::identity(2).sub(&TLElement::cup_cap(2, 1).unwrap().scale(&RationalFunction::d_pow(-1))).unwrap();
        let j = serde_json::to_value(&x).unwrap();
        assert_eq!(j["n"], 2);
        assert_eq!(j["terms"].as_array().unwrap().len(), 2);
        let back: TLElement = serde_json::from_value(j).unwrap();
        assert_eq!(back, x);
        let bad = serde_json::json!({"n": 2, "terms": [{"pairing": [[0, 3], [1, 2]], "coeff": {"num": [["1","1"]], "den": [["1","1"]]}}]});
        assert!(serde_json::from_value::<TLElement>(bad).is_err());
    }
}
