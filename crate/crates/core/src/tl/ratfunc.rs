use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::Rational;

use super::poly::{rational_from_strings, rational_to_strings, Poly};
use super::TlError;

/// Element of ℚ(d): reduced fraction with a monic denominator, so equal
/// functions have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, TlError> {
        if den.is_zero() {
            return Err(TlError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let lead = den.leading().expect("nonzero denominator").recip();
        Self { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    /// The loop value d.
    pub fn d() -> Self {
        Self::from_poly(Poly::x())
    }

    /// dᵏ for any integer k.
    pub fn d_pow(k: i64) -> Self {
        let m = Poly::monomial(Rational::from_integer(1.into()), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            Self { num: Poly::one(), den: m }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, TlError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, TlError> {
        Ok(self * &rhs.inv()?)
    }

    /// Substitutes a float for d. A denominator within 1e-12 of zero is a
    /// pole and is reported rather than divided through.
    pub fn eval_f64(&self, d: f64) -> Result<f64, TlError> {
        let den = self.den.eval_f64(d);
        if den.abs() < 1e-12 {
            return Err(TlError::Pole { at: d });
        }
        Ok(self.num.eval_f64(d) / den)
    }

    pub fn eval(&self, d: &Rational) -> Result<Rational, TlError> {
        let den = self.den.eval(d);
        if num_traits::Zero::is_zero(&den) {
            return Err(TlError::ZeroDenominator);
        }
        Ok(self.num.eval(d) / den)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| p.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() > 1;
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if wrap(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if wrap(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduced(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if rhs.den.is_one() && rhs.num.degree() == Some(0) {
            return RationalFunction { num: self.num.scale(&rhs.num.coeffs()[0]), den: self.den.clone() };
        }
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[derive(Serialize, Deserialize)]
struct RationalFunctionJson {
    num: Vec<[String; 2]>,
    den: Vec<[String; 2]>,
}

fn poly_from_json(parts: &[[String; 2]]) -> Result<Poly, String> {
    Ok(Poly::new(parts.iter().map(|p| rational_from_strings(p)).collect::<Result<_, _>>()?))
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalFunctionJson {
            num: self.num.coeffs().iter().map(rational_to_strings).collect(),
            den: self.den.coeffs().iter().map(rational_to_strings).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RationalFunctionJson::deserialize(d)?;
        let num = poly_from_json(&raw.num).map_err(D::Error::custom)?;
        let den = poly_from_json(&raw.den).map_err(D::Error::custom)?;
        Self::new(num, den).map_err(D::Error::custom)
    }
}
