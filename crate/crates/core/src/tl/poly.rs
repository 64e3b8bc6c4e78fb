use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::Rational;

/// Polynomial in one variable over ℚ, coefficients lowest degree first with
/// no trailing zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Multiplies by xᵏ.
    pub fn shift(mut self, k: usize) -> Self {
        if k > 0 && !self.is_zero() {
            self.coeffs.splice(0..0, std::iter::repeat_n(Rational::zero(), k));
        }
        self
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub(crate) fn fmt_in(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || k == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in("d", f)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Δₙ: Δ₀ = 1, Δ₁ = x, Δₙ₊₁ = x·Δₙ − Δₙ₋₁. Integer coefficients, lowest
/// degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebyshevPoly {
    index: usize,
    coeffs: Vec<BigInt>,
}

impl ChebyshevPoly {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for ChebyshevPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt_in("x", f)
    }
}

pub fn chebyshev(n: usize) -> ChebyshevPoly {
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    if n == 0 {
        return ChebyshevPoly { index: 0, coeffs: prev };
    }
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..n {
        let mut next: Vec<BigInt> = std::iter::once(BigInt::zero()).chain(cur.iter().cloned()).collect();
        for (c, p) in next.iter_mut().zip(&prev) {
            *c -= p;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    ChebyshevPoly { index: n, coeffs: cur }
}

pub(crate) fn rational_to_strings(r: &Rational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

pub(crate) fn rational_from_strings(parts: &[String]) -> Result<Rational, String> {
    let [n, d] = parts else {
        return Err(format!("expected 2 integer strings, got {}", parts.len()));
    };
    let int = |s: &String| s.trim().parse::<BigInt>().map_err(|e| format!("bad integer {s:?}: {e}"));
    let d = int(d)?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(int(n)?, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev(0).to_poly(), Poly::from_ints(&[1]));
        assert_eq!(chebyshev(1).to_poly(), Poly::from_ints(&[0, 1]));
        assert_eq!(chebyshev(2).to_poly(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(chebyshev(3).to_poly(), Poly::from_ints(&[0, -2, 0, 1]));
        assert_eq!(chebyshev(3).to_string(), "x^3 - 2x");
        for n in 0..12 {
            assert_eq!(chebyshev(n).degree(), n);
        }
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[1, 1]);
        let (quo, rem) = a.div_rem(&b);
        assert_eq!(quo, Poly::from_ints(&[-1, 1]));
        assert!(rem.is_zero());
        let c = Poly::from_ints(&[2, 2, 0, 0]).scale(&q(1, 3));
        assert_eq!(a.gcd(&c), b);
        assert!(Poly::from_ints(&[0, 1]).gcd(&Poly::from_ints(&[1, 1])).is_one());
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[-1, 0, 1]).to_string(), "d^2 - 1");
        assert_eq!(Poly::new(vec![q(1, 2), q(-3, 2)]).to_string(), "-(3/2)d + 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_strings(&q(-4, 6)), ["-2".to_string(), "3".to_string()]);
        assert_eq!(rational_from_strings(&["6".into(), "-4".into()]).unwrap(), q(-3, 2));
        assert!(rational_from_strings(&["1".into(), "0".into()]).is_err());
    }
}
