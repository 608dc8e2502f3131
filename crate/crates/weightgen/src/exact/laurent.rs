//! Sparse Laurent polynomials in two torus variables x1, x2.
//!
//! A `LaurentPoly2` is a finite sum `sum c_{e1,e2} x1^e1 x2^e2` with integer
//! exponents of either sign and arbitrary-precision integer coefficients.
//! Characters of rank-2 representations live here: the coefficient of
//! `x1^m x2^n` in a character is the multiplicity of the weight
//! `m*lambda1 + n*lambda2`.
//!
//! Invariants:
//! - no stored coefficient is zero
//! - exponent pairs are unique keys

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn new() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The monomial x1^e1 x2^e2 with coefficient 1.
    pub fn monomial(e1: i64, e2: i64) -> Self {
        Self::term(1, e1, e2)
    }

    /// The single term c * x1^e1 x2^e2.
    pub fn term(c: impl Into<BigInt>, e1: i64, e2: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e1, e2), c);
        }
        Self { terms }
    }

    /// Sums an iterator of terms, combining duplicate exponents and
    /// stripping zeros.
    pub fn from_terms(it: impl IntoIterator<Item = ((i64, i64), BigInt)>) -> Self {
        let mut terms: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for (e, c) in it {
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        Self { terms }
    }

    /// Coefficient of x1^e1 x2^e2 (zero when absent).
    pub fn coeff(&self, e1: i64, e2: i64) -> BigInt {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    /// Evaluation at x1 = x2 = 1, i.e. the sum of all coefficients.
    /// For a character this is the dimension of the representation.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The substitution x1 <-> x2.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(e1, e2), c)| ((e2, e1), c.clone()))
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&(i64, i64), &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the Laurent ring, using the lexicographic term
    /// order on exponent pairs (translation-invariant, so leading terms
    /// multiply). Fails if `den` does not divide `self` exactly; the
    /// `max_terms` bound caps the quotient size and guarantees termination
    /// on non-divisible inputs.
    pub fn div_exact(&self, den: &Self, max_terms: usize) -> Result<Self> {
        assert!(!den.is_zero(), "division by the zero Laurent polynomial");
        let (&(de1, de2), dc) = den.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly2::new();
        while !rem.is_zero() {
            if quot.num_terms() > max_terms {
                return Err(Error::InexactCharacterDivision);
            }
            let (&(re1, re2), rc) = rem.leading().unwrap();
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return Err(Error::InexactCharacterDivision);
            }
            let t = LaurentPoly2::term(qc, re1 - de1, re2 - de2);
            rem = &rem - &(&t * den);
            quot = &quot + &t;
        }
        Ok(quot)
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        LaurentPoly2::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(&e, c)| (e, c.clone())),
        )
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        LaurentPoly2::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e, c.clone()))
                .chain(rhs.terms.iter().map(|(&e, c)| (e, -c.clone()))),
        )
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut acc: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &rhs.terms {
                let e = (a1 + b1, a2 + b2);
                let entry = acc.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    acc.remove(&e);
                }
            }
        }
        LaurentPoly2 { terms: acc }
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, -c.clone()))
                .collect(),
        }
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self + &rhs
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl Zero for LaurentPoly2 {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly2 {
    fn one() -> Self {
        Self::monomial(0, 0)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(e1, e2), c)) in self.terms.iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (e1 == 0 && e2 == 0) {
                parts.push(mag.to_string());
            }
            for (name, e) in [("x1", e1), ("x2", e2)] {
                if e == 1 {
                    parts.push(name.to_string());
                } else if e != 0 {
                    parts.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_monomials_multiply_to_one() {
        let a = LaurentPoly2::monomial(1, 0);
        let b = LaurentPoly2::monomial(-1, 0);
        assert_eq!(&a * &b, LaurentPoly2::one());
    }

    #[test]
    fn multiplication_by_one_is_identity() {
        let a = LaurentPoly2::from_terms([
            ((1, 0), BigInt::from(1)),
            ((-1, 0), BigInt::from(1)),
            ((1, -1), BigInt::from(1)),
            ((-1, 1), BigInt::from(1)),
        ]);
        assert_eq!(&a * &LaurentPoly2::one(), a);
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let a = LaurentPoly2::from_terms([
            ((2, 3), BigInt::from(5)),
            ((2, 3), BigInt::from(-5)),
        ]);
        assert!(a.is_zero());
        assert_eq!(a.num_terms(), 0);
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = LaurentPoly2::monomial(1, 0)
            + LaurentPoly2::monomial(-1, 0)
            + LaurentPoly2::term(3, 0, 2);
        let b = LaurentPoly2::term(2, -1, 1) + LaurentPoly2::monomial(0, -2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b, 16).unwrap(), a);
    }

    #[test]
    fn inexact_division_is_an_error() {
        let a = LaurentPoly2::monomial(1, 0) + LaurentPoly2::one();
        let b = LaurentPoly2::term(2, 0, 1) + LaurentPoly2::one();
        assert!(a.div_exact(&b, 16).is_err());
    }
}
