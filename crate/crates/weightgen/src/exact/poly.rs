//! Sparse bivariate polynomials with nonnegative exponents.
//!
//! `Poly2<C>` is a finite sum `sum c_{d1,d2} t1^d1 t2^d2` over an arbitrary
//! commutative coefficient ring `C`. The default `C = BigInt` covers the
//! numerators and denominators of multiplicity generating functions; nesting
//! (`Poly2<LaurentPoly2>`, `Poly2<Poly2>`) covers polynomials in t1, t2 whose
//! coefficients are themselves polynomials in the torus or auxiliary
//! variables.
//!
//! Invariants: all exponents nonnegative; no zero coefficients stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficient-ring bound for the polynomial and series types.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Coeff for T where T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly2<C = BigInt> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> Default for Poly2<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly2<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The monomial t1^d1 t2^d2 with coefficient 1.
    pub fn monomial(d1: u32, d2: u32) -> Self {
        Self::term(C::one(), d1, d2)
    }

    /// The single term c * t1^d1 t2^d2.
    pub fn term(c: C, d1: u32, d2: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((d1, d2), c);
        }
        Self { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), C)>) -> Self {
        let mut terms: BTreeMap<(u32, u32), C> = BTreeMap::new();
        for (e, c) in it {
            if c.is_zero() {
                continue;
            }
            match terms.remove(&e) {
                None => {
                    terms.insert(e, c);
                }
                Some(old) => {
                    let s = old + c;
                    if !s.is_zero() {
                        terms.insert(e, s);
                    }
                }
            }
        }
        Self { terms }
    }

    pub fn coeff(&self, d1: u32, d2: u32) -> C {
        self.terms.get(&(d1, d2)).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0, 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    /// The substitution t1 <-> t2.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies a ring map to every coefficient (e.g. substituting values
    /// for the variables of a nested coefficient ring).
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly2<D> {
        Poly2::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }
}

impl<C: Coeff> Add for &Poly2<C> {
    type Output = Poly2<C>;
    fn add(self, rhs: &Poly2<C>) -> Poly2<C> {
        Poly2::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(&e, c)| (e, c.clone())),
        )
    }
}

impl<C: Coeff> Sub for &Poly2<C> {
    type Output = Poly2<C>;
    fn sub(self, rhs: &Poly2<C>) -> Poly2<C> {
        Poly2::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e, c.clone()))
                .chain(rhs.terms.iter().map(|(&e, c)| (e, -c.clone()))),
        )
    }
}

impl<C: Coeff> Mul for &Poly2<C> {
    type Output = Poly2<C>;
    fn mul(self, rhs: &Poly2<C>) -> Poly2<C> {
        let mut acc: BTreeMap<(u32, u32), C> = BTreeMap::new();
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &rhs.terms {
                let e = (a1 + b1, a2 + b2);
                let prod = ca.clone() * cb.clone();
                match acc.remove(&e) {
                    None => {
                        if !prod.is_zero() {
                            acc.insert(e, prod);
                        }
                    }
                    Some(old) => {
                        let s = old + prod;
                        if !s.is_zero() {
                            acc.insert(e, s);
                        }
                    }
                }
            }
        }
        Poly2 { terms: acc }
    }
}

impl<C: Coeff> Neg for &Poly2<C> {
    type Output = Poly2<C>;
    fn neg(self) -> Poly2<C> {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, -c.clone()))
                .collect(),
        }
    }
}

impl<C: Coeff> Add for Poly2<C> {
    type Output = Poly2<C>;
    fn add(self, rhs: Poly2<C>) -> Poly2<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Poly2<C> {
    type Output = Poly2<C>;
    fn sub(self, rhs: Poly2<C>) -> Poly2<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for Poly2<C> {
    type Output = Poly2<C>;
    fn mul(self, rhs: Poly2<C>) -> Poly2<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for Poly2<C> {
    type Output = Poly2<C>;
    fn neg(self) -> Poly2<C> {
        -&self
    }
}

impl<C: Coeff> Zero for Poly2<C> {
    fn zero() -> Self {
        Poly2::zero()
    }
    fn is_zero(&self) -> bool {
        Poly2::is_zero(self)
    }
}

impl<C: Coeff> One for Poly2<C> {
    fn one() -> Self {
        Poly2::one()
    }
}

impl Poly2<BigInt> {
    /// Convenience constructor from i64 terms: (coefficient, d1, d2).
    pub fn from_i64_terms(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(c, d1, d2)| ((d1, d2), BigInt::from(c))),
        )
    }
}

/// Graded-lexicographic order on exponent pairs: total degree first,
/// then t1 exponent descending within a degree block.
pub(crate) fn grlex_key(e: (u32, u32)) -> (u32, i64) {
    (e.0 + e.1, -i64::from(e.0))
}

impl fmt::Display for Poly2<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(&e, _)| grlex_key(e));
        for (i, (&(d1, d2), c)) in terms.into_iter().enumerate() {
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
            if !mag.is_one() || (d1 == 0 && d2 == 0) {
                parts.push(mag.to_string());
            }
            for (name, e) in [("t1", d1), ("t2", d2)] {
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
