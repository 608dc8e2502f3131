//! Truncated bivariate formal power series.
//!
//! A `TruncatedSeries2<C>` stores coefficients for every exponent pair with
//! `d1 + d2 <= order` (a total-degree simplex, so ring operations are closed)
//! and is exact within that range. Arithmetic between two series requires
//! equal truncation orders.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{Coeff, Poly2};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries2<C = BigInt> {
    order: u32,
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> TruncatedSeries2<C> {
    pub fn zero(order: u32) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_poly(&Poly2::one(), order)
    }

    /// Truncates a polynomial to total degree <= order.
    pub fn from_poly(p: &Poly2<C>, order: u32) -> Self {
        Self {
            order,
            terms: p
                .iter()
                .filter(|(&(a, b), _)| a + b <= order)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, d1: u32, d2: u32) -> C {
        assert!(
            d1 + d2 <= self.order,
            "coefficient at t1^{d1} t2^{d2} is beyond truncation order {}",
            self.order
        );
        self.terms.get(&(d1, d2)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.terms.iter()
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch(self.order, rhs.order));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let mut out = Self::zero(self.order);
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &rhs.terms {
                if a1 + b1 + a2 + b2 > self.order {
                    continue;
                }
                out.insert_add((a1 + b1, a2 + b2), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    fn insert_add(&mut self, e: (u32, u32), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
        }
    }

    /// The unique series `s` with `den * s = num` modulo total degree >
    /// `order`, for a denominator whose constant term is 1 (so no
    /// coefficient division is ever needed). Works over any coefficient
    /// ring, e.g. Laurent-polynomial coefficients for character expansion.
    pub fn expand_quotient(num: &Poly2<C>, den: &Poly2<C>, order: u32) -> Result<Self> {
        if den.constant_term() != C::one() {
            return Err(Error::ZeroConstantTerm);
        }
        let den_tail: Vec<((u32, u32), C)> = den
            .iter()
            .filter(|(&e, _)| e != (0, 0))
            .map(|(&e, c)| (e, c.clone()))
            .collect();
        let mut out = Self::zero(order);
        for d in 0..=order {
            for i in 0..=d {
                let j = d - i;
                let mut acc = num.coeff(i, j);
                for ((k, l), c) in &den_tail {
                    if *k <= i && *l <= j {
                        if let Some(prev) = out.terms.get(&(i - k, j - l)) {
                            acc = acc - c.clone() * prev.clone();
                        }
                    }
                }
                if !acc.is_zero() {
                    out.terms.insert((i, j), acc);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, u32, u32)]) -> Poly2 {
        Poly2::from_i64_terms(terms)
    }

    #[test]
    fn geometric_series_in_t2() {
        // 1/(1 - t2) up to order 3
        let s = TruncatedSeries2::expand_quotient(&Poly2::one(), &p(&[(1, 0, 0), (-1, 0, 1)]), 3)
            .unwrap();
        let expect = TruncatedSeries2::from_poly(&p(&[(1, 0, 0), (1, 0, 1), (1, 0, 2), (1, 0, 3)]), 3);
        assert_eq!(s, expect);
    }

    #[test]
    fn subtraction_from_self_is_zero() {
        let s = TruncatedSeries2::expand_quotient(&Poly2::one(), &p(&[(1, 0, 0), (-1, 1, 1)]), 6)
            .unwrap();
        assert!(s.sub(&s).unwrap().is_zero());
    }

    #[test]
    fn truncated_product_of_binomials() {
        let a = TruncatedSeries2::from_poly(&p(&[(1, 0, 0), (1, 1, 0)]), 2);
        let b = TruncatedSeries2::from_poly(&p(&[(1, 0, 0), (-1, 1, 0)]), 2);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod, TruncatedSeries2::from_poly(&p(&[(1, 0, 0), (-1, 2, 0)]), 2));
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a: TruncatedSeries2 = TruncatedSeries2::one(3);
        let b: TruncatedSeries2 = TruncatedSeries2::one(4);
        assert!(matches!(a.add(&b), Err(Error::OrderMismatch(3, 4))));
    }
}
