//! Rational generating functions: exact numerator/denominator pairs.
//!
//! A `RationalGF` represents `numerator / denominator` with both sides kept
//! as exact integer polynomials in t1, t2. No reduction to lowest terms is
//! attempted; equality is decided by cross-multiplication, and a power-series
//! expansion exists whenever the denominator has a nonzero constant term.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::Poly2;
use super::series::TruncatedSeries2;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: Poly2,
    pub denominator: Poly2,
}

impl RationalGF {
    pub fn new(numerator: Poly2, denominator: Poly2) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        Self {
            numerator,
            denominator,
        }
    }

    /// A polynomial viewed as a rational function over 1.
    pub fn from_poly(p: Poly2) -> Self {
        Self::new(p, Poly2::one())
    }

    /// Equality as rational functions: a/b == c/d iff a*d == c*b. This is
    /// the only comparison that stays exact when numerator and denominator
    /// carry removable common factors.
    pub fn rational_equal(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    pub fn mul_poly(&self, p: &Poly2) -> Self {
        Self::new(&self.numerator * p, self.denominator.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            &self.denominator * &other.denominator,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            &(&self.numerator * &other.denominator) - &(&other.numerator * &self.denominator),
            &self.denominator * &other.denominator,
        )
    }

    /// The substitution t1 <-> t2.
    pub fn swap_vars(&self) -> Self {
        Self::new(self.numerator.swap_vars(), self.denominator.swap_vars())
    }

    /// The unique power-series expansion to total degree <= `order`.
    ///
    /// Requires a nonzero constant term in the denominator. A constant term
    /// other than +-1 is allowed as long as every expanded coefficient stays
    /// integral (exact divisibility is checked at each step).
    pub fn series(&self, order: u32) -> Result<TruncatedSeries2> {
        let c0 = self.denominator.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let den_tail: Vec<((u32, u32), BigInt)> = self
            .denominator
            .iter()
            .filter(|(&e, _)| e != (0, 0))
            .map(|(&e, c)| (e, c.clone()))
            .collect();
        let mut out = TruncatedSeries2::zero(order);
        let mut terms = std::collections::BTreeMap::new();
        for d in 0..=order {
            for i in 0..=d {
                let j = d - i;
                let mut acc = self.numerator.coeff(i, j);
                for ((k, l), c) in &den_tail {
                    if *k <= i && *l <= j {
                        if let Some(prev) = terms.get(&(i - k, j - l)) {
                            acc -= c * prev;
                        }
                    }
                }
                let (qc, rem) = acc.div_rem(&c0);
                if !rem.is_zero() {
                    return Err(Error::NonIntegralCoefficient(i, j));
                }
                if !qc.is_zero() {
                    terms.insert((i, j), qc);
                }
            }
        }
        for (&(i, j), c) in &terms {
            out = out.add(&TruncatedSeries2::from_poly(
                &Poly2::term(c.clone(), i, j),
                order,
            ))?;
        }
        Ok(out)
    }

    /// Series coefficient of t1^p t2^q.
    pub fn coeff(&self, p: u32, q: u32) -> Result<BigInt> {
        Ok(self.series(p + q)?.coeff(p, q))
    }
}
