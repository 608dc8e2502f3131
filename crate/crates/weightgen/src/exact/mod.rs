//! Exact big-integer polynomial and series arithmetic.
//!
//! This is the computational substrate for everything else in the crate:
//! Laurent polynomials for characters, ordinary polynomials and rational
//! functions for generating functions, and truncated power series for
//! coefficient extraction. All coefficients are arbitrary-precision
//! integers; there is no floating point anywhere.

mod laurent;
mod poly;
mod rational;
mod series;

pub use laurent::LaurentPoly2;
pub use poly::{Coeff, Poly2};
pub use rational::RationalGF;
pub use series::TruncatedSeries2;
