//! Multiplicity generating functions for C2 and A2.
//!
//! Notation used throughout: `mu_{p,q}(m,n)` is the multiplicity of the
//! weight `m*lambda1 + n*lambda2` in the irreducible representation with
//! highest weight `p*lambda1 + q*lambda2`, and
//!
//! ```text
//! A_{m,n}(t1,t2) = sum_{p,q >= 0} mu_{p,q}(m,n) t1^p t2^q
//! ```
//!
//! is the generating function of that multiplicity across all irreducibles.
//! The modules below hold the closed forms of these functions, the
//! generating function of the characters they derive from, and the
//! four-variable master function collecting every `A_{m,n}` at once.

pub mod a2;
pub mod c2;
