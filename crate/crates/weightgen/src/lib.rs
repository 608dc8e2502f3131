//! Exact weight-multiplicity computations for the rank-2 simple Lie
//! algebras C2 and A2.
//!
//! Multiplicities are computed by four independent routes — the Freudenthal
//! recursion, Weyl-character coefficient extraction, closed-form generating
//! functions, and a lattice counting rule — and the crate ships a
//! cross-validation harness ([`verify`]) that checks them against each
//! other over configurable ranges. All arithmetic is exact: big-integer
//! polynomial coefficients, exact rationals in the Freudenthal recursion,
//! no floating point anywhere.

pub mod error;
pub mod exact;
pub mod genfunc;
pub mod lie;
pub mod recurrence;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
