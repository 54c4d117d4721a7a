//! Exact computation of representation-theoretic prime bounds.
//!
//! Given a simple root datum and a representation (a weight multiset built
//! from highest weights and constructors), this crate computes
//!
//! * the height of the representation (twice the largest root-height of a
//!   dominant weight occurring in it),
//! * the torsion primes of its character set: primes dividing the gcd of
//!   the rank-sized minors of some subset of distinct characters,
//! * the separable index, the maximum of the two,
//!
//! together with torus-level GIT on a weight support: separability of a
//! torus orbit, semistability and stability, and the optimal destabilizing
//! one-parameter subgroup.
//!
//! All arithmetic is exact.

pub mod error;
pub mod git;
pub mod lattice;
pub mod limits;
pub mod reps;
pub mod report;
pub mod roots;
pub mod separable;

pub use error::{Error, Result};
pub use limits::Limits;
pub use roots::{make_datum, RationalHeight, RootDatum, TypeLetter, Weight};
