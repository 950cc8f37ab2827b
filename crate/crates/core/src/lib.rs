//! Monoids of fusion-invariant representations of Sylow subgroups.
//!
//! Given a finite permutation group `G` and a prime `p`, the pipeline takes
//! a Sylow `p`-subgroup `S`, computes its character table exactly, finds
//! which `S`-classes fuse in `G`, builds the lattice of `G`-invariant
//! virtual characters, and enumerates the atoms (irreducible invariant
//! representations) of the monoid of genuine invariant representations.
//! From the atoms it decides factoriality and half-factoriality with
//! explicit witnesses.

pub mod catalog;
pub mod chartab;
pub mod cyclotomic;
pub mod error;
pub mod fimonoid;
pub mod fusion;
pub mod intlin;
pub mod perm;
pub mod report;
pub mod repring;
pub mod scalar;
pub mod util;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};

/// Cyclotomic numbers with arbitrary-precision rational coordinates.
pub type Cyclo = cyclotomic::Cyclotomic<BigRational>;

/// Integer matrices with arbitrary-precision entries.
pub type IntMatrix = intlin::Matrix<BigInt>;
