//! Exact moment–cumulant calculus.
//!
//! Sequences are exact rationals ([`Rational`]); an "umbra" is represented by
//! its moment sequence ([`MomentSequence`]). The crate provides:
//!
//! - truncated power series ([`series`]);
//! - integer, set, noncrossing and interval partitions ([`partitions`]);
//! - classical, boolean, free and multiplier-induced cumulants, the
//!   convolutions they linearize, and independent oracles ([`transforms`]);
//! - literal incidence-algebra sums on partition lattices ([`lattice`]);
//! - parking functions and volume polynomials ([`parking`]);
//! - batch verification suites tying the above together ([`suites`]).
//!
//! ```
//! use cumulants::{moments_from_free, MomentSequence};
//!
//! let r = MomentSequence::unity(5);
//! assert_eq!(moments_from_free(&r), MomentSequence::from_ints(&[1, 2, 5, 14, 42]));
//! ```

pub mod error;
pub mod lattice;
pub mod parking;
pub mod partitions;
pub mod rational;
pub mod series;
pub mod suites;
pub mod transforms;

pub use error::{Error, Result};
pub use lattice::{MultiplicativeFunction, Theorem, VerificationReport};
pub use partitions::{IntegerPartition, Lattice, SetPartition};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use suites::Suite;
pub use transforms::*;
