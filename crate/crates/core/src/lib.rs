//! Partitions of `[0, m]` (and prefixes of ℕ) into two sets `C`, `D` whose
//! representation functions `R_C(n) = |{c < c' ∈ C : c + c' = n}|` agree.
//!
//! * [`sets`]: packed integer sets, evil/odious (Thue–Morse) generators, partition pairs.
//! * [`repfn`]: `R_S` pointwise and as tables, plus cross counts.
//! * [`constructions`]: the explicit partition families and block lifting.
//! * [`verifier`]: forcing, brute-force oracles and sweeps over m and overlaps.
//! * [`genfun`]: exact integer polynomials and the generating-function identities.
//! * [`cli`]: the `samerep` command line.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod genfun;
pub mod repfn;
pub mod sets;
pub mod verifier;

pub use error::{Error, Result};
pub use exec::Exec;
pub use repfn::RepTable;
pub use sets::{IntSet, IntersectionSpec, PartitionPair};

/// Embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
