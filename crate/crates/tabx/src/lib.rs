//! Exact combinatorics for the restriction of polynomial `GL(2n)`
//! representations to `Sp(2n)`.
//!
//! The crate enumerates Littlewood-Richardson tableaux of skew shape and
//! even weight, builds their left companion tableaux through nested
//! partition chains, and checks the two flag conditions that govern the
//! branching models: the Sundaram bound on odd entries of the skew
//! tableau and the King/symplectic bound on the first column of the
//! companion. A tableau breaks the one exactly when its companion breaks
//! the other, with the violating rows pinned to each other; the
//! [`branching`] module verifies this mirroring exhaustively at small
//! sizes and computes the branching coefficients under both models.

pub mod branching;
pub mod companion;
pub mod error;
pub mod io;
pub mod lr;
pub mod partition;
pub mod sundaram;
pub mod tableau;

#[cfg(test)]
pub(crate) mod testutil;

pub use crate::error::{CheckFailure, Error};
pub use crate::partition::{ContentVector, Partition};
pub use crate::sundaram::{ViolationKind, ViolationReport};
pub use crate::tableau::{Cell, NestedChain, SkewTableau, Word};
