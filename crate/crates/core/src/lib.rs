//! Exact combinatorics of the splitting rule for real Gromov–Witten
//! invariants of local curves, cross-checked against branched-cover counts.
//!
//! - [`partitions`]: partitions, automorphism and centralizer orders.
//! - [`characters`]: symmetric-group characters via Murnaghan–Nakayama.
//! - [`hurwitz`]: cover counts by tuple enumeration and by characters.
//! - [`tqft`]: invariant tables, the degeneration rule, generating series.
//! - [`signs`]: orientation-sign bookkeeping for the attaching map.
//! - [`cli`]: the `rgw` command-line front end.
//!
//! All arithmetic is exact; no floating point is used.

pub mod characters;
pub mod cli;
pub mod error;
pub mod hurwitz;
pub mod json;
pub mod partitions;
pub mod signs;
pub mod tqft;

pub use error::{Error, Result};
pub use partitions::{Partition, Profile};
