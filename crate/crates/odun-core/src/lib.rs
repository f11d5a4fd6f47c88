//! Exact symmetric-function algebra and combinatorics of partial
//! transformations.
//!
//! The crate provides, with exact (big-integer / big-rational) arithmetic:
//!
//! - [`partition`]: integer partitions, conjugation, enumeration,
//!   centralizer orders
//! - [`schur`]: sparse symmetric functions in the Schur basis, the
//!   Littlewood–Richardson rule via recording-tableau search, skew
//!   expansion, rim-hook (Murnaghan–Nakayama) multiplication, Hall inner
//!   product, and polynomial-representation dimensions
//! - [`power`]: the power-sum basis, basis conversion in both directions,
//!   symmetric-group character values, plethysm, and closed-form plethysm
//!   families
//! - [`forest`]: rooted forests with canonical child order, enumeration,
//!   labeled counting formulas, loop-augmented forests, and the blossoming
//!   predicate
//! - [`transform`]: partial transformations of a finite set, idempotent
//!   structure theory (standard form, stabilizers, counting)
//! - [`oracle`]: brute-force conjugation orbits, permutation characters,
//!   and stabilizers, used as ground truth by the test suite
//! - [`characters`]: Frobenius characteristics of forest and loop-forest
//!   modules, dimension formulas, and the sign-character census
//! - [`foulkes`]: two-sided plethysm comparison tables and the degree-two
//!   closed-form expansion
//! - [`verify`]: the end-to-end verification suites run by the
//!   acceptance tests and the CLI `verify` subcommand

pub mod characters;
pub mod forest;
pub mod foulkes;
pub mod oracle;
pub mod partition;
pub mod power;
pub mod schur;
pub mod transform;
pub mod verify;
