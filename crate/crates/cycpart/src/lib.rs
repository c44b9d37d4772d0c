//! Exact counting of t-element subsets of Z/mZ with prescribed sum, and the
//! matching tallies of binary necklaces filtered by rotation frequency.
//!
//! Everything is integer-exact: counts are arbitrary-precision, divisions by
//! the modulus are asserted exact, and floating point appears only in the
//! discrete-Fourier verification paths where a tolerance is pinned.
//!
//! Module map:
//! - [`numtheory`]: divisors, Möbius, totient, Ramanujan sums, binomials,
//!   and the divisor map d -> d/(u,d).
//! - [`oracle`]: brute-force ground truth (subset enumeration, necklace
//!   enumeration, the distinct-part partition recursion).
//! - [`partitions`]: closed-form counts, maximizer classification, urn
//!   distributions, diagrams.
//! - [`genfunc`]: the product generating function, its closed coefficient
//!   rows at roots of unity, and the DFT route to the filtered counts.
//! - [`necklaces`]: aperiodic and frequency-filtered necklace counts and the
//!   subset-sum/necklace correspondence.
//! - [`verify`]: the invariant sweeps shared by tests and the CLI.
//! - [`cli`]: the `cycpart` command-line surface.

pub mod cli;
pub mod genfunc;
pub mod necklaces;
pub mod numtheory;
pub mod oracle;
pub mod partitions;
pub mod verify;

pub use numtheory::{ExactCount, SignedExact, Valuation};
