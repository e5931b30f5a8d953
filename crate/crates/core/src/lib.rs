//! Exact counting of pairwise commuting permutation tuples in symmetric
//! groups, and sign analysis of the associated Bessenrodt-Ono deltas.
//!
//! The central quantity is N_ell(n): the number of ell-tuples of pairwise
//! commuting permutations on n letters divided by n!, equivalently the
//! number of homomorphisms from the rank-ell integer lattice into the
//! symmetric group scaled the same way. At ell = 2 this is the partition
//! function. Everything is computed in exact big-integer / big-rational
//! arithmetic; decimal digits appear only at the rendering boundary.
//!
//! Module map:
//! - [`arith`]: factorization, divisor sums, the partition function.
//! - [`subgroups`]: index-n subgroup counts of the rank-ell lattice, by two
//!   independent routes.
//! - [`counts`]: the count recursion, its Euler-product and
//!   ordered-composition oracles, exact closed forms and remainders.
//! - [`census`]: direct enumeration over permutation tuples (ground truth
//!   at tiny sizes).
//! - [`asymptotics`]: leading/subleading growth terms and envelopes in the
//!   rank, plus the comparison-table machinery.
//! - [`bo`]: Bessenrodt-Ono deltas, exception scans, sign-stabilization
//!   profiles, certified rank thresholds.
//! - [`render`]: exact-to-decimal rendering (the only lossy step).
//! - [`golden`]: embedded reference tables and cell-level verification.

pub mod arith;
pub mod asymptotics;
pub mod bo;
pub mod census;
pub mod counts;
pub mod error;
pub mod golden;
pub mod render;
pub mod subgroups;

pub use arith::{factorize, partition, sigma, BigRat, Factorization};
pub use bo::{delta, sign_profile, theorem_bound, DeltaSign, SignProfile};
pub use census::{brute_force_census, CommutingTupleCensus};
pub use counts::{n_ell, CountTable};
pub use error::{Error, Result};

pub use num_bigint::BigInt;
