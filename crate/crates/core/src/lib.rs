//! Exact computational workbench for vanishing elements of irreducible characters.
//!
//! The crate is organized around four layers:
//!
//! * [`cyclo`] — exact arithmetic in cyclotomic fields `Q(ζ_n)` and decision
//!   procedures for vanishing sums of roots of unity;
//! * [`groups`] — a finite-group engine (enumeration, conjugacy classes,
//!   structural subgroups, abelian duality, group constructors);
//! * [`chartab`] — exact irreducible character tables via class-sum
//!   eigenvector computation over a prime field, lifted to cyclotomics;
//! * [`vanish`] — vanishing-set analysis: `V(G)`, `N_v(G)`, the proportion
//!   `P_v(G)` as an exact rational, and mechanical structure checks.
//!
//! [`lab`] adds group-file ingestion, the bundled corpus and batch
//! verification reports consumed by the `vanishlab` CLI.
//!
//! All quantities are exact: coefficients are big rationals, thresholds are
//! exact rational comparisons, and no floating point enters any verdict.

pub mod arith;
pub mod chartab;
pub mod cyclo;
pub mod groups;
pub mod lab;
pub mod vanish;

pub use cyclo::{Cyclotomic, RootOfUnity};
pub use groups::{FiniteGroup, Subgroup};
pub use chartab::CharacterTable;
pub use vanish::VanishingReport;
