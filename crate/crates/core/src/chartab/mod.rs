//! Exact irreducible character tables by the class-sum eigenvector method:
//! simultaneous eigenspace splitting of class matrices over a prime field
//! `F_q` with `q ≡ 1 (mod exp(G))` and `q > 2√|G|`, lifted to cyclotomic
//! values through the correspondence between a fixed order-`exp(G)` element
//! of `F_q^*` and `ζ_{exp(G)}`.  The lifted table is exact: orthogonality
//! holds with zero residue, with no tolerance anywhere.

mod modlinalg;

use crate::arith::{is_prime, mul_mod, pow_mod};
use crate::cyclo::Cyclotomic;
use crate::groups::{ConjugacyPartition, FiniteGroup, Subgroup};
use modlinalg::{char_poly, inv, kernel_basis, poly_eval, solve_in_span, ModMatrix};
use num::{BigInt, BigRational, One};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChartabError {
    #[error("group has {classes} conjugacy classes, above the configured bound {bound}")]
    TooManyClasses { classes: usize, bound: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct CharTabConfig {
    pub max_classes: usize,
}

impl Default for CharTabConfig {
    fn default() -> Self {
        CharTabConfig { max_classes: 120 }
    }
}

/// An exact character table.  Classes are indexed as in the group's
/// [`ConjugacyPartition`]; rows are sorted by degree, then by the value
/// sequence, so tables are reproducible across runs.
pub struct CharacterTable {
    pub group_name: String,
    pub group_order: usize,
    pub class_sizes: Vec<u32>,
    pub rep_orders: Vec<u32>,
    pub class_reps: Vec<u32>,
    /// `rows[i][j] = χ_i(g_j)`.
    pub rows: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<u64>,
}
