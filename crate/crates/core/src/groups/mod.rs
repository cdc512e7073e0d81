//! Finite group engine: enumeration, conjugacy, structural subgroups,
//! abelian duality and the group constructors used by the corpus.
//!
//! Elements are dense indices `0..|G|` with `0` the identity.  Groups of
//! order at most 4096 are backed by a full multiplication table; larger
//! groups stay in their structured form (permutation words with hashed
//! multiplication, or vectors under an abelian-by-action construction).

mod abelian;
mod conjugacy;
mod construct;
mod perm;
mod structure;

pub use abelian::{AbelianBasis, AbelianDual};
pub use conjugacy::ConjugacyPartition;
pub use construct::*;
pub use perm::Perm;

use crate::arith::SplitMix64;
use std::collections::HashMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group order {order} exceeds the configured bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("subgroup is not a p-group")]
    NotPGroup,
    #[error("invalid action: {0}")]
    NotAnAction(String),
    #[error("no fixed-point-free cyclic action of order {m} on (C_{p})^{n}")]
    NoFixedPointFreeAction { p: u64, n: u32, m: u64 },
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("element is not a member of the subgroup")]
    NotMember,
}

/// Size guard for group construction; `VANISHLAB_MAX_ORDER` overrides the
/// default of 20000.
pub fn max_order() -> usize {
    std::env::var("VANISHLAB_MAX_ORDER")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20000)
}

/// At or below this order a full multiplication table is materialized.
pub const DENSE_LIMIT: usize = 4096;

enum Backend {
    Table {
        table: Vec<u32>,
    },
    Perm {
        perms: Vec<Perm>,
        index: HashMap<Perm, u32>,
    },
    /// `A ⋊ H` with `A` abelian of the given cyclic invariants; element
    /// `h·|A| + rank(a)` is the pair `(a, h)`, multiplied via the action
    /// matrices `mats[h]`.
    Semidirect {
        moduli: Vec<u64>,
        h: Box<FiniteGroup>,
        mats: Vec<Vec<Vec<u64>>>,
        a_size: u32,
    },
}

pub struct FiniteGroup {
    name: String,
    provenance: String,
    n: u32,
    backend: Backend,
    /// For abelian-by-action constructions: the size of the normal abelian
    /// part, whose elements occupy indices `0..a_size` (survives conversion
    /// to a dense table).
    pub(crate) semidirect_a: Option<u32>,
    gens: Vec<u32>,
    inverses: Vec<u32>,
    orders: OnceLock<Vec<u32>>,
    conjugacy: OnceLock<ConjugacyPartition>,
}

/// A subgroup as a sorted member list; always contains the identity `0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<u32>,
}

impl Subgroup {
    pub fn from_members(mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        assert_eq!(members.first(), Some(&0), "a subgroup contains the identity");
        Subgroup { members }
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, g: u32) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&g| other.contains(g))
            .collect();
        Subgroup { members }
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// A small deterministic generating set.
    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn product(&self, a: u32, b: u32) -> u32 {
        match &self.backend {
            Backend::Table { table } => table[a as usize * self.n as usize + b as usize],
            Backend::Perm { perms, index } => {
                let p = perms[a as usize].compose(&perms[b as usize]);
                index[&p]
            }
            Backend::Semidirect { moduli, h, mats, a_size } => {
                let (va, ha) = decode(a, *a_size);
                let (vb, hb) = decode(b, *a_size);
                let mut av = unrank(va, moduli);
                let bv = unrank(vb, moduli);
                let mb = &mats[ha as usize];
                for (i, row) in mb.iter().enumerate() {
                    let mut acc = av[i] as u128;
                    for (j, &mij) in row.iter().enumerate() {
                        acc += mij as u128 * bv[j] as u128;
                    }
                    av[i] = (acc % moduli[i] as u128) as u64;
                }
                encode(rank(&av, moduli), h.product(ha, hb), *a_size)
            }
        }
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `g^x = x⁻¹ g x`.
    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.product(self.inverse(x), self.product(g, x))
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator_of(&self, a: u32, b: u32) -> u32 {
        self.product(self.inverse(a), self.conjugate(a, b))
    }

    pub fn power(&self, g: u32, k: i64) -> u32 {
        let (mut base, mut e) = if k < 0 {
            (self.inverse(g), (-(k as i128)) as u64)
        } else {
            (g, k as u64)
        };
        let mut acc = 0u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.product(acc, base);
            }
            base = self.product(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: u32) -> u32 {
        self.orders()[g as usize]
    }

    pub fn orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            (0..self.n)
                .map(|g| {
                    let mut x = g;
                    let mut o = 1;
                    while x != 0 {
                        x = self.product(x, g);
                        o += 1;
                    }
                    o
                })
                .collect()
        })
    }

    pub fn exponent(&self) -> u64 {
        self.orders()
            .iter()
            .fold(1u64, |acc, &o| crate::arith::lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.product(a, b) == self.product(b, a)))
    }

    /// Subgroup generated by `seed`.
    pub fn generated(&self, seed: &[u32]) -> Subgroup {
        let mut in_set = vec![false; self.n as usize];
        in_set[0] = true;
        let mut list = vec![0u32];
        let mut pos = 0;
        while pos < list.len() {
            let x = list[pos];
            pos += 1;
            for &g in seed {
                let y = self.product(x, g);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        Subgroup { members: list }
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = seed.to_vec();
        loop {
            let sub = self.generated(&gens);
            let mut new = Vec::new();
            for &m in sub.members() {
                for &g in &self.gens {
                    let c = self.conjugate(m, g);
                    if !sub.contains(c) && !new.contains(&c) {
                        new.push(c);
                    }
                }
            }
            if new.is_empty() {
                return sub;
            }
            gens = sub.members().to_vec();
            gens.extend(new);
        }
    }

    /// Greedy small generating set for a subgroup.
    pub fn subgroup_gens(&self, sub: &Subgroup) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut have = Subgroup::trivial();
        for &m in sub.members() {
            if !have.contains(m) {
                gens.push(m);
                have = self.generated(&gens);
                if have.order() == sub.order() {
                    break;
                }
            }
        }
        gens
    }

    pub fn is_closed_subgroup(&self, members: &[u32]) -> bool {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return false;
        }
        let sub = Subgroup { members: sorted };
        sub.members()
            .iter()
            .all(|&a| sub.members().iter().all(|&b| sub.contains(self.product(a, b))))
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        let sgens = self.subgroup_gens(sub);
        self.gens
            .iter()
            .all(|&g| sgens.iter().all(|&s| sub.contains(self.conjugate(s, g))))
    }

    pub fn center(&self) -> Subgroup {
        let members = (0..self.n)
            .filter(|&z| {
                self.gens
                    .iter()
                    .all(|&g| self.product(z, g) == self.product(g, z))
            })
            .collect();
        Subgroup { members }
    }

    pub fn centralizer(&self, g: u32) -> Subgroup {
        let members = (0..self.n)
            .filter(|&x| self.product(x, g) == self.product(g, x))
            .collect();
        Subgroup { members }
    }

    pub fn centralizer_of(&self, sub: &Subgroup) -> Subgroup {
        let sgens = self.subgroup_gens(sub);
        let members = (0..self.n)
            .filter(|&x| sgens.iter().all(|&s| self.product(x, s) == self.product(s, x)))
            .collect();
        Subgroup { members }
    }

    pub fn normalizer(&self, sub: &Subgroup) -> Subgroup {
        let sgens = self.subgroup_gens(sub);
        let members = (0..self.n)
            .filter(|&x| sgens.iter().all(|&s| sub.contains(self.conjugate(s, x))))
            .collect();
        Subgroup { members }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup { members: (0..self.n).collect() }
    }

    /// Left coset decomposition: `(coset_of, reps)`, reps by smallest member,
    /// identity coset first.
    pub fn cosets(&self, sub: &Subgroup) -> (Vec<u32>, Vec<u32>) {
        let n = self.n as usize;
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let k = reps.len() as u32;
            reps.push(g);
            for &s in sub.members() {
                coset_of[self.product(g, s) as usize] = k;
            }
        }
        (coset_of, reps)
    }

    /// Quotient by a normal subgroup: the coset group plus the projection map.
    pub fn quotient(&self, nsub: &Subgroup) -> Result<(FiniteGroup, Vec<u32>), GroupError> {
        if !self.is_normal(nsub) {
            return Err(GroupError::NotNormal);
        }
        let (coset_of, reps) = self.cosets(nsub);
        let q = reps.len();
        if q > DENSE_LIMIT {
            return Err(GroupError::TooLarge { order: q, bound: DENSE_LIMIT });
        }
        let mut table = vec![0u32; q * q];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                table[i * q + j] = coset_of[self.product(ri, rj) as usize];
            }
        }
        let g = FiniteGroup::from_table_unchecked(
            format!("{}/N{}", self.name, nsub.order()),
            format!(
                "quotient of {} by a normal subgroup of order {}",
                self.name,
                nsub.order()
            ),
            table,
        );
        Ok((g, coset_of))
    }

    /// Re-enumerate a subgroup as a standalone group; also returns the
    /// embedding of local indices back into `self`.
    pub fn subgroup_group(&self, sub: &Subgroup) -> (FiniteGroup, Vec<u32>) {
        let members = sub.members();
        let m = members.len();
        let mut local = HashMap::with_capacity(m);
        for (i, &g) in members.iter().enumerate() {
            local.insert(g, i as u32);
        }
        let mut table = vec![0u32; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table[i * m + j] = local[&self.product(a, b)];
            }
        }
        let g = FiniteGroup::from_table_unchecked(
            format!("{}<{}>", self.name, m),
            format!("subgroup of order {} of {}", m, self.name),
            table,
        );
        (g, members.to_vec())
    }

    /// Build from a multiplication table already known to be a group (used
    /// for quotients, subgroups and the algebraic constructors).
    pub(crate) fn from_table_unchecked(
        name: String,
        provenance: String,
        table: Vec<u32>,
    ) -> FiniteGroup {
        let n = (table.len() as f64).sqrt().round() as usize;
        assert_eq!(n * n, table.len());
        let mut g = FiniteGroup {
            name,
            provenance,
            n: n as u32,
            backend: Backend::Table { table },
            semidirect_a: None,
            gens: Vec::new(),
            inverses: Vec::new(),
            orders: OnceLock::new(),
            conjugacy: OnceLock::new(),
        };
        g.inverses = g.compute_inverses();
        g.gens = g.greedy_gens();
        g
    }

    fn compute_inverses(&self) -> Vec<u32> {
        (0..self.n)
            .map(|a| match &self.backend {
                Backend::Table { table } => {
                    let row =
                        &table[a as usize * self.n as usize..(a as usize + 1) * self.n as usize];
                    row.iter().position(|&x| x == 0).expect("no inverse found") as u32
                }
                Backend::Perm { perms, index } => index[&perms[a as usize].inverse()],
                Backend::Semidirect { moduli, h, mats, a_size } => {
                    // (a, h)⁻¹ = (-φ(h⁻¹)(a), h⁻¹)
                    let (va, ha) = decode(a, *a_size);
                    let hi = h.inverse(ha);
                    let av = unrank(va, moduli);
                    let mi = &mats[hi as usize];
                    let mut w = vec![0u64; moduli.len()];
                    for (i, row) in mi.iter().enumerate() {
                        let mut acc = 0u128;
                        for (j, &mij) in row.iter().enumerate() {
                            acc += mij as u128 * av[j] as u128;
                        }
                        let r = (acc % moduli[i] as u128) as u64;
                        w[i] = (moduli[i] - r) % moduli[i];
                    }
                    encode(rank(&w, moduli), hi, *a_size)
                }
            })
            .collect()
    }

    fn greedy_gens(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut sub = Subgroup::trivial();
        for g in 1..self.n {
            if !sub.contains(g) {
                gens.push(g);
                sub = self.generated(&gens);
                if sub.order() == self.n as usize {
                    break;
                }
            }
        }
        assert!(sub.order() == self.n as usize || self.n == 1, "generation failed");
        gens
    }

    /// Conjugacy data, computed once and cached.
    pub fn conjugacy(&self) -> &ConjugacyPartition {
        self.conjugacy.get_or_init(|| ConjugacyPartition::compute(self))
    }

    /// Latin-square and associativity validation per the construction-bound
    /// policy: Light's test on a generating set (exhaustive) for orders
    /// ≤ 512, 10·|G| sampled triples above.
    pub(crate) fn validate_table(&self) -> Result<(), GroupError> {
        let n = self.n as usize;
        let at = |a: usize, b: usize| self.product(a as u32, b as u32) as usize;
        for j in 0..n {
            if at(0, j) != j || at(j, 0) != j {
                return Err(GroupError::NotAGroup("element 0 is not an identity".into()));
            }
        }
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = at(i, j);
                if v >= n || seen[v] {
                    return Err(GroupError::NotAGroup(format!("row {i} is not a permutation")));
                }
                seen[v] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = at(j, i);
                if seen[v] {
                    return Err(GroupError::NotAGroup(format!(
                        "column {i} is not a permutation"
                    )));
                }
                seen[v] = true;
            }
        }
        if n <= 512 {
            for &g in &self.gens {
                for x in 0..n {
                    for y in 0..n {
                        if at(at(x, g as usize), y) != at(x, at(g as usize, y)) {
                            return Err(GroupError::NotAGroup("associativity fails".into()));
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64(0x76616e6973686c61);
            for _ in 0..10 * n {
                let x = rng.below(n as u64) as usize;
                let y = rng.below(n as u64) as usize;
                let z = rng.below(n as u64) as usize;
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return Err(GroupError::NotAGroup("associativity fails (sampled)".into()));
                }
            }
        }
        for a in 0..self.n {
            let inv = self.inverses[a as usize];
            if self.product(a, inv) != 0 || self.product(inv, a) != 0 {
                return Err(GroupError::NotAGroup(format!("element {a} lacks an inverse")));
            }
        }
        Ok(())
    }
}

fn decode(idx: u32, a_size: u32) -> (u32, u32) {
    (idx % a_size, idx / a_size)
}

fn encode(a_rank: u32, h: u32, a_size: u32) -> u32 {
    h * a_size + a_rank
}

fn unrank(mut r: u32, moduli: &[u64]) -> Vec<u64> {
    let mut v = vec![0u64; moduli.len()];
    for (i, &d) in moduli.iter().enumerate() {
        v[i] = (r as u64) % d;
        r /= d as u32;
    }
    v
}

fn rank(v: &[u64], moduli: &[u64]) -> u32 {
    let mut r = 0u64;
    let mut stride = 1u64;
    for (i, &d) in moduli.iter().enumerate() {
        r += v[i] * stride;
        stride *= d;
    }
    r as u32
}
