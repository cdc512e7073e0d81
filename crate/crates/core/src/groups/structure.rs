//! Structural subgroup computations: derived series, Fitting subgroup,
//! Sylow subgroups, p-cores, solvability, nilpotency, p-parts of elements
//! and normal subgroup enumeration.

use super::{FiniteGroup, GroupError, Subgroup};
use crate::arith::{inv_mod, is_prime, prime_divisors};
use std::collections::BTreeSet;

impl FiniteGroup {
    /// Smallest subgroup containing `seed` and closed under conjugation by
    /// the given elements.
    fn closure_under(&self, seed: &[u32], conjugators: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = seed.iter().copied().filter(|&g| g != 0).collect();
        if gens.is_empty() {
            return Subgroup::trivial();
        }
        loop {
            let sub = self.generated(&gens);
            let mut new = Vec::new();
            for &m in sub.members() {
                for &g in conjugators {
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

    /// Derived subgroup `[G, G]`: normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms = Vec::new();
        for &a in self.gens() {
            for &b in self.gens() {
                let c = self.commutator_of(a, b);
                if c != 0 && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.closure_under(&comms, self.gens())
    }

    /// `[H, y] = ⟨ h⁻¹ h^y : h ∈ H ⟩`.
    pub fn commutator_with_element(&self, h: &Subgroup, y: u32) -> Subgroup {
        let seed: Vec<u32> = h
            .members()
            .iter()
            .map(|&a| self.product(self.inverse(a), self.conjugate(a, y)))
            .collect();
        self.closure_under(&seed, &[])
    }

    /// Derived subgroup of a subgroup, computed inside the parent.
    pub fn derived_of(&self, sub: &Subgroup) -> Subgroup {
        let sgens = self.subgroup_gens(sub);
        let mut comms = Vec::new();
        for &a in &sgens {
            for &b in &sgens {
                let c = self.commutator_of(a, b);
                if c != 0 && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.closure_under(&comms, &sgens)
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.full_subgroup()];
        loop {
            let last = series.last().unwrap();
            let next = self.derived_of(last);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.full_subgroup()];
        loop {
            let last = series.last().unwrap();
            let lgens = self.subgroup_gens(last);
            let mut comms = Vec::new();
            for &l in &lgens {
                for &g in self.gens() {
                    let c = self.commutator_of(l, g);
                    if c != 0 && !comms.contains(&c) {
                        comms.push(c);
                    }
                }
            }
            let next = self.closure_under(&comms, self.gens());
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_trivial()
    }

    /// One Sylow p-subgroup, by deterministic first-found normalizer ascent.
    pub fn sylow(&self, p: u64) -> Result<Subgroup, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let mut target = 1usize;
        let mut n = self.order();
        while n % p as usize == 0 {
            n /= p as usize;
            target *= p as usize;
        }
        let mut sub = Subgroup::trivial();
        while sub.order() < target {
            let norm = self.normalizer(&sub);
            let mut grew = false;
            for &y in norm.members() {
                if sub.contains(y) {
                    continue;
                }
                if !is_p_power(self.element_order(y) as u64, p) {
                    continue;
                }
                let mut gens = self.subgroup_gens(&sub);
                gens.push(y);
                let bigger = self.generated(&gens);
                if bigger.order() <= target && is_p_power(bigger.order() as u64, p) {
                    sub = bigger;
                    grew = true;
                    break;
                }
            }
            assert!(grew, "Sylow ascent must make progress");
        }
        Ok(sub)
    }

    /// `O_p(G)`: the largest normal p-subgroup, as the intersection of the
    /// conjugates of one Sylow p-subgroup.
    pub fn p_core(&self, p: u64) -> Result<Subgroup, GroupError> {
        let syl = self.sylow(p)?;
        let mut core = syl;
        for x in 0..self.order() as u32 {
            if core.is_trivial() {
                break;
            }
            let conj: Vec<u32> = core
                .members()
                .iter()
                .map(|&s| self.conjugate(s, x))
                .collect();
            core = core.intersect(&Subgroup::from_members(conj));
        }
        debug_assert!(self.is_closed_subgroup(core.members()));
        Ok(core)
    }

    /// Fitting subgroup `F(G) = Π_p O_p(G)`.
    pub fn fitting(&self) -> Subgroup {
        let mut seed = Vec::new();
        for p in prime_divisors(self.order() as u64) {
            let core = self.p_core(p).expect("p prime");
            seed.extend(core.members().iter().copied());
        }
        self.closure_under(&seed, &[])
    }

    /// The p-part `g_p` of an element: `g = g_p · h` with `o(g_p)` a p-power,
    /// `o(h)` coprime to `p`, both powers of `g`.
    pub fn element_p_part(&self, g: u32, p: u64) -> u32 {
        assert!(is_prime(p), "p must be prime");
        let o = self.element_order(g) as u64;
        let mut pa = 1u64;
        let mut m = o;
        while m % p == 0 {
            m /= p;
            pa *= p;
        }
        if pa == 1 {
            return 0;
        }
        let m_inv = inv_mod(m % pa, pa).expect("coprime");
        let c = (m as u128 * m_inv as u128 % o as u128) as u64;
        self.power(g, c as i64)
    }

    /// All normal subgroups (including the trivial one and `G`), found by
    /// closing unions of conjugacy classes; exponential in the worst case but
    /// fine at the orders this crate handles.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let cc = self.conjugacy();
        let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
        found.insert(vec![0]);
        let mut queue: Vec<Subgroup> = vec![Subgroup::trivial()];
        while let Some(sub) = queue.pop() {
            for class in &cc.members {
                if class.iter().all(|&x| sub.contains(x)) {
                    continue;
                }
                let mut seed = sub.members().to_vec();
                seed.extend_from_slice(class);
                // A conjugation-closed generating set yields a normal subgroup.
                let ext = self.generated(&seed);
                if found.insert(ext.members().to_vec()) {
                    queue.push(ext);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().map(Subgroup::from_members).collect();
        out.sort_by_key(|s| (s.order(), s.members().to_vec()));
        out
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        let all = self.normal_subgroups();
        all.iter()
            .filter(|n| !n.is_trivial())
            .filter(|n| {
                !all.iter().any(|m| {
                    !m.is_trivial() && m.order() < n.order() && m.is_subset_of(n)
                })
            })
            .cloned()
            .collect()
    }

    pub fn is_p_subgroup(&self, sub: &Subgroup, p: u64) -> bool {
        is_p_power(sub.order() as u64, p)
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_divisors(self.order() as u64)
    }
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use crate::groups::construct;
    use crate::groups::Subgroup;

    #[test]
    fn centers() {
        let q8 = construct::quaternion(8).unwrap();
        let z = q8.center();
        assert_eq!(z.order(), 2);
        let s3 = construct::symmetric(3).unwrap();
        assert!(s3.center().is_trivial());
        let c12 = construct::abelian("C12", &[12]).unwrap();
        assert_eq!(c12.center().order(), 12);
    }

    #[test]
    fn derived_subgroups() {
        let s3 = construct::symmetric(3).unwrap();
        let d = s3.derived_subgroup();
        assert_eq!(d.order(), 3);
        assert!(s3.is_normal(&d));
        let ab = construct::abelian("C6", &[6]).unwrap();
        assert!(ab.derived_subgroup().is_trivial());
    }

    #[test]
    fn fitting_and_cores() {
        let s4 = construct::symmetric(4).unwrap();
        let f = s4.fitting();
        assert_eq!(f.order(), 4);
        assert!(f.members().iter().all(|&g| g == 0 || s4.element_order(g) == 2));

        let s3 = construct::symmetric(3).unwrap();
        assert_eq!(s3.p_core(3).unwrap().order(), 3);
        assert_eq!(s3.p_core(2).unwrap().order(), 1);
        assert_eq!(s3.p_core(4), Err(crate::groups::GroupError::NotPrime(4)));

        let q8 = construct::quaternion(8).unwrap();
        assert_eq!(q8.fitting().order(), 8, "nilpotent groups are their own Fitting subgroup");
    }

    #[test]
    fn sylow_subgroups() {
        let s4 = construct::symmetric(4).unwrap();
        let p2 = s4.sylow(2).unwrap();
        assert_eq!(p2.order(), 8);
        let p3 = s4.sylow(3).unwrap();
        assert_eq!(p3.order(), 3);
        assert!(s4.is_closed_subgroup(p2.members()));
    }

    #[test]
    fn solvable_and_nilpotent() {
        assert!(construct::symmetric(4).unwrap().is_solvable());
        assert!(!construct::symmetric(4).unwrap().is_nilpotent());
        assert!(construct::quaternion(8).unwrap().is_nilpotent());
        assert!(!construct::alternating(5).unwrap().is_solvable());
    }

    #[test]
    fn p_parts_multiply_to_element() {
        let g = construct::abelian("C12", &[12]).unwrap();
        // Generator of C12 sits at some index; check every element instead.
        for e in 0..g.order() as u32 {
            let mut acc = 0u32;
            for p in g.primes() {
                acc = g.product(acc, g.element_p_part(e, p));
            }
            assert_eq!(acc, e);
        }
        // Spec cases: order-6 element has 2-part g³; order-12 has 2-part g⁹.
        let c6 = construct::abelian("C6", &[6]).unwrap();
        let gen6 = (0..6).find(|&x| c6.element_order(x) == 6).unwrap();
        assert_eq!(c6.element_p_part(gen6, 2), c6.power(gen6, 3));
        let gen12 = (0..12).find(|&x| g.element_order(x) == 12).unwrap();
        assert_eq!(g.element_p_part(gen12, 2), g.power(gen12, 9));
        assert_eq!(g.element_p_part(gen12, 5), 0);
    }

    #[test]
    fn normal_subgroup_lattice() {
        let s4 = construct::symmetric(4).unwrap();
        let normals = s4.normal_subgroups();
        let orders: Vec<usize> = normals.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let minimal = s4.minimal_normal_subgroups();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].order(), 4);
    }

    #[test]
    fn quotients() {
        let s3 = construct::symmetric(3).unwrap();
        let a3 = s3.derived_subgroup();
        let (q, proj) = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj[0], 0);

        let q8 = construct::quaternion(8).unwrap();
        let (v4, _) = q8.quotient(&q8.center()).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert!((1..4).all(|x| v4.element_order(x) == 2), "Q8/Z ≅ C2×C2");

        let (iso, _) = s3.quotient(&Subgroup::trivial()).unwrap();
        assert_eq!(iso.order(), 6);
        assert!(!iso.is_abelian());
    }
}
