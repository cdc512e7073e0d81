//! Abelian subgroup structure: cyclic bases, the dual group of characters,
//! annihilators, `Ω_i`/power subgroups and coprime-action decomposition.

use super::{FiniteGroup, GroupError, Subgroup};
use crate::arith::{gcd, lcm};
use crate::cyclo::{Cyclotomic, RootOfUnity};
use std::collections::HashMap;

/// A cyclic decomposition `A = ⟨b_1⟩ × ... × ⟨b_r⟩` of an abelian subgroup,
/// with every member resolved into its exponent vector.
pub struct AbelianBasis {
    /// Basis elements, as indices of the parent group.
    pub gens: Vec<u32>,
    pub orders: Vec<u64>,
    /// Exponent of the group (lcm of basis orders, 1 for the trivial group).
    pub exponent: u64,
    vec_of: HashMap<u32, Vec<u64>>,
    members: Vec<u32>,
}

impl AbelianBasis {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn exponents_of(&self, elem: u32) -> Option<&Vec<u64>> {
        self.vec_of.get(&elem)
    }
}

/// The dual group `Â` of an abelian subgroup: all `|A|` homomorphisms into
/// the roots of unity, indexed `0..|A|` in mixed-radix order against the
/// basis.  Character `k` sends basis element `b_j` to `ζ_E^{w_j}` where `E`
/// is the exponent and `w_j = k_j·E/d_j`.
pub struct AbelianDual {
    pub basis: AbelianBasis,
}

impl AbelianDual {
    pub fn size(&self) -> usize {
        self.basis.order()
    }

    /// Weight vector of character `k`: `α(b_j) = ζ_E^{w_j}`.
    pub fn weights(&self, k: u32) -> Vec<u64> {
        let mut rest = k as u64;
        let e = self.basis.exponent;
        self.basis
            .orders
            .iter()
            .map(|&d| {
                let kj = rest % d;
                rest /= d;
                kj * (e / d)
            })
            .collect()
    }

    fn index_from_weights(&self, w: &[u64]) -> u32 {
        let e = self.basis.exponent;
        let mut idx = 0u64;
        let mut stride = 1u64;
        for (j, &d) in self.basis.orders.iter().enumerate() {
            let step = e / d;
            assert_eq!(w[j] % step, 0, "weight is not a valid character value");
            idx += (w[j] / step) * stride;
            stride *= d;
        }
        idx as u32
    }

    /// `α_k(a)` as a root of unity.
    pub fn eval(&self, k: u32, elem: u32) -> RootOfUnity {
        let e = self.basis.exponent;
        let v = self
            .basis
            .exponents_of(elem)
            .expect("element must belong to the abelian subgroup");
        let w = self.weights(k);
        let mut s = 0u64;
        for (wj, vj) in w.iter().zip(v) {
            s = (s + (wj % e) * (vj % e)) % e;
        }
        RootOfUnity::new(e, s)
    }

    pub fn eval_cyclo(&self, k: u32, elem: u32) -> Cyclotomic {
        self.eval(k, elem).to_cyclotomic()
    }

    /// Pointwise product of characters (the dual group law).
    pub fn char_mul(&self, k1: u32, k2: u32) -> u32 {
        let e = self.basis.exponent;
        let w1 = self.weights(k1);
        let w2 = self.weights(k2);
        let w: Vec<u64> = w1.iter().zip(&w2).map(|(a, b)| (a + b) % e).collect();
        self.index_from_weights(&w)
    }

    pub fn char_inv(&self, k: u32) -> u32 {
        let e = self.basis.exponent;
        let w: Vec<u64> = self.weights(k).iter().map(|w| (e - w % e) % e).collect();
        self.index_from_weights(&w)
    }

    /// `B^⊥ = {α : α(b) = 1 ∀ b ∈ B}`, as sorted character indices.
    pub fn perp(&self, b_members: &[u32]) -> Vec<u32> {
        (0..self.size() as u32)
            .filter(|&k| b_members.iter().all(|&b| self.eval(k, b).is_one()))
            .collect()
    }

    /// `V^⊥ = {a : α(a) = 1 ∀ α ∈ V}`, as a subgroup of the parent.
    pub fn perp_down(&self, chars: &[u32]) -> Subgroup {
        let members = self
            .basis
            .members()
            .iter()
            .copied()
            .filter(|&a| chars.iter().all(|&k| self.eval(k, a).is_one()))
            .collect();
        Subgroup::from_members(members)
    }

    /// Transport of a character along an automorphism of `A`: given the map
    /// `a ↦ a^{y^{-1}}` on parent indices, returns the index of `α^y`.
    pub fn act(&self, k: u32, pre_image: impl Fn(u32) -> u32) -> u32 {
        let e = self.basis.exponent;
        let w = self.weights(k);
        let new_w: Vec<u64> = self
            .basis
            .gens
            .iter()
            .map(|&bj| {
                let a = pre_image(bj);
                let v = self.basis.exponents_of(a).expect("automorphism must preserve A");
                let mut s = 0u64;
                for (wi, vi) in w.iter().zip(v) {
                    s = (s + (wi % e) * (vi % e)) % e;
                }
                s
            })
            .collect();
        self.index_from_weights(&new_w)
    }
}

impl FiniteGroup {
    fn check_abelian_subgroup(&self, sub: &Subgroup) -> Result<(), GroupError> {
        let gens = self.subgroup_gens(sub);
        for &a in &gens {
            for &b in &gens {
                if self.product(a, b) != self.product(b, a) {
                    return Err(GroupError::NotAbelian);
                }
            }
        }
        Ok(())
    }

    /// Cyclic basis of an abelian subgroup, by peeling maximal-order elements.
    pub fn abelian_basis(&self, sub: &Subgroup) -> Result<AbelianBasis, GroupError> {
        self.check_abelian_subgroup(sub)?;
        let (agrp, embed) = self.subgroup_group(sub);
        let local = basis_of(&agrp);
        let gens: Vec<u32> = local.iter().map(|&i| embed[i as usize]).collect();
        let orders: Vec<u64> = local.iter().map(|&i| agrp.element_order(i) as u64).collect();
        let exponent = orders.iter().fold(1u64, |acc, &d| lcm(acc, d));

        // Resolve every member into its exponent vector.
        let mut vec_of = HashMap::with_capacity(sub.order());
        let mut idx = vec![0u64; orders.len()];
        loop {
            let mut elem = 0u32;
            for (j, &g) in gens.iter().enumerate() {
                elem = self.product(elem, self.power(g, idx[j] as i64));
            }
            vec_of.insert(elem, idx.clone());
            let mut j = 0;
            loop {
                if j == orders.len() {
                    break;
                }
                idx[j] += 1;
                if idx[j] < orders[j] {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == orders.len() {
                break;
            }
        }
        assert_eq!(vec_of.len(), sub.order(), "basis must enumerate the subgroup");
        Ok(AbelianBasis {
            gens,
            orders,
            exponent,
            vec_of,
            members: sub.members().to_vec(),
        })
    }

    pub fn abelian_dual(&self, sub: &Subgroup) -> Result<AbelianDual, GroupError> {
        Ok(AbelianDual { basis: self.abelian_basis(sub)? })
    }

    /// `Ω_i(A) = {a ∈ A : o(a) | p^i}` for an abelian p-subgroup.
    pub fn omega_subgroup(&self, sub: &Subgroup, i: u32) -> Result<Subgroup, GroupError> {
        self.check_abelian_subgroup(sub)?;
        let primes = crate::arith::prime_divisors(sub.order() as u64);
        if primes.len() > 1 {
            return Err(GroupError::NotPGroup);
        }
        let p = primes.first().copied().unwrap_or(2);
        let bound = p.pow(i);
        let members = sub
            .members()
            .iter()
            .copied()
            .filter(|&a| bound % self.element_order(a) as u64 == 0)
            .collect();
        Ok(Subgroup::from_members(members))
    }

    /// `A^k = {a^k : a ∈ A}` for abelian `A`.
    pub fn power_subgroup(&self, sub: &Subgroup, k: u64) -> Result<Subgroup, GroupError> {
        self.check_abelian_subgroup(sub)?;
        let mut members: Vec<u32> = sub
            .members()
            .iter()
            .map(|&a| self.power(a, k as i64))
            .collect();
        members.sort_unstable();
        members.dedup();
        Ok(Subgroup::from_members(members))
    }

    /// Coprime action: `A = [A, P] × C_A(P)` for abelian `A` normalized by a
    /// subgroup `P` of coprime order.
    pub fn coprime_action_decompose(
        &self,
        a: &Subgroup,
        p: &Subgroup,
    ) -> Result<(Subgroup, Subgroup), GroupError> {
        self.check_abelian_subgroup(a)?;
        if gcd(a.order() as u64, p.order() as u64) != 1 {
            return Err(GroupError::NotCoprime);
        }
        let pgens = self.subgroup_gens(p);
        let mut seed = Vec::new();
        for &x in a.members() {
            for &y in &pgens {
                let c = self.product(self.inverse(x), self.conjugate(x, y));
                if c != 0 && !seed.contains(&c) {
                    seed.push(c);
                }
            }
        }
        let commutator_part = if seed.is_empty() {
            Subgroup::trivial()
        } else {
            self.generated(&seed)
        };
        let fixed: Vec<u32> = a
            .members()
            .iter()
            .copied()
            .filter(|&x| pgens.iter().all(|&y| self.conjugate(x, y) == x))
            .collect();
        Ok((commutator_part, Subgroup::from_members(fixed)))
    }
}

/// Basis of a standalone abelian group: peel a maximal-order cyclic factor,
/// recurse on the quotient, lift quotient basis elements to preimages of
/// equal order.
fn basis_of(a: &FiniteGroup) -> Vec<u32> {
    if a.order() == 1 {
        return Vec::new();
    }
    let x = (0..a.order() as u32)
        .max_by_key(|&g| (a.element_order(g), std::cmp::Reverse(g)))
        .unwrap();
    let b = a.generated(&[x]);
    if b.order() == a.order() {
        return vec![x];
    }
    let (q, proj) = a.quotient(&b).expect("abelian subgroups are normal");
    let qbasis = basis_of(&q);
    let mut basis = vec![x];
    for &qb in &qbasis {
        let want = q.element_order(qb);
        let lift = (0..a.order() as u32)
            .find(|&y| proj[y as usize] == qb && a.element_order(y) == want)
            .expect("a maximal-order cyclic factor splits off");
        basis.push(lift);
    }
    basis
}
