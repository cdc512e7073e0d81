//! Conjugacy class data: membership map, representatives, sizes, inverse
//! classes and prime power maps.

use super::FiniteGroup;
use crate::arith::prime_divisors;
use std::collections::BTreeMap;

pub struct ConjugacyPartition {
    /// Element index → class index; class 0 is the identity class.
    pub class_of: Vec<u32>,
    /// Class representatives (the smallest element index in each class).
    pub reps: Vec<u32>,
    pub sizes: Vec<u32>,
    pub members: Vec<Vec<u32>>,
    /// Class of the inverses of a class.
    pub inverse_class: Vec<u32>,
    pub rep_orders: Vec<u32>,
    /// For each prime dividing `exp(G)`: class index → class of p-th powers.
    pub power_maps: BTreeMap<u64, Vec<u32>>,
}

impl ConjugacyPartition {
    pub fn compute(g: &FiniteGroup) -> ConjugacyPartition {
        let n = g.order();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut members: Vec<Vec<u32>> = Vec::new();
        for e in 0..n as u32 {
            if class_of[e as usize] != u32::MAX {
                continue;
            }
            let k = reps.len() as u32;
            reps.push(e);
            // Orbit of e under conjugation by the generators.
            let mut orbit = vec![e];
            class_of[e as usize] = k;
            let mut pos = 0;
            while pos < orbit.len() {
                let x = orbit[pos];
                pos += 1;
                for &s in g.gens() {
                    let y = g.conjugate(x, s);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = k;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let sizes: Vec<u32> = members.iter().map(|m| m.len() as u32).collect();
        let inverse_class: Vec<u32> = reps
            .iter()
            .map(|&r| class_of[g.inverse(r) as usize])
            .collect();
        let rep_orders: Vec<u32> = reps.iter().map(|&r| g.element_order(r)).collect();
        let exponent = g.exponent();
        let mut power_maps = BTreeMap::new();
        for p in prime_divisors(exponent) {
            let map = reps
                .iter()
                .map(|&r| class_of[g.power(r, p as i64) as usize])
                .collect();
            power_maps.insert(p, map);
        }
        ConjugacyPartition {
            class_of,
            reps,
            sizes,
            members,
            inverse_class,
            rep_orders,
            power_maps,
        }
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }
}

#[cfg(test)]
mod tests {
    use crate::groups::construct;

    #[test]
    fn symmetric_group_classes() {
        let s3 = construct::symmetric(3).unwrap();
        let cc = s3.conjugacy();
        assert_eq!(cc.class_count(), 3);
        let mut sizes = cc.sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(cc.class_of[0], 0);
        assert_eq!(cc.sizes[0], 1);

        let s4 = construct::symmetric(4).unwrap();
        assert_eq!(s4.conjugacy().class_count(), 5);
    }

    #[test]
    fn class_equation_and_divisibility() {
        for g in [
            construct::symmetric(4).unwrap(),
            construct::dihedral(16).unwrap(),
            construct::quaternion(16).unwrap(),
        ] {
            let cc = g.conjugacy();
            let total: u32 = cc.sizes.iter().sum();
            assert_eq!(total as usize, g.order());
            let index_of_center = g.order() / g.center().order();
            for &s in &cc.sizes {
                assert_eq!(index_of_center % s as usize, 0, "class size must divide [G:Z(G)]");
            }
        }
    }
}
