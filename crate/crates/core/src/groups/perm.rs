//! Permutations on `{0, ..., degree-1}` in image form.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    /// From the image list `p(0), p(1), ...`; must be a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self, String> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err(format!("not a permutation of 0..{n}"));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { images })
    }

    /// From disjoint (or not) cycles over 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, String> {
        let mut p = Perm::identity(degree);
        for cyc in cycles {
            let mut next = Perm::identity(degree);
            for (i, &x) in cyc.iter().enumerate() {
                let y = cyc[(i + 1) % cyc.len()];
                if x as usize >= degree || y as usize >= degree {
                    return Err(format!("cycle point out of range 0..{degree}"));
                }
                next.images[x as usize] = y;
            }
            Perm::from_images(next.images.clone())?;
            p = next.compose(&p);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Parity: true for even permutations.
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Cycle notation over 1-based points.
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let a = Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
        let b = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        // (0 1 2)(0 1) applies the transposition first.
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.is_even());
        assert!(!b.is_even());
    }
}
