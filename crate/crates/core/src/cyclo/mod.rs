//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! Values are stored in a canonical basis of `Q(ζ_n)` over `Q`, so equality
//! and the zero test are structural.  The basis at conductor `n` consists of
//! the powers `ζ_n^i` whose exponent satisfies, for every prime power
//! `q = p^ν` exactly dividing `n`:
//!
//! * `p` odd — the top base-`p` digit of `i mod q` is nonzero;
//! * `p = 2` — the top bit of `i mod q` is zero.
//!
//! Non-basis powers are eliminated with the relations
//! `Σ_{j=0}^{p-1} ζ_n^{i + j·n/p} = 0` (one per prime `p | n`), which span the
//! full relation module of the `n`-th roots of unity over `Q`.  Each relation
//! only moves the top digit of the `p`-component of the exponent, so one sweep
//! per prime canonicalizes a value.  The conductor is reduced eagerly after
//! every operation, so a stored value lies in no proper cyclotomic subfield.

mod root;
mod zerosum;

pub use root::RootOfUnity;
pub use zerosum::{
    classify_zero_sum, sigma_six_test, vanishing_sum_feasible, SigmaCase, SigmaVerdict,
    SumDecomposition,
};

use crate::arith::{factorize, gcd, inv_mod, lcm};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("galois exponent {k} is not coprime to conductor {conductor}")]
    NotCoprime { k: u64, conductor: u64 },
    #[error("input roots do not sum to zero")]
    NotZeroSum,
    #[error("zero-sum classification is only defined for lengths 2, 3, 4, 6 (got {0})")]
    UnsupportedLength(usize),
    #[error("condition (*) violated: each triple must have product 1")]
    ConditionStarViolated,
    #[error("inputs must be roots of unity of 2-power order")]
    NotTwoPowerOrder,
}

/// An element of a cyclotomic field, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: BTreeMap<u64, BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Cyclotomic::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(v: BigRational) -> Self {
        if v.is_zero() {
            return Cyclotomic::zero();
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert(0, v);
        Cyclotomic { conductor: 1, coeffs }
    }

    /// `ζ_n^k` as a field element.
    pub fn root(n: u64, k: u64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        canonicalize(n, vec![(k % n, BigRational::one())])
    }

    /// `Σ c_i ζ_n^{e_i}` canonicalized in one pass.
    pub fn from_terms(n: u64, terms: impl IntoIterator<Item = (u64, BigRational)>) -> Self {
        assert!(n >= 1, "conductor must be positive");
        canonicalize(n, terms.into_iter().collect())
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// The value as a rational number, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.conductor != 1 {
            return None;
        }
        Some(self.coeffs.get(&0).cloned().unwrap_or_else(BigRational::zero))
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    /// Canonical coefficients, exponent-ascending.
    pub fn coeffs(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let n = lcm(self.conductor, other.conductor);
        let mut terms: Vec<(u64, BigRational)> = Vec::new();
        let fa = n / self.conductor;
        let fb = n / other.conductor;
        for (e, c) in &self.coeffs {
            terms.push((e * fa, c.clone()));
        }
        for (e, c) in &other.coeffs {
            terms.push((e * fb, c.clone()));
        }
        canonicalize(n, terms)
    }

    pub fn neg(&self) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        let n = lcm(self.conductor, other.conductor);
        let fa = n / self.conductor;
        let fb = n / other.conductor;
        let mut acc: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = (ea * fa + eb * fb) % n;
                let prod = ca * cb;
                acc.entry(e)
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        canonicalize(n, acc.into_iter().collect())
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, c * r)).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    /// Field automorphism `ζ_n ↦ ζ_n^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: u64) -> Result<Cyclotomic, CycloError> {
        let n = self.conductor;
        if n == 1 {
            return Ok(self.clone());
        }
        let kr = k % n;
        if gcd(kr, n) != 1 {
            return Err(CycloError::NotCoprime { k, conductor: n });
        }
        let terms = self
            .coeffs
            .iter()
            .map(|(e, c)| ((e * kr) % n, c.clone()))
            .collect();
        Ok(canonicalize(n, terms))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
            .expect("n-1 is always coprime to n")
    }

    /// `x · conj(x)`, the squared absolute value (totally real, often rational).
    pub fn norm_squared(&self) -> Cyclotomic {
        self.mul(&self.conj())
    }

    pub fn sum<'a>(values: impl IntoIterator<Item = &'a Cyclotomic>) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for v in values {
            acc = acc.add(v);
        }
        acc
    }

    /// Deterministic ordering key: conductor, then the coefficient vector.
    pub fn sort_key(&self) -> (u64, Vec<(u64, BigRational)>) {
        (
            self.conductor,
            self.coeffs.iter().map(|(e, c)| (*e, c.clone())).collect(),
        )
    }
}

/// Canonicalize `Σ terms c_i ζ_n^{e_i}`: rewrite into the basis at `n`, then
/// descend to the minimal conductor.
fn canonicalize(n: u64, terms: Vec<(u64, BigRational)>) -> Cyclotomic {
    let mut map: BTreeMap<u64, BigRational> = BTreeMap::new();
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let e = e % n;
        map.entry(e).and_modify(|x| *x += &c).or_insert(c);
    }
    map.retain(|_, c| !c.is_zero());
    if map.is_empty() {
        return Cyclotomic::zero();
    }
    if n == 1 {
        return Cyclotomic { conductor: 1, coeffs: map };
    }
    // Fold conductors ≡ 2 (mod 4) onto their odd part: ζ_{2m}^i = (-1)^i ζ_m^{i/2 mod m}.
    if n % 4 == 2 {
        let m = n / 2;
        let inv2 = inv_mod(2, m).expect("m odd");
        let terms = map
            .into_iter()
            .map(|(e, c)| {
                let sign = if e % 2 == 1 { -c } else { c };
                ((e % m * inv2) % m, sign)
            })
            .collect();
        return canonicalize(m, terms);
    }

    let facs = factorize(n);
    // One rewriting sweep per prime; the relation for p leaves the exponent
    // residues at every other prime power untouched.
    let mut map = map;
    for &(p, nu) in &facs {
        let q = p.pow(nu);
        let mut next: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (e, c) in map {
            if allowed(e, p, q) {
                next.entry(e).and_modify(|x| *x += &c).or_insert(c);
            } else if p == 2 {
                let e2 = (e + n / 2) % n;
                let neg = -c;
                next.entry(e2).and_modify(|x| *x += &neg).or_insert(neg);
            } else {
                for j in 1..p {
                    let ej = (e + j * (n / p)) % n;
                    let neg = -c.clone();
                    next.entry(ej).and_modify(|x| *x += &neg).or_insert(neg);
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        map = next;
    }
    if map.is_empty() {
        return Cyclotomic::zero();
    }

    // Conductor descent: strip primes whose presence the value does not need.
    for &(p, nu) in &facs {
        if nu >= 2 && !(p == 2 && nu == 2) {
            if map.keys().all(|e| e % p == 0) {
                let terms = map.into_iter().map(|(e, c)| (e / p, c)).collect();
                return canonicalize(n / p, terms);
            }
        } else if p == 2 && nu == 2 {
            if map.keys().all(|e| e % 4 == 0) {
                let terms = map.into_iter().map(|(e, c)| (e / 4, c)).collect();
                return canonicalize(n / 4, terms);
            }
        } else {
            // p odd, ν = 1: the value lies in Q(ζ_{n/p}) iff the support splits
            // into full blocks {i ≡ s (mod n/p)} of p-1 equal-coefficient terms.
            let m = n / p;
            let mut blocks: BTreeMap<u64, (u64, BigRational, bool)> = BTreeMap::new();
            for (e, c) in &map {
                blocks
                    .entry(e % m)
                    .and_modify(|(cnt, c0, ok)| {
                        *cnt += 1;
                        if *c0 != *c {
                            *ok = false;
                        }
                    })
                    .or_insert((1, c.clone(), true));
            }
            if blocks.values().all(|(cnt, _, ok)| *cnt == p - 1 && *ok) {
                let mut terms = Vec::new();
                for (s, (_, c, _)) in blocks {
                    // Exponent ≡ s (mod m) and ≡ 0 (mod p); then ζ_n^{i0} = ζ_m^{i0/p}.
                    let mut i0 = s;
                    while i0 % p != 0 {
                        i0 += m;
                    }
                    terms.push((i0 / p, -c));
                }
                return canonicalize(m, terms);
            }
        }
    }
    Cyclotomic { conductor: n, coeffs: map }
}

/// Is exponent `e` in the canonical basis with respect to prime power `q = p^ν`?
fn allowed(e: u64, p: u64, q: u64) -> bool {
    let r = e % q;
    if p == 2 {
        r < q / 2
    } else {
        r >= q / p
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        self.fmt_terms(f)
    }
}

impl Cyclotomic {
    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "ζ({})^{}", self.conductor, e)?;
            } else {
                write!(f, "{abs}*ζ({})^{}", self.conductor, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64) -> Cyclotomic {
        Cyclotomic::root(n, 1)
    }

    fn root(n: u64, k: u64) -> Cyclotomic {
        Cyclotomic::root(n, k)
    }

    #[test]
    fn add_examples() {
        assert_eq!(zeta(3).add(&root(3, 2)), Cyclotomic::from_integer(-1));
        assert!(zeta(8).add(&root(8, 5)).is_zero());
        assert_eq!(Cyclotomic::one().add(&Cyclotomic::zero()), Cyclotomic::one());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(zeta(4).mul(&zeta(4)), Cyclotomic::from_integer(-1));
        // ζ2 · ζ3 = ζ6^5 (the canonical form of -ζ3).
        assert_eq!(root(2, 1).mul(&zeta(3)), root(6, 5));
        assert_eq!(root(2, 1).mul(&zeta(3)), zeta(3).neg());
        assert_eq!(zeta(5).mul(&zeta(5).conj()), Cyclotomic::one());
    }

    #[test]
    fn conj_examples() {
        assert_eq!(zeta(8).conj(), root(8, 7));
        let half3 = Cyclotomic::from_rational(BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(half3.conj(), half3);
        let v = Cyclotomic::one().add(&zeta(4));
        assert_eq!(v.conj(), Cyclotomic::one().sub(&zeta(4)));
        assert_eq!(v.conj().conj(), v);
    }

    #[test]
    fn galois_examples() {
        assert_eq!(zeta(5).galois(2).unwrap(), root(5, 2));
        assert_eq!(Cyclotomic::zero().galois(7).unwrap(), Cyclotomic::zero());
        let s = zeta(3).add(&root(3, 2)).add(&Cyclotomic::one());
        assert!(s.is_zero());
        assert!(s.galois(2).unwrap().is_zero());
        assert_eq!(
            zeta(3).galois(3),
            Err(CycloError::NotCoprime { k: 3, conductor: 3 })
        );
    }

    #[test]
    fn root_p_part_examples() {
        let z12 = RootOfUnity::new(12, 1);
        assert_eq!(z12.p_part(2), RootOfUnity::new(4, 3));
        assert_eq!(RootOfUnity::new(8, 1).p_part(2), RootOfUnity::new(8, 1));
        assert_eq!(RootOfUnity::new(15, 1).p_part(2), RootOfUnity::one());
        // Decomposition: e = e_p · e_p', orders a p-power and coprime to p.
        for m in 1..=60u64 {
            for k in 0..m {
                let e = RootOfUnity::new(m, k);
                for p in [2u64, 3, 5] {
                    let ep = e.p_part(p);
                    let eq = e.p_prime_part(p);
                    assert_eq!(ep.mul(&eq), e);
                    assert!(ep.order().is_power_of_two() || p != 2 || ep.is_one());
                    let mut o = ep.order();
                    while o % p == 0 {
                        o /= p;
                    }
                    assert_eq!(o, 1, "p-part order must be a power of {p}");
                    assert_ne!(eq.order() % p, 0, "p'-part order must avoid {p}");
                }
            }
        }
    }

    #[test]
    fn conductor_is_minimal() {
        assert_eq!(root(8, 2).conductor(), 4);
        assert_eq!(root(8, 2), zeta(4));
        assert_eq!(zeta(3).add(&root(3, 2)).conductor(), 1);
        assert_eq!(root(6, 2).conductor(), 3);
        assert_eq!(zeta(2).conductor(), 1);
        assert_eq!(zeta(2), Cyclotomic::from_integer(-1));
        // ζ12^4 = ζ3, conductor 3 even though built at 12.
        assert_eq!(root(12, 4), zeta(3));
    }

    #[test]
    fn display_is_parseable_shape() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::from_integer(-1).to_string(), "-1");
        assert_eq!(zeta(4).to_string(), "ζ(4)^1");
        assert_eq!(Cyclotomic::one().sub(&zeta(4)).to_string(), "1 - ζ(4)^1");
        assert_eq!(zeta(3).to_string(), "ζ(3)^1");
    }
}
