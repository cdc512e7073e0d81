//! Roots of unity `ζ_m^k` in exponent form.

use super::Cyclotomic;
use crate::arith::{gcd, inv_mod, lcm};
use std::fmt;
use std::str::FromStr;

/// `ζ_m^k` with `gcd(k, m) = 1` after normalization, so `m` is the order of
/// the root.  The identity is `(1, 0)` and `-1` is `(2, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnity {
    order: u64,
    exp: u64,
}

impl RootOfUnity {
    /// `ζ_m^k`, normalized to primitive form: `o(ζ_m^k) = m / gcd(m, k)`.
    pub fn new(m: u64, k: u64) -> Self {
        assert!(m >= 1, "order must be positive");
        let k = k % m;
        if k == 0 {
            return RootOfUnity { order: 1, exp: 0 };
        }
        let g = gcd(m, k);
        RootOfUnity { order: m / g, exp: k / g }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exp: 0 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { order: 2, exp: 1 }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let m = lcm(self.order, other.order);
        RootOfUnity::new(m, (self.exp * (m / self.order) + other.exp * (m / other.order)) % m)
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(self.order, (self.order - self.exp) % self.order)
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        let e = (self.exp as i128 * k as i128).rem_euclid(self.order as i128) as u64;
        RootOfUnity::new(self.order, e)
    }

    pub fn neg(&self) -> RootOfUnity {
        self.mul(&RootOfUnity::minus_one())
    }

    /// Complex conjugate, i.e. the inverse.
    pub fn conj(&self) -> RootOfUnity {
        self.inv()
    }

    pub fn is_two_power_order(&self) -> bool {
        self.order.is_power_of_two()
    }

    /// The `p`-power-order part of the root: `e^{m m'}` where `o(e) = m·p^a`
    /// with `p ∤ m` and `m m' ≡ 1 (mod p^a)`.  Together with `e / e_p` this is
    /// the unique commuting decomposition into a `p`-part and a `p'`-part,
    /// both powers of `e`.
    pub fn p_part(&self, p: u64) -> RootOfUnity {
        let mut pa = 1u64;
        let mut m = self.order;
        while m % p == 0 {
            m /= p;
            pa *= p;
        }
        if pa == 1 {
            return RootOfUnity::one();
        }
        let m_inv = inv_mod(m % pa, pa).expect("m coprime to p^a");
        let c = (m as u128 * m_inv as u128 % self.order as u128) as u64;
        RootOfUnity::new(
            self.order,
            (self.exp as u128 * c as u128 % self.order as u128) as u64,
        )
    }

    /// The complementary part of order coprime to `p`.
    pub fn p_prime_part(&self, p: u64) -> RootOfUnity {
        self.mul(&self.p_part(p).inv())
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root(self.order, self.exp)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            1 => write!(f, "1"),
            2 => write!(f, "-1"),
            _ => write!(f, "ζ({})^{}", self.order, self.exp),
        }
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `1`, `-1`, `z8`, `z8^3`, `ζ(8)^3`, `-z8^3`.
impl FromStr for RootOfUnity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        let root = if body == "1" {
            RootOfUnity::one()
        } else {
            let body = body
                .strip_prefix('z')
                .or_else(|| body.strip_prefix('ζ'))
                .ok_or_else(|| format!("cannot parse root of unity from {s:?}"))?;
            let (order_part, exp_part) = match body.split_once('^') {
                Some((o, e)) => (o, Some(e)),
                None => (body, None),
            };
            let order_txt = order_part
                .trim()
                .trim_start_matches('(')
                .trim_end_matches(')');
            let m: u64 = order_txt
                .parse()
                .map_err(|_| format!("bad order in root token {s:?}"))?;
            if m == 0 {
                return Err(format!("order must be positive in {s:?}"));
            }
            let k: u64 = match exp_part {
                Some(e) => {
                    let e = e.trim();
                    let v: i64 = e.parse().map_err(|_| format!("bad exponent in {s:?}"))?;
                    v.rem_euclid(m as i64) as u64
                }
                None => 1,
            };
            RootOfUnity::new(m, k)
        };
        Ok(if neg { root.neg() } else { root })
    }
}
