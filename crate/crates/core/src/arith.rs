//! Small number-theoretic helpers shared across the crate.
//!
//! Everything here works on `u64` magnitudes; the group orders and conductors
//! handled by this crate stay far below the point where that matters.

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

/// Least common multiple.
pub fn lcm(a: u64, b: u64) -> u64 {
    num::integer::lcm(a, b)
}

/// Trial-division factorization as `(prime, multiplicity)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// `a * b mod m` without overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse of `a` mod `m` for coprime `a`, via extended Euclid.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r.abs() != 1 {
        return None;
    }
    let mut inv = old_s * old_r.signum();
    inv = inv.rem_euclid(m as i128);
    Some(inv as u64)
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product::<u64>()
        .max(1)
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Deterministic splittable RNG (splitmix64); used for sampled validation of
/// large ingested multiplication tables.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(6480), vec![(2, 4), (3, 4), (5, 1)]);
    }

    #[test]
    fn inverse_roundtrip() {
        for m in [3u64, 8, 97, 420] {
            for a in 1..m {
                if gcd(a, m) == 1 {
                    let inv = inv_mod(a, m).unwrap();
                    assert_eq!(mul_mod(a, inv, m), 1 % m);
                }
            }
        }
        assert_eq!(inv_mod(2, 4), None);
    }

    #[test]
    fn phi_and_isqrt() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(420), 96);
        assert_eq!(isqrt(2520), 50);
        assert_eq!(isqrt(49), 7);
    }
}
