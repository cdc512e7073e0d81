//! Independent naive polynomial-remainder oracle for cyclotomic identities.
//!
//! A value `Σ c_i ζ_n^{e_i}` is zero iff the polynomial `Σ c_i x^{e_i}`
//! reduces to zero modulo the `n`-th cyclotomic polynomial `Φ_n`.  Nothing
//! here touches the canonical-basis machinery under test.

#![allow(dead_code)]

use num::{BigInt, BigRational, One, Zero};

/// Dense coefficients of `Φ_n`, computed by dividing `x^n - 1` by all `Φ_d`
/// with `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut poly = num;
    for d in 1..n {
        if n % d == 0 {
            poly = poly_div_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Exact division of `a` by monic `b`.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - db] = c.clone();
        for j in 0..=db {
            let t = &b[j] * &c;
            rem[i - db + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// Remainder of a dense rational polynomial modulo monic integer `m`.
pub fn poly_rem(mut a: Vec<BigRational>, m: &[BigInt]) -> Vec<BigRational> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let i = a.len() - 1;
        let c = a[i].clone();
        if !c.is_zero() {
            for j in 0..=dm {
                let t = BigRational::from_integer(m[j].clone()) * &c;
                a[i - dm + j] -= t;
            }
        }
        a.pop();
    }
    a
}

/// Oracle zero test for `Σ c_i ζ_n^{e_i}`.
pub fn oracle_is_zero(n: u64, terms: &[(u64, BigRational)]) -> bool {
    let mut dense = vec![BigRational::zero(); n as usize];
    for (e, c) in terms {
        dense[(*e % n) as usize] += c;
    }
    let phi = cyclotomic_polynomial(n);
    poly_rem(dense, &phi).iter().all(|c| c.is_zero())
}

/// The canonical coefficients of a value, re-expressed at conductor `n`
/// (the stored conductor must divide `n`), negated — handy for "claimed
/// result minus inputs is zero" oracle checks.
pub fn negated_terms_at(
    v: &vanishlab_core::Cyclotomic,
    n: u64,
) -> Vec<(u64, BigRational)> {
    let f = n / v.conductor();
    assert_eq!(n % v.conductor(), 0);
    v.coeffs().map(|(e, c)| (e * f, -c.clone())).collect()
}
