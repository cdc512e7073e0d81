//! Oracle-backed verification of the cyclotomic layer: canonical forms are
//! checked against a naive polynomial-remainder oracle, and the zero-sum
//! classifiers against exhaustive enumeration.

mod common;

use common::{cyclotomic_polynomial, negated_terms_at, oracle_is_zero};
use num::{BigInt, BigRational, One, Zero};
use proptest::prelude::*;
use vanishlab_core::arith::lcm;
use vanishlab_core::cyclo::{
    classify_zero_sum, sigma_six_test, vanishing_sum_feasible, CycloError, SigmaCase,
    SumDecomposition,
};
use vanishlab_core::{Cyclotomic, RootOfUnity};

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn term_strategy(n: u64) -> impl Strategy<Value = (u64, BigRational)> {
    (0..n, -3i64..=3, 1i64..=2).prop_map(|(e, p, q)| (e, BigRational::new(p.into(), q.into())))
}

fn expr_strategy() -> impl Strategy<Value = (u64, Vec<(u64, BigRational)>)> {
    (1u64..=60).prop_flat_map(|n| {
        proptest::collection::vec(term_strategy(n), 0..6).prop_map(move |t| (n, t))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    /// Canonicalization agrees with the naive oracle on zero-ness, and the
    /// canonical form re-expanded at the original conductor is the same value.
    #[test]
    fn canonical_form_soundness((n, terms) in expr_strategy()) {
        let v = Cyclotomic::from_terms(n, terms.clone());
        prop_assert_eq!(v.is_zero(), oracle_is_zero(n, &terms));
        let mut check = terms.clone();
        check.extend(negated_terms_at(&v, n));
        prop_assert!(oracle_is_zero(n, &check), "canonical form changed the value");
    }

    /// Sums and products match polynomial arithmetic modulo Φ_n.
    #[test]
    fn ring_ops_match_oracle((n, ta) in expr_strategy(), (m, tb) in expr_strategy()) {
        let l = lcm(n, m);
        let a = Cyclotomic::from_terms(n, ta.clone());
        let b = Cyclotomic::from_terms(m, tb.clone());
        let raised = |t: &[(u64, BigRational)], from: u64| -> Vec<(u64, BigRational)> {
            t.iter().map(|(e, c)| (e * (l / from), c.clone())).collect()
        };

        let mut sum_check = raised(&ta, n);
        sum_check.extend(raised(&tb, m));
        sum_check.extend(negated_terms_at(&a.add(&b), l));
        prop_assert!(oracle_is_zero(l, &sum_check));

        let mut prod_check: Vec<(u64, BigRational)> = Vec::new();
        for (ea, ca) in raised(&ta, n) {
            for (eb, cb) in raised(&tb, m) {
                prod_check.push(((ea + eb) % l, &ca * &cb));
            }
        }
        prod_check.extend(negated_terms_at(&a.mul(&b), l));
        prop_assert!(oracle_is_zero(l, &prod_check));
    }

    /// galois(·, k) matches exponent-multiplication on raw terms, and
    /// therefore preserves zero sums.
    #[test]
    fn galois_matches_oracle((n, terms) in expr_strategy(), k in 1u64..=120) {
        let v = Cyclotomic::from_terms(n, terms.clone());
        prop_assume!(vanishlab_core::arith::gcd(k % n.max(1), n) == 1 || n == 1);
        let image = v.galois(k).unwrap();
        let raw: Vec<(u64, BigRational)> =
            terms.iter().map(|(e, c)| ((e * (k % n)) % n, c.clone())).collect();
        let mut check = raw;
        check.extend(negated_terms_at(&image, n));
        prop_assert!(oracle_is_zero(n, &check));
        prop_assert_eq!(v.is_zero(), image.is_zero());
    }
}

/// All multisets of k ≤ 6 roots of unity in U_m for m ∈ {8, 12, 24, 30}:
/// the classifier succeeds exactly on the zero sums found by brute force,
/// its witness reconstructs the input, the feasibility test never rules out
/// an actual zero sum, and 2-power zero sums of length 6 pair up antipodally.
#[test]
fn exhaustive_zero_sum_equivalence() {
    for m in [8u64, 12, 24, 30] {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        // x^i mod Φ_m for all i, with integer coefficients.
        let residues: Vec<Vec<BigInt>> = (0..m)
            .map(|i| {
                let mut dense = vec![BigRational::zero(); (i + 1) as usize];
                dense[i as usize] = BigRational::one();
                let rem = common::poly_rem(dense, &phi);
                let mut v: Vec<BigInt> = rem.into_iter().map(|c| c.to_integer()).collect();
                v.resize(deg, BigInt::zero());
                v
            })
            .collect();
        let roots: Vec<RootOfUnity> = (0..m).map(|i| RootOfUnity::new(m, i)).collect();

        let mut zero_sums = 0u64;
        for k in 1..=6usize {
            let mut stack = vec![0u64; k];
            enumerate_multisets(m, k, &mut stack, 0, &mut |exps| {
                let mut acc = vec![BigInt::zero(); deg];
                for &e in exps.iter() {
                    for (a, b) in acc.iter_mut().zip(&residues[e as usize]) {
                        *a += b;
                    }
                }
                let is_zero = acc.iter().all(|c| c.is_zero());
                if is_zero {
                    zero_sums += 1;
                    assert!(
                        vanishing_sum_feasible(k as u64, m),
                        "feasibility must admit a real zero sum (k={k}, m={m})"
                    );
                }
                let multiset: Vec<RootOfUnity> = exps.iter().map(|&e| roots[e as usize]).collect();
                match classify_zero_sum(&multiset) {
                    Ok(dec) => {
                        assert!(is_zero, "classifier accepted a nonzero sum {multiset:?}");
                        let mut sorted = multiset.clone();
                        sorted.sort();
                        assert_eq!(dec.reconstruct(), sorted, "round-trip failed");
                        if m == 8 {
                            assert!(
                                matches!(
                                    dec,
                                    SumDecomposition::ThreePairs { .. }
                                        | SumDecomposition::TwoPairs { .. }
                                        | SumDecomposition::Rotation { k: 2, .. }
                                ),
                                "2-power zero sums must be antipodal: {dec:?}"
                            );
                        }
                    }
                    Err(CycloError::NotZeroSum) => {
                        assert!(!is_zero, "classifier rejected a zero sum {multiset:?}");
                        assert!(matches!(k, 2 | 3 | 4 | 6));
                    }
                    Err(CycloError::UnsupportedLength(_)) => {
                        assert!(matches!(k, 1 | 5));
                    }
                    Err(other) => panic!("unexpected error {other:?}"),
                }
            });
        }
        assert!(zero_sums > 0, "enumeration for m={m} found no zero sums at all");
    }
}

fn enumerate_multisets(
    m: u64,
    k: usize,
    stack: &mut Vec<u64>,
    depth: usize,
    f: &mut impl FnMut(&[u64]),
) {
    if depth == k {
        f(stack);
        return;
    }
    let lo = if depth == 0 { 0 } else { stack[depth - 1] };
    for e in lo..m {
        stack[depth] = e;
        enumerate_multisets(m, k, stack, depth + 1, f);
    }
}

/// Exhaustive check of the six-term Σ test over U_8: agreement with direct
/// summation plus the three structural guarantees.
#[test]
fn sigma_six_exhaustive_u8() {
    let u8s: Vec<RootOfUnity> = (0..8).map(|i| RootOfUnity::new(8, i)).collect();
    let mut zero_count = 0;
    for &e1 in &u8s {
        for &e2 in &u8s {
            let e3 = e1.mul(&e2).inv();
            for &h1 in &u8s {
                for &h2 in &u8s {
                    let h3 = h1.mul(&h2).inv();
                    let eps = [e1, e2, e3];
                    let eta = [h1, h2, h3];
                    let v = sigma_six_test(&eps, &eta).unwrap();

                    // Independent summation through the field arithmetic.
                    let direct = Cyclotomic::sum(
                        eps.iter().chain(eta.iter()).map(|r| r.to_cyclotomic()).collect::<Vec<_>>().iter(),
                    );
                    assert_eq!(v.is_zero, direct.is_zero());
                    if v.is_zero {
                        zero_count += 1;
                    }

                    // Part (1): all δ_i ∈ U_2 forces a nonzero sum.
                    if v.deltas.iter().all(|d| d.order() <= 2) {
                        assert!(!v.is_zero, "part (1) violated for {eps:?}, {eta:?}");
                        assert_eq!(v.case, SigmaCase::AllDeltaInU2);
                    }

                    // Part (2): inside U_4, zero sums carry the forced witness.
                    let all_u4 = eps.iter().chain(eta.iter()).all(|r| r.order() <= 4);
                    if all_u4 && v.is_zero {
                        match &v.case {
                            SigmaCase::SmallOrderZero { eps_pair, eta_pair, .. } => {
                                let mut p = eps_pair.to_vec();
                                p.sort();
                                assert_eq!(p, vec![RootOfUnity::new(4, 1), RootOfUnity::new(4, 3)]);
                                assert_eq!(
                                    eta_pair.to_vec(),
                                    vec![RootOfUnity::minus_one(), RootOfUnity::minus_one()]
                                );
                            }
                            other => panic!("expected part (2) witness, got {other:?}"),
                        }
                    }
                    // Part (2) corollary: η_i = conj(ε_i) within U_4 is never zero.
                    if all_u4 && (0..3).all(|i| eta[i] == eps[i].conj()) {
                        assert!(!v.is_zero);
                    }

                    // Part (3): δ ⊆ U_4 with a high-order ε forces the δ multiset.
                    if v.is_zero
                        && v.deltas.iter().all(|d| d.order() <= 4)
                        && eps.iter().any(|r| r.order() >= 8)
                    {
                        match &v.case {
                            SigmaCase::Delta4HighOrderZero { deltas } => {
                                let i = RootOfUnity::new(4, 1);
                                let mi = RootOfUnity::new(4, 3);
                                let m1 = RootOfUnity::minus_one();
                                let d = deltas.to_vec();
                                assert!(
                                    d == vec![m1, i, i] || d == vec![m1, mi, mi],
                                    "part (3) δ multiset violated: {d:?}"
                                );
                            }
                            other => panic!("expected part (3) report, got {other:?}"),
                        }
                    }
                }
            }
        }
    }
    assert!(zero_count > 0, "U_8 must contain condition-(*) zero sums");
}

/// The classifier's spec-level examples for small k, frozen.
#[test]
fn classifier_examples() {
    let z = |m, k| RootOfUnity::new(m, k);
    assert_eq!(
        classify_zero_sum(&[z(3, 1).mul(&z(7, 1)), z(3, 2).mul(&z(7, 1)), z(7, 1)]).unwrap(),
        SumDecomposition::Rotation { k: 3, delta: z(7, 1) }
    );
    assert!(matches!(
        classify_zero_sum(&[z(4, 1), z(4, 3), z(1, 0), z(2, 1)]).unwrap(),
        SumDecomposition::TwoPairs { .. }
    ));
    assert_eq!(
        classify_zero_sum(&[rational_root(1), rational_root(1)]),
        Err(CycloError::NotZeroSum)
    );
}

fn rational_root(_: i64) -> RootOfUnity {
    RootOfUnity::one()
}

/// Feasibility is a sound necessary condition (spec boundary cases).
#[test]
fn feasibility_boundaries() {
    assert!(!vanishing_sum_feasible(4, 9));
    assert!(vanishing_sum_feasible(7, 10));
    assert!(!vanishing_sum_feasible(1, 1));
    assert!(!vanishing_sum_feasible(1, 2310));
    assert!(vanishing_sum_feasible(0, 7));
    let _ = rational(0);
}
