//! Decision procedures for vanishing sums of roots of unity.

use super::{CycloError, Cyclotomic, RootOfUnity};
use crate::arith::prime_divisors;
use num::One;
use std::collections::BTreeMap;
use std::fmt;

/// Can `n` roots of unity in `U_m` possibly sum to zero?  True iff `n` is a
/// nonnegative integer combination of the distinct prime divisors of `m`;
/// a `false` return certifies that no such zero sum exists.
pub fn vanishing_sum_feasible(n: u64, m: u64) -> bool {
    assert!(m >= 1);
    if n == 0 {
        return true;
    }
    let primes = prime_divisors(m);
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        for &p in &primes {
            let p = p as usize;
            if p <= i && reach[i - p] {
                reach[i] = true;
                break;
            }
        }
    }
    reach[n]
}

/// Structure of a zero sum of `k ∈ {2,3,4,6}` roots of unity, following the
/// classification of such sums up to labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumDecomposition {
    /// `k ∈ {2,3}`: the summands are `δ·ζ_k^i`, `i = 1..k`.
    Rotation { k: u64, delta: RootOfUnity },
    /// `k = 4`: two antipodal pairs `(x, -x)`.
    TwoPairs { pairs: [(RootOfUnity, RootOfUnity); 2] },
    /// `k = 6`, case (b1): three antipodal pairs `{δ_q, -δ_q}`.  This is the
    /// only possible shape when all summands have 2-power order.
    ThreePairs { deltas: [RootOfUnity; 3] },
    /// `k = 6`, case (b2): two rotated cube-root triples `δ_q·{1, ζ_3, ζ_3²}`.
    TwoTriples { deltas: [RootOfUnity; 2] },
    /// `k = 6`, case (b3): `δ·{ζ_5, ζ_5², ζ_5³, ζ_5⁴, ζ_2ζ_3, ζ_2ζ_3²}`.
    PentagonHexagon { delta: RootOfUnity },
}

impl SumDecomposition {
    /// The multiset of summands this decomposition describes, sorted.
    pub fn reconstruct(&self) -> Vec<RootOfUnity> {
        let mut out = match self {
            SumDecomposition::Rotation { k, delta } => (1..=*k)
                .map(|i| delta.mul(&RootOfUnity::new(*k, i)))
                .collect::<Vec<_>>(),
            SumDecomposition::TwoPairs { pairs } => pairs
                .iter()
                .flat_map(|(a, b)| [*a, *b])
                .collect(),
            SumDecomposition::ThreePairs { deltas } => deltas
                .iter()
                .flat_map(|d| [*d, d.neg()])
                .collect(),
            SumDecomposition::TwoTriples { deltas } => deltas
                .iter()
                .flat_map(|d| (0..3).map(|r| d.mul(&RootOfUnity::new(3, r))).collect::<Vec<_>>())
                .collect(),
            SumDecomposition::PentagonHexagon { delta } => {
                let mut v: Vec<RootOfUnity> =
                    (1..=4).map(|i| delta.mul(&RootOfUnity::new(5, i))).collect();
                v.push(delta.mul(&RootOfUnity::new(6, 5)));
                v.push(delta.mul(&RootOfUnity::new(6, 1)));
                v
            }
        };
        out.sort();
        out
    }
}

impl fmt::Display for SumDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumDecomposition::Rotation { k, delta } => write!(f, "case (a) k={k}, δ={delta}"),
            SumDecomposition::TwoPairs { pairs } => write!(
                f,
                "case (a) k=4, pairs ({}, {}), ({}, {})",
                pairs[0].0, pairs[0].1, pairs[1].0, pairs[1].1
            ),
            SumDecomposition::ThreePairs { deltas } => write!(
                f,
                "case (b1), δ0={}, δ1={}, δ2={}",
                deltas[0], deltas[1], deltas[2]
            ),
            SumDecomposition::TwoTriples { deltas } => {
                write!(f, "case (b2), δ0={}, δ1={}", deltas[0], deltas[1])
            }
            SumDecomposition::PentagonHexagon { delta } => write!(f, "case (b3), δ={delta}"),
        }
    }
}

fn sum_of(roots: &[RootOfUnity]) -> Cyclotomic {
    let n = roots.iter().fold(1, |acc, r| crate::arith::lcm(acc, r.order()));
    Cyclotomic::from_terms(
        n,
        roots
            .iter()
            .map(|r| (r.exponent() * (n / r.order()), num::BigRational::one())),
    )
}

fn counts(roots: &[RootOfUnity]) -> BTreeMap<RootOfUnity, usize> {
    let mut m = BTreeMap::new();
    for r in roots {
        *m.entry(*r).or_insert(0) += 1;
    }
    m
}

/// Greedy antipodal matching; succeeds iff every value occurs as often as its
/// negative, which characterizes zero sums made of `-1`-rotations.
fn antipodal_pairs(roots: &[RootOfUnity]) -> Option<Vec<(RootOfUnity, RootOfUnity)>> {
    let mut cnt = counts(roots);
    let mut pairs = Vec::new();
    while let Some((&x, _)) = cnt.iter().next() {
        let nx = x.neg();
        if cnt.get(&nx).copied().unwrap_or(0) == 0 {
            return None;
        }
        take_one(&mut cnt, &x);
        take_one(&mut cnt, &nx);
        pairs.push((x, nx));
    }
    Some(pairs)
}

fn take_one(cnt: &mut BTreeMap<RootOfUnity, usize>, x: &RootOfUnity) {
    if let Some(c) = cnt.get_mut(x) {
        *c -= 1;
        if *c == 0 {
            cnt.remove(x);
        }
    }
}

fn multiset_eq(a: &[RootOfUnity], b: &[RootOfUnity]) -> bool {
    counts(a) == counts(b)
}

/// Classify a zero sum of `k ∈ {2,3,4,6}` roots of unity, returning the case
/// tag and witness data.  For `k = 6` the cases are tried in the order (b1),
/// (b2), (b3); on degenerate inputs matching several cases, the first match is
/// reported.  Witness roots are tie-broken by smallest `(order, exponent)`.
pub fn classify_zero_sum(roots: &[RootOfUnity]) -> Result<SumDecomposition, CycloError> {
    let k = roots.len();
    if !matches!(k, 2 | 3 | 4 | 6) {
        return Err(CycloError::UnsupportedLength(k));
    }
    if !sum_of(roots).is_zero() {
        return Err(CycloError::NotZeroSum);
    }
    match k {
        2 | 3 => {
            let ku = k as u64;
            let mut valid: Vec<RootOfUnity> = Vec::new();
            for cand in roots {
                let model: Vec<RootOfUnity> = (1..=ku)
                    .map(|i| cand.mul(&RootOfUnity::new(ku, i)))
                    .collect();
                if multiset_eq(roots, &model) {
                    valid.push(*cand);
                }
            }
            let delta = valid
                .into_iter()
                .min()
                .expect("a zero sum of 2 or 3 roots is a rotated k-th root pattern");
            Ok(SumDecomposition::Rotation { k: ku, delta })
        }
        4 => {
            let pairs = antipodal_pairs(roots)
                .expect("a zero sum of 4 roots splits into two antipodal pairs");
            Ok(SumDecomposition::TwoPairs { pairs: [pairs[0], pairs[1]] })
        }
        6 => {
            if let Some(pairs) = antipodal_pairs(roots) {
                let mut deltas = [pairs[0].0, pairs[1].0, pairs[2].0];
                deltas.sort();
                return Ok(SumDecomposition::ThreePairs { deltas });
            }
            if let Some(deltas) = two_triples(roots) {
                return Ok(SumDecomposition::TwoTriples { deltas });
            }
            if let Some(delta) = pentagon_hexagon(roots) {
                return Ok(SumDecomposition::PentagonHexagon { delta });
            }
            unreachable!("every zero sum of 6 roots of unity matches (b1), (b2) or (b3)")
        }
        _ => unreachable!(),
    }
}

fn two_triples(roots: &[RootOfUnity]) -> Option<[RootOfUnity; 2]> {
    let mut cnt = counts(roots);
    let mut deltas = Vec::new();
    for _ in 0..2 {
        let (&e, _) = cnt.iter().next()?;
        for r in 0..3 {
            let x = e.mul(&RootOfUnity::new(3, r));
            if cnt.get(&x).copied().unwrap_or(0) == 0 {
                return None;
            }
            take_one(&mut cnt, &x);
        }
        deltas.push(e);
    }
    deltas.sort();
    Some([deltas[0], deltas[1]])
}

fn pentagon_hexagon(roots: &[RootOfUnity]) -> Option<RootOfUnity> {
    let base: Vec<RootOfUnity> = {
        let mut v: Vec<RootOfUnity> = (1..=4).map(|i| RootOfUnity::new(5, i)).collect();
        v.push(RootOfUnity::new(6, 5));
        v.push(RootOfUnity::new(6, 1));
        v
    };
    let e = *roots.iter().min().unwrap();
    let mut valid: Vec<RootOfUnity> = Vec::new();
    for x in &base {
        let delta = e.mul(&x.inv());
        let model: Vec<RootOfUnity> = base.iter().map(|b| delta.mul(b)).collect();
        if multiset_eq(roots, &model) {
            valid.push(delta);
        }
    }
    valid.into_iter().min()
}

/// Which structural part of the six-term lemma applies to `(ε, η)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaCase {
    /// All `δ_i = ε̄_i η_i` lie in `U_2`; the sum is provably nonzero.
    AllDeltaInU2,
    /// All twelve inputs lie in `U_4` and the sum vanishes; after ordering by
    /// root order (swapping the ε and η families if needed so the largest
    /// order sits in ε), the top ε-pair is `{ζ_4, -ζ_4}` and both matching
    /// η's are `-1`.
    SmallOrderZero {
        eps_pair: [RootOfUnity; 2],
        eta_pair: [RootOfUnity; 2],
        families_swapped: bool,
    },
    /// `Δ ⊆ U_4` with some `o(ε_i) ≥ 8` and the sum vanishes; the δ multiset
    /// is forced to `{ζ_4, ζ_4, -1}` or `{-ζ_4, -ζ_4, -1}`.
    Delta4HighOrderZero { deltas: [RootOfUnity; 3] },
    /// None of the structured parts applies.
    General,
}

/// Verdict of the six-term test `Σ = ε_1+ε_2+ε_3+η_1+η_2+η_3` under the
/// condition (*) `ε_1ε_2ε_3 = η_1η_2η_3 = 1`, all inputs of 2-power order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaVerdict {
    pub is_zero: bool,
    pub deltas: [RootOfUnity; 3],
    pub case: SigmaCase,
}

pub fn sigma_six_test(
    eps: &[RootOfUnity; 3],
    eta: &[RootOfUnity; 3],
) -> Result<SigmaVerdict, CycloError> {
    if !eps.iter().chain(eta.iter()).all(|r| r.is_two_power_order()) {
        return Err(CycloError::NotTwoPowerOrder);
    }
    if !eps[0].mul(&eps[1]).mul(&eps[2]).is_one() || !eta[0].mul(&eta[1]).mul(&eta[2]).is_one() {
        return Err(CycloError::ConditionStarViolated);
    }
    let all: Vec<RootOfUnity> = eps.iter().chain(eta.iter()).copied().collect();
    let is_zero = sum_of(&all).is_zero();
    let deltas = [
        eps[0].conj().mul(&eta[0]),
        eps[1].conj().mul(&eta[1]),
        eps[2].conj().mul(&eta[2]),
    ];

    let case = if deltas.iter().all(|d| d.order() <= 2) {
        SigmaCase::AllDeltaInU2
    } else if is_zero && all.iter().all(|r| r.order() <= 4) {
        let (big, small, families_swapped) = {
            let max_eps = eps.iter().map(|r| r.order()).max().unwrap();
            let max_eta = eta.iter().map(|r| r.order()).max().unwrap();
            if max_eta > max_eps {
                (eta, eps, true)
            } else {
                (eps, eta, false)
            }
        };
        // Sort each family by descending order; (*) keeps products intact.
        let mut b = *big;
        let mut s = *small;
        b.sort_by_key(|r| std::cmp::Reverse(r.order()));
        s.sort_by_key(|r| std::cmp::Reverse(r.order()));
        SigmaCase::SmallOrderZero {
            eps_pair: [b[0], b[1]],
            eta_pair: [s[0], s[1]],
            families_swapped,
        }
    } else if is_zero
        && deltas.iter().all(|d| d.order() <= 4)
        && eps.iter().any(|r| r.order() >= 8)
    {
        let mut d = deltas;
        d.sort();
        SigmaCase::Delta4HighOrderZero { deltas: d }
    } else {
        SigmaCase::General
    };

    Ok(SigmaVerdict { is_zero, deltas, case })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(m: u64, k: u64) -> RootOfUnity {
        RootOfUnity::new(m, k)
    }

    #[test]
    fn feasibility_examples() {
        assert!(!vanishing_sum_feasible(4, 9));
        assert!(vanishing_sum_feasible(7, 10));
        for m in [1u64, 2, 7, 12, 30] {
            assert!(!vanishing_sum_feasible(1, m));
        }
        assert!(vanishing_sum_feasible(5, 12));
        assert!(!vanishing_sum_feasible(3, 8));
    }

    #[test]
    fn classify_spec_examples() {
        // {ζ5, -ζ5, 1, -1} → two antipodal pairs.
        let dec =
            classify_zero_sum(&[r(5, 1), r(5, 1).neg(), r(1, 0), r(2, 1)]).unwrap();
        match dec {
            SumDecomposition::TwoPairs { pairs } => {
                assert_eq!(pairs[0], (r(1, 0), r(2, 1)));
                assert_eq!(pairs[1].0.neg(), pairs[1].1);
            }
            other => panic!("expected pairs, got {other:?}"),
        }

        // δ = 1 instance of (b3).
        let dec = classify_zero_sum(&[
            r(5, 1),
            r(5, 2),
            r(5, 3),
            r(5, 4),
            r(2, 1).mul(&r(3, 1)),
            r(2, 1).mul(&r(3, 2)),
        ])
        .unwrap();
        assert_eq!(dec, SumDecomposition::PentagonHexagon { delta: RootOfUnity::one() });

        // {ζ7ζ3, ζ7ζ3², ζ7} → case (a) with δ = ζ7.
        let d = r(7, 1);
        let dec = classify_zero_sum(&[d.mul(&r(3, 1)), d.mul(&r(3, 2)), d]).unwrap();
        assert_eq!(dec, SumDecomposition::Rotation { k: 3, delta: d });
    }

    #[test]
    fn classify_rejects() {
        assert_eq!(
            classify_zero_sum(&[r(1, 0), r(1, 0)]),
            Err(CycloError::NotZeroSum)
        );
        assert_eq!(
            classify_zero_sum(&[r(5, 1), r(5, 2), r(5, 3), r(5, 4), r(1, 0)]),
            Err(CycloError::UnsupportedLength(5))
        );
    }

    #[test]
    fn classify_round_trip() {
        let inputs = vec![
            vec![r(8, 3), r(8, 3).neg()],
            vec![r(7, 1), r(21, 10), r(21, 17)],
            vec![r(4, 1), r(4, 3), r(6, 1), r(6, 4)],
            vec![r(8, 1), r(8, 5), r(8, 3), r(8, 7), r(4, 1), r(4, 3)],
        ];
        for input in inputs {
            let mut sorted = input.clone();
            sorted.sort();
            let dec = classify_zero_sum(&input).unwrap();
            assert_eq!(dec.reconstruct(), sorted, "round-trip failed for {input:?}");
        }
    }

    #[test]
    fn sigma_spec_examples() {
        // ε = (ζ4, -ζ4, 1), η = (-1, -1, 1): Σ = 0, part (2) witness.
        let eps = [r(4, 1), r(4, 3), r(1, 0)];
        let eta = [r(2, 1), r(2, 1), r(1, 0)];
        let v = sigma_six_test(&eps, &eta).unwrap();
        assert!(v.is_zero);
        match v.case {
            SigmaCase::SmallOrderZero { eps_pair, eta_pair, .. } => {
                let mut p = eps_pair.to_vec();
                p.sort();
                assert_eq!(p, vec![r(4, 1), r(4, 3)]);
                assert_eq!(eta_pair, [r(2, 1), r(2, 1)]);
            }
            other => panic!("expected part (2) witness, got {other:?}"),
        }

        // All ones: Σ = 6 ≠ 0.
        let one = [r(1, 0); 3];
        let v = sigma_six_test(&one, &one).unwrap();
        assert!(!v.is_zero);
        assert_eq!(v.case, SigmaCase::AllDeltaInU2);

        // Condition (*) violations are rejected.
        assert_eq!(
            sigma_six_test(&[r(4, 1), r(1, 0), r(1, 0)], &one),
            Err(CycloError::ConditionStarViolated)
        );
        assert_eq!(
            sigma_six_test(&[r(3, 1), r(3, 2), r(1, 0)], &one),
            Err(CycloError::NotTwoPowerOrder)
        );
    }
}
