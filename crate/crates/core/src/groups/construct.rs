//! Constructors for the group families used by the paper's corpus: abelian
//! groups from invariants, dihedral/quaternion/extraspecial families,
//! symmetric and alternating groups, Cayley-table and permutation ingestion,
//! abelian-by-action semidirect products, Frobenius groups over finite
//! fields, and the order-6480 index-5 witness group.

use super::{Backend, FiniteGroup, GroupError, Perm, Subgroup, DENSE_LIMIT};
use crate::arith::{factorize, is_prime};
use std::collections::HashMap;
use std::sync::OnceLock;

fn new_group(
    name: String,
    provenance: String,
    n: u32,
    backend: Backend,
) -> Result<FiniteGroup, GroupError> {
    let bound = super::max_order();
    if n as usize > bound {
        return Err(GroupError::TooLarge { order: n as usize, bound });
    }
    let semidirect_a = match &backend {
        Backend::Semidirect { a_size, .. } => Some(*a_size),
        _ => None,
    };
    let mut g = FiniteGroup {
        name,
        provenance,
        n,
        backend,
        semidirect_a,
        gens: Vec::new(),
        inverses: Vec::new(),
        orders: OnceLock::new(),
        conjugacy: OnceLock::new(),
    };
    g.inverses = g.compute_inverses();
    g.gens = g.greedy_gens();
    if g.order() <= DENSE_LIMIT && !matches!(g.backend, Backend::Table { .. }) {
        g = densify(g);
    }
    Ok(g)
}

/// Convert to a dense table backend; element indices are unchanged.
fn densify(g: FiniteGroup) -> FiniteGroup {
    let n = g.order();
    let mut table = vec![0u32; n * n];
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            table[a as usize * n + b as usize] = g.product(a, b);
        }
    }
    let mut out = FiniteGroup::from_table_unchecked(g.name.clone(), g.provenance.clone(), table);
    out.semidirect_a = g.semidirect_a;
    out
}

pub fn trivial() -> FiniteGroup {
    FiniteGroup::from_table_unchecked("1".into(), "trivial group".into(), vec![0])
}

/// Direct product of cyclic groups with the given orders.
pub fn abelian(name: &str, invariants: &[u64]) -> Result<FiniteGroup, GroupError> {
    let moduli: Vec<u64> = invariants.iter().copied().filter(|&d| d > 1).collect();
    let a_size: u64 = moduli.iter().product();
    if a_size == 1 {
        let mut t = trivial();
        t.set_name(name);
        return Ok(t);
    }
    let r = moduli.len();
    let ident = identity_matrix(r);
    new_group(
        name.to_string(),
        format!("abelian group with invariants {invariants:?}"),
        a_size as u32,
        Backend::Semidirect {
            moduli,
            h: Box::new(trivial()),
            mats: vec![ident],
            a_size: a_size as u32,
        },
    )
}

pub fn cyclic(n: u64) -> Result<FiniteGroup, GroupError> {
    abelian(&format!("C{n}"), &[n])
}

fn identity_matrix(r: usize) -> Vec<Vec<u64>> {
    (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()
}

/// Dihedral group of the given (even) order.
pub fn dihedral(order: u64) -> Result<FiniteGroup, GroupError> {
    assert!(order >= 2 && order % 2 == 0, "dihedral order must be even");
    let n = order / 2;
    let idx = |i: u64, j: u64| (j * n + i) as u32;
    let m = order as usize;
    let mut table = vec![0u32; m * m];
    for i1 in 0..n {
        for j1 in 0..2 {
            for i2 in 0..n {
                for j2 in 0..2 {
                    let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
                    table[idx(i1, j1) as usize * m + idx(i2, j2) as usize] =
                        idx(i, (j1 + j2) % 2);
                }
            }
        }
    }
    let g = FiniteGroup::from_table_unchecked(
        format!("D{order}"),
        format!("dihedral group of order {order}"),
        table,
    );
    Ok(g)
}

/// Dicyclic group of order `4n`; for `order` a power of two this is the
/// generalized quaternion group.
pub fn quaternion(order: u64) -> Result<FiniteGroup, GroupError> {
    assert!(order >= 8 && order % 4 == 0, "dicyclic order must be a multiple of 4, at least 8");
    let n2 = order / 2; // order of the cyclic part ⟨a⟩
    let half = order / 4; // b² = a^{n2/2}
    let idx = |i: u64, j: u64| (j * n2 + i) as u32;
    let m = order as usize;
    let mut table = vec![0u32; m * m];
    for i1 in 0..n2 {
        for j1 in 0..2 {
            for i2 in 0..n2 {
                for j2 in 0..2 {
                    let (i, j) = if j1 == 0 {
                        ((i1 + i2) % n2, j2)
                    } else if j2 == 0 {
                        ((i1 + n2 - i2) % n2, 1)
                    } else {
                        ((i1 + n2 - i2 + half * 2) % n2, 0)
                    };
                    table[idx(i1, j1) as usize * m + idx(i2, j2) as usize] = idx(i, j);
                }
            }
        }
    }
    let g = FiniteGroup::from_table_unchecked(
        format!("Q{order}"),
        format!("dicyclic group of order {order}"),
        table,
    );
    Ok(g)
}

/// Heisenberg group of order p³ (extraspecial of exponent p for odd p).
fn heisenberg(p: u64) -> FiniteGroup {
    let n = (p * p * p) as usize;
    let idx = |a: u64, b: u64, c: u64| (a * p * p + b * p + c) as u32;
    let mut table = vec![0u32; n * n];
    for a1 in 0..p {
        for b1 in 0..p {
            for c1 in 0..p {
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let v = idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
                            table[idx(a1, b1, c1) as usize * n + idx(a2, b2, c2) as usize] = v;
                        }
                    }
                }
            }
        }
    }
    FiniteGroup::from_table_unchecked(
        format!("Heis{}", p * p * p),
        format!("Heisenberg group of order {}", p * p * p),
        table,
    )
}

/// Extraspecial group of exponent p² for odd p: `C_{p²} ⋊ C_p` with
/// `a^b = a^{1+p}`.
fn extraspecial_exp_p2(p: u64) -> FiniteGroup {
    let p2 = p * p;
    let n = (p2 * p) as usize;
    let idx = |i: u64, j: u64| (j * p2 + i) as u32;
    let mut table = vec![0u32; n * n];
    // (1+p)^j mod p²
    let mut twist = vec![1u64; p as usize];
    for j in 1..p as usize {
        twist[j] = twist[j - 1] * (1 + p) % p2;
    }
    for i1 in 0..p2 {
        for j1 in 0..p {
            for i2 in 0..p2 {
                for j2 in 0..p {
                    let v = idx((i1 + i2 * twist[j1 as usize]) % p2, (j1 + j2) % p);
                    table[idx(i1, j1) as usize * n + idx(i2, j2) as usize] = v;
                }
            }
        }
    }
    FiniteGroup::from_table_unchecked(
        format!("ES{}-", p2 * p),
        format!("extraspecial group of order {} and exponent p²", p2 * p),
        table,
    )
}

/// Direct product, dense.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let n = a.order() * b.order();
    if n > DENSE_LIMIT {
        return Err(GroupError::TooLarge { order: n, bound: DENSE_LIMIT });
    }
    let bo = b.order();
    let mut table = vec![0u32; n * n];
    for i1 in 0..a.order() as u32 {
        for j1 in 0..bo as u32 {
            for i2 in 0..a.order() as u32 {
                for j2 in 0..bo as u32 {
                    let x = (i1 as usize * bo + j1 as usize) * n;
                    let v = a.product(i1, i2) as usize * bo + b.product(j1, j2) as usize;
                    table[x + i2 as usize * bo + j2 as usize] = v as u32;
                }
            }
        }
    }
    Ok(FiniteGroup::from_table_unchecked(
        format!("{}x{}", a.name(), b.name()),
        format!("direct product of {} and {}", a.name(), b.name()),
        table,
    ))
}

/// Central product identifying the order-p centers of two p-groups with
/// cyclic center.
fn central_product(a: &FiniteGroup, b: &FiniteGroup, p: u64) -> Result<FiniteGroup, GroupError> {
    let za = *a
        .center()
        .members()
        .iter()
        .find(|&&z| a.element_order(z) as u64 == p)
        .expect("center must contain an order-p element");
    let zb = *b
        .center()
        .members()
        .iter()
        .find(|&&z| b.element_order(z) as u64 == p)
        .expect("center must contain an order-p element");
    let prod = direct_product(a, b)?;
    let bo = b.order() as u32;
    // (za, zb⁻¹) generates the identified anti-diagonal.
    let diag = za * bo + b.inverse(zb);
    let nsub = prod.generated(&[diag]);
    let (g, _) = prod.quotient(&nsub)?;
    Ok(g)
}

/// Extraspecial group of order `p^(1+2k)`; `plus` selects the `+` type
/// (exponent p for odd p, central product of dihedral factors for p = 2).
pub fn extraspecial(p: u64, k: u32, plus: bool) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    assert!(k >= 1);
    let base_plus = if p == 2 { dihedral(8)? } else { heisenberg(p) };
    let base_minus = if p == 2 { quaternion(8)? } else { extraspecial_exp_p2(p) };
    let mut g = if plus { base_plus } else { base_minus };
    for _ in 1..k {
        // X ∘ D8 (resp. ∘ Heisenberg) keeps the type's standard form.
        let extra = if p == 2 { dihedral(8)? } else { heisenberg(p) };
        g = central_product(&g, &extra, p)?;
    }
    let order = g.order();
    g.set_name(format!("ES{}{}", order, if plus { "+" } else { "-" }));
    Ok(g)
}

/// Closure of a permutation generating set into a group, identity first.
pub fn from_permutations(
    name: &str,
    degree: usize,
    gens: Vec<Perm>,
) -> Result<FiniteGroup, GroupError> {
    for g in &gens {
        if g.degree() != degree {
            return Err(GroupError::NotAGroup(format!(
                "generator degree {} does not match {degree}",
                g.degree()
            )));
        }
    }
    let bound = super::max_order();
    let mut perms = vec![Perm::identity(degree)];
    let mut index: HashMap<Perm, u32> = HashMap::new();
    index.insert(perms[0].clone(), 0);
    let mut pos = 0;
    while pos < perms.len() {
        let current = perms[pos].clone();
        pos += 1;
        for g in &gens {
            let next = current.compose(g);
            if !index.contains_key(&next) {
                if perms.len() >= bound {
                    return Err(GroupError::TooLarge { order: perms.len() + 1, bound });
                }
                index.insert(next.clone(), perms.len() as u32);
                perms.push(next);
            }
        }
    }
    let n = perms.len() as u32;
    new_group(
        name.to_string(),
        format!("permutation group of degree {degree} on {} generators", gens.len()),
        n,
        Backend::Perm { perms, index },
    )
}

pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n <= 1 {
        let mut t = trivial();
        t.set_name(format!("S{n}"));
        return Ok(t);
    }
    let mut gens = vec![Perm::from_cycles(n, &[vec![0, 1]]).unwrap()];
    if n > 2 {
        gens.push(Perm::from_cycles(n, &[(0..n as u32).collect()]).unwrap());
    }
    from_permutations(&format!("S{n}"), n, gens)
}

pub fn alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    if n <= 2 {
        let mut t = trivial();
        t.set_name(format!("A{n}"));
        return Ok(t);
    }
    let mut gens = vec![Perm::from_cycles(n, &[vec![0, 1, 2]]).unwrap()];
    if n > 3 {
        let cycle: Vec<u32> = if n % 2 == 1 {
            (0..n as u32).collect()
        } else {
            (1..n as u32).collect()
        };
        gens.push(Perm::from_cycles(n, &[cycle]).unwrap());
    }
    from_permutations(&format!("A{n}"), n, gens)
}

/// Ingest a full multiplication table; index 0 must be the identity.
pub fn from_cayley(name: &str, rows: &[Vec<u32>]) -> Result<FiniteGroup, GroupError> {
    let n = rows.len();
    if n == 0 {
        return Err(GroupError::NotAGroup("empty table".into()));
    }
    let bound = super::max_order().min(DENSE_LIMIT);
    if n > bound {
        return Err(GroupError::TooLarge { order: n, bound });
    }
    let mut table = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::NotAGroup(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for &v in row {
            if v as usize >= n {
                return Err(GroupError::NotAGroup(format!("entry {v} out of range in row {i}")));
            }
            table.push(v);
        }
    }
    // Latin square + identity placement before any structural computation.
    for i in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for j in 0..n {
            let r = table[i * n + j] as usize;
            let c = table[j * n + i] as usize;
            if seen_row[r] || seen_col[c] {
                return Err(GroupError::NotAGroup(format!("line {i} is not a permutation")));
            }
            seen_row[r] = true;
            seen_col[c] = true;
        }
    }
    for j in 0..n {
        if table[j] as usize != j || table[j * n] as usize != j {
            return Err(GroupError::NotAGroup("element 0 is not an identity".into()));
        }
    }
    let g = FiniteGroup::from_table_unchecked(
        name.to_string(),
        format!("ingested Cayley table of order {n}"),
        table,
    );
    g.validate_table()?;
    Ok(g)
}

/// `A ⋊ H` for abelian `A` of the given invariants, with the action of `H`
/// defined by matrices on the named generators of `H`.  Matrices act on
/// column vectors of exponents; entry `(i, j)` must satisfy
/// `M[i][j]·d_j ≡ 0 (mod d_i)` for the map to be a homomorphism.
pub fn semidirect(
    name: &str,
    invariants: &[u64],
    h: FiniteGroup,
    gen_actions: &[(u32, Vec<Vec<i64>>)],
) -> Result<FiniteGroup, GroupError> {
    let moduli: Vec<u64> = invariants.iter().copied().filter(|&d| d > 1).collect();
    let r = moduli.len();
    let a_size: u64 = moduli.iter().product();

    let mut reduced: Vec<(u32, Vec<Vec<u64>>)> = Vec::new();
    for (hg, mat) in gen_actions {
        if *hg as usize >= h.order() {
            return Err(GroupError::NotAnAction(format!("generator index {hg} outside H")));
        }
        if mat.len() != r || mat.iter().any(|row| row.len() != r) {
            return Err(GroupError::NotAnAction(format!("matrix must be {r}x{r}")));
        }
        let mut m = vec![vec![0u64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let e = mat[i][j].rem_euclid(moduli[i] as i64) as u64;
                // Homomorphism condition on mixed moduli.
                if (e as u128 * moduli[j] as u128) % moduli[i] as u128 != 0 {
                    return Err(GroupError::NotAnAction(format!(
                        "entry ({i},{j}) does not respect orders {} and {}",
                        moduli[i], moduli[j]
                    )));
                }
                m[i][j] = e;
            }
        }
        // Bijectivity on the vector set.
        let mut seen = vec![false; a_size as usize];
        let mut v = vec![0u64; r];
        loop {
            let mut w = 0u64;
            let mut stride = 1u64;
            for i in 0..r {
                let mut acc = 0u128;
                for j in 0..r {
                    acc += m[i][j] as u128 * v[j] as u128;
                }
                w += ((acc % moduli[i] as u128) as u64) * stride;
                stride *= moduli[i];
            }
            if seen[w as usize] {
                return Err(GroupError::NotAnAction("matrix is not invertible".into()));
            }
            seen[w as usize] = true;
            if !increment(&mut v, &moduli) {
                break;
            }
        }
        reduced.push((*hg, m));
    }

    // Propagate matrices over all of H; mismatches mean the action does not
    // respect H's relations.
    let mut mats: Vec<Option<Vec<Vec<u64>>>> = vec![None; h.order()];
    mats[0] = Some(identity_matrix(r));
    let mut queue = vec![0u32];
    let mut pos = 0;
    while pos < queue.len() {
        let cur = queue[pos];
        pos += 1;
        let mcur = mats[cur as usize].clone().unwrap();
        for (hg, mg) in &reduced {
            let nxt = h.product(cur, *hg);
            let prod = mat_mul(&mcur, mg, &moduli);
            match &mats[nxt as usize] {
                None => {
                    mats[nxt as usize] = Some(prod);
                    queue.push(nxt);
                }
                Some(existing) => {
                    if *existing != prod {
                        return Err(GroupError::NotAnAction(
                            "action does not respect the relations of H".into(),
                        ));
                    }
                }
            }
        }
    }
    if mats.iter().any(Option::is_none) {
        return Err(GroupError::NotAnAction(
            "the given generators do not generate H".into(),
        ));
    }
    let mats: Vec<Vec<Vec<u64>>> = mats.into_iter().map(Option::unwrap).collect();

    let n = a_size as usize * h.order();
    let bound = super::max_order();
    if n > bound {
        return Err(GroupError::TooLarge { order: n, bound });
    }
    let hname = h.name().to_string();
    let g = new_group(
        name.to_string(),
        format!("semidirect product of invariants {moduli:?} by {hname}"),
        n as u32,
        Backend::Semidirect { moduli, h: Box::new(h), mats, a_size: a_size as u32 },
    )?;
    Ok(g)
}

fn increment(v: &mut [u64], moduli: &[u64]) -> bool {
    for j in 0..v.len() {
        v[j] += 1;
        if v[j] < moduli[j] {
            return true;
        }
        v[j] = 0;
    }
    false
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], moduli: &[u64]) -> Vec<Vec<u64>> {
    let r = moduli.len();
    let mut out = vec![vec![0u64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let mut acc = 0u128;
            for k in 0..r {
                acc += a[i][k] as u128 * b[k][j] as u128;
            }
            out[i][j] = (acc % moduli[i] as u128) as u64;
        }
    }
    out
}

/// The normal subgroup `A` (all elements with trivial H-part) of a
/// semidirect construction, as a member set; well-defined for groups built
/// by [`semidirect`], [`frobenius_metacyclic`] and [`m5_group`].
pub fn semidirect_kernel(g: &FiniteGroup) -> Option<Subgroup> {
    g.semidirect_a
        .map(|a_size| Subgroup::from_members((0..a_size).collect()))
}

// ---------------------------------------------------------------------------
// Finite fields F_{p^n}, for fixed-point-free actions.
// ---------------------------------------------------------------------------

struct SmallField {
    p: u64,
    n: u32,
    /// Irreducible monic modulus, low-degree-first, length n+1.
    modulus: Vec<u64>,
}

impl SmallField {
    fn new(p: u64, n: u32) -> SmallField {
        let modulus = find_irreducible(p, n);
        SmallField { p, n, modulus }
    }

    fn size(&self) -> u64 {
        self.p.pow(self.n)
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.n as usize;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // Reduce modulo the monic modulus.
        for i in (n..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..n {
                let t = (self.modulus[j] * c) % self.p;
                prod[i - n + j] = (prod[i - n + j] + self.p - t) % self.p;
            }
        }
        prod.truncate(n);
        prod
    }

    fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0u64; self.n as usize];
        acc[0] = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn is_one(&self, a: &[u64]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    /// Deterministic multiplicative generator: the first element (in vector
    /// enumeration order) of full order.
    fn generator(&self) -> Vec<u64> {
        let q1 = self.size() - 1;
        let prime_parts: Vec<u64> = factorize(q1).into_iter().map(|(p, _)| p).collect();
        let mut v = vec![0u64; self.n as usize];
        let moduli = vec![self.p; self.n as usize];
        loop {
            assert!(increment(&mut v, &moduli), "no primitive element found");
            if v.iter().all(|&c| c == 0) {
                continue;
            }
            if prime_parts.iter().all(|&q| !self.is_one(&self.pow(&v, q1 / q))) {
                return v;
            }
        }
    }
}

fn find_irreducible(p: u64, n: u32) -> Vec<u64> {
    if n == 1 {
        return vec![0, 1];
    }
    // Enumerate monic degree-n polynomials; trial-divide by all monic
    // polynomials of degree 1..n/2.
    let mut coeffs = vec![0u64; n as usize];
    let moduli = vec![p; n as usize];
    loop {
        let mut candidate = coeffs.clone();
        candidate.push(1);
        if is_irreducible(&candidate, p) {
            return candidate;
        }
        assert!(increment(&mut coeffs, &moduli), "no irreducible polynomial found");
    }
}

fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let n = poly.len() - 1;
    if poly[0] == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        let mut div = vec![0u64; d];
        let moduli = vec![p; d];
        loop {
            let mut divisor = div.clone();
            divisor.push(1);
            if poly_divides(&divisor, poly, p) {
                return false;
            }
            if !increment(&mut div, &moduli) {
                break;
            }
        }
    }
    true
}

fn poly_divides(divisor: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let top = rem.len() - 1;
        if lead != 0 {
            for j in 0..=d {
                let t = (divisor[j] * lead) % p;
                rem[top - d + j] = (rem[top - d + j] + p - t) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// Frobenius group `(C_p)^n ⋊ C_m` with the cyclic complement acting as
/// multiplication by an order-m element of `F_{p^n}^*` (fixed-point-free).
pub fn frobenius_metacyclic(p: u64, n: u32, m: u64) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if n == 0 || m < 2 || (p.pow(n) - 1) % m != 0 {
        return Err(GroupError::NoFixedPointFreeAction { p, n, m });
    }
    let field = SmallField::new(p, n);
    let theta = field.pow(&field.generator(), (field.size() - 1) / m);
    let mat = mult_matrix(&field, &theta);
    let h = cyclic(m)?;
    let invariants = vec![p; n as usize];
    semidirect(
        &format!("Frob_{p}^{n}:C{m}"),
        &invariants,
        h,
        &[(1, mat)],
    )
}

fn mult_matrix(field: &SmallField, theta: &[u64]) -> Vec<Vec<i64>> {
    let n = field.n as usize;
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut xj = vec![0u64; n];
        xj[j] = 1;
        cols.push(field.mul(theta, &xj));
    }
    (0..n)
        .map(|i| (0..n).map(|j| cols[j][i] as i64).collect())
        .collect()
}

/// The order-6480 group `(C_2^4 × C_3^4) ⋊ C_5`: both factors are irreducible
/// fixed-point-free C_5-modules, so the group is Frobenius with kernel `U×V`.
pub fn m5_group() -> FiniteGroup {
    let f16 = SmallField::new(2, 4);
    let t2 = f16.pow(&f16.generator(), (f16.size() - 1) / 5);
    let m2 = mult_matrix(&f16, &t2);
    let f81 = SmallField::new(3, 4);
    let t3 = f81.pow(&f81.generator(), (f81.size() - 1) / 5);
    let m3 = mult_matrix(&f81, &t3);

    let mut mat = vec![vec![0i64; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            mat[i][j] = m2[i][j];
            mat[4 + i][4 + j] = m3[i][j];
        }
    }
    let invariants = [2u64, 2, 2, 2, 3, 3, 3, 3];
    semidirect("m5", &invariants, cyclic(5).expect("C5"), &[(1, mat)])
        .expect("the order-6480 construction is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_constructions() {
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert!(!symmetric(3).unwrap().is_abelian());
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(quaternion(8).unwrap().order(), 8);
        assert_eq!(abelian("C12", &[12]).unwrap().order(), 12);
        // Validate algebraic tables against the full group axioms.
        for g in [dihedral(12).unwrap(), quaternion(16).unwrap(), heisenberg(3)] {
            g.validate_table().unwrap();
        }
    }

    #[test]
    fn alternating_seven_from_spec_generators() {
        let gens = vec![
            Perm::from_cycles(7, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap(),
            Perm::from_cycles(7, &[vec![4, 5, 6]]).unwrap(),
        ];
        let a7 = from_permutations("A7", 7, gens).unwrap();
        assert_eq!(a7.order(), 2520);
        assert_eq!(alternating(7).unwrap().order(), 2520);
    }

    #[test]
    fn duplicate_generators_collapse() {
        let t = Perm::from_cycles(2, &[vec![0, 1]]).unwrap();
        let c2 = from_permutations("C2", 2, vec![t.clone(), t]).unwrap();
        assert_eq!(c2.order(), 2);
    }

    #[test]
    fn cayley_ingestion() {
        let c2 = from_cayley("C2", &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        assert!(from_cayley("bad", &[vec![0, 1], vec![1, 1]]).is_err());
        assert!(from_cayley("bad", &[vec![1, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn extraspecial_groups() {
        let e32p = extraspecial(2, 2, true).unwrap();
        assert_eq!(e32p.order(), 32);
        assert_eq!(e32p.center().order(), 2);
        assert_eq!(e32p.derived_subgroup().order(), 2);
        let e32m = extraspecial(2, 2, false).unwrap();
        assert_eq!(e32m.order(), 32);
        let h27 = extraspecial(3, 1, true).unwrap();
        assert_eq!(h27.order(), 27);
        assert_eq!(h27.exponent(), 3);
        let e27m = extraspecial(3, 1, false).unwrap();
        assert_eq!(e27m.exponent(), 9);
    }

    #[test]
    fn semidirect_s3_from_action() {
        let s3 = semidirect("S3", &[3], cyclic(2).unwrap(), &[(1, vec![vec![-1]])]).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        // Trivial action gives the direct product.
        let c6 = semidirect("C3xC2", &[3], cyclic(2).unwrap(), &[(1, vec![vec![1]])]).unwrap();
        assert!(c6.is_abelian());
    }

    #[test]
    fn semidirect_c3_on_c8_squared() {
        // x of order 3 acting on C8×C8 by the standard fixed-point-free matrix.
        let m = vec![vec![0, -1], vec![1, -1]];
        let g = semidirect("C8^2:C3", &[8, 8], cyclic(3).unwrap(), &[(1, m)]).unwrap();
        assert_eq!(g.order(), 192);
        // C_A(x) = 1: no nontrivial kernel vector is fixed.
        let a = semidirect_kernel(&g).unwrap();
        let x = (0..g.order() as u32)
            .find(|&e| !a.contains(e) && g.element_order(e) == 3)
            .unwrap();
        let fixed = a
            .members()
            .iter()
            .filter(|&&v| g.conjugate(v, x) == v)
            .count();
        assert_eq!(fixed, 1);
    }

    #[test]
    fn invalid_actions_are_rejected() {
        // Order-2 generator with an order-3 matrix action.
        let m = vec![vec![0, -1], vec![1, -1]];
        assert!(matches!(
            semidirect("bad", &[8, 8], cyclic(2).unwrap(), &[(1, m)]),
            Err(GroupError::NotAnAction(_))
        ));
        // Non-invertible matrix.
        let sing = vec![vec![2, 0], vec![0, 1]];
        assert!(matches!(
            semidirect("bad", &[8, 8], cyclic(3).unwrap(), &[(1, sing)]),
            Err(GroupError::NotAnAction(_))
        ));
    }

    #[test]
    fn frobenius_groups() {
        let f20 = frobenius_metacyclic(5, 1, 4).unwrap();
        assert_eq!(f20.order(), 20);
        assert!(f20.center().is_trivial());

        let s3 = frobenius_metacyclic(3, 1, 2).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());

        let u5 = frobenius_metacyclic(2, 4, 5).unwrap();
        assert_eq!(u5.order(), 80);

        assert!(frobenius_metacyclic(5, 1, 3).is_err());
        assert!(frobenius_metacyclic(4, 1, 3).is_err());

        // Frobenius property: nontrivial kernel elements have their whole
        // centralizer inside the kernel.
        for g in [&f20, &u5] {
            let k = semidirect_kernel(g).unwrap();
            for &u in k.members() {
                if u == 0 {
                    continue;
                }
                assert!(g.centralizer(u).is_subset_of(&k));
            }
        }
    }

    #[test]
    fn m5_group_shape() {
        let g = m5_group();
        assert_eq!(g.order(), 6480);
        assert!(g.center().is_trivial());
        let f = g.fitting();
        assert_eq!(f.order(), 1296);
        assert_eq!(g.conjugacy().class_count(), 264);
    }
}
