//! Dense linear algebra over a prime field F_q, sized for class-matrix
//! eigenspace splitting (dimensions up to a few hundred).

use crate::arith::{mul_mod, pow_mod};

#[derive(Clone)]
pub struct ModMatrix {
    pub q: u64,
    pub dim: usize,
    /// Row-major square matrix.
    pub data: Vec<u64>,
}

impl ModMatrix {
    pub fn zero(dim: usize, q: u64) -> Self {
        ModMatrix { q, dim, data: vec![0; dim * dim] }
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.dim + j] = v % self.q;
    }

    pub fn mat_vec(&self, v: &[u64]) -> Vec<u64> {
        let q = self.q;
        (0..self.dim)
            .map(|i| {
                let mut acc: u128 = 0;
                for j in 0..self.dim {
                    acc += self.at(i, j) as u128 * v[j] as u128;
                    if acc >= u128::MAX / 2 {
                        acc %= q as u128;
                    }
                }
                (acc % q as u128) as u64
            })
            .collect()
    }
}

pub fn inv(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

/// Basis of the null space of `m` (column vectors), via Gauss-Jordan.
pub fn kernel_basis(m: &ModMatrix) -> Vec<Vec<u64>> {
    let q = m.q;
    let dim = m.dim;
    let mut a = m.data.clone();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0usize;
    for col in 0..dim {
        let mut piv = None;
        for r in row..dim {
            if a[r * dim + col] != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        a.swap_chunks(piv, row, dim);
        let pinv = inv(a[row * dim + col], q);
        for j in 0..dim {
            a[row * dim + j] = mul_mod(a[row * dim + j], pinv, q);
        }
        for r in 0..dim {
            if r != row && a[r * dim + col] != 0 {
                let f = a[r * dim + col];
                for j in 0..dim {
                    let sub = mul_mod(f, a[row * dim + j], q);
                    a[r * dim + j] = (a[r * dim + j] + q - sub) % q;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == dim {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let is_pivot = {
        let mut v = vec![false; dim];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..dim {
        if is_pivot[free] {
            continue;
        }
        let mut vecb = vec![0u64; dim];
        vecb[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            let coeff = a[r * dim + free];
            vecb[pc] = (q - coeff) % q;
        }
        basis.push(vecb);
    }
    basis
}

trait SwapChunks {
    fn swap_chunks(&mut self, i: usize, j: usize, w: usize);
}

impl SwapChunks for Vec<u64> {
    fn swap_chunks(&mut self, i: usize, j: usize, w: usize) {
        if i == j {
            return;
        }
        for k in 0..w {
            self.swap(i * w + k, j * w + k);
        }
    }
}

/// Express each column of `ws` in the span of the independent columns `vs`
/// (vectors of length `n`); panics if a `w` is outside the span, which would
/// mean the subspace was not invariant.
pub fn solve_in_span(vs: &[Vec<u64>], ws: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let n = vs[0].len();
    let d = vs.len();
    let m = ws.len();
    let cols = d + m;
    let mut a = vec![0u64; n * cols];
    for (j, v) in vs.iter().enumerate() {
        for i in 0..n {
            a[i * cols + j] = v[i] % q;
        }
    }
    for (j, w) in ws.iter().enumerate() {
        for i in 0..n {
            a[i * cols + d + j] = w[i] % q;
        }
    }
    // Eliminate on the first d columns.
    let mut row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..d {
        let piv = (row..n).find(|&r| a[r * cols + col] != 0);
        let piv = piv.expect("basis columns must be independent");
        for k in 0..cols {
            a.swap(piv * cols + k, row * cols + k);
        }
        let pinv = inv(a[row * cols + col], q);
        for k in 0..cols {
            a[row * cols + k] = mul_mod(a[row * cols + k], pinv, q);
        }
        for r in 0..n {
            if r != row && a[r * cols + col] != 0 {
                let f = a[r * cols + col];
                for k in 0..cols {
                    let sub = mul_mod(f, a[row * cols + k], q);
                    a[r * cols + k] = (a[r * cols + k] + q - sub) % q;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    // Rows beyond the pivots must be zero on the w-columns.
    for r in row..n {
        for k in d..cols {
            assert_eq!(a[r * cols + k], 0, "vector escapes the invariant subspace");
        }
    }
    (0..m)
        .map(|j| (0..d).map(|i| a[i * cols + d + j]).collect())
        .collect()
}

/// Characteristic polynomial `det(λI - A)`, monic, low-degree-first, via
/// Hessenberg reduction and the leading-principal-minor recurrence.
pub fn char_poly(m: &ModMatrix) -> Vec<u64> {
    let q = m.q;
    let d = m.dim;
    if d == 0 {
        return vec![1];
    }
    let mut h = m.data.clone();
    let at = |h: &Vec<u64>, i: usize, j: usize| h[i * d + j];
    // Hessenberg via similarity transforms.
    for j in 0..d.saturating_sub(2) {
        let piv = ((j + 1)..d).find(|&i| at(&h, i, j) != 0);
        let Some(piv) = piv else { continue };
        if piv != j + 1 {
            for k in 0..d {
                h.swap(piv * d + k, (j + 1) * d + k);
            }
            for k in 0..d {
                h.swap(k * d + piv, k * d + j + 1);
            }
        }
        let pinv = inv(at(&h, j + 1, j), q);
        for i in (j + 2)..d {
            let f = mul_mod(at(&h, i, j), pinv, q);
            if f == 0 {
                continue;
            }
            // row_i -= f·row_{j+1};  col_{j+1} += f·col_i.
            for k in 0..d {
                let sub = mul_mod(f, at(&h, j + 1, k), q);
                h[i * d + k] = (h[i * d + k] + q - sub) % q;
            }
            for k in 0..d {
                let add = mul_mod(f, at(&h, k, i), q);
                h[k * d + j + 1] = (h[k * d + j + 1] + add) % q;
            }
        }
    }
    // p_k(λ) = (λ - h_kk)·p_{k-1} - Σ_i h_ik·(Π_{j=i..k-1} h_{j+1,j})·p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..d {
        let mut p = poly_shift_scale(&polys[k], at(&h, k, k), q);
        let mut subdiag = 1u64;
        for i in (0..k).rev() {
            subdiag = mul_mod(subdiag, at(&h, i + 1, i), q);
            let c = mul_mod(at(&h, i, k), subdiag, q);
            if c != 0 {
                poly_sub_scaled(&mut p, &polys[i], c, q);
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

/// `(λ - c)·p`.
fn poly_shift_scale(p: &[u64], c: u64, q: u64) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + 1];
    for (i, &pi) in p.iter().enumerate() {
        out[i + 1] = (out[i + 1] + pi) % q;
        let sub = mul_mod(c, pi, q);
        out[i] = (out[i] + q - sub) % q;
    }
    out
}

fn poly_sub_scaled(p: &mut [u64], other: &[u64], c: u64, q: u64) {
    for (i, &oi) in other.iter().enumerate() {
        let sub = mul_mod(c, oi, q);
        p[i] = (p[i] + q - sub) % q;
    }
}

pub fn poly_eval(p: &[u64], x: u64, q: u64) -> u64 {
    let mut acc = 0u64;
    for &c in p.iter().rev() {
        acc = (mul_mod(acc, x, q) + c) % q;
    }
    acc
}
