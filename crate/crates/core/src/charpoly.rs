//! Exact characteristic polynomials: the brute-force reference path.
//!
//! [`charpoly_direct`] runs the Faddeev–LeVerrier recurrence on `A_α(G)`.
//! Every entry of `A_α` lies in ℤ[α] and is linear in α, so the recurrence
//! is carried out over integer α-polynomials; the only divisions are the
//! exact divisions of a trace by `k`. [`polymatrix_det`] is an independent
//! fraction-free (Bareiss) determinant over ℚ[α][λ].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{param, Error, Result};
use crate::graph::Graph;
use crate::poly::{AlphaPoly, BiPoly, Rational, UniPoly};

/// Square matrix with entries in ℚ[α][λ], stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<BiPoly>,
}

impl PolyMatrix {
    pub fn zero(size: usize) -> Self {
        Self {
            size,
            entries: vec![BiPoly::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| if i == j { BiPoly::one() } else { BiPoly::zero() })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> BiPoly) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        Self { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BiPoly) {
        self.entries[i * self.size + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        PolyMatrix::from_fn(self.size, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        PolyMatrix::from_fn(self.size, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        let n = self.size;
        PolyMatrix::from_fn(n, |i, j| {
            let mut acc = BiPoly::zero();
            for k in 0..n {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
    }

    /// Multiplies every entry by the scalar polynomial `c`.
    pub fn scale(&self, c: &BiPoly) -> PolyMatrix {
        PolyMatrix::from_fn(self.size, |i, j| self.get(i, j) * c)
    }

    /// `c·I`.
    pub fn scalar(size: usize, c: &BiPoly) -> PolyMatrix {
        PolyMatrix::from_fn(size, |i, j| if i == j { c.clone() } else { BiPoly::zero() })
    }

    /// `λI − self`.
    pub fn char_matrix(&self) -> PolyMatrix {
        PolyMatrix::scalar(self.size, &BiPoly::lambda()).sub(self)
    }

    /// Specializes α and returns a matrix of λ-polynomials as `PolyMatrix`.
    pub fn eval_alpha(&self, a: &Rational) -> PolyMatrix {
        PolyMatrix::from_fn(self.size, |i, j| BiPoly::from_lambda_poly(&self.get(i, j).eval_alpha(a)))
    }

    /// Deletes the rows and columns listed in `removed`.
    pub fn principal_submatrix(&self, removed: &[usize]) -> PolyMatrix {
        let keep: Vec<usize> = (0..self.size).filter(|i| !removed.contains(i)).collect();
        PolyMatrix::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]).clone())
    }
}

/// `A_α(G) = αD + (1−α)A` with symbolic α.
pub fn alpha_matrix(g: &Graph) -> PolyMatrix {
    let off = 1 - BiPoly::alpha();
    PolyMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            BiPoly::alpha() * g.degree(i) as i64
        } else if g.has_edge(i, j) {
            off.clone()
        } else {
            BiPoly::zero()
        }
    })
}

/// Adjacency matrix as a constant `PolyMatrix`.
pub fn adjacency_polymatrix(g: &Graph) -> PolyMatrix {
    PolyMatrix::from_fn(g.n(), |i, j| if g.has_edge(i, j) { BiPoly::one() } else { BiPoly::zero() })
}

// ---- Faddeev–LeVerrier over ℤ[α] ---------------------------------------

type IntPoly = Vec<BigInt>;

/// Characteristic polynomial of the matrix with diagonal `diag[i]·α` and
/// off-diagonal `(1−α)` on the pairs listed in `nbrs`.
fn faddeev_leverrier(diag: &[i64], nbrs: &[Vec<usize>]) -> BiPoly {
    let n = diag.len();
    if n == 0 {
        return BiPoly::one();
    }
    let width = n + 1; // α-degree of every quantity is at most n
    let zero_poly = || vec![BigInt::zero(); width];
    // coefficients c[k] of λ^k
    let mut c: Vec<IntPoly> = vec![zero_poly(); n + 1];
    c[n][0] = BigInt::from(1);
    // M_1 = I
    let mut m: Vec<IntPoly> = (0..n * n)
        .map(|idx| {
            let mut p = zero_poly();
            if idx / n == idx % n {
                p[0] = BigInt::from(1);
            }
            p
        })
        .collect();
    for k in 1..=n {
        // A·M, entrywise: S + α(d_i·M − S), S_ij = Σ_{l ∈ N(i)} M_lj
        let last = k == n;
        let mut am: Vec<IntPoly> = if last { Vec::new() } else { vec![zero_poly(); n * n] };
        let mut trace = zero_poly();
        for i in 0..n {
            let cols: Box<dyn Iterator<Item = usize>> = if last { Box::new(std::iter::once(i)) } else { Box::new(0..n) };
            for j in cols {
                let mut s = zero_poly();
                for &l in &nbrs[i] {
                    for (x, y) in s.iter_mut().zip(&m[l * n + j]) {
                        if !y.is_zero() {
                            *x += y;
                        }
                    }
                }
                let mij = &m[i * n + j];
                let mut out = s.clone();
                let d = BigInt::from(diag[i]);
                for t in 0..width - 1 {
                    let v = &d * &mij[t] - &s[t];
                    if !v.is_zero() {
                        out[t + 1] += v;
                    }
                }
                debug_assert!(
                    (&d * &mij[width - 1] - &s[width - 1]).is_zero(),
                    "α-degree overflow in Faddeev–LeVerrier"
                );
                if i == j {
                    for (x, y) in trace.iter_mut().zip(&out) {
                        *x += y;
                    }
                }
                if !last {
                    am[i * n + j] = out;
                }
            }
        }
        // c_{n−k} = −tr(A M_k)/k
        let kk = BigInt::from(k as i64);
        let coeff: IntPoly = trace
            .iter()
            .map(|t| {
                let (q, r) = t.div_rem(&kk);
                debug_assert!(r.is_zero(), "inexact trace division");
                -q
            })
            .collect();
        if !last {
            // M_{k+1} = A M_k + c_{n−k} I
            for i in 0..n {
                for (x, y) in am[i * n + i].iter_mut().zip(&coeff) {
                    *x += y;
                }
            }
            m = am;
        }
        c[n - k] = coeff;
    }
    BiPoly::from_coeffs(
        c.into_iter()
            .map(|p| AlphaPoly::from_coeffs(p.into_iter().map(Rational::from_integer).collect()))
            .collect(),
    )
}

fn principal_charpoly(g: &Graph, removed: &[bool]) -> BiPoly {
    let index: Vec<Option<usize>> = {
        let mut next = 0;
        removed
            .iter()
            .map(|&r| {
                if r {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect()
    };
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
    let diag: Vec<i64> = kept.iter().map(|&v| g.degree(v) as i64).collect();
    let nbrs: Vec<Vec<usize>> = kept
        .iter()
        .map(|&v| g.neighbors(v).iter().filter_map(|&w| index[w]).collect())
        .collect();
    faddeev_leverrier(&diag, &nbrs)
}

/// `det(λI − A_α(G))`, monic of λ-degree `n`.
pub fn charpoly_direct(g: &Graph) -> BiPoly {
    principal_charpoly(g, &vec![false; g.n()])
}

/// Characteristic polynomial of `A_α(G)` with row and column `u` deleted.
/// The remaining diagonal keeps the degrees of `G`.
pub fn charpoly_submatrix(g: &Graph, u: usize) -> Result<BiPoly> {
    charpoly_principal(g, &[u])
}

/// Characteristic polynomial of the principal submatrix of `A_α(G)` on
/// the vertices not listed in `removed`.
pub fn charpoly_principal(g: &Graph, removed: &[usize]) -> Result<BiPoly> {
    let mut mask = vec![false; g.n()];
    for &u in removed {
        if u >= g.n() {
            return param(format!("vertex {u} out of range for n = {}", g.n()));
        }
        if std::mem::replace(&mut mask[u], true) {
            return param(format!("vertex {u} listed twice"));
        }
    }
    Ok(principal_charpoly(g, &mask))
}

/// Characteristic polynomial of the adjacency matrix (α = 0).
pub fn adjacency_charpoly(g: &Graph) -> UniPoly {
    charpoly_direct(g).eval_alpha(&Rational::zero())
}

// ---- Bareiss ------------------------------------------------------------

/// Determinant over ℚ[α][λ] by fraction-free elimination; every division
/// is exact by Sylvester's identity.
pub fn polymatrix_det(m: &PolyMatrix) -> BiPoly {
    let n = m.size();
    if n == 0 {
        return BiPoly::one();
    }
    let mut a: Vec<Vec<BiPoly>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut negate = false;
    let mut prev = BiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            a[i][k] = BiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Quotient matrix of an equitable partition of `A_α(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    size: usize,
    entries: Vec<AlphaPoly>,
    class_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &AlphaPoly {
        &self.entries[i * self.size + j]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn to_polymatrix(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.size, |i, j| BiPoly::from_alpha(self.get(i, j).clone()))
    }

    /// `det(λI − N)`.
    pub fn charpoly(&self) -> BiPoly {
        polymatrix_det(&self.to_polymatrix().char_matrix())
    }

    pub fn eval_f64(&self, alpha: f64) -> Vec<Vec<f64>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j).eval_f64(alpha)).collect())
            .collect()
    }
}

/// Builds the quotient matrix `N = (q_ij)` where `q_ij` is the row sum of
/// block `(i, j)` of `A_α(G)`; fails unless each block has constant row
/// sums as polynomials in α.
pub fn quotient_matrix(g: &Graph, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let mut class = vec![usize::MAX; g.n()];
    for (c, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return param(format!("partition class {c} is empty"));
        }
        for &v in block {
            if v >= g.n() {
                return param(format!("vertex {v} out of range for n = {}", g.n()));
            }
            if class[v] != usize::MAX {
                return param(format!("vertex {v} appears in two classes"));
            }
            class[v] = c;
        }
    }
    if let Some(v) = class.iter().position(|&c| c == usize::MAX) {
        return param(format!("vertex {v} is not covered by the partition"));
    }
    let k = partition.len();
    let off = AlphaPoly::linear(1, -1);
    let row_sums = |v: usize| -> Vec<AlphaPoly> {
        let mut s = vec![AlphaPoly::zero(); k];
        s[class[v]] += &AlphaPoly::from_coeffs(vec![Rational::zero(), Rational::from_integer(BigInt::from(g.degree(v)))]);
        for &w in g.neighbors(v) {
            s[class[w]] += &off;
        }
        s
    };
    let mut entries = vec![AlphaPoly::zero(); k * k];
    for (i, block) in partition.iter().enumerate() {
        let first = row_sums(block[0]);
        for &v in &block[1..] {
            let other = row_sums(v);
            if let Some(j) = (0..k).find(|&j| other[j] != first[j]) {
                return Err(Error::NotEquitable { row: i, col: j });
            }
        }
        for (j, s) in first.into_iter().enumerate() {
            entries[i * k + j] = s;
        }
    }
    Ok(QuotientMatrix {
        size: k,
        entries,
        class_sizes: partition.iter().map(Vec::len).collect(),
    })
}
