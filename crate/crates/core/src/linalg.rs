//! Exact dense linear algebra over any of the crate's coefficient fields.
//!
//! Rank and nullspace run fraction-free (Bareiss-style) elimination: rows are
//! cleared of denominators first, every intermediate entry is a minor of the
//! input, and the single-step divisions are exact in the entry domain. The
//! determinant is division-free (Laplace expansion memoized over column
//! subsets), which keeps it usable over non-field entry domains such as the
//! splitting-field matrices of the symbol algebras.

use crate::ring::{Domain, Field};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {}, got {}", expected, got)
            }
        }
    }
}

impl std::error::Error for LinalgError {}

/// Dense matrix with entries from one coefficient field or domain.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> ExactMatrix<T> {
    pub fn fill(rows: usize, cols: usize, value: &T) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ExactMatrix {
            rows,
            cols,
            data: vec![value.clone(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        for r in &rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        assert!(cols > 0, "matrix must have at least one column");
        let nrows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(ExactMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn row_mut(&mut self, r: usize) -> &mut [T] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

impl<T: Domain> ExactMatrix<T> {
    pub fn identity(n: usize, witness: &T) -> Self {
        let mut m = Self::fill(n, n, &witness.zero_like());
        for i in 0..n {
            m.set(i, i, witness.one_like());
        }
        m
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let zero = self.data[0].zero_like();
        let mut out = Self::fill(self.rows, other.cols, &zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let acc = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, acc);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols, "matrix power needs a square matrix");
        let mut acc = Self::identity(self.rows, &self.data[0]);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base).unwrap();
            }
            base = base.matmul(&base).unwrap();
            e >>= 1;
        }
        acc
    }
}

/// Division-free determinant: Laplace expansion memoized over column subsets,
/// with zero entries skipped. Exponential in the dimension, which is fine for
/// the small splitting-field matrices, and it needs no inverses at all.
pub fn det<T: Domain>(m: &ExactMatrix<T>) -> T {
    assert_eq!(m.rows(), m.cols(), "determinant needs a square matrix");
    let n = m.rows();
    assert!(n <= 20, "subset-expansion determinant limited to n <= 20");
    let zero = m.get(0, 0).zero_like();
    let one = m.get(0, 0).one_like();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    // minor[s] = det of the submatrix on rows 0..popcount(s) and columns s.
    let mut minor: Vec<Option<T>> = vec![None; 1usize << n];
    minor[0] = Some(one);
    for s in 1usize..(1 << n) {
        let k = s.count_ones() as usize; // expanding along row k-1
        let mut acc = zero.clone();
        let mut t = 0usize; // position of the column within the subset
        for c in 0..n {
            if s & (1 << c) == 0 {
                continue;
            }
            let entry = m.get(k - 1, c);
            if !entry.is_zero() {
                if let Some(sub) = &minor[s ^ (1 << c)] {
                    if !sub.is_zero() {
                        let term = entry.mul(sub);
                        // sign (-1)^((k-1) + t)
                        acc = if (k - 1 + t) % 2 == 0 {
                            acc.add(&term)
                        } else {
                            acc.sub(&term)
                        };
                    }
                }
            }
            t += 1;
        }
        minor[s] = Some(acc);
    }
    minor[(1 << n) - 1].take().unwrap()
}

/// Result of fraction-free forward elimination.
struct Echelon<F> {
    mat: ExactMatrix<F>,
    /// (row, col) of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
}

/// Fraction-free (Bareiss) forward elimination with row pivoting. Pivot rule:
/// among the nonzero candidates in the current column, take the entry of
/// smallest pivot weight (total degree for polynomial-like entries), first
/// row on ties.
fn fraction_free_echelon<F: Field>(m: &ExactMatrix<F>) -> Echelon<F> {
    let mut a = m.clone();
    for r in 0..a.rows {
        F::clear_denominators(a.row_mut(r));
    }
    let one = a.get(0, 0).one_like();
    let mut prev = one;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let mut best: Option<(usize, usize)> = None; // (weight, row)
        for i in r..a.rows {
            if !a.get(i, c).is_zero() {
                let w = a.get(i, c).pivot_weight();
                if best.map_or(true, |(bw, _)| w < bw) {
                    best = Some((w, i));
                }
            }
        }
        let Some((_, pr)) = best else { continue };
        if pr != r {
            for j in 0..a.cols {
                let tmp = a.get(r, j).clone();
                a.set(r, j, a.get(pr, j).clone());
                a.set(pr, j, tmp);
            }
        }
        // Update every lower row, including those already zero in this
        // column: the fraction-free invariant (entries are minors of the
        // input) needs the renormalization everywhere.
        for i in (r + 1)..a.rows {
            for j in (c + 1)..a.cols {
                let num = a.get(r, c).mul(a.get(i, j)).sub(&a.get(i, c).mul(a.get(r, j)));
                a.set(i, j, num.exact_div(&prev));
            }
            a.set(i, c, a.get(0, 0).zero_like());
        }
        prev = a.get(r, c).clone();
        pivots.push((r, c));
        r += 1;
    }
    Echelon { mat: a, pivots }
}

/// Rank over the entry field.
pub fn rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    fraction_free_echelon(m).pivots.len()
}

/// Rank of a list of vectors (rows). Empty input has rank 0.
pub fn rank_of_vectors<F: Field>(vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&ExactMatrix::from_rows(vectors.to_vec()).expect("ragged vector list"))
}

/// Basis of the right kernel: cols - rank vectors v with M v = 0, one per
/// free column in ascending column order. Each vector is scaled so its first
/// nonzero entry is 1.
pub fn nullspace<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<F>> {
    let ech = fraction_free_echelon(m);
    let zero = m.get(0, 0).zero_like();
    let one = m.get(0, 0).one_like();
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for f in 0..m.cols() {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut v = vec![zero.clone(); m.cols()];
        v[f] = one.clone();
        // Back-substitute pivot coordinates from the last pivot row upward.
        for k in (0..ech.pivots.len()).rev() {
            let (pr, pc) = ech.pivots[k];
            if pc > f {
                continue;
            }
            let mut s = zero.clone();
            for j in (pc + 1)..m.cols() {
                let u = ech.mat.get(pr, j);
                if !u.is_zero() && !v[j].is_zero() {
                    s = s.add(&u.mul(&v[j]));
                }
            }
            v[pc] = s.neg().mul(&ech.mat.get(pr, pc).inv());
        }
        normalize_vector(&mut v);
        basis.push(v);
    }
    basis
}

/// Scale a vector so its first nonzero entry is 1.
fn normalize_vector<F: Field>(v: &mut [F]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() {
        let s = first.inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&s);
            }
        }
    }
}

/// Canonical independent spanning set for a list of vectors: the nonzero rows
/// of the fraction-free echelon form, normalized. Returns an empty list for
/// an empty span.
pub fn reduce_span<F: Field>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = ExactMatrix::from_rows(vectors.to_vec()).expect("ragged vector list");
    let ech = fraction_free_echelon(&m);
    let mut out = Vec::new();
    for &(r, _) in &ech.pivots {
        let mut row = ech.mat.row(r).to_vec();
        normalize_vector(&mut row);
        out.push(row);
    }
    out
}

/// Intersection of the spans of `bases` inside an ambient space of dimension
/// `d`: pairwise Zassenhaus-style kernels of [B1 | -B2], folded left to
/// right with early exit once the running intersection is {0}. Returns a
/// reduced basis (empty for the trivial intersection).
pub fn subspace_intersection<F: Field>(
    bases: &[Vec<Vec<F>>],
    d: usize,
) -> Result<Vec<Vec<F>>, LinalgError> {
    for basis in bases {
        for v in basis {
            if v.len() != d {
                return Err(LinalgError::DimensionMismatch {
                    expected: d,
                    got: v.len(),
                });
            }
        }
    }
    let Some(first) = bases.first() else {
        panic!("subspace_intersection needs at least one subspace");
    };
    let mut running = reduce_span(first);
    for next in &bases[1..] {
        if running.is_empty() {
            break;
        }
        let nb = reduce_span(next);
        if nb.is_empty() {
            running.clear();
            break;
        }
        // Columns: running basis then negated next basis.
        let k1 = running.len();
        let k2 = nb.len();
        let zero = running[0][0].zero_like();
        let mut m = ExactMatrix::fill(d, k1 + k2, &zero);
        for (t, v) in running.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, t, x.clone());
            }
        }
        for (t, v) in nb.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, k1 + t, x.neg());
            }
        }
        let kernel = nullspace(&m);
        let mut vectors = Vec::new();
        for kv in kernel {
            let mut w = vec![zero.clone(); d];
            for (t, coeff) in kv[..k1].iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for i in 0..d {
                    if !running[t][i].is_zero() {
                        w[i] = w[i].add(&coeff.mul(&running[t][i]));
                    }
                }
            }
            if w.iter().any(|x| !x.is_zero()) {
                vectors.push(w);
            }
        }
        running = reduce_span(&vectors);
    }
    Ok(running)
}
