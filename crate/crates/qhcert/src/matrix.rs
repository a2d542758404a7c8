//! Dense matrices over an exact commutative ring.
//!
//! Dimension 12 and truncation order at most 7 keep everything small, so a
//! dense row-major layout is used throughout. Two characteristic-polynomial
//! routes are provided: Faddeev-LeVerrier (divisions by integers only, the
//! default) and Berkowitz (division-free); they must agree exactly and the
//! test suite holds them to that.

use crate::qpoly::QPoly;
use crate::rational::{rat, Rat};
use crate::ring::Ring;
use crate::series::{TSeries, ORDER_INF};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not invertible at t=0: {0}")]
    NotInvertible(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, col: &[T]) {
        assert_eq!(col.len(), self.rows);
        for (i, v) in col.iter().enumerate() {
            self[(i, j)] = v.clone();
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Matrix product. No sparsity shortcuts: a "zero" entry of a truncated
    /// ring element may still carry a finite precision bound, and skipping
    /// it would let the product claim coefficients beyond what is known.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "mul shape");
        let mut out: Mat<T> = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)].add(&a.mul(&rhs[(k, j)]));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "apply shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in v.iter().enumerate() {
                    acc = acc.add(&self[(i, j)].mul(x));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut out = Mat::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.add(&self[(i, i)]);
        }
        acc
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    /// Characteristic polynomial by Faddeev-LeVerrier, together with the
    /// adjugate. Coefficients are returned by ascending power of the
    /// spectral variable, so `coeffs[n] = 1`, `coeffs[n-1] = -trace`,
    /// `coeffs[0] = (-1)^n det`.
    pub fn charpoly_fl(&self) -> (Vec<T>, Mat<T>) {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return (vec![T::one()], Mat::zero(0, 0));
        }
        let id = Mat::identity(n);
        let mut c = vec![T::zero(); n + 1];
        c[n] = T::one();
        let mut m = id.clone(); // M_1
        let mut adj = id.clone();
        for k in 1..=n {
            let am = self.mul(&m);
            let ck = am.trace().div_int(k as i64).neg();
            c[n - k] = ck.clone();
            if k == n {
                // adj(A) = (-1)^(n-1) M_n
                adj = if n % 2 == 0 { m.neg() } else { m.clone() };
                debug_assert!(
                    am.add(&id.scale(&ck)).is_zero_matrix(),
                    "Faddeev-LeVerrier closure failed"
                );
            }
            m = am.add(&id.scale(&ck));
        }
        (c, adj)
    }

    /// Characteristic polynomial by the Berkowitz division-free algorithm;
    /// same coefficient convention as [`Mat::charpoly_fl`].
    pub fn charpoly_berkowitz(&self) -> Vec<T> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return vec![T::one()];
        }
        // c holds descending coefficients of the current leading submatrix.
        let mut c = vec![T::one(), self[(0, 0)].neg()];
        for r in 1..n {
            // Powers of the leading r x r block applied to the new column.
            let col: Vec<T> = (0..r).map(|i| self[(i, r)].clone()).collect();
            let row: Vec<T> = (0..r).map(|j| self[(r, j)].clone()).collect();
            let mut mc = col.clone();
            // toeplitz column: [1, -a_rr, -s_0, -s_1, ...]
            let mut tcol = Vec::with_capacity(r + 2);
            tcol.push(T::one());
            tcol.push(self[(r, r)].neg());
            for _ in 0..r {
                let s = row
                    .iter()
                    .zip(&mc)
                    .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
                tcol.push(s.neg());
                // mc = M * mc
                let mut next = vec![T::zero(); r];
                for i in 0..r {
                    for j in 0..r {
                        if !self[(i, j)].is_zero() && !mc[j].is_zero() {
                            next[i] = next[i].add(&self[(i, j)].mul(&mc[j]));
                        }
                    }
                }
                mc = next;
            }
            // c_new = T . c, lower-triangular Toeplitz with column tcol
            let mut out = vec![T::zero(); r + 2];
            for (i, t) in tcol.iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                for (j, cj) in c.iter().enumerate() {
                    if i + j < out.len() && !cj.is_zero() {
                        out[i + j] = out[i + j].add(&t.mul(cj));
                    }
                }
            }
            c = out;
        }
        c.reverse();
        c
    }

    /// Determinant via Faddeev-LeVerrier.
    pub fn det(&self) -> T {
        let n = self.rows;
        let (c, _) = self.charpoly_fl();
        if n % 2 == 0 {
            c[0].clone()
        } else {
            c[0].neg()
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl Mat<TSeries> {
    /// Smallest truncation order among the entries.
    pub fn order(&self) -> usize {
        self.data
            .iter()
            .map(TSeries::order)
            .min()
            .unwrap_or(ORDER_INF)
    }

    pub fn truncate(&self, order: usize) -> Self {
        self.map(|e| e.truncate(order))
    }

    pub fn specialize_q(&self, q: &Rat) -> Self {
        self.map(|e| e.specialize_q(q))
    }

    /// Inverse over the truncated series ring by Gaussian elimination.
    /// Pivots must be units of the ring, i.e. their `t^0` part must be a
    /// nonzero rational constant; matrices whose constant term is only
    /// invertible over the fraction field of Q[q] are rejected, so
    /// specialize `q` first in that case.
    pub fn inverse(&self) -> Result<Self, MatError> {
        if !self.is_square() {
            return Err(MatError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let order = self.order();
        let mut a = self.truncate(order.max(1).min(ORDER_INF));
        let mut inv: Mat<TSeries> = Mat::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| a[(r, col)].inverse_at(order).is_some())
                .ok_or_else(|| {
                    MatError::NotInvertible(format!(
                        "no unit pivot in column {col}; constant term is singular \
                         or not invertible over Q[q]"
                    ))
                })?;
            if pivot_row != col {
                for j in 0..n {
                    let tmp = a[(col, j)].clone();
                    a[(col, j)] = a[(pivot_row, j)].clone();
                    a[(pivot_row, j)] = tmp;
                    let tmp = inv[(col, j)].clone();
                    inv[(col, j)] = inv[(pivot_row, j)].clone();
                    inv[(pivot_row, j)] = tmp;
                }
            }
            let pinv = a[(col, col)]
                .inverse_at(order)
                .expect("pivot checked above");
            for j in 0..n {
                a[(col, j)] = a[(col, j)].mul(&pinv).truncate(order);
                inv[(col, j)] = inv[(col, j)].mul(&pinv).truncate(order);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..n {
                    a[(r, j)] = a[(r, j)].sub(&factor.mul(&a[(col, j)])).truncate(order);
                    inv[(r, j)] = inv[(r, j)].sub(&factor.mul(&inv[(col, j)])).truncate(order);
                }
            }
        }
        Ok(inv)
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = &m[r][col] / &pivot;
                for c in col..ncols {
                    m[r][c] = &m[r][c] - &(&f * &m[row][c]);
                }
            }
        }
        rank += 1;
        row += 1;
        if row == nrows {
            break;
        }
    }
    rank
}

/// Null space basis of a rational square system, as column vectors.
pub fn rational_kernel(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for c in 0..ncols {
            m[row][c] = &m[row][c] / &pivot;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    m[r][c] = &m[r][c] - &(&f * &m[row][c]);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free_cols
        .into_iter()
        .map(|fc| {
            let mut v = vec![rat(0); ncols];
            v[fc] = rat(1);
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[r][fc].clone();
            }
            v
        })
        .collect()
}

/// Adjugate and determinant of a matrix over Q[q], via Faddeev-LeVerrier.
pub fn qpoly_adjugate_det(m: &Mat<QPoly>) -> (Mat<QPoly>, QPoly) {
    let (c, adj) = m.charpoly_fl();
    let det = if m.rows() % 2 == 0 {
        c[0].clone()
    } else {
        c[0].neg()
    };
    (adj, det)
}
