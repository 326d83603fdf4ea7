//! Dense matrices over the scalar tower, with exact and float linear-algebra kernels.
//!
//! Rank, kernel and positive-definiteness decisions come in two flavours:
//! fraction-free (Bareiss) elimination over Q(√2) for anything labelled exact,
//! and threshold-pivoted Gaussian elimination for sampled float data. Rank
//! claims are never decided by floating pivots in exact mode.

use crate::scalar::{QSqrt2, Rational, Scalar, Tol};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| S::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x.clone() + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x.clone() - y)
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.clone() * s)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        Mat::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols)
                .map(|k| self[(r, k)].clone() * &other[(k, c)])
                .sum()
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "mul_vec dimension mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self[(r, c)].clone() * &v[c]).sum())
            .collect()
    }

    pub fn paste(&mut self, r0: usize, c0: usize, block: &Mat<S>) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, h: usize, w: usize) -> Mat<S> {
        assert!(r0 + h <= self.rows && c0 + w <= self.cols);
        Mat::from_fn(h, w, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn trace(&self) -> S {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Assembles a block matrix from a rectangular grid of equally-shaped blocks.
    pub fn from_blocks(grid: &[Vec<&Mat<S>>]) -> Self {
        let br = grid.len();
        let bc = grid[0].len();
        let h = grid[0][0].rows;
        let w = grid[0][0].cols;
        let mut out = Self::zeros(br * h, bc * w);
        for (i, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), bc);
            for (j, blk) in row.iter().enumerate() {
                assert_eq!((blk.rows, blk.cols), (h, w), "unequal block shapes");
                out.paste(i * h, j * w, blk);
            }
        }
        out
    }

    pub fn is_symmetric(&self, tol: Tol) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                let d = self[(r, c)].clone() - &self[(c, r)];
                if !d.within(tol.residual) {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .map(|x| x.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.entries[r * self.cols + c]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.entries[r * self.cols + c]
    }
}

impl<S: Scalar> fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot<S: Scalar>(u: &[S], v: &[S]) -> S {
    assert_eq!(u.len(), v.len(), "dot dimension mismatch");
    u.iter().zip(v).map(|(x, y)| x.clone() * y).sum()
}

pub fn norm2<S: Scalar>(u: &[S]) -> S {
    dot(u, u)
}

pub fn scale_vec<S: Scalar>(u: &[S], s: &S) -> Vec<S> {
    u.iter().map(|x| x.clone() * s).collect()
}

pub fn sub_vec<S: Scalar>(u: &[S], v: &[S]) -> Vec<S> {
    u.iter().zip(v).map(|(x, y)| x.clone() - y).collect()
}

pub fn add_vec<S: Scalar>(u: &[S], v: &[S]) -> Vec<S> {
    u.iter().zip(v).map(|(x, y)| x.clone() + y).collect()
}

/// Scalars over which the elimination kernels are available.
pub trait MatScalar: Scalar {
    fn rank(m: &Mat<Self>, tol: Tol) -> usize;
    fn kernel_basis(m: &Mat<Self>, tol: Tol) -> Vec<Vec<Self>>;
    fn det(m: &Mat<Self>) -> Result<Self, LinAlgError>;
    fn is_positive_definite(m: &Mat<Self>, tol: Tol) -> Result<bool, LinAlgError>;
    /// Solves A·X = B for X when A is square and invertible.
    fn solve(a: &Mat<Self>, b: &Mat<Self>, tol: Tol) -> Option<Mat<Self>>;
}

impl<S: MatScalar> Mat<S> {
    pub fn rank(&self, tol: Tol) -> usize {
        S::rank(self, tol)
    }

    /// Basis of the right null space; `rank + basis.len() == cols`.
    pub fn kernel_basis(&self, tol: Tol) -> Vec<Vec<S>> {
        S::kernel_basis(self, tol)
    }

    pub fn det(&self) -> Result<S, LinAlgError> {
        S::det(self)
    }

    pub fn is_positive_definite(&self, tol: Tol) -> Result<bool, LinAlgError> {
        S::is_positive_definite(self, tol)
    }

    pub fn solve(&self, b: &Mat<S>, tol: Tol) -> Option<Mat<S>> {
        S::solve(self, b, tol)
    }
}

// ---------------------------------------------------------------------------
// Exact kernels over Q(√2)
// ---------------------------------------------------------------------------

/// Integer pair a + b√2 ∈ Z[√2]; the working domain of Bareiss elimination.
#[derive(Clone, PartialEq, Eq)]
struct ZS {
    a: BigInt,
    b: BigInt,
}

impl ZS {
    fn zero() -> Self {
        ZS {
            a: BigInt::zero(),
            b: BigInt::zero(),
        }
    }

    fn one() -> Self {
        ZS {
            a: BigInt::one(),
            b: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn mul(&self, o: &ZS) -> ZS {
        let bb: BigInt = &self.b * &o.b;
        ZS {
            a: &self.a * &o.a + (bb << 1),
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    fn sub(&self, o: &ZS) -> ZS {
        ZS {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }

    /// Exact division in Z[√2]; Bareiss guarantees divisibility where used.
    fn div_exact(&self, o: &ZS) -> ZS {
        let obb: BigInt = &o.b * &o.b;
        let norm: BigInt = &o.a * &o.a - (obb << 1);
        debug_assert!(!norm.is_zero());
        let sbob: BigInt = &self.b * &o.b;
        let na: BigInt = &self.a * &o.a - (sbob << 1);
        let nb: BigInt = &self.b * &o.a - &self.a * &o.b;
        let (qa, ra) = na.div_rem(&norm);
        let (qb, rb) = nb.div_rem(&norm);
        debug_assert!(ra.is_zero() && rb.is_zero(), "inexact division in Z[√2]");
        ZS { a: qa, b: qb }
    }

    /// Sign of a + b√2 by the a² vs 2b² comparison.
    fn sign(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            (sa, _) => {
                let a2: BigInt = &self.a * &self.a;
                let b2: BigInt = (&self.b * &self.b) << 1;
                if a2 > b2 {
                    sa
                } else {
                    -sa
                }
            }
        }
    }

    fn to_qsqrt2(&self) -> QSqrt2 {
        QSqrt2::new(
            Rational::from_integer(self.a.clone()),
            Rational::from_integer(self.b.clone()),
        )
    }
}

fn sign_of(v: &BigInt) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Clears denominators per row; returns integral rows and the positive row scales.
fn integral_rows(m: &Mat<QSqrt2>) -> (Vec<Vec<ZS>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.rows());
    let mut scales = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut lcm = BigInt::one();
        for x in m.row(r) {
            let (a, b) = x.parts();
            lcm = lcm.lcm(a.denom());
            lcm = lcm.lcm(b.denom());
        }
        let row = m
            .row(r)
            .iter()
            .map(|x| {
                let (a, b) = x.parts();
                ZS {
                    a: a.numer() * (&lcm / a.denom()),
                    b: b.numer() * (&lcm / b.denom()),
                }
            })
            .collect();
        rows.push(row);
        scales.push(lcm);
    }
    (rows, scales)
}

struct BareissResult {
    rank: usize,
    swaps: usize,
    /// Pivot after the final elimination step; equals the determinant of the
    /// scaled matrix when elimination completes on a square matrix.
    last_pivot: ZS,
}

/// Fraction-free echelon reduction with row pivoting and column scanning.
fn bareiss(rows: &mut [Vec<ZS>], cols: usize) -> BareissResult {
    let n = rows.len();
    let mut prev = ZS::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(pr) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if pr != r {
            rows.swap(pr, r);
            swaps += 1;
        }
        let pivot = rows[r][c].clone();
        for i in (r + 1)..n {
            for j in (c + 1)..cols {
                let t = pivot.mul(&rows[i][j]).sub(&rows[i][c].mul(&rows[r][j]));
                rows[i][j] = t.div_exact(&prev);
            }
            rows[i][c] = ZS::zero();
        }
        prev = pivot.clone();
        r += 1;
    }
    BareissResult {
        rank: r,
        swaps,
        last_pivot: prev,
    }
}

fn rank_exact(m: &Mat<QSqrt2>) -> usize {
    let (mut rows, _) = integral_rows(m);
    bareiss(&mut rows, m.cols()).rank
}

fn det_exact(m: &Mat<QSqrt2>) -> Result<QSqrt2, LinAlgError> {
    if m.rows() != m.cols() {
        return Err(LinAlgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() == 0 {
        return Ok(QSqrt2::one());
    }
    let (mut rows, scales) = integral_rows(m);
    let res = bareiss(&mut rows, m.cols());
    if res.rank < m.rows() {
        return Ok(QSqrt2::zero());
    }
    let mut det = res.last_pivot.to_qsqrt2();
    if res.swaps % 2 == 1 {
        det = -det;
    }
    let mut scale = Rational::one();
    for s in scales {
        scale *= Rational::from_integer(s);
    }
    Ok(det
        * QSqrt2::from_rational(scale)
            .recip()
            .expect("positive scale"))
}

/// Positive definiteness by exact leading principal minors.
///
/// One fraction-free pass without pivoting: the k-th Bareiss pivot is the k-th
/// leading minor (up to the positive row scales), so any nonpositive pivot
/// refutes definiteness and the pass aborts.
fn is_pd_exact(m: &Mat<QSqrt2>) -> Result<bool, LinAlgError> {
    if m.rows() != m.cols() {
        return Err(LinAlgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m != &m.transpose() {
        return Err(LinAlgError::NotSymmetric);
    }
    let n = m.rows();
    if n == 0 {
        return Ok(true);
    }
    // Scale symmetrically (both rows and columns by the same positive factor)
    // so each leading minor keeps its sign.
    let mut lcm = BigInt::one();
    for x in m.entries() {
        let (a, b) = x.parts();
        lcm = lcm.lcm(a.denom());
        lcm = lcm.lcm(b.denom());
    }
    let scale = QSqrt2::from_rational(Rational::from_integer(lcm));
    let scaled = m.scale(&scale);
    let mut rows: Vec<Vec<ZS>> = (0..n)
        .map(|r| {
            scaled
                .row(r)
                .iter()
                .map(|x| {
                    let (a, b) = x.parts();
                    debug_assert!(a.denom().is_one() && b.denom().is_one());
                    ZS {
                        a: a.numer().clone(),
                        b: b.numer().clone(),
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = ZS::one();
    for k in 0..n {
        let pivot = rows[k][k].clone();
        if pivot.sign() <= 0 {
            return Ok(false);
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = pivot.mul(&rows[i][j]).sub(&rows[i][k].mul(&rows[k][j]));
                rows[i][j] = t.div_exact(&prev);
            }
            rows[i][k] = ZS::zero();
        }
        prev = pivot;
    }
    Ok(true)
}

/// Reduced row echelon over the field Q(√2); independent of the Bareiss path.
fn rref_exact(m: &Mat<QSqrt2>) -> (Vec<Vec<QSqrt2>>, Vec<usize>) {
    let mut rows: Vec<Vec<QSqrt2>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let n = rows.len();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(pr) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(pr, r);
        let inv = rows[r][c].recip().expect("nonzero pivot");
        for j in c..cols {
            rows[r][j] = rows[r][j].clone() * &inv;
        }
        for i in 0..n {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..cols {
                    let t = rows[r][j].clone() * &factor;
                    rows[i][j] = rows[i][j].clone() - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

fn kernel_exact(m: &Mat<QSqrt2>) -> Vec<Vec<QSqrt2>> {
    let cols = m.cols();
    let (rows, pivots) = rref_exact(m);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![QSqrt2::zero(); cols];
        v[free] = QSqrt2::one();
        for (pr, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[pr][free].clone();
        }
        basis.push(v);
    }
    basis
}

fn solve_exact(a: &Mat<QSqrt2>, b: &Mat<QSqrt2>) -> Option<Mat<QSqrt2>> {
    if a.rows() != a.cols() || a.rows() != b.rows() {
        return None;
    }
    let n = a.rows();
    let aug = Mat::from_fn(n, n + b.cols(), |r, c| {
        if c < n {
            a[(r, c)].clone()
        } else {
            b[(r, c - n)].clone()
        }
    });
    let (rows, pivots) = rref_exact(&aug);
    if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &c)| i != c) {
        return None; // singular
    }
    Some(Mat::from_fn(n, b.cols(), |r, c| rows[r][n + c].clone()))
}

impl MatScalar for QSqrt2 {
    fn rank(m: &Mat<Self>, _tol: Tol) -> usize {
        rank_exact(m)
    }
    fn kernel_basis(m: &Mat<Self>, _tol: Tol) -> Vec<Vec<Self>> {
        kernel_exact(m)
    }
    fn det(m: &Mat<Self>) -> Result<Self, LinAlgError> {
        det_exact(m)
    }
    fn is_positive_definite(m: &Mat<Self>, _tol: Tol) -> Result<bool, LinAlgError> {
        is_pd_exact(m)
    }
    fn solve(a: &Mat<Self>, b: &Mat<Self>, _tol: Tol) -> Option<Mat<Self>> {
        solve_exact(a, b)
    }
}

// ---------------------------------------------------------------------------
// Float kernels
// ---------------------------------------------------------------------------

fn float_threshold(m: &Mat<f64>, tol: Tol) -> f64 {
    tol.pivot * m.max_abs().max(1.0)
}

/// Row echelon with partial pivoting; returns (rows, pivot columns).
fn echelon_float(m: &Mat<f64>, thresh: f64) -> (Vec<Vec<f64>>, Vec<usize>) {
    let mut rows: Vec<Vec<f64>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let n = rows.len();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let (pr, pmax) = (r..n)
            .map(|i| (i, rows[i][c].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if pmax <= thresh {
            for row in rows.iter_mut().skip(r) {
                row[c] = 0.0;
            }
            continue;
        }
        rows.swap(pr, r);
        let inv = 1.0 / rows[r][c];
        for j in c..cols {
            rows[r][j] *= inv;
        }
        for i in 0..n {
            if i != r && rows[i][c] != 0.0 {
                let factor = rows[i][c];
                for j in c..cols {
                    rows[i][j] -= factor * rows[r][j];
                }
                rows[i][c] = 0.0;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

impl MatScalar for f64 {
    fn rank(m: &Mat<Self>, tol: Tol) -> usize {
        echelon_float(m, float_threshold(m, tol)).1.len()
    }

    fn kernel_basis(m: &Mat<Self>, tol: Tol) -> Vec<Vec<Self>> {
        let cols = m.cols();
        let (rows, pivots) = echelon_float(m, float_threshold(m, tol));
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0.0; cols];
            v[free] = 1.0;
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[pr][free];
            }
            basis.push(v);
        }
        basis
    }

    fn det(m: &Mat<Self>) -> Result<Self, LinAlgError> {
        if m.rows() != m.cols() {
            return Err(LinAlgError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut rows: Vec<Vec<f64>> = (0..n).map(|r| m.row(r).to_vec()).collect();
        let mut det = 1.0;
        for c in 0..n {
            let (pr, pmax) = (c..n)
                .map(|i| (i, rows[i][c].abs()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if pmax == 0.0 {
                return Ok(0.0);
            }
            if pr != c {
                rows.swap(pr, c);
                det = -det;
            }
            det *= rows[c][c];
            let inv = 1.0 / rows[c][c];
            for i in (c + 1)..n {
                let factor = rows[i][c] * inv;
                for j in c..n {
                    rows[i][j] -= factor * rows[c][j];
                }
            }
        }
        Ok(det)
    }

    fn is_positive_definite(m: &Mat<Self>, tol: Tol) -> Result<bool, LinAlgError> {
        if m.rows() != m.cols() {
            return Err(LinAlgError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let asym: f64 = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .map(|(r, c)| (m[(r, c)] - m[(c, r)]).abs())
            .fold(0.0, f64::max);
        if asym > tol.residual * m.max_abs().max(1.0) {
            return Err(LinAlgError::NotSymmetric);
        }
        // Symmetrize, then LDLᵗ without pivoting; definite iff all pivots clear eps.
        let mut a = Mat::from_fn(n, n, |r, c| 0.5 * (m[(r, c)] + m[(c, r)]));
        for k in 0..n {
            let pivot = a[(k, k)];
            if pivot <= tol.pivot {
                return Ok(false);
            }
            for i in (k + 1)..n {
                let factor = a[(i, k)] / pivot;
                for j in k..n {
                    let t = factor * a[(k, j)];
                    a[(i, j)] -= t;
                }
            }
        }
        Ok(true)
    }

    fn solve(a: &Mat<Self>, b: &Mat<Self>, tol: Tol) -> Option<Mat<Self>> {
        if a.rows() != a.cols() || a.rows() != b.rows() {
            return None;
        }
        let n = a.rows();
        let aug = Mat::from_fn(n, n + b.cols(), |r, c| {
            if c < n {
                a[(r, c)]
            } else {
                b[(r, c - n)]
            }
        });
        let (rows, pivots) = echelon_float(&aug, float_threshold(a, tol));
        if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        Some(Mat::from_fn(n, b.cols(), |r, c| rows[r][n + c]))
    }
}
