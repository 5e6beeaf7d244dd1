//! Dense exact matrices and fraction-free linear algebra.
//!
//! Ranks and kernels are computed by Bareiss elimination: a fraction-free
//! Gaussian elimination in which every intermediate entry is a minor of the
//! input, so coefficient growth stays polynomial instead of exponential.
//! The same elimination core runs over the integers (for rational input,
//! after clearing row denominators) and over the Gaussian integers (for
//! Gaussian rational input).
//!
//! Kernel bases are canonical: the reduced basis with one vector per free
//! column. Over the rationals each vector is scaled to a primitive integer
//! vector (integer entries, gcd 1, first nonzero entry positive); over the
//! Gaussian rationals each vector is scaled so its first nonzero entry is 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{
    format_rational, parse_rational, GaussianRational, Rational, ScalarParseError,
};

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatrixQ = Matrix<Rational>;
pub type MatrixZ = Matrix<BigInt>;
pub type MatrixG = Matrix<GaussianRational>;

impl<T> Matrix<T> {
    /// Builds a matrix from rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// The submatrix formed by the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix<T>
    where
        T: Clone,
    {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.at(i, cols[j]).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl MatrixZ {
    pub fn from_i64_rows(rows: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> MatrixQ {
        self.map(|e| Rational::from_integer(e.clone()))
    }
}

/// Column processing order for elimination. Both orders give the same rank;
/// running both is a cheap independence check on the elimination itself.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EliminationOrder {
    Forward,
    Reverse,
}

impl EliminationOrder {
    fn columns(self, n: usize) -> Vec<usize> {
        match self {
            EliminationOrder::Forward => (0..n).collect(),
            EliminationOrder::Reverse => (0..n).rev().collect(),
        }
    }
}

/// Entries usable in fraction-free elimination: an integral domain where the
/// exact divisions produced by the Bareiss recurrence are representable.
trait EntryDomain: Clone + PartialEq {
    fn one_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn ref_mul(&self, other: &Self) -> Self;
    fn ref_sub(&self, other: &Self) -> Self;
    /// Division known to be exact. Panics if it is not; the Bareiss
    /// invariant guarantees exactness for entries produced by `echelon`.
    fn exact_div(&self, other: &Self) -> Self;
}

impl EntryDomain for BigInt {
    fn one_value() -> Self {
        One::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ref_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ref_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero(), "inexact division in Bareiss step");
        q
    }
}

/// A Gaussian integer, used only inside the elimination over Q(i).
#[derive(Clone, PartialEq, Eq, Debug)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl EntryDomain for GaussInt {
    fn one_value() -> Self {
        GaussInt {
            re: One::one(),
            im: Zero::zero(),
        }
    }
    fn is_zero_value(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn ref_mul(&self, other: &Self) -> Self {
        GaussInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
    fn ref_sub(&self, other: &Self) -> Self {
        GaussInt {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }
    fn exact_div(&self, other: &Self) -> Self {
        // (a / b) = a * conj(b) / |b|^2, exact by the Bareiss invariant.
        let norm = &other.re * &other.re + &other.im * &other.im;
        let re_num = &self.re * &other.re + &self.im * &other.im;
        let im_num = &self.im * &other.re - &self.re * &other.im;
        let (re, r1) = re_num.div_rem(&norm);
        let (im, r2) = im_num.div_rem(&norm);
        debug_assert!(
            r1.is_zero() && r2.is_zero(),
            "inexact division in Bareiss step"
        );
        GaussInt { re, im }
    }
}

struct Echelon<T> {
    mat: Matrix<T>,
    /// (row, column) of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
}

/// Fraction-free row echelon form, processing columns in the given order.
fn echelon<T: EntryDomain>(mut m: Matrix<T>, col_order: &[usize]) -> Echelon<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut prev = T::one_value();
    let mut pivot_row = 0;
    for &c in col_order {
        if pivot_row == rows {
            break;
        }
        let Some(r) = (pivot_row..rows).find(|&r| !m.at(r, c).is_zero_value()) else {
            continue;
        };
        m.swap_rows(r, pivot_row);
        let pivot = m.at(pivot_row, c).clone();
        for i in pivot_row + 1..rows {
            // Rows with a zero factor are still rescaled by pivot/prev;
            // the Bareiss divisibility invariant needs every row rewritten.
            let factor = m.at(i, c).clone();
            for j in 0..cols {
                let updated = pivot
                    .ref_mul(m.at(i, j))
                    .ref_sub(&factor.ref_mul(m.at(pivot_row, j)))
                    .exact_div(&prev);
                *m.at_mut(i, j) = updated;
            }
        }
        prev = pivot;
        pivots.push((pivot_row, c));
        pivot_row += 1;
    }
    Echelon { mat: m, pivots }
}

/// Clears denominators row by row, leaving the row space unchanged.
fn clear_rational_rows(a: &MatrixQ) -> MatrixZ {
    let scales: Vec<BigInt> = (0..a.rows())
        .map(|i| (0..a.cols()).fold(BigInt::one(), |l, k| l.lcm(a.at(i, k).denom())))
        .collect();
    Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        a.at(i, j).numer() * (&scales[i] / a.at(i, j).denom())
    })
}

fn clear_gaussian_rows(a: &MatrixG) -> Matrix<GaussInt> {
    let scales: Vec<BigInt> = (0..a.rows())
        .map(|i| {
            (0..a.cols()).fold(BigInt::one(), |l, k| {
                let e = a.at(i, k);
                l.lcm(e.re.denom()).lcm(e.im.denom())
            })
        })
        .collect();
    Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        let e = a.at(i, j);
        GaussInt {
            re: e.re.numer() * (&scales[i] / e.re.denom()),
            im: e.im.numer() * (&scales[i] / e.im.denom()),
        }
    })
}

/// The rank of a rational matrix.
pub fn rank(a: &MatrixQ) -> usize {
    rank_with_order(a, EliminationOrder::Forward)
}

pub fn rank_with_order(a: &MatrixQ, order: EliminationOrder) -> usize {
    echelon(clear_rational_rows(a), &order.columns(a.cols()))
        .pivots
        .len()
}

/// A canonical basis of the null space `{v : Av = 0}`, one primitive integer
/// vector per free column (in ascending column order).
pub fn kernel_basis(a: &MatrixQ) -> Vec<Vec<BigInt>> {
    let cols = a.cols();
    let ech = echelon(
        clear_rational_rows(a),
        &EliminationOrder::Forward.columns(cols),
    );
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        // Forward order makes every row zero left of its pivot, so solving
        // bottom-up only ever reads already-determined coordinates.
        for &(r, c) in ech.pivots.iter().rev() {
            let mut s = Rational::zero();
            for j in c + 1..cols {
                let e = ech.mat.at(r, j);
                if !e.is_zero() && !v[j].is_zero() {
                    s += Rational::from_integer(e.clone()) * &v[j];
                }
            }
            v[c] = -s / Rational::from_integer(ech.mat.at(r, c).clone());
        }
        basis.push(primitive_integer_vector(&v));
    }
    basis
}

/// Scales a nonzero rational vector to integer entries with gcd 1 and a
/// positive first nonzero entry.
fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let scale = v.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&scale / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, e| g.gcd(e));
    if !g.is_zero() && !g.is_one() {
        for e in &mut ints {
            *e = &*e / &g;
        }
    }
    if ints
        .iter()
        .find(|e| !e.is_zero())
        .is_some_and(|e| e.is_negative())
    {
        for e in &mut ints {
            *e = -&*e;
        }
    }
    ints
}

/// Kernel of a Gaussian rational matrix.
pub struct GaussianKernel {
    /// One vector per free column, scaled so the first nonzero entry is 1.
    pub basis: Vec<Vec<GaussianRational>>,
    pub rank: usize,
    pub nullity: usize,
}

pub fn solve_homogeneous(a: &MatrixG) -> GaussianKernel {
    solve_homogeneous_with_order(a, EliminationOrder::Forward)
}

/// Kernel computation with a chosen column elimination order. Both orders
/// return a basis of the same space; the bases themselves may differ.
pub fn solve_homogeneous_with_order(a: &MatrixG, order: EliminationOrder) -> GaussianKernel {
    let cols = a.cols();
    let ech = echelon(clear_gaussian_rows(a), &order.columns(cols));
    let rank = ech.pivots.len();
    // A pivot row holds zeros at all earlier pivot columns but may be nonzero
    // at later ones, so walking pivots in reverse processing order only ever
    // reads already-determined coordinates, whatever the column order was.
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v: Vec<GaussianRational> = vec![GaussianRational::zero(); cols];
        v[f] = GaussianRational::one();
        for &(r, c) in ech.pivots.iter().rev() {
            let mut s = GaussianRational::zero();
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let e = ech.mat.at(r, j);
                if !e.is_zero_value() && !v[j].is_zero() {
                    let q = GaussianRational::new(
                        Rational::from_integer(e.re.clone()),
                        Rational::from_integer(e.im.clone()),
                    );
                    s = s + q * v[j].clone();
                }
            }
            let p = ech.mat.at(r, c).clone();
            let p =
                GaussianRational::new(Rational::from_integer(p.re), Rational::from_integer(p.im));
            v[c] = -(s / p);
        }
        let lead = v.iter().find(|e| !e.is_zero()).cloned();
        if let Some(lead) = lead {
            let inv = lead.checked_inv().expect("nonzero leading entry");
            for e in &mut v {
                if !e.is_zero() {
                    *e = e.clone() * inv.clone();
                }
            }
        }
        basis.push(v);
    }
    GaussianKernel {
        nullity: cols - rank,
        basis,
        rank,
    }
}

/// Serialized matrix form: `{"rows": r, "cols": c, "entries": [["a/b", ...]]}`
/// with every entry an exact decimal-free string.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum MatrixJsonError {
    #[error("invalid matrix JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry grid is {found_rows}x{found_cols}, header says {rows}x{cols}")]
    Shape {
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },
    #[error("bad entry at row {row}, column {col}: {source}")]
    Entry {
        row: usize,
        col: usize,
        source: ScalarParseError,
    },
    #[error("entry at row {row}, column {col} is not an integer")]
    NonInteger { row: usize, col: usize },
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self, MatrixJsonError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_rational(&self) -> Result<MatrixQ, MatrixJsonError> {
        let found_rows = self.entries.len();
        let found_cols = self.entries.first().map_or(0, Vec::len);
        let ragged = self.entries.iter().any(|r| r.len() != found_cols);
        if found_rows != self.rows || found_cols != self.cols || ragged {
            return Err(MatrixJsonError::Shape {
                rows: self.rows,
                cols: self.cols,
                found_rows,
                found_cols: self.entries.iter().map(Vec::len).max().unwrap_or(0),
            });
        }
        let mut rows = Vec::with_capacity(self.rows);
        for (i, row) in self.entries.iter().enumerate() {
            let mut out = Vec::with_capacity(self.cols);
            for (j, e) in row.iter().enumerate() {
                out.push(parse_rational(e).map_err(|source| MatrixJsonError::Entry {
                    row: i,
                    col: j,
                    source,
                })?);
            }
            rows.push(out);
        }
        Ok(Matrix::from_rows(rows))
    }

    pub fn to_integer(&self) -> Result<MatrixZ, MatrixJsonError> {
        let q = self.to_rational()?;
        let mut rows = Vec::with_capacity(q.rows());
        for i in 0..q.rows() {
            let mut out = Vec::with_capacity(q.cols());
            for j in 0..q.cols() {
                let e = q.at(i, j);
                if !e.denom().is_one() {
                    return Err(MatrixJsonError::NonInteger { row: i, col: j });
                }
                out.push(e.numer().clone());
            }
            rows.push(out);
        }
        Ok(Matrix::from_rows(rows))
    }

    pub fn from_rational(m: &MatrixQ) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| format_rational(m.at(i, j))).collect())
                .collect(),
        }
    }

    pub fn from_integer(m: &MatrixZ) -> Self {
        Self::from_rational(&m.to_rational())
    }
}
