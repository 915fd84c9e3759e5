//! Dense matrices over Q(q) and exact elimination.

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::QScalar;
use crate::error::{Error, Result};

/// Row-major dense matrix over Q(q).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QScalar>,
}

/// Outcome of [`QMatrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(QMatrix),
    /// Consistent but underdetermined; free variables were set to zero.
    Particular(QMatrix),
    Inconsistent,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: QMatrix,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![QScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = QScalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> QScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<QScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(entries: &[QScalar]) -> Self {
        let n = entries.len();
        let mut m = QMatrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Matrix unit with a single 1 at `(r, c)`.
    pub fn unit(rows: usize, cols: usize, r: usize, c: usize) -> Self {
        let mut m = QMatrix::zeros(rows, cols);
        m.set(r, c, QScalar::one());
        m
    }

    /// Column vector.
    pub fn column(entries: Vec<QScalar>) -> Self {
        QMatrix { rows: entries.len(), cols: 1, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &QScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: QScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[QScalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[QScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col_vec(&self, c: usize) -> Vec<QScalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c { v.is_one() } else { v.is_zero() }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &QScalar) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Matrix product; zero entries of either factor are skipped.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        // Sparse rows of the right factor.
        let right: Vec<Vec<(usize, &QScalar)>> = (0..other.rows)
            .map(|k| {
                other.row(k).iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        let mut out = QMatrix::zeros(self.rows, other.cols);
        let mut acc: Vec<Option<QScalar>> = vec![None; other.cols];
        for r in 0..self.rows {
            for (k, a) in self.row(r).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(c, b) in &right[k] {
                    let t = a * b;
                    match &mut acc[c] {
                        Some(x) => *x += t,
                        slot @ None => *slot = Some(t),
                    }
                }
            }
            for (c, slot) in acc.iter_mut().enumerate() {
                if let Some(v) = slot.take() {
                    out.data[r * other.cols + c] = v;
                }
            }
        }
        Ok(out)
    }

    /// Matrix times a dense vector.
    pub fn mul_vec(&self, v: &[QScalar]) -> Result<Vec<QScalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = QScalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product `self ⊗ other` (row index = self-index major).
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = QMatrix::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.data[(r1 * other.rows + r2) * cols + c1 * other.cols + c2] = a * b;
                    }
                }
            }
        }
        out
    }

    /// Submatrix selecting the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        QMatrix::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hcat row count".into()));
        }
        Ok(QMatrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols { self.get(r, c).clone() } else { other.get(r, c - self.cols).clone() }
        }))
    }

    /// Reduced row echelon form. Pivots are taken column by column from the
    /// left, using the first row (top to bottom) with a nonzero entry.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<QScalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let pivots = rref_in_place(&mut rows, self.cols, self.cols);
        Rref {
            matrix: QMatrix { rows: self.rows, cols: self.cols, data: rows.into_iter().flatten().collect() },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right nullspace, one column vector per free column, in
    /// increasing free-column order. Each vector has a 1 in its free column.
    pub fn kernel(&self) -> Vec<QMatrix> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![QScalar::zero(); self.cols];
            v[free] = QScalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                let e = matrix.get(r, free);
                if !e.is_zero() {
                    v[p] = -e;
                }
            }
            out.push(QMatrix::column(v));
        }
        out
    }

    /// Solves `self · x = b` exactly.
    pub fn solve(&self, b: &QMatrix) -> Result<Solution> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch("right-hand side row count".into()));
        }
        let mut rows: Vec<Vec<QScalar>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend_from_slice(b.row(r));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + b.cols, self.cols);
        // Any nonzero entry left in b-columns of a zero row means inconsistency.
        for row in rows.iter().skip(pivots.len()) {
            if row[self.cols..].iter().any(|x| !x.is_zero()) {
                return Ok(Solution::Inconsistent);
            }
        }
        let mut x = QMatrix::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, rows[r][self.cols + c].clone());
            }
        }
        if pivots.len() == self.cols {
            Ok(Solution::Unique(x))
        } else {
            Ok(Solution::Particular(x))
        }
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        match self.solve(&QMatrix::identity(self.rows))? {
            Solution::Unique(x) => Ok(x),
            _ => Err(Error::Singular),
        }
    }

    /// Entrywise value at `q = 1`.
    pub fn eval_at_one(&self) -> Result<Vec<Vec<BigRational>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.eval_at_one()).collect())
            .collect()
    }
}

/// Gauss-Jordan elimination restricted to the first `pivot_cols` columns.
/// Returns the pivot columns; rows are left in reduced echelon form.
fn rref_in_place(rows: &mut [Vec<QScalar>], width: usize, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][c..width].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let support: Vec<usize> = (c..width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                let t = &f * &pivot_row[j];
                row[j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<QScalar>,
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr { rows: self.rows, cols: self.cols, entries: self.data.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = MatrixRepr::deserialize(d)?;
        if m.entries.len() != m.rows * m.cols {
            return Err(D::Error::custom("entry count does not match rows*cols"));
        }
        Ok(QMatrix { rows: m.rows, cols: m.cols, data: m.entries })
    }
}
