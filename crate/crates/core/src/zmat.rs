//! Dense matrices over the integers with exact bignum arithmetic.
//!
//! Everything here is fraction-free: determinants use Bareiss elimination,
//! inverses of unimodular matrices go through the adjugate, and the Smith
//! normal form is computed by gcd-reducing row and column operations.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::AbelianGroup;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from small-integer rows, e.g. `from_rows(&[[1, 2], [3, 4]])`.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::BadShape {
                rows: rows.len(),
                cols,
                len: rows.iter().map(|r| r.as_ref().len()).sum(),
            });
        }
        let data = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::from_vec(rows.len(), cols, data)
    }

    /// Like [`from_rows`](Self::from_rows) for callers that already hold bignums.
    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        let len = rows.iter().map(Vec::len).sum();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadShape {
                rows: nrows,
                cols,
                len,
            });
        }
        Self::from_vec(nrows, cols, rows.into_iter().flatten().collect())
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in entries.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    fn require_square(&self, op: &'static str) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x + y)
            .collect();
        Ok(Self { data, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x - y)
            .collect();
        Ok(Self { data, ..*self })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let data = self.data.iter().map(|x| x * c).collect();
        Self { data, ..*self }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let y = other.get(k, j);
                    if !y.is_zero() {
                        out.data[i * other.cols + j] += x * y;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^n` by repeated squaring; `A^0 = I`.
    pub fn pow(&self, mut n: u32) -> Result<Self> {
        let size = self.require_square("pow")?;
        let mut result = Self::identity(size);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Result<Self> {
        let n = self.require_square("minus_identity")?;
        let mut m = self.clone();
        for i in 0..n {
            m.data[i * n + i] -= 1;
        }
        Ok(m)
    }

    /// Evaluates `c_0 I + c_1 A + c_2 A^2 + ...` by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[BigInt]) -> Result<Self> {
        let n = self.require_square("eval_poly")?;
        let mut acc = Self::zeros(n, n);
        for c in coeffs.iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                acc.data[i * n + i] += c;
            }
        }
        Ok(acc)
    }

    pub fn determinant(&self) -> Result<BigInt> {
        let n = self.require_square("determinant")?;
        Ok(bareiss_determinant(self.data.clone(), n))
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        debug_assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        let mut sub = Vec::with_capacity(k * k);
        for &i in rows {
            for &j in cols {
                sub.push(self.get(i, j).clone());
            }
        }
        bareiss_determinant(sub, k)
    }

    /// The gcd of all `k x k` minors (`0` when they all vanish).
    pub fn gcd_of_minors(&self, k: usize) -> Result<BigInt> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::MinorOrder {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut g = BigInt::zero();
        for rows in (0..self.rows).combinations(k) {
            for cols in (0..self.cols).combinations(k) {
                g = g.gcd(&self.minor(&rows, &cols));
                if g.is_one() {
                    return Ok(g);
                }
            }
        }
        Ok(g)
    }

    /// Inverse of a matrix with determinant `±1`, via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let n = self.require_square("inverse_unimodular")?;
        let det = self.determinant()?;
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular { det });
        }
        if n == 1 {
            return Self::from_vec(1, 1, vec![det]);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let cofactor = self.minor(&rows, &cols);
                let signed = if (i + j) % 2 == 0 {
                    cofactor
                } else {
                    -cofactor
                };
                // adj(A) / det(A), and det = ±1
                inv.set(i, j, signed * &det);
            }
        }
        Ok(inv)
    }

    pub fn smith_normal_form(&self) -> SnfResult {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let diagonal = smith_diagonal(&mut m, self.rows, self.cols);
        SnfResult { diagonal }
    }

    /// `Z^m / im(A)` for a square `A: Z^m -> Z^m`.
    pub fn cokernel(&self) -> Result<AbelianGroup> {
        self.require_square("cokernel")?;
        Ok(AbelianGroup::canonicalize(
            self.smith_normal_form().diagonal,
        ))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{}]", self.row(i).iter().join(", "))?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let row = &cells[i * self.cols..(i + 1) * self.cols];
            writeln!(
                f,
                "{}",
                row.iter().map(|c| format!("{c:>width$}")).join(" ")
            )?;
        }
        Ok(())
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r`, `r = min(rows, cols)`, all
/// nonnegative, zeros last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

fn bareiss_determinant(mut m: Vec<BigInt>, n: usize) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in k..n {
                m.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                // exact by Sylvester's identity
                m[i * n + j] = v / &prev;
            }
        }
        prev = m[k * n + k].clone();
    }
    let det = m[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Position of the nonzero entry of least absolute value in the trailing
/// block starting at `(t, t)`.
fn smallest_pivot(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.magnitude() < m[bi][bj].magnitude()) {
                best = Some((i, j));
                if x.magnitude().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn smith_diagonal(m: &mut [Vec<BigInt>], rows: usize, cols: usize) -> Vec<BigInt> {
    let r = rows.min(cols);
    let mut diagonal = Vec::with_capacity(r);
    for t in 0..r {
        loop {
            let Some((pi, pj)) = smallest_pivot(m, t) else {
                diagonal.resize(r, BigInt::zero());
                return diagonal;
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }

            let mut cleared = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let (head, tail) = m.split_at_mut(i);
                let pivot_row = &head[t];
                for (x, p) in tail[0][t..].iter_mut().zip(&pivot_row[t..]) {
                    *x -= &q * p;
                }
                cleared &= tail[0][t].is_zero();
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m[t..].iter_mut() {
                    let p = row[t].clone();
                    row[j] -= &q * p;
                }
                cleared &= m[t][j].is_zero();
            }
            if !cleared {
                continue;
            }

            // Pivot row/column are clear; the pivot must divide the rest.
            let offender =
                (t + 1..rows).find(|&i| m[i][t + 1..].iter().any(|x| !x.is_multiple_of(&m[t][t])));
            match offender {
                Some(i) => {
                    let (head, tail) = m.split_at_mut(i);
                    for (p, x) in head[t][t..].iter_mut().zip(&tail[0][t..]) {
                        *p += x;
                    }
                }
                None => break,
            }
        }
        diagonal.push(m[t][t].abs());
    }
    diagonal
}
