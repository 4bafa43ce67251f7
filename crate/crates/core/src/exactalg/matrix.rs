//! Dense exact matrices with Gaussian elimination routines.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::{Field, MatrixError, Scalar};

/// Dense row-major matrix over a single exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn diagonal(field: Field, d: &[i64]) -> Matrix {
        let mut m = Matrix::zeros(field, d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, field.from_i64(x));
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(x));
            }
        }
        m
    }

    /// Build from rows; an empty list gives a 0×`cols` matrix.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, field, data }
    }

    /// Build from column vectors of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        debug_assert_eq!(x.field(), self.field);
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        if let Some(out) = self.mul_small_integers(other) {
            return out;
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
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
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Product over machine integers when both factors are integral with
    /// 64-bit entries and no accumulation overflows.
    fn mul_small_integers(&self, other: &Matrix) -> Option<Matrix> {
        if self.field != Field::Rational || self.rows == 0 || other.cols == 0 {
            return None;
        }
        let a = self.to_i64_rows()?;
        let b = other.to_i64_rows()?;
        let mut out = vec![vec![0i64; other.cols]; self.rows];
        for (i, row) in a.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b[k].iter().enumerate() {
                    out[i][j] = out[i][j].checked_add(x.checked_mul(y)?)?;
                }
            }
        }
        Some(Matrix::from_i64(self.field, &out))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        self.with_data(data)
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    /// Copy of the block of rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        m
    }

    /// Write `block` with its top-left corner at (r, c).
    pub fn set_block(&mut self, r: usize, c: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut m = Matrix::zeros(self.field, self.rows + other.rows, self.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, 0, other);
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            if !inv.is_one() {
                for j in c..m.cols {
                    let v = m.get(r, j) * &inv;
                    m.set(r, j, v);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * b);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, in reduced column echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut raw = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(k, f);
            }
            raw.push(v);
        }
        if raw.is_empty() {
            return raw;
        }
        let kt = Matrix::from_rows(self.field, self.cols, raw);
        let (e, piv) = kt.rref();
        (0..piv.len()).map(|i| e.row(i)).collect()
    }

    /// Columns spanning the kernel, as a `cols × k` matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.kernel_basis())
    }

    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(MatrixError::SingularMatrix);
        }
        Ok(r.submatrix(0, n, n, 2 * n))
    }

    pub fn det(&self) -> Result<Scalar, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv();
            for i in c + 1..m.rows {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Some solution of `self · x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let bcol = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        let (r, pivots) = self.hstack(&bcol).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r.get(k, self.cols).clone();
        }
        Some(x)
    }

    /// Solve `self · X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows);
        let (r, pivots) = self.hstack(b).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(k, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Scalar::is_integer)
    }

    /// Inertia (n_plus, n_zero, n_minus) of a symmetric rational matrix.
    pub fn signature_symmetric(&self) -> Result<(usize, usize, usize), MatrixError> {
        if self.field != Field::Rational {
            return Err(MatrixError::InvalidField("signature needs Q".into()));
        }
        if !self.is_symmetric() {
            return Err(MatrixError::NotSymmetric);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut diag = Vec::new();
        for k in 0..n {
            if let Some(i) = (k..n).find(|&i| !a.get(i, i).is_zero()) {
                a.swap_sym(k, i);
            } else {
                let hit = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a.get(i, j).is_zero());
                let Some((i, j)) = hit else { break };
                // hyperbolic pair: e_i += e_j makes the diagonal 2·a_ij
                a.add_sym(i, j);
                a.swap_sym(k, i);
            }
            let piv = a.get(k, k).clone();
            let inv = piv.inv();
            for r in k + 1..n {
                let f = a.get(r, k) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = a.get(r, j) - &(&f * a.get(k, j));
                    a.set(r, j, v);
                }
                for i in k..n {
                    let v = a.get(i, r) - &(&f * a.get(i, k));
                    a.set(i, r, v);
                }
            }
            diag.push(piv);
        }
        let plus = diag.iter().filter(|d| d.signum() == Some(1)).count();
        let minus = diag.iter().filter(|d| d.signum() == Some(-1)).count();
        Ok((plus, n - plus - minus, minus))
    }

    fn swap_sym(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.swap_rows(a, b);
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_sym(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            let v = self.get(i, c) + self.get(j, c);
            self.set(i, c, v);
        }
        for r in 0..self.rows {
            let v = self.get(r, i) + self.get(r, j);
            self.set(r, i, v);
        }
    }

    /// True iff the integer matrix has determinant ±1.
    pub fn is_unimodular(&self) -> Result<bool, MatrixError> {
        if self.field != Field::Rational || !self.is_integral() {
            return Err(MatrixError::NonIntegerEntries);
        }
        if !self.is_square() {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let d = self.det()?;
        let q = d.as_rational().unwrap();
        Ok(q.abs().is_one())
    }

    /// Entries as machine integers, if all are integral and fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }

    pub fn from_json(v: &Value, field: Field) -> Result<Matrix, MatrixError> {
        let bad = |m: &str| MatrixError::Parse(m.to_string());
        let rows = v["rows"].as_u64().ok_or_else(|| bad("missing \"rows\""))? as usize;
        let cols = v["cols"].as_u64().ok_or_else(|| bad("missing \"cols\""))? as usize;
        let entries = v["entries"].as_array().ok_or_else(|| bad("missing \"entries\""))?;
        if entries.len() != rows {
            return Err(bad("entry row count differs from \"rows\""));
        }
        let mut m = Matrix::zeros(field, rows, cols);
        for (i, row) in entries.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| bad("entry row is not an array"))?;
            if row.len() != cols {
                return Err(bad("entry column count differs from \"cols\""));
            }
            for (j, e) in row.iter().enumerate() {
                let x = match e {
                    Value::String(s) => field.parse(s)?,
                    Value::Number(n) => field.parse(&n.to_string())?,
                    _ => return Err(bad("entries must be strings")),
                };
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    /// Integer lift of an 𝔽_p-free rational matrix, for numeric output.
    pub fn to_bigint_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        self.get(i, j)
                            .as_rational()
                            .filter(|q| q.is_integer())
                            .map(|q| q.numer().clone())
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
