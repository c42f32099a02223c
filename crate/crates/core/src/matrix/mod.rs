//! Dense matrices over GF(q) and GF(q^m).
//!
//! Entries are stored as raw field encodings. Elimination always picks the
//! first nonzero entry of a column among the remaining rows, in row order,
//! so echelon forms and null-space bases are canonical.

mod kernel;

use std::fmt;
use std::io::Write;

use thiserror::Error;

use crate::algebra::{AlgebraError, Field, FieldElement, FieldId};

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrices over {left} and {right} cannot be combined")]
    FieldMismatch { left: FieldId, right: FieldId },
    #[error("column counts differ: {left} vs {right}")]
    ColumnMismatch { left: usize, right: usize },
    #[error("expected {expected} values, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed matrix dump: {0}")]
    Parse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form: the nonzero rows and their pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.id())?;
        for r in 0..self.rows.min(16) {
            let row: Vec<String> = (0..self.cols.min(24)).map(|c| self.field.to_text(self.get(r, c))).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_elements(
        field: &Field,
        rows: usize,
        cols: usize,
        entries: &[FieldElement],
    ) -> Result<Matrix, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        let mut data = Vec::with_capacity(entries.len());
        for &e in entries {
            if e.field() != field.id() {
                return Err(MatrixError::FieldMismatch { left: field.id(), right: e.field() });
            }
            data.push(e.value());
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Matrix over a field from integers, read as elements of the prime
    /// subfield.
    pub fn from_ints(field: &Field, rows: usize, cols: usize, entries: &[i64]) -> Result<Matrix, MatrixError> {
        let e: Vec<FieldElement> = entries.iter().map(|&x| field.from_int(x)).collect();
        Matrix::from_elements(field, rows, cols, &e)
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<FieldElement>]) -> Result<Matrix, MatrixError> {
        let flat: Vec<FieldElement> = rows.iter().flatten().copied().collect();
        for r in rows {
            if r.len() != cols {
                return Err(MatrixError::DimensionMismatch { expected: cols, found: r.len() });
            }
        }
        Matrix::from_elements(field, rows.len(), cols, &flat)
    }

    pub(crate) fn from_raw(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.wrap_raw(self.data[r * self.cols + c])
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = self.field.raw(v);
    }

    pub fn row(&self, r: usize) -> Vec<FieldElement> {
        self.raw_row(r).iter().map(|&v| self.field.wrap_raw(v)).collect()
    }

    pub(crate) fn raw_row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![0; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        Matrix::from_raw(&self.field, self.cols, self.rows, data)
    }

    fn check_compatible(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch { left: self.field.id(), right: other.field.id() });
        }
        if self.cols != other.cols {
            return Err(MatrixError::ColumnMismatch { left: self.cols, right: other.cols });
        }
        Ok(())
    }

    /// `self` on top of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_compatible(other)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix::from_raw(&self.field, self.rows + other.rows, self.cols, data))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for r in 0..self.rows {
            let row = self.raw_row(r);
            data.extend(idx.iter().map(|&c| row[c]));
        }
        Matrix::from_raw(&self.field, self.rows, idx.len(), data)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.cols * idx.len());
        for &r in idx {
            data.extend_from_slice(self.raw_row(r));
        }
        Matrix::from_raw(&self.field, idx.len(), self.cols, data)
    }

    fn small_prime(&self) -> Option<u16> {
        (self.field.is_prime_field() && self.field.q() <= kernel::MAX_P).then(|| self.field.q() as u16)
    }

    /// Eliminates a copy of the matrix; returns the working buffer and the
    /// `(row, col)` pivot positions in column order.
    fn eliminate(&self, full: bool) -> (Vec<u32>, Vec<(usize, usize)>) {
        if let Some(p) = self.small_prime() {
            let mut a: Vec<u16> = self.data.iter().map(|&v| v as u16).collect();
            let piv = kernel::eliminate(&mut a, self.rows, self.cols, p, full);
            let out = if full { a.iter().map(|&v| v as u32).collect() } else { Vec::new() };
            (out, piv)
        } else {
            generic_eliminate(&self.field, self.data.clone(), self.rows, self.cols, full)
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.eliminate(false).1.len()
    }

    pub fn rref(&self) -> Echelon {
        let (buf, piv) = self.eliminate(true);
        let mut data = Vec::with_capacity(piv.len() * self.cols);
        for &(r, _) in &piv {
            data.extend_from_slice(&buf[r * self.cols..(r + 1) * self.cols]);
        }
        Echelon {
            matrix: Matrix::from_raw(&self.field, piv.len(), self.cols, data),
            pivots: piv.iter().map(|&(_, c)| c).collect(),
        }
    }

    /// Basis of `{v : self · vᵀ = 0}` as rows, one per free column in
    /// ascending order, with a 1 in that column and 0 in the other free
    /// columns.
    pub fn null_space(&self) -> Matrix {
        let e = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &e.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut data = vec![0u32; free.len() * n];
        for (k, &f) in free.iter().enumerate() {
            let row = &mut data[k * n..(k + 1) * n];
            row[f] = 1;
            for (i, &pc) in e.pivots.iter().enumerate() {
                let v = e.matrix.data[i * n + f];
                if v != 0 {
                    row[pc] = self.field.neg_raw(v);
                }
            }
        }
        Matrix::from_raw(&self.field, free.len(), n, data)
    }

    pub fn row_space_equal(&self, other: &Matrix) -> Result<bool, MatrixError> {
        self.check_compatible(other)?;
        let ra = self.rank();
        let rb = other.rank();
        Ok(ra == rb && self.stack(other)?.rank() == ra)
    }

    /// Some `x` with `self · x = b`, free variables set to zero.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>, MatrixError> {
        if b.len() != self.rows {
            return Err(MatrixError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let w = self.cols + 1;
        let mut data = Vec::with_capacity(self.rows * w);
        for (r, &bv) in b.iter().enumerate() {
            data.extend_from_slice(self.raw_row(r));
            data.push(self.field.raw(bv));
        }
        let aug = Matrix::from_raw(&self.field, self.rows, w, data);
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &pc) in e.pivots.iter().enumerate() {
            x[pc] = e.matrix.get(i, self.cols);
        }
        Ok(Some(x))
    }

    /// `self · otherᵀ`.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_compatible(other)?;
        let (ra, rb, n) = (self.rows, other.rows, self.cols);
        if let Some(p) = self.small_prime() {
            let a: Vec<u16> = self.data.iter().map(|&v| v as u16).collect();
            let b: Vec<u16> = other.data.iter().map(|&v| v as u16).collect();
            let out = kernel::mul_transpose(&a, ra, &b, rb, n, p);
            return Ok(Matrix::from_raw(&self.field, ra, rb, out.into_iter().map(u32::from).collect()));
        }
        let f = &self.field;
        let mut out = vec![0u32; ra * rb];
        for i in 0..ra {
            for j in 0..rb {
                let mut acc = 0;
                for (&x, &y) in self.raw_row(i).iter().zip(other.raw_row(j)) {
                    acc = f.add_raw(acc, f.mul_raw(x, y));
                }
                out[i * rb + j] = acc;
            }
        }
        Ok(Matrix::from_raw(f, ra, rb, out))
    }

    /// `self · vᵀ`.
    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, MatrixError> {
        let m = Matrix::from_rows(&self.field, self.cols, &[v.to_vec()])?;
        let out = self.mul_transpose(&m)?;
        Ok((0..self.rows).map(|r| out.get(r, 0)).collect())
    }

    /// Header `q m rows cols`, then one line of element texts per row.
    pub fn write_dump<W: Write>(&self, mut w: W) -> Result<(), MatrixError> {
        writeln!(w, "{} {} {} {}", self.field.q(), self.field.m(), self.rows, self.cols)?;
        let mut line = String::new();
        for r in 0..self.rows {
            line.clear();
            for (c, &v) in self.raw_row(r).iter().enumerate() {
                if c > 0 {
                    line.push(' ');
                }
                line.push_str(&self.field.to_text(self.field.wrap_raw(v)));
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    pub fn to_dump(&self) -> String {
        let mut buf = Vec::new();
        self.write_dump(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("dump is ascii")
    }

    pub fn parse_dump(text: &str) -> Result<Matrix, MatrixError> {
        let bad = |s: &str| MatrixError::Parse(s.to_string());
        let mut lines = text.lines();
        let header: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("empty input"))?
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| bad("bad header")))
            .collect::<Result<_, _>>()?;
        let [q, m, rows, cols] = header[..] else {
            return Err(bad("header needs four fields"));
        };
        let field = crate::algebra::make_field(q as u32, m as u32)?;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let line = lines.next().ok_or_else(|| bad("missing row"))?;
            let before = data.len();
            for tok in line.split_whitespace() {
                data.push(field.raw(field.parse_text(tok)?));
            }
            if data.len() - before != cols {
                return Err(MatrixError::Parse(format!("row {r} has {} entries", data.len() - before)));
            }
        }
        Ok(Matrix::from_raw(&field, rows, cols, data))
    }
}

fn generic_eliminate(
    f: &Field,
    mut a: Vec<u32>,
    rows: usize,
    cols: usize,
    full: bool,
) -> (Vec<u32>, Vec<(usize, usize)>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for k in 0..cols {
                a.swap(r * cols + k, pr * cols + k);
            }
        }
        let inv = f.inv_raw(a[r * cols + c]);
        if full {
            for k in c..cols {
                a[r * cols + k] = f.mul_raw(a[r * cols + k], inv);
            }
        }
        let targets: Vec<usize> = if full { (0..rows).filter(|&i| i != r).collect() } else { (r + 1..rows).collect() };
        for i in targets {
            let v = a[i * cols + c];
            if v == 0 {
                continue;
            }
            let factor = if full { f.neg_raw(v) } else { f.neg_raw(f.mul_raw(v, inv)) };
            for k in c..cols {
                let s = a[r * cols + k];
                if s != 0 {
                    a[i * cols + k] = f.add_raw(a[i * cols + k], f.mul_raw(factor, s));
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    (a, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    #[test]
    fn identity_and_repeated_rows() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(Matrix::identity(&f, 3).rank(), 3);
        let m = Matrix::from_ints(&f, 2, 3, &[1, 2, 0, 1, 2, 0]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn null_space_shapes() {
        let f = make_field(5, 1).unwrap();
        assert_eq!(Matrix::zeros(&f, 2, 4).null_space().rows(), 4);
        assert_eq!(Matrix::identity(&f, 4).null_space().rows(), 0);
        let m = Matrix::from_ints(&f, 2, 4, &[1, 2, 3, 4, 0, 1, 1, 1]).unwrap();
        let n = m.null_space();
        assert_eq!(n.rows(), 2);
        assert!(m.mul_transpose(&n).unwrap().is_zero());
    }

    #[test]
    fn solve_cases() {
        let f = make_field(7, 1).unwrap();
        let b: Vec<FieldElement> = [3, 5, 6].iter().map(|&x| f.from_int(x)).collect();
        assert_eq!(Matrix::identity(&f, 3).solve(&b).unwrap().unwrap(), b);
        let m = Matrix::from_ints(&f, 2, 2, &[1, 1, 1, 1]).unwrap();
        assert!(m.solve(&[f.one(), f.zero()]).unwrap().is_none());
        assert!(m.solve(&[f.one()]).is_err());
    }

    #[test]
    fn row_space_under_row_operations() {
        let f = make_field(3, 1).unwrap();
        let a = Matrix::from_ints(&f, 2, 3, &[1, 0, 2, 0, 1, 1]).unwrap();
        let swapped = a.select_rows(&[1, 0]);
        assert!(a.row_space_equal(&swapped).unwrap());
        let scaled = Matrix::from_ints(&f, 2, 3, &[2, 0, 1, 0, 1, 1]).unwrap();
        assert!(a.row_space_equal(&scaled).unwrap());
        let other = Matrix::from_ints(&f, 2, 3, &[1, 0, 0, 0, 1, 1]).unwrap();
        assert!(!a.row_space_equal(&other).unwrap());
        let narrow = Matrix::zeros(&f, 1, 2);
        assert!(a.row_space_equal(&narrow).is_err());
    }

    #[test]
    fn extension_field_rank_and_rref() {
        let f = make_field(3, 2).unwrap();
        let a = f.alpha();
        let rows =
            vec![vec![f.one(), a, f.mul(a, a)], vec![a, f.mul(a, a), f.pow(a, 3)], vec![f.one(), f.one(), f.one()]];
        let m = Matrix::from_rows(&f, 3, &rows).unwrap();
        assert_eq!(m.rank(), 2);
        let n = m.null_space();
        assert_eq!(n.rows(), 1);
        assert!(m.mul_transpose(&n).unwrap().is_zero());
    }

    #[test]
    fn dump_round_trip() {
        let f = make_field(3, 4).unwrap();
        let rows = vec![vec![f.alpha(), f.zero()], vec![f.alpha_pow(7), f.one()]];
        let m = Matrix::from_rows(&f, 2, &rows).unwrap();
        let text = m.to_dump();
        assert!(text.starts_with("3 4 2 2\n0100 0000\n"));
        assert_eq!(Matrix::parse_dump(&text).unwrap(), m);
    }
}
