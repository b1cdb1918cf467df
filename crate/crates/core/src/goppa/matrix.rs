use std::fmt;

use crate::field::{Field, FieldElement, FieldError};

/// Dense row-major matrix over a finite field, entries stored as canonical
/// encodings. Arithmetic here does not touch the field's operation counters.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// From rows of canonical encodings; all rows must have equal length.
    pub fn from_rows(field: &Field, rows: &[Vec<u32>]) -> Result<Self, FieldError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(FieldError::InvalidModulus(format!(
                    "ragged matrix: expected {cols} columns, found {}",
                    row.len()
                )));
            }
            for &v in row {
                field.element(v as u64)?;
                data.push(v);
            }
        }
        Ok(Self {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_elements(field: &Field, rows: &[Vec<FieldElement>]) -> Result<Self, FieldError> {
        for e in rows.iter().flatten() {
            if !e.field().same_as(field) {
                return Err(FieldError::FieldMismatch);
            }
        }
        let raw: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(FieldElement::value).collect())
            .collect();
        Self::from_rows(field, &raw)
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

    pub fn raw(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.element(self.raw(i, j) as u64).expect("entries are in range")
    }

    pub(crate) fn set_raw(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.raw(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set_raw(j, i, self.raw(i, j));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, FieldError> {
        if !self.field.same_as(&rhs.field) {
            return Err(FieldError::FieldMismatch);
        }
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = 0;
                for l in 0..self.cols {
                    acc = f.add_raw(acc, f.mul_raw(self.raw(i, l), rhs.raw(l, j)));
                }
                out.set_raw(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        (0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .fold(0, |acc, (i, &a)| f.add_raw(acc, f.mul_raw(a, self.raw(i, j))))
            })
            .collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add_raw(acc, f.mul_raw(a, b)))
            })
            .collect()
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Columns rearranged so that column `j` of the result is column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.cols);
        let mut out = Self::zeros(&self.field, self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                out.set_raw(i, j, self.raw(i, src));
            }
        }
        out
    }

    fn scale_row(&mut self, i: usize, c: u32) {
        for j in 0..self.cols {
            let v = self.field.mul_raw(self.raw(i, j), c);
            self.set_raw(i, j, v);
        }
    }

    /// `row[target] -= c * row[source]`
    fn eliminate(&mut self, target: usize, source: usize, c: u32) {
        let f = self.field.clone();
        for j in 0..self.cols {
            let v = f.sub_raw(self.raw(target, j), f.mul_raw(c, self.raw(source, j)));
            self.set_raw(target, j, v);
        }
    }

    /// Reduced row echelon form in place, with optional column pivoting. Returns
    /// the number of pivots and the column permutation that was applied.
    ///
    /// With pivoting, pivot `r` always ends up in column `r`: when column `r`
    /// has no nonzero entry at or below row `r`, the first later column that
    /// does is swapped into position `r`.
    pub(crate) fn gauss_jordan(&mut self, pivot_columns: bool) -> (usize, Vec<usize>) {
        let mut perm: Vec<usize> = (0..self.cols).collect();
        let mut r = 0;
        let mut c = 0;
        while r < self.rows && c < self.cols {
            let find = |m: &Matrix, col: usize| (r..m.rows).find(|&i| m.raw(i, col) != 0);
            let (col, pivot_row) = if pivot_columns {
                match (c..self.cols).find_map(|col| find(self, col).map(|i| (col, i))) {
                    Some((col, i)) => {
                        if col != c {
                            self.swap_columns(c, col);
                            perm.swap(c, col);
                        }
                        (c, i)
                    }
                    None => break,
                }
            } else {
                match find(self, c) {
                    Some(i) => (c, i),
                    None => {
                        c += 1;
                        continue;
                    }
                }
            };
            self.data_swap_rows(r, pivot_row);
            let inv = self.field.inv_raw(self.raw(r, col)).expect("pivot is nonzero");
            self.scale_row(r, inv);
            for i in 0..self.rows {
                if i != r && self.raw(i, col) != 0 {
                    let factor = self.raw(i, col);
                    self.eliminate(i, r, factor);
                }
            }
            r += 1;
            c += 1;
        }
        (r, perm)
    }

    fn data_swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().gauss_jordan(false).0
    }

    /// Reduced row echelon form without column swaps.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        m.gauss_jordan(false);
        m
    }

    /// Text layout: right-aligned columns, optional bar before column `split`.
    pub fn render(&self, split: Option<usize>) -> String {
        let width = self.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    out.push_str(if split == Some(j) { " | " } else { " " });
                }
                out.push_str(&format!("{:>width$}", self.raw(i, j)));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf17() -> Field {
        Field::prime(17).unwrap()
    }

    #[test]
    fn rank_and_rref() {
        let f = gf17();
        let m = Matrix::from_rows(&f, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        let r = m.rref();
        assert_eq!(r.row(0), &[1, 0, 1]);
        assert_eq!(r.row(1), &[0, 1, 1]);
        assert_eq!(r.row(2), &[0, 0, 0]);
    }

    #[test]
    fn column_pivoting_moves_pivots_left() {
        let f = gf17();
        // second column is a multiple of the first
        let mut m = Matrix::from_rows(&f, &[vec![1, 2, 0, 5], vec![1, 2, 3, 0]]).unwrap();
        let (rank, perm) = m.gauss_jordan(true);
        assert_eq!(rank, 2);
        assert_eq!(perm, vec![0, 2, 1, 3]);
        assert_eq!(m.row(0)[..2], [1, 0]);
        assert_eq!(m.row(1)[..2], [0, 1]);
    }

    #[test]
    fn products() {
        let f = gf17();
        let a = Matrix::from_rows(&f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let i = Matrix::identity(&f, 2);
        assert_eq!(a.mul(&i).unwrap(), a);
        assert_eq!(a.left_mul_vec(&[1, 1]), vec![4, 6]);
        assert_eq!(a.mul_vec(&[1, 1]), vec![3, 7]);
        assert_eq!(a.transpose().row(0), &[1, 3]);
    }

    #[test]
    fn rejects_out_of_range_entries() {
        let f = gf17();
        assert!(Matrix::from_rows(&f, &[vec![17]]).is_err());
        assert!(Matrix::from_rows(&f, &[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn render_with_bar() {
        let f = gf17();
        let m = Matrix::from_rows(&f, &[vec![7, 3, 1, 0], vec![2, 12, 0, 1]]).unwrap();
        assert_eq!(m.render(Some(2)), " 7  3 |  1  0\n 2 12 |  0  1\n");
        assert_eq!(m.render(None), " 7  3  1  0\n 2 12  0  1\n");
    }
}
