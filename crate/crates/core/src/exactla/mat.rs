use std::fmt;

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use super::vector;

/// Dense matrix over a single [`Field`]. Linear maps act on column vectors:
/// column `j` holds the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Mat { field, rows: n, cols, data }
    }

    /// Builds from column vectors (images of the domain basis).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Mat::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                o.add_mul(self.get(i, j), x);
            }
        }
        out
    }

    /// `self · rhs`.
    pub fn matmul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Mat::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Solution space of `self · x = 0`, in canonical form.
    pub fn kernel_basis(&self) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref_in_place(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[r][free];
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, basis)
    }

    /// Column space, in canonical form.
    pub fn image_basis(&self) -> Subspace {
        Subspace::span(self.field, self.rows, self.columns())
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_rows(self.field, n, rows.into_iter().map(|r| r[n..].to_vec()).collect()))
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduces `rows` (each of length `ncols`) to reduced row echelon form,
/// dropping zero rows. Returns the pivot column of each surviving row.
pub(crate) fn rref_in_place(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next >= rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(found, next);
        let inv = rows[next][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            vector::scale_in_place(&mut rows[next], &inv);
        }
        let (head, tail) = rows.split_at_mut(next);
        let (pivot_row, rest) = tail.split_first_mut().expect("pivot row exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let factor = other[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (o, p) in other.iter_mut().zip(pivot_row.iter()).skip(col) {
                if !p.is_zero() {
                    *o = &*o - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Mat {
        let f = Field::Rational;
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(f, cols, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect())
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Field::Rational.from_i64(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        let k = q(&[&[0]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], v(&[1]));
        assert_eq!(Mat::identity(Field::Rational, 2).kernel_basis().dim(), 0);
        let k = q(&[&[1, 1], &[2, 2]]).kernel_basis();
        assert_eq!(k, Subspace::span(Field::Rational, 2, vec![v(&[1, -1])]));
    }

    #[test]
    fn image_examples() {
        assert_eq!(Mat::zeros(Field::Rational, 3, 3).image_basis().dim(), 0);
        assert_eq!(Mat::identity(Field::Rational, 4).image_basis(), Subspace::full(Field::Rational, 4));
        let im = q(&[&[1, 2], &[2, 4]]).image_basis();
        assert_eq!(im, Subspace::span(Field::Rational, 2, vec![v(&[1, 2])]));
    }

    #[test]
    fn solve_examples() {
        let id = Mat::identity(Field::Rational, 3);
        assert_eq!(id.solve(&v(&[1, 2, 3])), Some(v(&[1, 2, 3])));
        assert_eq!(Mat::zeros(Field::Rational, 2, 2).solve(&v(&[1, 0])), None);
        assert_eq!(q(&[&[2, 0], &[0, 3]]).solve(&v(&[4, 6])), Some(v(&[2, 2])));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Mat::identity(Field::Rational, 2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
