use thiserror::Error;

use super::mat::{rref_in_place, Mat};
use super::scalar::{Field, Scalar};
use super::vector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubspaceError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
}

/// A linear subspace of `field^ambient`, stored by its reduced row echelon
/// basis. Two subspaces are equal iff their stored bases are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

/// The comparison and lattice operations on subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceOp {
    Equal,
    Sum,
    Intersect,
    Contains,
}

/// Result of [`Subspace::op`]: either a subspace or a truth value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpResult {
    Space(Subspace),
    Bool(bool),
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| vector::unit(field, ambient, i)).collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let mut rows: Vec<Vec<Scalar>> =
            vectors.into_iter().filter(|v| !vector::is_zero(v)).collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "spanning vector has wrong length");
        }
        let pivots = rref_in_place(&mut rows, ambient);
        Subspace { field, ambient, basis: rows, pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn check(&self, other: &Subspace) -> Result<(), SubspaceError> {
        if self.field != other.field {
            return Err(SubspaceError::FieldMismatch(self.field, other.field));
        }
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Coefficients of `v` in the canonical basis, `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vector::zeros(self.field, self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            vector::axpy(&mut recon, c, b);
        }
        (recon == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, SubspaceError> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check(other)?;
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::span(self.field, self.ambient, vectors))
    }

    /// Intersection, computed from the kernel of `[U^T | -V^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check(other)?;
        let (du, dv) = (self.dim(), other.dim());
        if du == 0 || dv == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let mut columns: Vec<Vec<Scalar>> = self.basis.clone();
        columns.extend(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()));
        let stacked = Mat::from_columns(self.field, self.ambient, &columns);
        let kernel = stacked.kernel_basis();
        let vectors = kernel
            .basis
            .iter()
            .map(|k| {
                let mut w = vector::zeros(self.field, self.ambient);
                for (c, b) in k[..du].iter().zip(&self.basis) {
                    vector::axpy(&mut w, c, b);
                }
                w
            })
            .collect();
        Ok(Subspace::span(self.field, self.ambient, vectors))
    }

    /// Applies `kind` to `(self, other)`; `Contains` asks whether `self ⊇ other`.
    pub fn op(&self, other: &Subspace, kind: SubspaceOp) -> Result<OpResult, SubspaceError> {
        self.check(other)?;
        Ok(match kind {
            SubspaceOp::Equal => OpResult::Bool(self == other),
            SubspaceOp::Contains => OpResult::Bool(self.contains_subspace(other)?),
            SubspaceOp::Sum => OpResult::Space(self.sum(other)?),
            SubspaceOp::Intersect => OpResult::Space(self.intersect(other)?),
        })
    }

    /// Image of this subspace under `m` (which must have `ambient` columns).
    pub fn image_under(&self, m: &Mat) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map does not act on this space");
        Subspace::span(self.field, m.rows(), self.basis.iter().map(|v| m.apply(v)).collect())
    }

    /// Matrix whose columns are the basis vectors (an injection `field^dim → field^ambient`).
    pub fn inclusion(&self) -> Mat {
        Mat::from_columns(self.field, self.ambient, &self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Field::Rational.from_i64(x)).collect()
    }
    fn span(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::span(Field::Rational, n, vs.iter().map(|x| v(x)).collect())
    }

    #[test]
    fn equality_of_full_spaces() {
        let u = Subspace::full(Field::Rational, 3);
        let w = span(&[&[1, 2, 3], &[0, 1, 0], &[5, 5, 4]], 3);
        assert_eq!(u.op(&w, SubspaceOp::Equal).unwrap(), OpResult::Bool(true));
    }

    #[test]
    fn coordinate_axes() {
        let u = span(&[&[1, 0]], 2);
        let w = span(&[&[0, 1]], 2);
        assert!(u.intersect(&w).unwrap().is_zero());
        assert!(u.sum(&w).unwrap().is_full());
    }

    #[test]
    fn membership() {
        let u = span(&[&[1, 1, 0]], 3);
        let w = span(&[&[1, 1, 0], &[0, 0, 1]], 3);
        assert!(w.contains_subspace(&u).unwrap());
        assert!(!u.contains_subspace(&w).unwrap());
        assert_eq!(w.coordinates(&v(&[2, 2, 3])), Some(v(&[2, 3])));
        assert_eq!(w.coordinates(&v(&[1, 0, 0])), None);
    }

    #[test]
    fn mismatched_ambient_rejected() {
        let u = Subspace::full(Field::Rational, 2);
        let w = Subspace::full(Field::Rational, 3);
        assert_eq!(u.sum(&w), Err(SubspaceError::AmbientMismatch(2, 3)));
        assert!(u.op(&w, SubspaceOp::Equal).is_err());
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = span(&[&[1, 2, 0], &[0, 0, 1]], 3);
        let b = span(&[&[2, 4, 1], &[1, 2, 3]], 3);
        assert_eq!(a, b);
    }
}
