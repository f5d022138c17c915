//! Finite-dimensional algebras given by structure constants.
//!
//! [`StructureConstants`] is a bare bilinear product (possibly non-unital,
//! used for the ambient spaces of partial smash products);
//! [`StructureAlgebra`] adds a validated two-sided unit and associativity.

mod builders;
mod map;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::exactla::{vector, Field, Mat, Scalar, Subspace};
use crate::exec;

pub use builders::{
    base_field, dual_group_algebra, direct_product, end_algebra, group_algebra, matrix_algebra,
    matrix_units, product_of_fields, tensor_constants, tensor_product, DirectProduct, MatrixAlgebra,
};
pub use map::AlgebraMap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure constants have the wrong shape: {0}")]
    Shape(String),
    #[error("not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    UnitFails(usize),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("algebras over different fields: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("element is not a central idempotent (witness: {0})")]
    NotCentralIdempotent(String),
}

impl AlgebraError {
    pub fn axiom(&self) -> &'static str {
        match self {
            AlgebraError::Shape(_) | AlgebraError::AlgebraMismatch | AlgebraError::FieldMismatch(..) => "shape",
            AlgebraError::NotAssociative(..) => "associativity",
            AlgebraError::UnitFails(_) => "unit",
            AlgebraError::NotCentralIdempotent(_) => "central_idempotent",
        }
    }
}

/// A bilinear product on `field^dim`, stored sparsely per basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    field: Field,
    dim: usize,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl StructureConstants {
    /// `product(i, j)` returns the coordinates of `b_i · b_j`.
    pub fn from_fn<F>(field: Field, dim: usize, product: F) -> Self
    where
        F: Fn(usize, usize) -> Vec<Scalar> + Sync + Send,
    {
        let table = exec::map_range(dim * dim, |ij| {
            let v = product(ij / dim, ij % dim);
            assert_eq!(v.len(), dim, "basis product has wrong length");
            v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        });
        StructureConstants { field, dim, table }
    }

    /// From a dense cube `c[i][j][k]` = coefficient of `b_k` in `b_i b_j`.
    pub fn from_dense(field: Field, cube: &[Vec<Vec<Scalar>>]) -> Result<Self, AlgebraError> {
        let d = cube.len();
        for (i, plane) in cube.iter().enumerate() {
            if plane.len() != d || plane.iter().any(|r| r.len() != d) {
                return Err(AlgebraError::Shape(format!("slice {i} is not {d}x{d}")));
            }
        }
        Ok(Self::from_fn(field, d, |i, j| cube[i][j].clone()))
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sparse `b_i b_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vector::zeros(self.field, self.dim);
        for (k, c) in self.product_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), self.dim, "left factor has wrong length");
        assert_eq!(b.len(), self.dim, "right factor has wrong length");
        let mut out = vector::zeros(self.field, self.dim);
        let nz_b: Vec<(usize, &Scalar)> = b.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(j, y) in &nz_b {
                let xy = x * y;
                for (k, c) in self.product_terms(i, j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// First basis triple (in lexicographic order) where associativity fails.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        exec::first_some(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            let bij = self.product_terms(i, j);
            (0..d).find_map(|k| {
                let left = self.combine(bij.iter().map(|(m, c)| (c, self.product_terms(*m, k))));
                let right = self.combine(self.product_terms(j, k).iter().map(|(m, c)| (c, self.product_terms(i, *m))));
                (left != right).then_some((i, j, k))
            })
        })
    }

    /// `Σ c · terms` as a sparse vector with zeros removed.
    fn combine<'a>(
        &'a self,
        parts: impl Iterator<Item = (&'a Scalar, &'a [(usize, Scalar)])>,
    ) -> BTreeMap<usize, Scalar> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, terms) in parts {
            for (k, x) in terms {
                acc.entry(*k).or_insert_with(|| self.field.zero()).add_mul(c, x);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> Mat {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|j| self.mul(a, &vector::unit(self.field, self.dim, j))).collect();
        Mat::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> Mat {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|j| self.mul(&vector::unit(self.field, self.dim, j), a)).collect();
        Mat::from_columns(self.field, self.dim, &cols)
    }

    /// Span of all products `x y` with `x ∈ u`, `y ∈ v` (basis pairs suffice).
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let products = u
            .basis()
            .iter()
            .flat_map(|x| v.basis().iter().map(move |y| self.mul(x, y)))
            .collect();
        Subspace::span(self.field, self.dim, products)
    }

    /// Whether `u` is closed under the product.
    pub fn is_closed(&self, u: &Subspace) -> bool {
        let b = u.basis();
        exec::first_some(b.len() * b.len(), |ij| {
            (!u.contains(&self.mul(&b[ij / b.len()], &b[ij % b.len()]))).then_some(())
        })
        .is_none()
    }
}

/// A finite-dimensional unital associative algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureAlgebra {
    constants: StructureConstants,
    unit: Vec<Scalar>,
    labels: Vec<String>,
}

impl StructureAlgebra {
    /// Validates associativity on all basis triples and the unit law on all basis elements.
    pub fn new(
        constants: StructureConstants,
        unit: Vec<Scalar>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        let d = constants.dim();
        if unit.len() != d {
            return Err(AlgebraError::Shape(format!("unit has length {} for dimension {d}", unit.len())));
        }
        let labels = match labels {
            Some(l) if l.len() != d => {
                return Err(AlgebraError::Shape(format!("{} labels for dimension {d}", l.len())))
            }
            Some(l) => l,
            None => (0..d).map(|i| format!("b{i}")).collect(),
        };
        if let Some((i, j, k)) = constants.associativity_witness() {
            return Err(AlgebraError::NotAssociative(i, j, k));
        }
        let field = constants.field();
        if let Some(i) = (0..d).find(|&i| {
            let b = vector::unit(field, d, i);
            constants.mul(&unit, &b) != b || constants.mul(&b, &unit) != b
        }) {
            return Err(AlgebraError::UnitFails(i));
        }
        Ok(StructureAlgebra { constants, unit, labels })
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }
    pub fn field(&self) -> Field {
        self.constants.field()
    }
    pub fn dim(&self) -> usize {
        self.constants.dim()
    }
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
    pub fn zero(&self) -> Vec<Scalar> {
        vector::zeros(self.field(), self.dim())
    }
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field(), self.dim(), i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.constants.mul(a, b)
    }

    /// Readable form of an element, e.g. `2*b0 + -1/2*b3`.
    pub fn show(&self, a: &[Scalar]) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if c.is_one() { self.labels[i].clone() } else { format!("{c}*{}", self.labels[i]) })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// A basis element not commuting with `a`, if any.
    pub fn centrality_witness(&self, a: &[Scalar]) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let b = self.basis_vector(i);
            self.mul(a, &b) != self.mul(&b, a)
        })
    }

    pub fn is_idempotent(&self, a: &[Scalar]) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_central_idempotent(&self, a: &[Scalar]) -> bool {
        self.is_idempotent(a) && self.centrality_witness(a).is_none()
    }

    /// The ideal `A·e` for a central idempotent `e`, verified two-sided.
    pub fn ideal_basis(&self, e: &[Scalar]) -> Result<Subspace, AlgebraError> {
        if !self.is_idempotent(e) {
            return Err(AlgebraError::NotCentralIdempotent("e*e != e".to_string()));
        }
        if let Some(i) = self.centrality_witness(e) {
            return Err(AlgebraError::NotCentralIdempotent(format!("does not commute with {}", self.label(i))));
        }
        let ideal = self.constants.right_mul_matrix(e).image_basis();
        debug_assert!(self.is_two_sided_ideal(&ideal));
        Ok(ideal)
    }

    /// Closure of `u` under left and right multiplication by every basis element.
    pub fn is_two_sided_ideal(&self, u: &Subspace) -> bool {
        let d = self.dim();
        exec::first_some(d, |i| {
            let x = self.basis_vector(i);
            u.basis()
                .iter()
                .any(|v| !u.contains(&self.mul(&x, v)) || !u.contains(&self.mul(v, &x)))
                .then_some(())
        })
        .is_none()
    }

    /// Solution space of `[x, b_i] = 0` for all basis elements `b_i`.
    pub fn center_basis(&self) -> Subspace {
        let d = self.dim();
        let f = self.field();
        // rows: for each i and each output coordinate k, sum_j x_j (c[j][i][k] - c[i][j][k])
        let mut rows = Vec::with_capacity(d * d);
        for i in 0..d {
            let mut block = vec![vector::zeros(f, d); d];
            for j in 0..d {
                for (k, c) in self.constants.product_terms(j, i) {
                    block[*k][j] = &block[*k][j] + c;
                }
                for (k, c) in self.constants.product_terms(i, j) {
                    block[*k][j] = &block[*k][j] - c;
                }
            }
            rows.extend(block);
        }
        Mat::from_rows(f, d, rows).kernel_basis()
    }

    pub fn is_commutative(&self) -> bool {
        self.center_basis().is_full()
    }
}

/// An element tied to its algebra.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    algebra: Arc<StructureAlgebra>,
    coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(algebra: Arc<StructureAlgebra>, coeffs: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if coeffs.len() != algebra.dim() {
            return Err(AlgebraError::Shape(format!(
                "{} coefficients for dimension {}",
                coeffs.len(),
                algebra.dim()
            )));
        }
        Ok(AlgebraElement { algebra, coeffs })
    }

    pub fn one(algebra: Arc<StructureAlgebra>) -> Self {
        let coeffs = algebra.unit().to_vec();
        AlgebraElement { algebra, coeffs }
    }

    pub fn basis(algebra: Arc<StructureAlgebra>, i: usize) -> Self {
        let coeffs = algebra.basis_vector(i);
        AlgebraElement { algebra, coeffs }
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    fn same(&self, other: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same(other)?;
        Ok(AlgebraElement { algebra: self.algebra.clone(), coeffs: self.algebra.mul(&self.coeffs, &other.coeffs) })
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same(other)?;
        Ok(AlgebraElement { algebra: self.algebra.clone(), coeffs: vector::add(&self.coeffs, &other.coeffs) })
    }

    pub fn is_central_idempotent(&self) -> bool {
        self.algebra.is_central_idempotent(&self.coeffs)
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

/// Validating constructor from a dense cube and a unit vector.
pub fn make_algebra(
    field: Field,
    cube: &[Vec<Vec<Scalar>>],
    unit: Vec<Scalar>,
) -> Result<StructureAlgebra, AlgebraError> {
    StructureAlgebra::new(StructureConstants::from_dense(field, cube)?, unit, None)
}
