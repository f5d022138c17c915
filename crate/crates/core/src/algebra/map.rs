use std::sync::Arc;

use super::{AlgebraError, StructureAlgebra};
use crate::exactla::{vector, Mat, Scalar, Subspace};
use crate::exec;

/// A linear map between algebras. Multiplicativity and unitality are
/// predicates to be checked, never assumed.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    domain: Arc<StructureAlgebra>,
    codomain: Arc<StructureAlgebra>,
    matrix: Mat,
}

impl AlgebraMap {
    pub fn new(
        domain: Arc<StructureAlgebra>,
        codomain: Arc<StructureAlgebra>,
        matrix: Mat,
    ) -> Result<Self, AlgebraError> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(AlgebraError::Shape(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.dim(),
                domain.dim()
            )));
        }
        Ok(AlgebraMap { domain, codomain, matrix })
    }

    pub fn domain(&self) -> &Arc<StructureAlgebra> {
        &self.domain
    }
    pub fn codomain(&self) -> &Arc<StructureAlgebra> {
        &self.codomain
    }
    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn apply(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(a)
    }

    /// First basis pair `(i, j)` with `f(b_i b_j) != f(b_i) f(b_j)`.
    pub fn multiplicativity_witness(&self) -> Option<(usize, usize)> {
        let d = self.domain.dim();
        let images = self.matrix.columns();
        exec::first_some(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            let lhs = self.apply(&self.domain.constants().basis_product(i, j));
            let rhs = self.codomain.mul(&images[i], &images[j]);
            (lhs != rhs).then_some((i, j))
        })
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicativity_witness().is_none()
    }

    pub fn is_unital(&self) -> bool {
        self.apply(self.domain.unit()) == self.codomain.unit()
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel_basis()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image_basis()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AlgebraMap) -> Result<AlgebraMap, AlgebraError> {
        if !Arc::ptr_eq(&inner.codomain, &self.domain) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        AlgebraMap::new(inner.domain.clone(), self.codomain.clone(), self.matrix.matmul(&inner.matrix))
    }

    pub fn identity(a: &Arc<StructureAlgebra>) -> Self {
        AlgebraMap { domain: a.clone(), codomain: a.clone(), matrix: Mat::identity(a.field(), a.dim()) }
    }

    pub fn image_of_basis(&self, i: usize) -> Vec<Scalar> {
        self.apply(&vector::unit(self.domain.field(), self.domain.dim(), i))
    }
}
