//! Exact field arithmetic and dense linear algebra.
//!
//! Every verification in this crate reduces to a kernel, an image, or a
//! subspace comparison computed here. Subspaces carry a reduced row echelon
//! basis, so equality is a direct comparison of bases.

mod mat;
mod scalar;
mod subspace;
pub mod vector;

pub use mat::Mat;
pub use scalar::{Field, FieldError, Scalar};
pub use subspace::{OpResult, Subspace, SubspaceError, SubspaceOp};

/// Free-function form of [`Mat::kernel_basis`].
pub fn kernel_basis(m: &Mat) -> Subspace {
    m.kernel_basis()
}

/// Free-function form of [`Mat::image_basis`].
pub fn image_basis(m: &Mat) -> Subspace {
    m.image_basis()
}

/// Free-function form of [`Mat::solve`].
pub fn solve(m: &Mat, b: &[Scalar]) -> Option<Vec<Scalar>> {
    m.solve(b)
}
