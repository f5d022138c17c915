//! Finite-dimensional Hopf algebras given by structure constants, their
//! duals, and partial Hopf actions on algebras.
//!
//! For a basis `b_i` of `H`: `b_k b_l = Σ m^i_{kl} b_i` (the algebra) and
//! `Δ(b_i) = Σ c^i_{kl} b_k ⊗ b_l`. The comultiplication is stored as an
//! `n² × n` matrix whose column `i` is `Δ(b_i)` in the basis `b_k ⊗ b_l` at
//! index `k*n + l`. The antipode matrix has `S(b_j)` as column `j`.

mod partial;
mod reps;

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{group_algebra, tensor_constants, AlgebraError, StructureAlgebra, StructureConstants};
use crate::exactla::{vector, Field, Mat, Scalar};
use crate::exec;
use crate::group::FiniteGroup;

pub use partial::{
    big_phi_check, grouplike_iso_check, lift_group_partial_action, make_partial_hopf_action, partial_coaction_check,
    partial_smash, partial_smash_check, phi_psi_check, phi_psi_maps, PartialHopfAction, PartialHopfError,
    PartialSmash, PhiPsi,
};
pub use reps::{reps, Reps};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("inconsistent shapes: {0}")]
    Shape(String),
    #[error("comultiplication is not coassociative on basis vector {0}")]
    NotCoassociative(usize),
    #[error("counit law fails on basis vector {0}")]
    CounitFails(usize),
    #[error("comultiplication is not multiplicative on basis pair ({0}, {1})")]
    ComultNotMultiplicative(usize, usize),
    #[error("counit is not multiplicative on basis pair ({0}, {1})")]
    CounitNotMultiplicative(usize, usize),
    #[error("comultiplication or counit does not preserve the unit")]
    NotUnital,
    #[error("antipode axiom fails on basis vector {0}")]
    AntipodeFails(usize),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl HopfError {
    pub fn axiom(&self) -> &'static str {
        match self {
            HopfError::Shape(_) => "shape",
            HopfError::NotCoassociative(_) => "coassociativity",
            HopfError::CounitFails(_) => "counit",
            HopfError::ComultNotMultiplicative(..) | HopfError::CounitNotMultiplicative(..) | HopfError::NotUnital => {
                "bialgebra"
            }
            HopfError::AntipodeFails(_) => "antipode",
            HopfError::AntipodeNotInvertible => "antipode_invertible",
            HopfError::Algebra(e) => e.axiom(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HopfData {
    algebra: Arc<StructureAlgebra>,
    comult: Mat,
    counit: Vec<Scalar>,
    antipode: Mat,
    antipode_inv: Mat,
}

impl HopfData {
    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }
    pub fn field(&self) -> Field {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    pub fn comult(&self) -> &Mat {
        &self.comult
    }
    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }
    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }
    pub fn antipode_inv(&self) -> &Mat {
        &self.antipode_inv
    }

    /// `c^i_{kl}`.
    pub fn c(&self, i: usize, k: usize, l: usize) -> &Scalar {
        self.comult.get(k * self.dim() + l, i)
    }

    /// Nonzero terms `(k, l, c^i_{kl})` of `Δ(b_i)`.
    pub fn coproduct_terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        (0..n * n)
            .filter(|&kl| !self.comult.get(kl, i).is_zero())
            .map(|kl| (kl / n, kl % n, self.comult.get(kl, i).clone()))
            .collect()
    }

    /// `Δ(h)` in `H ⊗ H`.
    pub fn delta(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(h)
    }

    pub fn epsilon(&self, h: &[Scalar]) -> Scalar {
        let mut s = self.field().zero();
        for (a, b) in h.iter().zip(&self.counit) {
            s.add_mul(a, b);
        }
        s
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(a, b)
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    /// Whether every basis vector is grouplike.
    pub fn is_grouplike_basis(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let b = self.algebra.basis_vector(i);
            self.delta(&b) == vector::kron(&b, &b)
        })
    }
}

/// Validates Hopf data exhaustively on basis vectors.
pub fn make_hopf(
    algebra: Arc<StructureAlgebra>,
    comult: Mat,
    counit: Vec<Scalar>,
    antipode: Mat,
) -> Result<HopfData, HopfError> {
    let n = algebra.dim();
    let field = algebra.field();
    if comult.rows() != n * n || comult.cols() != n {
        return Err(HopfError::Shape(format!("comultiplication is {}x{}, expected {}x{n}", comult.rows(), comult.cols(), n * n)));
    }
    if counit.len() != n || antipode.rows() != n || antipode.cols() != n {
        return Err(HopfError::Shape("counit or antipode has the wrong size".to_string()));
    }
    if comult.field() != field || antipode.field() != field || counit.iter().any(|c| c.field() != field) {
        return Err(HopfError::Shape(format!("data not over {field}")));
    }
    let antipode_inv = antipode.inverse().ok_or(HopfError::AntipodeNotInvertible)?;
    let h = HopfData { algebra, comult, counit, antipode, antipode_inv };
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.algebra.basis_vector(i)).collect();
    let id = Mat::identity(field, n);

    // (Δ ⊗ 1)Δ = (1 ⊗ Δ)Δ
    let left = kron_mat(&h.comult, &id).matmul(&h.comult);
    let right = kron_mat(&id, &h.comult).matmul(&h.comult);
    if let Some(i) = (0..n).find(|&i| left.column(i) != right.column(i)) {
        return Err(HopfError::NotCoassociative(i));
    }

    let eps_row = Mat::from_rows(field, n, vec![h.counit.clone()]);
    let left_counit = kron_mat(&eps_row, &id).matmul(&h.comult);
    let right_counit = kron_mat(&id, &eps_row).matmul(&h.comult);
    if let Some(i) = (0..n).find(|&i| left_counit.column(i) != basis[i] || right_counit.column(i) != basis[i]) {
        return Err(HopfError::CounitFails(i));
    }

    let hh = tensor_constants(h.algebra.constants(), h.algebra.constants());
    if h.delta(h.unit()) != vector::kron(h.unit(), h.unit()) || !h.epsilon(h.unit()).is_one() {
        return Err(HopfError::NotUnital);
    }
    let bad = exec::first_some(n * n, |ij| {
        let (i, j) = (ij / n, ij % n);
        let lhs = h.delta(&h.mul(&basis[i], &basis[j]));
        let rhs = hh.mul(&h.delta(&basis[i]), &h.delta(&basis[j]));
        (lhs != rhs).then_some((i, j))
    });
    if let Some((i, j)) = bad {
        return Err(HopfError::ComultNotMultiplicative(i, j));
    }
    let bad = (0..n * n).find(|&ij| {
        let (i, j) = (ij / n, ij % n);
        h.epsilon(&h.mul(&basis[i], &basis[j])) != &h.counit[i] * &h.counit[j]
    });
    if let Some(ij) = bad {
        return Err(HopfError::CounitNotMultiplicative(ij / n, ij % n));
    }

    // Σ S(h₁)h₂ = ε(h)1 = Σ h₁S(h₂)
    for i in 0..n {
        let expect = vector::scale(h.unit(), &h.counit[i]);
        let mut left = vector::zeros(field, n);
        let mut right = vector::zeros(field, n);
        for (k, l, c) in h.coproduct_terms(i) {
            vector::axpy(&mut left, &c, &h.mul(&h.antipode.column(k), &basis[l]));
            vector::axpy(&mut right, &c, &h.mul(&basis[k], &h.antipode.column(l)));
        }
        if left != expect || right != expect {
            return Err(HopfError::AntipodeFails(i));
        }
    }
    Ok(h)
}

/// Kronecker product of matrices, matching [`vector::kron`] on columns.
pub(crate) fn kron_mat(a: &Mat, b: &Mat) -> Mat {
    let field = a.field();
    let mut m = Mat::zeros(field, a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        m.set(i * b.rows() + k, j * b.cols() + l, x * y);
                    }
                }
            }
        }
    }
    m
}

/// `k[G]` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_hopf(field: Field, group: &FiniteGroup) -> HopfData {
    let n = group.order();
    let algebra = Arc::new(group_algebra(field, group));
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|g| {
            let b = vector::unit(field, n, g);
            vector::kron(&b, &b)
        })
        .collect();
    let comult = Mat::from_columns(field, n * n, &cols);
    let s_cols: Vec<Vec<Scalar>> = (0..n).map(|g| vector::unit(field, n, group.inv(g))).collect();
    make_hopf(algebra, comult, vec![field.one(); n], Mat::from_columns(field, n, &s_cols)).expect("group algebras are Hopf")
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δ(x) = x ⊗ 1 + g ⊗ x`, `S(x) = −gx`.
pub fn sweedler(field: Field) -> HopfData {
    // signed monomials g^a x^b as (sign, a, b); index a + 2b
    let mono = |idx: usize| (idx % 2, idx / 2);
    let constants = StructureConstants::from_fn(field, 4, |i, j| {
        let ((a1, b1), (a2, b2)) = (mono(i), mono(j));
        let mut out = vector::zeros(field, 4);
        if b1 + b2 > 1 {
            return out;
        }
        // x^b1 g^a2 = (-1)^{a2 b1} g^a2 x^b1
        let sign = if a2 * b1 == 1 { -1 } else { 1 };
        out[(a1 + a2) % 2 + 2 * (b1 + b2)] = field.from_i64(sign);
        out
    });
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let algebra = Arc::new(StructureAlgebra::new(constants, vector::unit(field, 4, 0), Some(labels)).expect("Sweedler algebra"));
    let e = |i: usize| vector::unit(field, 4, i);
    let t = |a: usize, b: usize| vector::kron(&e(a), &e(b));
    let comult_cols = vec![
        t(0, 0),
        t(1, 1),
        vector::add(&t(2, 0), &t(1, 2)),
        vector::add(&t(3, 1), &t(0, 3)),
    ];
    let comult = Mat::from_columns(field, 16, &comult_cols);
    let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
    let antipode = Mat::from_columns(field, 4, &[e(0), e(1), vector::scale(&e(3), &field.from_i64(-1)), e(2)]);
    make_hopf(algebra, comult, counit, antipode).expect("Sweedler algebra is Hopf")
}

/// `H^*` on the dual basis `p_i`: `p_k p_l = Σ c^i_{kl} p_i`,
/// `Δ(p_i) = Σ m^i_{kl} p_k ⊗ p_l`, unit `ε`, counit `f ↦ f(1)`, antipode `Sᵀ`.
pub fn dual_hopf(h: &HopfData) -> Result<HopfData, HopfError> {
    let n = h.dim();
    let field = h.field();
    let constants = StructureConstants::from_fn(field, n, |k, l| (0..n).map(|i| h.c(i, k, l).clone()).collect());
    let labels = h.algebra.labels().iter().map(|l| format!("p_{l}")).collect();
    let algebra = Arc::new(StructureAlgebra::new(constants, h.counit.clone(), Some(labels))?);
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n * n)
                .map(|kl| h.algebra.constants().basis_product(kl / n, kl % n)[i].clone())
                .collect()
        })
        .collect();
    let comult = Mat::from_columns(field, n * n, &cols);
    make_hopf(algebra, comult, h.unit().to_vec(), h.antipode.transpose())
}

/// Which side a dual element acts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `f ⇀ h = Σ h₁ f(h₂)` (left) or `h ↼ f = Σ h₂ f(h₁)` (right), with `f`
/// given in the dual basis.
pub fn harpoon(hopf: &HopfData, side: Side, f: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
    let n = hopf.dim();
    let field = hopf.field();
    let mut out = vector::zeros(field, n);
    for (i, hi) in h.iter().enumerate() {
        if hi.is_zero() {
            continue;
        }
        for (k, l, c) in hopf.coproduct_terms(i) {
            let (kept, paired) = match side {
                Side::Left => (k, l),
                Side::Right => (l, k),
            };
            let coeff = &(hi * &c) * &f[paired];
            if !coeff.is_zero() {
                out[kept] = &out[kept] + &coeff;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
