use std::sync::Arc;

use super::{AlgebraError, AlgebraMap, StructureAlgebra, StructureConstants};
use crate::exactla::{vector, Field, Mat, Scalar};
use crate::group::FiniteGroup;

/// The base field as a 1-dimensional algebra.
pub fn base_field(field: Field) -> StructureAlgebra {
    product_of_fields(field, 1)
}

/// `k^m` with orthogonal idempotent basis `e_i e_j = δ_ij e_i`.
pub fn product_of_fields(field: Field, m: usize) -> StructureAlgebra {
    let constants = StructureConstants::from_fn(field, m, |i, j| {
        if i == j {
            vector::unit(field, m, i)
        } else {
            vector::zeros(field, m)
        }
    });
    let labels = if m == 1 { vec!["1".to_string()] } else { (0..m).map(|i| format!("e{i}")).collect() };
    StructureAlgebra::new(constants, vec![field.one(); m], Some(labels)).expect("k^m is an algebra")
}

/// Full matrix algebra `M_n(k)`, basis `E_{ij}` at index `i*n + j`.
pub fn matrix_units(field: Field, n: usize) -> StructureAlgebra {
    let d = n * n;
    let constants = StructureConstants::from_fn(field, d, |a, b| {
        let (i, j, k, l) = (a / n, a % n, b / n, b % n);
        if j == k {
            vector::unit(field, d, i * n + l)
        } else {
            vector::zeros(field, d)
        }
    });
    let mut unit = vector::zeros(field, d);
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    let labels = (0..d).map(|a| format!("E{}{}", a / n, a % n)).collect();
    StructureAlgebra::new(constants, unit, Some(labels)).expect("matrix units form an algebra")
}

/// `End(k^n)`: `E[r,s]` sends basis vector `s` to basis vector `r`;
/// the product is composition.
pub fn end_algebra(field: Field, n: usize) -> StructureAlgebra {
    let m = matrix_units(field, n);
    let labels = (0..n * n).map(|a| format!("E[{},{}]", a / n, a % n)).collect();
    StructureAlgebra::new(m.constants, m.unit, Some(labels)).expect("End is an algebra")
}

/// The group algebra `k[G]` with basis `G`.
pub fn group_algebra(field: Field, g: &FiniteGroup) -> StructureAlgebra {
    let n = g.order();
    let constants = StructureConstants::from_fn(field, n, |a, b| vector::unit(field, n, g.mul(a, b)));
    let unit = vector::unit(field, n, g.identity());
    StructureAlgebra::new(constants, unit, Some(g.labels().to_vec())).expect("group algebra")
}

/// The dual group algebra `k[G]^*` with basis `p_g`, `p_g p_h = δ_{g,h} p_g`,
/// unit `Σ_h p_h`.
pub fn dual_group_algebra(field: Field, g: &FiniteGroup) -> StructureAlgebra {
    let n = g.order();
    let constants = StructureConstants::from_fn(field, n, |a, b| {
        if a == b {
            vector::unit(field, n, a)
        } else {
            vector::zeros(field, n)
        }
    });
    let labels = g.labels().iter().map(|l| format!("p_{l}")).collect();
    StructureAlgebra::new(constants, vec![field.one(); n], Some(labels)).expect("dual group algebra")
}

/// `A × B` with the embeddings of both factors.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub algebra: Arc<StructureAlgebra>,
    pub left: AlgebraMap,
    pub right: AlgebraMap,
}

impl DirectProduct {
    /// The central idempotent `(1, 0)`.
    pub fn left_unit(&self) -> Vec<Scalar> {
        self.left.apply(self.left.domain().unit())
    }
}

pub fn direct_product(
    a: &Arc<StructureAlgebra>,
    b: &Arc<StructureAlgebra>,
) -> Result<DirectProduct, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch(a.field(), b.field()));
    }
    let field = a.field();
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let constants = StructureConstants::from_fn(field, d, |i, j| {
        let mut v = vector::zeros(field, d);
        if i < da && j < da {
            for (k, c) in a.constants().product_terms(i, j) {
                v[*k] = c.clone();
            }
        } else if i >= da && j >= da {
            for (k, c) in b.constants().product_terms(i - da, j - da) {
                v[da + *k] = c.clone();
            }
        }
        v
    });
    let unit: Vec<Scalar> = a.unit().iter().chain(b.unit()).cloned().collect();
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("({l},0)"))
        .chain(b.labels().iter().map(|l| format!("(0,{l})")))
        .collect();
    let algebra = Arc::new(StructureAlgebra::new(constants, unit, Some(labels))?);
    let mut left = Mat::zeros(field, d, da);
    for i in 0..da {
        left.set(i, i, field.one());
    }
    let mut right = Mat::zeros(field, d, db);
    for i in 0..db {
        right.set(da + i, i, field.one());
    }
    Ok(DirectProduct {
        left: AlgebraMap::new(a.clone(), algebra.clone(), left).expect("shape"),
        right: AlgebraMap::new(b.clone(), algebra.clone(), right).expect("shape"),
        algebra,
    })
}

/// Tensor product of bilinear products, basis `(i, j)` at `i * dim_b + j`.
pub fn tensor_constants(a: &StructureConstants, b: &StructureConstants) -> StructureConstants {
    assert_eq!(a.field(), b.field(), "tensor product over different fields");
    let field = a.field();
    let (da, db) = (a.dim(), b.dim());
    StructureConstants::from_fn(field, da * db, |x, y| {
        let mut v = vector::zeros(field, da * db);
        for (k, c) in a.product_terms(x / db, y / db) {
            for (l, e) in b.product_terms(x % db, y % db) {
                v[k * db + l] = c * e;
            }
        }
        v
    })
}

/// `A ⊗ B` with the componentwise product.
pub fn tensor_product(a: &StructureAlgebra, b: &StructureAlgebra) -> Result<StructureAlgebra, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch(a.field(), b.field()));
    }
    let constants = tensor_constants(a.constants(), b.constants());
    let unit = vector::kron(a.unit(), b.unit());
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    StructureAlgebra::new(constants, unit, Some(labels))
}

/// `M_n(A)` with rows and columns indexed by the elements of a finite group.
#[derive(Debug, Clone)]
pub struct MatrixAlgebra {
    pub algebra: Arc<StructureAlgebra>,
    pub base: Arc<StructureAlgebra>,
    pub n: usize,
}

impl MatrixAlgebra {
    /// Coordinate index of `E_{g,h} · b_i`.
    pub fn index(&self, g: usize, h: usize, i: usize) -> usize {
        (g * self.n + h) * self.base.dim() + i
    }

    /// The matrix with `a` at slot `(g, h)` and zero elsewhere.
    pub fn embed(&self, g: usize, h: usize, a: &[Scalar]) -> Vec<Scalar> {
        let mut v = self.algebra.zero();
        self.add_at(&mut v, g, h, a);
        v
    }

    pub fn add_at(&self, v: &mut [Scalar], g: usize, h: usize, a: &[Scalar]) {
        let start = self.index(g, h, 0);
        for (slot, x) in v[start..start + a.len()].iter_mut().zip(a) {
            *slot = &*slot + x;
        }
    }

    /// Entry `(g, h)` of a matrix.
    pub fn entry(&self, v: &[Scalar], g: usize, h: usize) -> Vec<Scalar> {
        let start = self.index(g, h, 0);
        v[start..start + self.base.dim()].to_vec()
    }
}

/// `M_n(A)`, `n = |G|`, basis `E_{g,h} a_i`, product
/// `(E_{g,h} x)(E_{r,s} y) = δ_{h,r} E_{g,s} (xy)`, unit `Σ_g E_{g,g} 1`.
pub fn matrix_algebra(a: &Arc<StructureAlgebra>, index_set: &FiniteGroup) -> MatrixAlgebra {
    let field = a.field();
    let n = index_set.order();
    let d = a.dim();
    let total = n * n * d;
    let constants = StructureConstants::from_fn(field, total, |x, y| {
        let (g, h, i) = (x / (n * d), (x / d) % n, x % d);
        let (r, s, j) = (y / (n * d), (y / d) % n, y % d);
        let mut v = vector::zeros(field, total);
        if h == r {
            for (k, c) in a.constants().product_terms(i, j) {
                v[(g * n + s) * d + k] = c.clone();
            }
        }
        v
    });
    let mut unit = vector::zeros(field, total);
    for g in 0..n {
        for (i, u) in a.unit().iter().enumerate() {
            unit[(g * n + g) * d + i] = u.clone();
        }
    }
    let labels = (0..total)
        .map(|x| {
            let (g, h, i) = (x / (n * d), (x / d) % n, x % d);
            format!("E[{},{}]{}", index_set.label(g), index_set.label(h), a.label(i))
        })
        .collect();
    let algebra = StructureAlgebra::new(constants, unit, Some(labels)).expect("M_n(A) is an algebra");
    MatrixAlgebra { algebra: Arc::new(algebra), base: a.clone(), n }
}
