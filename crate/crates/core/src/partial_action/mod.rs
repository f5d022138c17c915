//! Partial actions of finite groups on algebras, with ideals generated by
//! central idempotents.
//!
//! A partial action `{α_g : D_{g⁻¹} → D_g}` with `D_g = A·1_g` is stored
//! through the total endomorphisms `β_g(a) = α_g(a·1_{g⁻¹})`. The axioms are
//! re-expressed on the `β_g`:
//!
//! * `1_e = 1` and `β_e = id`;
//! * `β_g` kills `A(1 − 1_{g⁻¹})` and restricts to a multiplicative bijection
//!   `D_{g⁻¹} → D_g`;
//! * `β_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh}`;
//! * `β_g β_h = β_{gh}` on `D_{h⁻¹} ∩ D_{(gh)⁻¹}`.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{direct_product, AlgebraError, StructureAlgebra, StructureConstants};
use crate::exactla::{vector, Mat, Scalar, Subspace};
use crate::exec;
use crate::group::FiniteGroup;
use crate::report::Check;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartialActionError {
    #[error("inconsistent shapes: {0}")]
    Shape(String),
    #[error("1_g for g = {g} is not a central idempotent: {detail}")]
    NotCentralIdempotent { g: usize, detail: String },
    #[error("axiom (i) fails: {0}")]
    AxiomIFails(String),
    #[error("beta_g for g = {g} is not an algebra isomorphism D_(g^-1) -> D_g: {reason}")]
    NotIsoOnIdeal { g: usize, reason: String },
    #[error("axiom (ii) fails for (g, h) = ({g}, {h}): {detail}")]
    AxiomIIFails { g: usize, h: usize, detail: String },
    #[error("axiom (iii) fails for (g, h) = ({g}, {h}) on basis vector {basis} of D_(h^-1) ∩ D_((gh)^-1)")]
    AxiomIIIFails { g: usize, h: usize, basis: usize },
    #[error("the source action is not global")]
    NotGlobal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl PartialActionError {
    /// Short name of the violated condition.
    pub fn axiom(&self) -> &'static str {
        match self {
            PartialActionError::Shape(_) => "shape",
            PartialActionError::NotCentralIdempotent { .. } => "central_idempotent",
            PartialActionError::AxiomIFails(_) => "axiom_i",
            PartialActionError::NotIsoOnIdeal { .. } => "isomorphism_of_ideals",
            PartialActionError::AxiomIIFails { .. } => "axiom_ii",
            PartialActionError::AxiomIIIFails { .. } => "axiom_iii",
            PartialActionError::NotGlobal => "global_source",
            PartialActionError::Algebra(e) => e.axiom(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PartialAction {
    group: Arc<FiniteGroup>,
    algebra: Arc<StructureAlgebra>,
    idempotents: Vec<Vec<Scalar>>,
    beta: Vec<Mat>,
    ideals: Vec<Subspace>,
}

impl PartialAction {
    /// Validates the data exhaustively over `G × G` and basis vectors.
    pub fn new(
        group: Arc<FiniteGroup>,
        algebra: Arc<StructureAlgebra>,
        idempotents: Vec<Vec<Scalar>>,
        beta: Vec<Mat>,
    ) -> Result<Self, PartialActionError> {
        let n = group.order();
        let d = algebra.dim();
        let field = algebra.field();
        if idempotents.len() != n || beta.len() != n {
            return Err(PartialActionError::Shape(format!(
                "{} idempotents and {} maps for a group of order {n}",
                idempotents.len(),
                beta.len()
            )));
        }
        if let Some(g) = idempotents.iter().position(|e| e.len() != d || e.iter().any(|x| x.field() != field)) {
            return Err(PartialActionError::Shape(format!("idempotent {g} does not live in the algebra")));
        }
        if let Some(g) = beta.iter().position(|m| m.rows() != d || m.cols() != d || m.field() != field) {
            return Err(PartialActionError::Shape(format!("map {g} is not a {d}x{d} matrix over {field}")));
        }

        let ideals = idempotents
            .iter()
            .enumerate()
            .map(|(g, e)| {
                algebra
                    .ideal_basis(e)
                    .map_err(|err| PartialActionError::NotCentralIdempotent { g, detail: err.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;

        let e = group.identity();
        if idempotents[e] != algebra.unit() {
            return Err(PartialActionError::AxiomIFails("1_e is not the unit".to_string()));
        }
        if beta[e] != Mat::identity(field, d) {
            return Err(PartialActionError::AxiomIFails("beta_e is not the identity".to_string()));
        }

        let pa = PartialAction { group, algebra, idempotents, beta, ideals };
        pa.check_isomorphisms()?;
        pa.check_axiom_ii()?;
        pa.check_axiom_iii()?;
        Ok(pa)
    }

    fn check_isomorphisms(&self) -> Result<(), PartialActionError> {
        let a = &self.algebra;
        let d = a.dim();
        let found = exec::first_some(self.group.order(), |g| {
            let gi = self.group.inv(g);
            let complement = vector::sub(a.unit(), &self.idempotents[gi]);
            for i in 0..d {
                let x = a.mul(&a.basis_vector(i), &complement);
                if !vector::is_zero(&self.beta[g].apply(&x)) {
                    return Some((g, format!("does not vanish on {}·(1 - 1_(g^-1))", a.label(i))));
                }
            }
            let source = &self.ideals[gi];
            let image = source.image_under(&self.beta[g]);
            if image.dim() != source.dim() {
                return Some((g, format!("not injective on D_(g^-1) (rank {} < {})", image.dim(), source.dim())));
            }
            if image != self.ideals[g] {
                return Some((g, format!("image has dimension {} but D_g has dimension {}", image.dim(), self.ideals[g].dim())));
            }
            let basis = source.basis();
            for x in basis {
                for y in basis {
                    let lhs = self.beta[g].apply(&a.mul(x, y));
                    let rhs = a.mul(&self.beta[g].apply(x), &self.beta[g].apply(y));
                    if lhs != rhs {
                        return Some((g, format!("not multiplicative on {} and {}", a.show(x), a.show(y))));
                    }
                }
            }
            None
        });
        match found {
            Some((g, reason)) => Err(PartialActionError::NotIsoOnIdeal { g, reason }),
            None => Ok(()),
        }
    }

    fn check_axiom_ii(&self) -> Result<(), PartialActionError> {
        let n = self.group.order();
        let found = exec::first_some(n * n, |gh| {
            let (g, h) = (gh / n, gh % n);
            let gi = self.group.inv(g);
            let source = self.ideals[gi].intersect(&self.ideals[h]).expect("same ambient");
            let target = self.ideals[g].intersect(&self.ideals[self.group.mul(g, h)]).expect("same ambient");
            let image = source.image_under(&self.beta[g]);
            (image != target).then(|| {
                (g, h, format!("image has dimension {}, D_g ∩ D_gh has dimension {}", image.dim(), target.dim()))
            })
        });
        match found {
            Some((g, h, detail)) => Err(PartialActionError::AxiomIIFails { g, h, detail }),
            None => Ok(()),
        }
    }

    fn check_axiom_iii(&self) -> Result<(), PartialActionError> {
        let n = self.group.order();
        let found = exec::first_some(n * n, |gh| {
            let (g, h) = (gh / n, gh % n);
            let prod = self.group.mul(g, h);
            let domain = self.ideals[self.group.inv(h)]
                .intersect(&self.ideals[self.group.inv(prod)])
                .expect("same ambient");
            domain.basis().iter().position(|x| {
                self.beta[g].apply(&self.beta[h].apply(x)) != self.beta[prod].apply(x)
            })
            .map(|basis| (g, h, basis))
        });
        match found {
            Some((g, h, basis)) => Err(PartialActionError::AxiomIIIFails { g, h, basis }),
            None => Ok(()),
        }
    }

    /// A global action by algebra automorphisms (`1_g = 1` for all `g`).
    pub fn global(
        group: Arc<FiniteGroup>,
        algebra: Arc<StructureAlgebra>,
        automorphisms: Vec<Mat>,
    ) -> Result<Self, PartialActionError> {
        let ones = vec![algebra.unit().to_vec(); group.order()];
        Self::new(group, algebra, ones, automorphisms)
    }

    /// `Z_n` acting on `k^n` by cyclically shifting coordinates: `g^i` sends
    /// `e_j` to `e_{j+i}`.
    pub fn cyclic_shift(field: crate::exactla::Field, n: usize) -> Self {
        let group = Arc::new(FiniteGroup::cyclic(n));
        let algebra = Arc::new(crate::algebra::product_of_fields(field, n));
        let maps = (0..n)
            .map(|i| {
                let mut m = Mat::zeros(field, n, n);
                for j in 0..n {
                    m.set((j + i) % n, j, field.one());
                }
                m
            })
            .collect();
        Self::global(group, algebra, maps).expect("coordinate shifts form a global action")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }
    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }
    /// `1_g`.
    pub fn idempotent(&self, g: usize) -> &[Scalar] {
        &self.idempotents[g]
    }
    /// `β_g` as a matrix.
    pub fn beta(&self, g: usize) -> &Mat {
        &self.beta[g]
    }
    /// `D_g = A·1_g` in canonical form.
    pub fn ideal(&self, g: usize) -> &Subspace {
        &self.ideals[g]
    }

    pub fn is_global(&self) -> bool {
        self.idempotents.iter().all(|e| e == self.algebra.unit())
    }

    /// `g·a = β_g(a) = α_g(a·1_{g⁻¹})`.
    pub fn dot(&self, g: usize, a: &[Scalar]) -> Vec<Scalar> {
        self.beta[g].apply(a)
    }

    /// Restriction of a global action on `B` to the unital ideal `A = Be`:
    /// `1_g = e·σ_g(e)`, `β_g = (e·) ∘ σ_g`.
    pub fn restrict_global(global: &PartialAction, e: &[Scalar]) -> Result<Self, PartialActionError> {
        if !global.is_global() {
            return Err(PartialActionError::NotGlobal);
        }
        let b = &global.algebra;
        let field = b.field();
        let ideal = b.ideal_basis(e)?;
        let basis = ideal.basis().to_vec();
        let coords = |v: &[Scalar]| ideal.coordinates(v).expect("element lies in Be");
        let dim = basis.len();
        let constants = StructureConstants::from_fn(field, dim, |i, j| coords(&b.mul(&basis[i], &basis[j])));
        let labels = basis.iter().map(|v| b.show(v)).collect();
        let sub = Arc::new(StructureAlgebra::new(constants, coords(e), Some(labels))?);
        let n = global.group.order();
        let idempotents = (0..n).map(|g| coords(&b.mul(e, &global.dot(g, e)))).collect();
        let maps = (0..n)
            .map(|g| {
                let cols: Vec<Vec<Scalar>> = basis.iter().map(|v| coords(&b.mul(e, &global.dot(g, v)))).collect();
                Mat::from_columns(field, dim, &cols)
            })
            .collect();
        Self::new(global.group.clone(), sub, idempotents, maps)
    }

    /// On `A = R × S`: `D_g = R × 0` and `α_g = id` for `g ≠ e`.
    pub fn trivial_from_split(
        r: &Arc<StructureAlgebra>,
        s: &Arc<StructureAlgebra>,
        group: Arc<FiniteGroup>,
    ) -> Result<Self, PartialActionError> {
        let prod = direct_product(r, s)?;
        let a = prod.algebra.clone();
        let field = a.field();
        let d = a.dim();
        let left_one = prod.left_unit();
        let mut projection = Mat::zeros(field, d, d);
        for i in 0..r.dim() {
            projection.set(i, i, field.one());
        }
        let (idempotents, maps) = group
            .elements()
            .map(|g| {
                if g == group.identity() {
                    (a.unit().to_vec(), Mat::identity(field, d))
                } else {
                    (left_one.clone(), projection.clone())
                }
            })
            .unzip();
        Self::new(group, a, idempotents, maps)
    }

    /// Exhaustive check of the homomorphism, composition and module-type
    /// identities of the dot action, plus its unit image and kernel.
    pub fn verify_lemma1(&self) -> Vec<Check> {
        let a = &self.algebra;
        let grp = &self.group;
        let n = grp.order();
        let d = a.dim();
        let basis: Vec<Vec<Scalar>> = (0..d).map(|i| a.basis_vector(i)).collect();
        let label = |g: usize| grp.label(g).to_string();

        let endo = exec::first_some(n * d * d, |x| {
            let [g, i, j] = exec::unflatten(x, [n, d, d]);
            let lhs = self.dot(g, &a.mul(&basis[i], &basis[j]));
            let rhs = a.mul(&self.dot(g, &basis[i]), &self.dot(g, &basis[j]));
            (lhs != rhs).then(|| format!("g={}, a={}, b={}", label(g), a.label(i), a.label(j)))
        });

        let composition = exec::first_some(n * n * d, |x| {
            let [g, h, i] = exec::unflatten(x, [n, n, d]);
            let lhs = self.dot(g, &self.dot(h, &basis[i]));
            let rhs = a.mul(&self.dot(grp.mul(g, h), &basis[i]), &self.idempotents[g]);
            (lhs != rhs).then(|| format!("g={}, h={}, a={}", label(g), label(h), a.label(i)))
        });

        let twisted = exec::first_some(n * d * d, |x| {
            let [g, i, j] = exec::unflatten(x, [n, d, d]);
            let lhs = a.mul(&self.dot(g, &basis[i]), &basis[j]);
            let inner = a.mul(&basis[i], &self.dot(grp.inv(g), &basis[j]));
            let rhs = self.dot(g, &inner);
            (lhs != rhs).then(|| format!("g={}, a={}, b={}", label(g), a.label(i), a.label(j)))
        });

        let unit_image = (0..n)
            .find(|&g| self.dot(g, a.unit()) != self.idempotents[g])
            .map(|g| format!("g={}", label(g)));

        let inverse = exec::first_some(n * d, |x| {
            let [g, i] = exec::unflatten(x, [n, d]);
            let lhs = self.dot(g, &self.dot(grp.inv(g), &basis[i]));
            let rhs = a.mul(&basis[i], &self.idempotents[g]);
            (lhs != rhs).then(|| format!("g={}, a={}", label(g), a.label(i)))
        });

        // {a : g·a = 0} against A(1 − 1_{g⁻¹}); the variant with 1_g is recorded
        let complement_ideal = |g: usize| {
            let c = vector::sub(a.unit(), &self.idempotents[g]);
            a.constants().right_mul_matrix(&c).image_basis()
        };
        let mut kernel_witness = None;
        let mut literal_holds = true;
        for g in 0..n {
            let ker = self.beta[g].kernel_basis();
            if ker != complement_ideal(grp.inv(g)) && kernel_witness.is_none() {
                kernel_witness = Some(format!("g={}: ker has dimension {}", label(g), ker.dim()));
            }
            if ker != complement_ideal(g) {
                literal_holds = false;
            }
        }

        vec![
            Check::from_witness("lemma1.endomorphism", endo),
            Check::from_witness("lemma1.composition", composition),
            Check::from_witness("lemma1.twisted_product", twisted),
            Check::from_witness("lemma1.unit_image", unit_image),
            Check::from_witness("lemma1.inverse_composition", inverse),
            Check::from_witness("lemma1.kernel", kernel_witness)
                .with("kernel_equals_A(1-1_g)", literal_holds as i64),
        ]
    }
}

/// Free-function form of [`PartialAction::new`].
pub fn make_partial_action(
    group: Arc<FiniteGroup>,
    algebra: Arc<StructureAlgebra>,
    idempotents: Vec<Vec<Scalar>>,
    beta: Vec<Mat>,
) -> Result<PartialAction, PartialActionError> {
    PartialAction::new(group, algebra, idempotents, beta)
}
