//! The smash product `B = (A ⋆ G) # k[G]^*`.
//!
//! `k[G]^*` acts on the skew ring by `p_h ▷ a⟦g⟧ = δ_{g,h} a⟦g⟧`. The product
//! of `B` is assembled from the generic smash rule
//! `(x # f)(y # f') = Σ x(f₁ ▷ y) # f₂ f'` with `Δ(p_g) = Σ_{uv=g} p_u ⊗ p_v`,
//! and then compared with the closed form
//! `(a⟦g⟧#p_h)(b⟦k⟧#p_l) = a(g·b)⟦gk⟧ # δ_{h,kl} p_l`.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{dual_group_algebra, AlgebraError, AlgebraMap, StructureAlgebra, StructureConstants};
use crate::exactla::{vector, Mat, Scalar};
use crate::exec;
use crate::report::{Check, Report};
use crate::skew::SkewGroupRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmashError {
    #[error("the dual group algebra does not act as a module algebra: {0}")]
    NotModuleAlgebra(String),
    #[error("generic and closed-form smash products differ on {0}")]
    ClosedFormMismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone)]
pub struct SmashAlgebra {
    skew: Arc<SkewGroupRing>,
    algebra: Arc<StructureAlgebra>,
    dual: Arc<StructureAlgebra>,
    embedding: AlgebraMap,
}

impl SmashAlgebra {
    pub fn skew(&self) -> &Arc<SkewGroupRing> {
        &self.skew
    }
    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }
    /// `k[G]^*` with basis `p_g`.
    pub fn dual(&self) -> &Arc<StructureAlgebra> {
        &self.dual
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    fn order(&self) -> usize {
        self.skew.action().group().order()
    }

    /// Flat index of `b_s # p_h`, where `b_s` is a skew basis vector.
    pub fn index(&self, s: usize, h: usize) -> usize {
        s * self.order() + h
    }

    /// `(g, i, h)` for the basis vector `a_i⟦g⟧ # p_h`.
    pub fn tag(&self, idx: usize) -> (usize, usize, usize) {
        let n = self.order();
        let (g, i) = self.skew.tag(idx / n);
        (g, i, idx % n)
    }

    /// `x # p_h` for a skew element `x`.
    pub fn pure(&self, x: &[Scalar], h: usize) -> Vec<Scalar> {
        let mut out = self.algebra.zero();
        for (s, c) in x.iter().enumerate() {
            out[self.index(s, h)] = c.clone();
        }
        out
    }

    /// `a⟦g⟧ # p_h`, or `None` when `a ∉ D_g`.
    pub fn element(&self, g: usize, a: &[Scalar], h: usize) -> Option<Vec<Scalar>> {
        Some(self.pure(&self.skew.embed(g, a)?, h))
    }

    /// The `p_h` slice of `x`, as a skew element.
    pub fn slice(&self, x: &[Scalar], h: usize) -> Vec<Scalar> {
        (0..self.skew.dim()).map(|s| x[self.index(s, h)].clone()).collect()
    }

    /// `a⟦g⟧ ↦ Σ_h a⟦g⟧ # p_h`.
    pub fn embedding(&self) -> &AlgebraMap {
        &self.embedding
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }
}

/// `p_u ▷ -` on the skew ring: projection onto the `u` component.
fn triangle(skew: &SkewGroupRing, u: usize) -> Mat {
    let field = skew.algebra().field();
    let d = skew.dim();
    let mut m = Mat::zeros(field, d, d);
    for s in 0..d {
        if skew.tag(s).0 == u {
            m.set(s, s, field.one());
        }
    }
    m
}

/// Checks `p ▷ (xy) = Σ (p₁ ▷ x)(p₂ ▷ y)`, `p ▷ 1 = ε(p) 1` and `1 ▷ x = x`.
fn module_algebra_witness(skew: &SkewGroupRing, act: &[Mat]) -> Option<String> {
    let grp = skew.action().group();
    let n = grp.order();
    let d = skew.dim();
    let field = skew.algebra().field();
    let basis: Vec<Vec<Scalar>> = (0..d).map(|s| skew.algebra().basis_vector(s)).collect();
    let hit = exec::first_some(n * d * d, |idx| {
        let [g, s, t] = exec::unflatten(idx, [n, d, d]);
        let lhs = act[g].apply(&skew.mul(&basis[s], &basis[t]));
        let mut rhs = vector::zeros(field, d);
        for u in grp.elements() {
            let v = grp.mul(grp.inv(u), g);
            let term = skew.mul(&act[u].apply(&basis[s]), &act[v].apply(&basis[t]));
            rhs = vector::add(&rhs, &term);
        }
        (lhs != rhs).then(|| format!("p_{} on {} times {}", grp.label(g), skew.algebra().label(s), skew.algebra().label(t)))
    });
    if hit.is_some() {
        return hit;
    }
    let one = skew.algebra().unit();
    for g in grp.elements() {
        let expect = if g == grp.identity() { one.to_vec() } else { vector::zeros(field, d) };
        if act[g].apply(one) != expect {
            return Some(format!("p_{} on the unit", grp.label(g)));
        }
    }
    let mut total = Mat::zeros(field, d, d);
    for m in act {
        for s in 0..d {
            for t in 0..d {
                total.set(s, t, total.get(s, t) + m.get(s, t));
            }
        }
    }
    (total != Mat::identity(field, d)).then(|| "the unit of the dual does not act as the identity".to_string())
}

pub fn build_smash(skew: Arc<SkewGroupRing>) -> Result<SmashAlgebra, SmashError> {
    let pa = skew.action().clone();
    let grp = pa.group().clone();
    let n = grp.order();
    let ds = skew.dim();
    let field = skew.algebra().field();
    let dual = Arc::new(dual_group_algebra(field, &grp));

    let act: Vec<Mat> = grp.elements().map(|u| triangle(&skew, u)).collect();
    if let Some(w) = module_algebra_witness(&skew, &act) {
        return Err(SmashError::NotModuleAlgebra(w));
    }

    let dim = ds * n;
    let basis: Vec<Vec<Scalar>> = (0..ds).map(|s| skew.algebra().basis_vector(s)).collect();
    // generic rule: (b_s # p_h)(b_t # p_l) = Σ_{uv=h} b_s (p_u ▷ b_t) # p_v p_l
    let constants = StructureConstants::from_fn(field, dim, |x, y| {
        let ((s, h), (t, l)) = ((x / n, x % n), (y / n, y % n));
        let mut out = vector::zeros(field, dim);
        for u in grp.elements() {
            let v = grp.mul(grp.inv(u), h);
            let left = skew.mul(&basis[s], &act[u].apply(&basis[t]));
            if vector::is_zero(&left) {
                continue;
            }
            let right = dual.mul(&dual.basis_vector(v), &dual.basis_vector(l));
            for (r, a) in left.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (m, b) in right.iter().enumerate() {
                    out[r * n + m].add_mul(a, b);
                }
            }
        }
        out
    });

    let mut unit = vector::zeros(field, dim);
    for (s, c) in skew.algebra().unit().iter().enumerate() {
        for h in 0..n {
            unit[s * n + h] = c.clone();
        }
    }
    let labels = (0..dim)
        .map(|x| format!("{}#p_{}", skew.algebra().label(x / n), grp.label(x % n)))
        .collect();
    let algebra = Arc::new(StructureAlgebra::new(constants, unit, Some(labels))?);

    let cols: Vec<Vec<Scalar>> = (0..ds)
        .map(|s| {
            let mut c = vector::zeros(field, dim);
            for h in 0..n {
                c[s * n + h] = field.one();
            }
            c
        })
        .collect();
    let embedding = AlgebraMap::new(skew.algebra().clone(), algebra.clone(), Mat::from_columns(field, dim, &cols))?;

    let smash = SmashAlgebra { skew, algebra, dual, embedding };
    if let Some(w) = closed_form_witness(&smash) {
        return Err(SmashError::ClosedFormMismatch(w));
    }
    Ok(smash)
}

/// Evaluates `(a⟦g⟧#p_h)(b⟦k⟧#p_l) = a(g·b)⟦gk⟧ # δ_{h,kl} p_l` directly.
pub fn closed_form_product(smash: &SmashAlgebra, x: usize, y: usize) -> Vec<Scalar> {
    let skew = &smash.skew;
    let pa = skew.action();
    let grp = pa.group();
    let (g, i, h) = smash.tag(x);
    let (k, j, l) = smash.tag(y);
    if h != grp.mul(k, l) {
        return smash.algebra.zero();
    }
    let a = &skew.block(g)[i];
    let b = &skew.block(k)[j];
    let p = pa.algebra().mul(a, &pa.dot(g, b));
    smash.element(grp.mul(g, k), &p, l).expect("product lands in D_gk")
}

fn closed_form_witness(smash: &SmashAlgebra) -> Option<String> {
    let d = smash.dim();
    exec::first_some(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        (smash.algebra.constants().basis_product(x, y) != closed_form_product(smash, x, y))
            .then(|| format!("{} times {}", smash.algebra.label(x), smash.algebra.label(y)))
    })
}

pub fn smash_mul(smash: &SmashAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    smash.mul(x, y)
}

pub fn embed_skew(smash: &SmashAlgebra) -> &AlgebraMap {
    smash.embedding()
}

/// Re-verifies the smash structure after construction: closed form,
/// dimension, unit, and the skew embedding.
pub fn smash_check(smash: &SmashAlgebra) -> Report {
    let mut report = Report::new("smash");
    let n = smash.order();
    report.push(
        Check::from_witness("smash.closed_form", closed_form_witness(smash))
            .with("dim", smash.dim())
            .require(smash.dim() == smash.skew.dim() * n, || "dim B is not dim(skew)·|G|".to_string()),
    );
    let emb = smash.embedding();
    let mult = emb.multiplicativity_witness().map(|(i, j)| {
        format!("{} times {}", smash.skew.algebra().label(i), smash.skew.algebra().label(j))
    });
    report.push(
        Check::from_witness("smash.embedding", mult)
            .require(emb.is_unital(), || "embedding is not unital".to_string())
            .require(emb.is_injective(), || "embedding is not injective".to_string()),
    );
    report
}
