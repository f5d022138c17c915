//! The partial skew group ring `A ⋆ G = ⊕_g D_g⟦g⟧` with
//! `(a⟦g⟧)(b⟦h⟧) = a(g·b)⟦gh⟧`.

use std::sync::Arc;

use crate::algebra::{AlgebraError, StructureAlgebra, StructureConstants};
use crate::exactla::{vector, Scalar, Subspace};
use crate::exec;
use crate::partial_action::PartialAction;
use crate::report::{Check, Report};

#[derive(Debug, Clone)]
pub struct SkewGroupRing {
    action: Arc<PartialAction>,
    algebra: Arc<StructureAlgebra>,
    /// Basis vectors of `D_g`, one block per group element.
    blocks: Vec<Vec<Vec<Scalar>>>,
    offsets: Vec<usize>,
}

impl SkewGroupRing {
    pub fn action(&self) -> &Arc<PartialAction> {
        &self.action
    }
    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Flat index of the basis vector `(g, i)`.
    pub fn index(&self, g: usize, i: usize) -> usize {
        self.offsets[g] + i
    }

    /// `(g, i)` for a flat index.
    pub fn tag(&self, idx: usize) -> (usize, usize) {
        let g = self.offsets.partition_point(|&o| o <= idx) - 1;
        (g, idx - self.offsets[g])
    }

    pub fn block(&self, g: usize) -> &[Vec<Scalar>] {
        &self.blocks[g]
    }

    /// `a⟦g⟧`, or `None` when `a ∉ D_g`.
    pub fn embed(&self, g: usize, a: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords = self.action.ideal(g).coordinates(a)?;
        let mut out = self.algebra.zero();
        out[self.offsets[g]..self.offsets[g] + coords.len()].clone_from_slice(&coords);
        Some(out)
    }

    /// The `D_g` coefficient of `x`, as an element of `A`.
    pub fn component(&self, x: &[Scalar], g: usize) -> Vec<Scalar> {
        let a = self.action.algebra();
        let mut out = a.zero();
        for (i, b) in self.blocks[g].iter().enumerate() {
            vector::axpy(&mut out, &x[self.offsets[g] + i], b);
        }
        out
    }

    /// The subspace `D_g⟦g⟧`.
    pub fn component_space(&self, g: usize) -> Subspace {
        let field = self.algebra.field();
        let d = self.dim();
        let vs = (0..self.blocks[g].len()).map(|i| vector::unit(field, d, self.offsets[g] + i)).collect();
        Subspace::span(field, d, vs)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }

    /// The graded rule evaluated directly on components, independent of the
    /// structure constants.
    pub fn mul_by_rule(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let pa = &self.action;
        let a = pa.algebra();
        let grp = pa.group();
        let mut out = self.algebra.zero();
        for g in grp.elements() {
            let xg = self.component(x, g);
            if vector::is_zero(&xg) {
                continue;
            }
            for h in grp.elements() {
                let yh = self.component(y, h);
                let p = a.mul(&xg, &pa.dot(g, &yh));
                let term = self.embed(grp.mul(g, h), &p).expect("product lands in D_gh");
                out = vector::add(&out, &term);
            }
        }
        out
    }
}

/// Materializes `A ⋆ G` as a validated structure-constant algebra.
pub fn build_skew(pa: Arc<PartialAction>) -> Result<SkewGroupRing, AlgebraError> {
    let a = pa.algebra().clone();
    let grp = pa.group().clone();
    let field = a.field();
    let blocks: Vec<Vec<Vec<Scalar>>> = grp.elements().map(|g| pa.ideal(g).basis().to_vec()).collect();
    let mut offsets = vec![0];
    for b in &blocks {
        offsets.push(offsets.last().unwrap() + b.len());
    }
    let dim = *offsets.last().unwrap();
    let tags: Vec<(usize, usize)> =
        blocks.iter().enumerate().flat_map(|(g, b)| (0..b.len()).map(move |i| (g, i))).collect();

    let constants = StructureConstants::from_fn(field, dim, |x, y| {
        let ((g, i), (h, j)) = (tags[x], tags[y]);
        let p = a.mul(&blocks[g][i], &pa.dot(g, &blocks[h][j]));
        let gh = grp.mul(g, h);
        let coords = pa.ideal(gh).coordinates(&p).expect("product lands in D_gh");
        let mut out = vector::zeros(field, dim);
        out[offsets[gh]..offsets[gh] + coords.len()].clone_from_slice(&coords);
        out
    });

    let e = grp.identity();
    let unit_coords = pa.ideal(e).coordinates(a.unit()).expect("1 spans D_e");
    let mut unit = vector::zeros(field, dim);
    unit[offsets[e]..offsets[e] + unit_coords.len()].clone_from_slice(&unit_coords);

    let labels = tags
        .iter()
        .map(|&(g, i)| format!("{}[{}]", a.show(&blocks[g][i]), grp.label(g)))
        .collect();
    let algebra = Arc::new(StructureAlgebra::new(constants, unit, Some(labels))?);
    Ok(SkewGroupRing { action: pa, algebra, blocks, offsets })
}

/// Same as [`SkewGroupRing::mul`]; kept as a free function for symmetry with
/// the other product operations.
pub fn skew_mul(s: &SkewGroupRing, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    s.mul(x, y)
}

/// `component_g · component_h ⊆ component_gh` for all pairs, directness of
/// the component sum, and the product rule on all basis pairs.
pub fn grading_check(s: &SkewGroupRing) -> Report {
    let grp = s.action.group();
    let n = grp.order();
    let comps: Vec<Subspace> = grp.elements().map(|g| s.component_space(g)).collect();
    let mut report = Report::new("skew grading");

    let inclusion = exec::first_some(n * n, |gh| {
        let (g, h) = (gh / n, gh % n);
        let prod = s.algebra.constants().product_space(&comps[g], &comps[h]);
        (!comps[grp.mul(g, h)].contains_subspace(&prod).unwrap())
            .then(|| format!("component {} times component {}", grp.label(g), grp.label(h)))
    });
    report.push(Check::from_witness("skew.grading.inclusion", inclusion).with("pairs", n * n));

    let mut total = Subspace::zero(s.algebra.field(), s.dim());
    let mut dims = 0;
    for c in &comps {
        total = total.sum(c).unwrap();
        dims += c.dim();
    }
    report.push(
        Check::pass("skew.grading.direct_sum")
            .require(total.is_full() && dims == s.dim(), || format!("components span {} of {}", total.dim(), s.dim()))
            .with("dim", s.dim()),
    );

    let d = s.dim();
    let rule = exec::first_some(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        let bx = s.algebra.basis_vector(x);
        let by = s.algebra.basis_vector(y);
        (s.mul(&bx, &by) != s.mul_by_rule(&bx, &by))
            .then(|| format!("{} times {}", s.algebra.label(x), s.algebra.label(y)))
    });
    report.push(Check::from_witness("skew.product_rule", rule));

    let embedding = s.action.algebra();
    let e = grp.identity();
    let wit = (0..embedding.dim()).flat_map(|i| (0..embedding.dim()).map(move |j| (i, j))).find(|&(i, j)| {
        let (x, y) = (embedding.basis_vector(i), embedding.basis_vector(j));
        let lhs = s.mul(&s.embed(e, &x).unwrap(), &s.embed(e, &y).unwrap());
        lhs != s.embed(e, &embedding.mul(&x, &y)).unwrap()
    });
    report.push(Check::from_witness(
        "skew.identity_component",
        wit.map(|(i, j)| format!("{} times {}", embedding.label(i), embedding.label(j))),
    ));
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrongGrading {
    pub strong: bool,
    pub global: bool,
    pub agree: bool,
}

pub fn strong_grading_test(s: &SkewGroupRing) -> StrongGrading {
    let grp = s.action.group();
    let n = grp.order();
    let comps: Vec<Subspace> = grp.elements().map(|g| s.component_space(g)).collect();
    let weak = exec::first_some(n * n, |gh| {
        let (g, h) = (gh / n, gh % n);
        let prod = s.algebra.constants().product_space(&comps[g], &comps[h]);
        (prod != comps[grp.mul(g, h)]).then_some(())
    });
    let strong = weak.is_none();
    let global = s.action.is_global();
    StrongGrading { strong, global, agree: strong == global }
}

impl StrongGrading {
    pub fn to_check(self) -> Check {
        Check::pass("skew.strong_iff_global")
            .require(self.agree, || format!("strong = {}, global = {}", self.strong, self.global))
            .with("strong", self.strong as i64)
            .with("global", self.global as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{base_field, matrix_units, product_of_fields};
    use crate::exactla::{Field, Mat};
    use crate::group::FiniteGroup;

    fn q() -> Field {
        Field::Rational
    }
    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    pub(crate) fn s1() -> Arc<PartialAction> {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let a = Arc::new(product_of_fields(q(), 2));
        let proj = Mat::from_rows(q(), 2, vec![v(&[1, 0]), v(&[0, 0])]);
        Arc::new(PartialAction::new(g, a, vec![v(&[1, 1]), v(&[1, 0])], vec![Mat::identity(q(), 2), proj]).unwrap())
    }

    #[test]
    fn s1_skew_ring() {
        let s = build_skew(s1()).unwrap();
        assert_eq!(s.dim(), 3);
        let x = s.embed(1, &v(&[1, 0])).unwrap();
        assert_eq!(s.mul(&x, &x), s.embed(0, &v(&[1, 0])).unwrap());
        let y = s.embed(0, &v(&[0, 1])).unwrap();
        assert!(vector::is_zero(&s.mul(&y, &x)));
        assert!(vector::is_zero(&s.mul(&x, &y)));
        assert!(s.embed(1, &v(&[0, 1])).is_none());
        assert_eq!(s.tag(2), (1, 0));
        let one = s.algebra().unit().to_vec();
        assert_eq!(skew_mul(&s, &one, &x), x);
        assert!(grading_check(&s).passed());
        assert_eq!(strong_grading_test(&s), StrongGrading { strong: false, global: false, agree: true });
    }

    #[test]
    fn global_swap_is_the_classical_skew_ring() {
        let s = build_skew(Arc::new(PartialAction::cyclic_shift(q(), 2))).unwrap();
        assert_eq!(s.dim(), 4);
        // (e1 [g]) (e1 [g]) = e1 (g·e1) [e] = e1 e2 [e] = 0
        let x = s.embed(1, &v(&[1, 0])).unwrap();
        assert!(vector::is_zero(&s.mul(&x, &x)));
        let y = s.embed(1, &v(&[0, 1])).unwrap();
        assert_eq!(s.mul(&x, &y), s.embed(0, &v(&[1, 0])).unwrap());
        assert!(grading_check(&s).passed());
        assert_eq!(strong_grading_test(&s), StrongGrading { strong: true, global: true, agree: true });
    }

    #[test]
    fn z3_restriction_is_not_strong() {
        let global = PartialAction::cyclic_shift(q(), 3);
        let pa = PartialAction::restrict_global(&global, &v(&[1, 1, 0])).unwrap();
        let s = build_skew(Arc::new(pa)).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(grading_check(&s).passed());
        assert_eq!(strong_grading_test(&s), StrongGrading { strong: false, global: false, agree: true });
    }

    #[test]
    fn trivial_group_gives_back_the_algebra() {
        let m2 = Arc::new(matrix_units(q(), 2));
        let g = Arc::new(FiniteGroup::cyclic(1));
        let pa = PartialAction::global(g, m2.clone(), vec![Mat::identity(q(), 4)]).unwrap();
        let s = build_skew(Arc::new(pa)).unwrap();
        assert_eq!(s.algebra().constants(), m2.constants());
        assert!(s.component_space(0).is_full());
        assert!(strong_grading_test(&s).strong);
    }

    #[test]
    fn trivial_split_is_not_strong() {
        let k = Arc::new(base_field(q()));
        let pa = PartialAction::trivial_from_split(&k, &k, Arc::new(FiniteGroup::cyclic(3))).unwrap();
        let s = build_skew(Arc::new(pa)).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(strong_grading_test(&s), StrongGrading { strong: false, global: false, agree: true });
    }
}
