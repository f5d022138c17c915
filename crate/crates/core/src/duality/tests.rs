use std::sync::Arc;

use super::*;
use crate::algebra::{base_field, matrix_units, product_of_fields};
use crate::exactla::Field;
use crate::group::FiniteGroup;
use crate::partial_action::PartialAction;
use crate::skew::build_skew;
use crate::smash::build_smash;

fn q() -> Field {
    Field::Rational
}
fn v(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| q().from_i64(x)).collect()
}

fn duality(pa: PartialAction) -> DualityData {
    let skew = build_skew(Arc::new(pa)).unwrap();
    build_phi(Arc::new(build_smash(Arc::new(skew)).unwrap())).unwrap()
}

fn s1() -> PartialAction {
    let g = Arc::new(FiniteGroup::cyclic(2));
    let a = Arc::new(product_of_fields(q(), 2));
    let proj = Mat::from_rows(q(), 2, vec![v(&[1, 0]), v(&[0, 0])]);
    PartialAction::new(g, a, vec![v(&[1, 1]), v(&[1, 0])], vec![Mat::identity(q(), 2), proj]).unwrap()
}

fn all_pass(reports: &[Report]) {
    for r in reports {
        for c in &r.checks {
            assert!(c.passed(), "{} failed: {:?}", c.name, c.witnesses);
        }
    }
}

#[test]
fn s1_values() {
    let d = duality(s1());
    let t = d.target();
    // Φ((1,0)[g] # p_e) = (1,0) E_{g,e}
    assert_eq!(d.phi().apply(&d.smash().element(1, &v(&[1, 0]), 0).unwrap()), t.embed(1, 0, &v(&[1, 0])));
    let x = d.smash().element(0, &v(&[0, 1]), 1).unwrap();
    assert!(vector::is_zero(&d.phi().apply(&x)));
    assert_eq!(d.kernel().dim(), 1);
    assert!(d.kernel().contains(&x));
    assert_eq!(d.corner().dim(), 5);
    assert_eq!(d.ideal_i().dim(), 5);
    let mut e = t.embed(0, 0, &v(&[1, 1]));
    t.add_at(&mut e, 1, 1, &v(&[1, 0]));
    assert_eq!(d.bold_e(), e.as_slice());
    all_pass(&[phi_check(&d), kernel_check(&d), corner_check(&d), theorem_check(&d), injectivity_on_skew(&d)]);
}

#[test]
fn s1_separability_in_36_dimensions() {
    let d = duality(s1());
    let r = separability_check(&d);
    all_pass(std::slice::from_ref(&r));
    assert_eq!(r.check("separability.centralizing").unwrap().get("ambient_dim"), Some(36));
}

#[test]
fn s1_delta_conventions() {
    let r = theorem_check(&duality(s1()));
    let c = r.check("theorem.left_multiplication").unwrap();
    assert_eq!(c.get("consistent_delta_l_gh"), Some(1));
    assert_eq!(c.get("consistent_delta_h_kl"), Some(0));
}

#[test]
fn global_swap_is_cohen_montgomery() {
    let d = duality(PartialAction::cyclic_shift(q(), 2));
    assert!(d.kernel().is_zero());
    assert!(d.corner().is_full());
    assert_eq!(d.bold_e(), d.target().algebra.unit());
    all_pass(&[phi_check(&d), kernel_check(&d), corner_check(&d), theorem_check(&d), separability_check(&d)]);
}

#[test]
fn z3_restriction() {
    let pa = PartialAction::restrict_global(&PartialAction::cyclic_shift(q(), 3), &v(&[1, 1, 0])).unwrap();
    let d = duality(pa);
    all_pass(&[phi_check(&d), kernel_check(&d), corner_check(&d), theorem_check(&d), injectivity_on_skew(&d)]);
    assert_eq!(d.kernel().dim() + d.corner().dim(), d.smash().dim());
}

#[test]
fn trivial_group_phi_is_identity() {
    let m2 = Arc::new(matrix_units(q(), 2));
    let pa = PartialAction::global(Arc::new(FiniteGroup::cyclic(1)), m2, vec![Mat::identity(q(), 4)]).unwrap();
    let d = duality(pa);
    assert_eq!(*d.phi().matrix(), Mat::identity(q(), 4));
    all_pass(&[separability_check(&d), injectivity_on_skew(&d)]);
}

#[test]
fn trivial_split_is_matrices_times_copies() {
    // B ≅ M_n(R) × S^n for A = R × S
    let k = Arc::new(base_field(q()));
    let n = 3;
    let pa = PartialAction::trivial_from_split(&k, &k, Arc::new(FiniteGroup::cyclic(n))).unwrap();
    let d = duality(pa);
    assert_eq!(d.smash().dim(), (n + 1) * n);
    assert_eq!(d.smash().algebra().center_basis().dim(), n + 1);
    all_pass(&[phi_check(&d), kernel_check(&d), corner_check(&d), theorem_check(&d)]);
}

#[test]
fn prime_field() {
    let f = Field::prime(5).unwrap();
    let pa = PartialAction::restrict_global(&PartialAction::cyclic_shift(f, 3), &[f.one(), f.zero(), f.one()]).unwrap();
    let d = duality(pa);
    all_pass(&[phi_check(&d), kernel_check(&d), corner_check(&d), theorem_check(&d)]);
}
