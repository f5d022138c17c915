use std::sync::Arc;

use super::*;
use crate::algebra::{base_field, product_of_fields};
use crate::partial_action::PartialAction;
use crate::report::Report;
use crate::skew::build_skew;

fn q() -> Field {
    Field::Rational
}
fn v(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| q().from_i64(x)).collect()
}

fn z2() -> HopfData {
    group_hopf(q(), &FiniteGroup::cyclic(2))
}

fn s1() -> PartialAction {
    let g = Arc::new(FiniteGroup::cyclic(2));
    let a = Arc::new(product_of_fields(q(), 2));
    let proj = Mat::from_rows(q(), 2, vec![v(&[1, 0]), v(&[0, 0])]);
    PartialAction::new(g, a, vec![v(&[1, 1]), v(&[1, 0])], vec![Mat::identity(q(), 2), proj]).unwrap()
}

fn all_pass(r: &Report) {
    for c in &r.checks {
        assert!(c.passed(), "{} failed: {:?}", c.name, c.witnesses);
    }
}

#[test]
fn group_algebra_and_dual() {
    let h = z2();
    let d = dual_hopf(&h).unwrap();
    // p_e, p_x orthogonal idempotents summing to the unit
    assert_eq!(d.mul(&v(&[1, 0]), &v(&[1, 0])), v(&[1, 0]));
    assert_eq!(d.mul(&v(&[1, 0]), &v(&[0, 1])), v(&[0, 0]));
    assert_eq!(d.unit(), v(&[1, 1]).as_slice());
    let dd = dual_hopf(&d).unwrap();
    assert_eq!(dd.algebra().constants(), h.algebra().constants());
    assert_eq!(dd.comult(), h.comult());
    assert_eq!(dd.antipode(), h.antipode());
    let d3 = dual_hopf(&group_hopf(q(), &FiniteGroup::cyclic(3))).unwrap();
    for i in 0..3 {
        assert!(d3.algebra().is_central_idempotent(&d3.algebra().basis_vector(i)));
    }
}

#[test]
fn perturbed_antipode_is_rejected() {
    let h = z2();
    let bad = Mat::from_rows(q(), 2, vec![v(&[1, 0]), v(&[0, 2])]);
    let err = make_hopf(h.algebra().clone(), h.comult().clone(), h.counit().to_vec(), bad).unwrap_err();
    assert_eq!(err, HopfError::AntipodeFails(1));
    let singular = Mat::from_rows(q(), 2, vec![v(&[1, 1]), v(&[0, 0])]);
    let err = make_hopf(h.algebra().clone(), h.comult().clone(), h.counit().to_vec(), singular).unwrap_err();
    assert_eq!(err, HopfError::AntipodeNotInvertible);
}

#[test]
fn sweedler_is_hopf_and_self_dual_in_dimension() {
    let h = sweedler(q());
    assert!(!h.algebra().is_commutative());
    assert!(!h.is_grouplike_basis());
    let d = dual_hopf(&h).unwrap();
    assert_eq!(d.dim(), 4);
    let r = reps(Arc::new(h)).unwrap();
    all_pass(&r.check());
}

#[test]
fn harpoons_on_z2() {
    let h = z2();
    let x = v(&[0, 1]);
    assert_eq!(harpoon(&h, Side::Left, h.counit(), &x), x);
    assert_eq!(harpoon(&h, Side::Left, &v(&[0, 1]), &x), x);
    assert_eq!(harpoon(&h, Side::Right, &v(&[1, 0]), &x), v(&[0, 0]));
}

#[test]
fn reps_on_z2() {
    let r = reps(Arc::new(z2())).unwrap();
    let x = v(&[0, 1]);
    // λ(x # ε) is the swap on {e, x}
    assert_eq!(r.lambda_of(&x, r.dual().unit()), v(&[0, 1, 1, 0]));
    assert_eq!(r.lambda_of(&v(&[1, 0]), r.dual().unit()), r.end_h().unit());
    all_pass(&r.check());
}

#[test]
fn heisenberg_commutation_on_z2() {
    // h = x, f = p_e, g = p_x; Δ(p_x) = p_e ⊗ p_x + p_x ⊗ p_e, S(p_u) = p_{u^-1}
    let r = reps(Arc::new(z2())).unwrap();
    let end = r.end_h();
    let (x, pe, px) = (v(&[0, 1]), v(&[1, 0]), v(&[0, 1]));
    let lhs = end.mul(&r.lambda_of(&x, &pe), &r.rho_of(&px));
    let h = r.hopf();
    let t1 = end.mul(&r.rho_of(&px), &r.lambda_of(&harpoon(h, Side::Right, &pe, &x), &pe));
    let t2 = end.mul(&r.rho_of(&pe), &r.lambda_of(&harpoon(h, Side::Right, &px, &x), &pe));
    assert_eq!(lhs, crate::exactla::vector::add(&t1, &t2));
    // k ↦ x (p_e ⇀ (k ↼ p_x)) sends x to x·x·[x = e] = 0 and e to 0
    assert!(crate::exactla::vector::is_zero(&lhs));
}

#[test]
fn s1_lift() {
    let pa = s1();
    let pha = lift_group_partial_action(&pa).unwrap();
    assert!(!pha.is_global());
    for g in 0..2 {
        for i in 0..2 {
            let a = pa.algebra().basis_vector(i);
            assert_eq!(pha.act_basis(g, &a), pa.dot(g, &a));
        }
    }
    let r = reps(pha.hopf().clone()).unwrap();
    let co = partial_coaction_check(&pha, &r);
    all_pass(&co);
    assert_eq!(co.check("coaction.weak_coassociative").unwrap().get("strict_coassociative"), Some(0));

    let pp = phi_psi_maps(&pha, &r);
    all_pass(&phi_psi_check(&pha, &r, &pp));
    let e = pp.phi(pha.algebra().unit());
    assert_eq!(pp.target().mul(&e, &e), e);
    assert_eq!(pp.target().dim(), 8);

    let ps = partial_smash(&pha);
    assert_eq!(ps.ambient().dim(), 4);
    assert_eq!(ps.sub().dim(), 3);
    all_pass(&partial_smash_check(&pha, &r, &ps));
    let skew = build_skew(Arc::new(pa)).unwrap();
    assert!(grouplike_iso_check(&pha, &ps, &skew).passed());

    let big = big_phi_check(&pha, &r, &pp, &ps);
    all_pass(&big);
    assert_eq!(big.check("hopf.big_phi.corner").unwrap().get("checked"), Some(6));
}

#[test]
fn axiom2_violation() {
    let pa = s1();
    let hopf = Arc::new(z2());
    let err = make_partial_hopf_action(hopf, pa.algebra().clone(), vec![pa.beta(1).clone(), pa.beta(1).clone()])
        .unwrap_err();
    assert!(matches!(err, PartialHopfError::Axiom2Fails { .. }), "{err}");
}

#[test]
fn global_actions() {
    let pa = PartialAction::cyclic_shift(q(), 2);
    let pha = lift_group_partial_action(&pa).unwrap();
    assert!(pha.is_global());
    let r = reps(pha.hopf().clone()).unwrap();
    let co = partial_coaction_check(&pha, &r);
    all_pass(&co);
    assert_eq!(co.check("coaction.weak_coassociative").unwrap().get("strict_coassociative"), Some(1));
    let ps = partial_smash(&pha);
    assert!(ps.sub().is_full());
    all_pass(&partial_smash_check(&pha, &r, &ps));
}

#[test]
fn trivial_hopf_algebra() {
    let k = Arc::new(base_field(q()));
    let hopf = Arc::new(group_hopf(q(), &FiniteGroup::cyclic(1)));
    let m = Arc::new(crate::algebra::matrix_units(q(), 2));
    let pha = make_partial_hopf_action(hopf, m.clone(), vec![Mat::identity(q(), 4)]).unwrap();
    let r = reps(pha.hopf().clone()).unwrap();
    let pp = phi_psi_maps(&pha, &r);
    for i in 0..4 {
        assert_eq!(pp.phi(&m.basis_vector(i)), m.basis_vector(i));
    }
    let _ = k;
}

#[test]
fn sweedler_acting_through_the_counit() {
    let h = Arc::new(sweedler(q()));
    let k = Arc::new(base_field(q()));
    let action = h.counit().iter().map(|c| Mat::from_rows(q(), 1, vec![vec![c.clone()]])).collect();
    let pha = make_partial_hopf_action(h.clone(), k, action).unwrap();
    assert!(pha.is_global());
    let r = reps(h).unwrap();
    all_pass(&partial_coaction_check(&pha, &r));
    let pp = phi_psi_maps(&pha, &r);
    all_pass(&phi_psi_check(&pha, &r, &pp));
    let ps = partial_smash(&pha);
    all_pass(&partial_smash_check(&pha, &r, &ps));
    all_pass(&big_phi_check(&pha, &r, &pp, &ps));
}

#[test]
fn z3_restriction_lift() {
    let pa = PartialAction::restrict_global(&PartialAction::cyclic_shift(q(), 3), &v(&[1, 1, 0])).unwrap();
    let pha = lift_group_partial_action(&pa).unwrap();
    let r = reps(pha.hopf().clone()).unwrap();
    all_pass(&partial_coaction_check(&pha, &r));
    let pp = phi_psi_maps(&pha, &r);
    all_pass(&phi_psi_check(&pha, &r, &pp));
    let ps = partial_smash(&pha);
    all_pass(&partial_smash_check(&pha, &r, &ps));
    let skew = build_skew(Arc::new(pa)).unwrap();
    assert!(grouplike_iso_check(&pha, &ps, &skew).passed());
    all_pass(&big_phi_check(&pha, &r, &pp, &ps));
}
