//! Partial Hopf actions: `h·(ab) = Σ (h₁·a)(h₂·b)`, `1·a = a`,
//! `h·(g·a) = Σ (h₁·1)((h₂g)·a)`.

use std::sync::Arc;

use thiserror::Error;

use super::reps::Reps;
use super::{group_hopf, harpoon, HopfData, HopfError, Side};
use crate::algebra::{tensor_constants, AlgebraError, StructureAlgebra, StructureConstants};
use crate::exactla::{vector, Mat, Scalar, Subspace};
use crate::exec;
use crate::partial_action::PartialAction;
use crate::report::{Check, Report};
use crate::skew::SkewGroupRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartialHopfError {
    #[error("inconsistent shapes: {0}")]
    Shape(String),
    #[error("axiom (1) fails: h = {h}, a = {a}, b = {b}")]
    Axiom1Fails { h: String, a: String, b: String },
    #[error("axiom (2) fails: 1·{a} != {a}")]
    Axiom2Fails { a: String },
    #[error("axiom (3) fails: h = {h}, g = {g}, a = {a}")]
    Axiom3Fails { h: String, g: String, a: String },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl PartialHopfError {
    pub fn axiom(&self) -> &'static str {
        match self {
            PartialHopfError::Shape(_) => "shape",
            PartialHopfError::Axiom1Fails { .. } => "partial_hopf_axiom_1",
            PartialHopfError::Axiom2Fails { .. } => "partial_hopf_axiom_2",
            PartialHopfError::Axiom3Fails { .. } => "partial_hopf_axiom_3",
            PartialHopfError::Hopf(e) => e.axiom(),
            PartialHopfError::Algebra(e) => e.axiom(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PartialHopfAction {
    hopf: Arc<HopfData>,
    algebra: Arc<StructureAlgebra>,
    /// `a ↦ b_i · a`.
    action: Vec<Mat>,
}

impl PartialHopfAction {
    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }
    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }
    pub fn action_matrix(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    /// `b_i · a`.
    pub fn act_basis(&self, i: usize, a: &[Scalar]) -> Vec<Scalar> {
        self.action[i].apply(a)
    }

    /// `h · a`.
    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.algebra.zero();
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut out, c, &self.act_basis(i, a));
            }
        }
        out
    }

    /// `h · 1 = ε(h) 1` for all basis `h`.
    pub fn is_global(&self) -> bool {
        let one = self.algebra.unit();
        (0..self.hopf.dim()).all(|i| self.act_basis(i, one) == vector::scale(one, &self.hopf.counit()[i]))
    }
}

pub fn make_partial_hopf_action(
    hopf: Arc<HopfData>,
    algebra: Arc<StructureAlgebra>,
    action: Vec<Mat>,
) -> Result<PartialHopfAction, PartialHopfError> {
    let n = hopf.dim();
    let d = algebra.dim();
    let field = algebra.field();
    if hopf.field() != field {
        return Err(PartialHopfError::Shape(format!("H is over {}, A over {field}", hopf.field())));
    }
    if action.len() != n || action.iter().any(|m| m.rows() != d || m.cols() != d || m.field() != field) {
        return Err(PartialHopfError::Shape(format!("expected {n} matrices of size {d}x{d}")));
    }
    let pha = PartialHopfAction { hopf, algebra, action };
    let h = &pha.hopf;
    let a = &pha.algebra;
    let hl = |i: usize| h.algebra().label(i).to_string();
    let basis: Vec<Vec<Scalar>> = (0..d).map(|i| a.basis_vector(i)).collect();

    let ax1 = exec::first_some(n * d * d, |idx| {
        let [i, x, y] = exec::unflatten(idx, [n, d, d]);
        let lhs = pha.act_basis(i, &a.mul(&basis[x], &basis[y]));
        let mut rhs = a.zero();
        for (k, l, c) in h.coproduct_terms(i) {
            vector::axpy(&mut rhs, &c, &a.mul(&pha.act_basis(k, &basis[x]), &pha.act_basis(l, &basis[y])));
        }
        (lhs != rhs).then_some((i, x, y))
    });
    if let Some((i, x, y)) = ax1 {
        return Err(PartialHopfError::Axiom1Fails { h: hl(i), a: a.label(x).to_string(), b: a.label(y).to_string() });
    }

    if let Some(x) = (0..d).find(|&x| pha.act(h.unit(), &basis[x]) != basis[x]) {
        return Err(PartialHopfError::Axiom2Fails { a: a.label(x).to_string() });
    }

    let one = a.unit();
    let ax3 = exec::first_some(n * n * d, |idx| {
        let [i, j, x] = exec::unflatten(idx, [n, n, d]);
        let lhs = pha.act_basis(i, &pha.act_basis(j, &basis[x]));
        let mut rhs = a.zero();
        let bj = h.algebra().basis_vector(j);
        for (k, l, c) in h.coproduct_terms(i) {
            let moved = pha.act(&h.mul(&h.algebra().basis_vector(l), &bj), &basis[x]);
            vector::axpy(&mut rhs, &c, &a.mul(&pha.act_basis(k, one), &moved));
        }
        (lhs != rhs).then_some((i, j, x))
    });
    if let Some((i, j, x)) = ax3 {
        return Err(PartialHopfError::Axiom3Fails { h: hl(i), g: hl(j), a: a.label(x).to_string() });
    }
    Ok(pha)
}

/// `k[G]` acting by `g · a` from a partial group action.
pub fn lift_group_partial_action(pa: &PartialAction) -> Result<PartialHopfAction, PartialHopfError> {
    let hopf = Arc::new(group_hopf(pa.algebra().field(), pa.group()));
    let action = pa.group().elements().map(|g| pa.beta(g).clone()).collect();
    make_partial_hopf_action(hopf, pa.algebra().clone(), action)
}

/// `Δ_A(a) = Σ (b_i·a) ⊗ p_i`: multiplicative, counital, and coassociative
/// up to the factor `Δ_A(1)`.
pub fn partial_coaction_check(pha: &PartialHopfAction, reps: &Reps) -> Report {
    let a = &pha.algebra;
    let h = &pha.hopf;
    let dual = reps.dual();
    let n = h.dim();
    let d = a.dim();
    let field = a.field();
    let ah = tensor_constants(a.constants(), dual.algebra().constants());
    let ahh = tensor_constants(&ah, dual.algebra().constants());
    let p = |i: usize| vector::unit(field, n, i);
    let coact = |x: &[Scalar]| -> Vec<Scalar> {
        let mut out = vector::zeros(field, d * n);
        for i in 0..n {
            out = vector::add(&out, &vector::kron(&pha.act_basis(i, x), &p(i)));
        }
        out
    };
    let basis: Vec<Vec<Scalar>> = (0..d).map(|i| a.basis_vector(i)).collect();
    let mut report = Report::new("partial coaction");

    let mult = exec::first_some(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        (coact(&a.mul(&basis[x], &basis[y])) != ah.mul(&coact(&basis[x]), &coact(&basis[y])))
            .then(|| format!("{} times {}", a.label(x), a.label(y)))
    });
    report.push(Check::from_witness("coaction.multiplicative", mult));

    // (1 ⊗ ε_{H*}) with ε_{H*}(p_i) = p_i(1)
    let counit = (0..d).find(|&x| {
        let c = coact(&basis[x]);
        let mut out = a.zero();
        for y in 0..d {
            for i in 0..n {
                out[y].add_mul(&c[y * n + i], &h.unit()[i]);
            }
        }
        out != basis[x]
    });
    report.push(Check::from_witness("coaction.counit", counit.map(|x| a.label(x).to_string())));

    let delta_one = coact(a.unit());
    let left_factor = vector::kron(&delta_one, dual.unit());
    let mut strict = true;
    let weak = (0..d).find(|&x| {
        let c = coact(&basis[x]);
        let mut lhs = vector::zeros(field, d * n * n);
        let mut inner = vector::zeros(field, d * n * n);
        for i in 0..n {
            let coeff: Vec<Scalar> = (0..d).map(|y| c[y * n + i].clone()).collect();
            lhs = vector::add(&lhs, &vector::kron(&coact(&coeff), &p(i)));
            inner = vector::add(&inner, &vector::kron(&coeff, &dual.delta(&p(i))));
        }
        if lhs != inner {
            strict = false;
        }
        lhs != ahh.mul(&left_factor, &inner)
    });
    report.push(
        Check::from_witness("coaction.weak_coassociative", weak.map(|x| a.label(x).to_string()))
            .with("strict_coassociative", strict as i64)
            .with("global", pha.is_global() as i64),
    );
    report
}

/// `φ: A → A ⊗ End(H)`, `φ(a) = Σ (b_i·a) ⊗ ρ(S⁻¹(p_i) # 1)`, and
/// `ψ(h # f) = 1 ⊗ λ(h # f)`.
#[derive(Debug, Clone)]
pub struct PhiPsi {
    target: StructureConstants,
    target_unit: Vec<Scalar>,
    phi: Mat,
}

impl PhiPsi {
    pub fn target(&self) -> &StructureConstants {
        &self.target
    }
    pub fn target_unit(&self) -> &[Scalar] {
        &self.target_unit
    }
    pub fn phi(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.phi.apply(a)
    }
    pub fn psi(&self, reps: &Reps, algebra: &StructureAlgebra, h: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        vector::kron(algebra.unit(), &reps.lambda_of(h, f))
    }
}

pub fn phi_psi_maps(pha: &PartialHopfAction, reps: &Reps) -> PhiPsi {
    let a = &pha.algebra;
    let n = pha.hopf.dim();
    let field = a.field();
    let end = reps.end_h();
    let target = tensor_constants(a.constants(), end.constants());
    let target_unit = vector::kron(a.unit(), end.unit());
    let rho_terms: Vec<Vec<Scalar>> =
        (0..n).map(|i| reps.rho_of(&reps.dual().antipode_inv().column(i))).collect();
    let cols: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|x| {
            let ex = a.basis_vector(x);
            let mut out = vector::zeros(field, a.dim() * n * n);
            for (i, r) in rho_terms.iter().enumerate() {
                out = vector::add(&out, &vector::kron(&pha.act_basis(i, &ex), r));
            }
            out
        })
        .collect();
    PhiPsi { target, target_unit, phi: Mat::from_columns(field, a.dim() * n * n, &cols) }
}

/// `φ` multiplicative, and `φ(1)ψ(h#f)φ(a) = Σ φ(h₁·a)ψ(h₂#f)` on all basis
/// triples.
pub fn phi_psi_check(pha: &PartialHopfAction, reps: &Reps, pp: &PhiPsi) -> Report {
    let a = &pha.algebra;
    let h = &pha.hopf;
    let n = h.dim();
    let d = a.dim();
    let field = a.field();
    let t = &pp.target;
    let basis: Vec<Vec<Scalar>> = (0..d).map(|i| a.basis_vector(i)).collect();
    let mut report = Report::new("phi and psi");

    let mult = exec::first_some(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        (pp.phi(&a.mul(&basis[x], &basis[y])) != t.mul(&pp.phi(&basis[x]), &pp.phi(&basis[y])))
            .then(|| format!("{} times {}", a.label(x), a.label(y)))
    });
    let phi_one = pp.phi(a.unit());
    report.push(
        Check::from_witness("hopf.phi.multiplicative", mult)
            .with("phi_one_idempotent", (t.mul(&phi_one, &phi_one) == phi_one) as i64),
    );

    let hb = |i: usize| vector::unit(field, n, i);
    let lemma = exec::first_some(n * n * d, |idx| {
        let [i, j, x] = exec::unflatten(idx, [n, n, d]);
        let psi = pp.psi(reps, a, &hb(i), &hb(j));
        let lhs = t.mul(&t.mul(&phi_one, &psi), &pp.phi(&basis[x]));
        let mut rhs = vector::zeros(field, t.dim());
        for (k, l, c) in h.coproduct_terms(i) {
            let term = t.mul(&pp.phi(&pha.act_basis(k, &basis[x])), &pp.psi(reps, a, &hb(l), &hb(j)));
            vector::axpy(&mut rhs, &c, &term);
        }
        (lhs != rhs).then(|| {
            format!("h={}, f={}, a={}", h.algebra().label(i), reps.dual().algebra().label(j), a.label(x))
        })
    });
    report.push(Check::from_witness("hopf.lemma", lemma).with("triples", n * n * d));
    report
}

/// `A ⊗ H` with `(a⊗h)(b⊗g) = Σ a(h₁·b) ⊗ h₂g` and its subalgebra
/// `(A ⊗ H)(1 ⊗ 1)`.
#[derive(Debug, Clone)]
pub struct PartialSmash {
    ambient: StructureConstants,
    left_unit: Vec<Scalar>,
    sub: Subspace,
}

impl PartialSmash {
    pub fn ambient(&self) -> &StructureConstants {
        &self.ambient
    }
    /// `1 ⊗ 1`.
    pub fn left_unit(&self) -> &[Scalar] {
        &self.left_unit
    }
    pub fn sub(&self) -> &Subspace {
        &self.sub
    }
}

pub fn partial_smash(pha: &PartialHopfAction) -> PartialSmash {
    let a = &pha.algebra;
    let h = &pha.hopf;
    let n = h.dim();
    let d = a.dim();
    let field = a.field();
    let ambient = StructureConstants::from_fn(field, d * n, |u, v| {
        let ((x, i), (y, j)) = ((u / n, u % n), (v / n, v % n));
        let (ex, ey, bj) = (a.basis_vector(x), a.basis_vector(y), h.algebra().basis_vector(j));
        let mut out = vector::zeros(field, d * n);
        for (k, l, c) in h.coproduct_terms(i) {
            let left = a.mul(&ex, &pha.act_basis(k, &ey));
            let right = h.mul(&h.algebra().basis_vector(l), &bj);
            vector::axpy(&mut out, &c, &vector::kron(&left, &right));
        }
        out
    });
    let left_unit = vector::kron(a.unit(), h.unit());
    let sub = ambient.right_mul_matrix(&left_unit).image_basis();
    PartialSmash { ambient, left_unit, sub }
}

/// Associativity, the subalgebra and its unit, the comodule structure
/// `1 ⊗ Δ`, and the `H^*`-module-algebra structure `f ▷ (a⊗h) = a ⊗ (f ⇀ h)`.
pub fn partial_smash_check(pha: &PartialHopfAction, reps: &Reps, ps: &PartialSmash) -> Report {
    let a = &pha.algebra;
    let h = &pha.hopf;
    let dual = reps.dual();
    let n = h.dim();
    let d = a.dim();
    let field = a.field();
    let amb = &ps.ambient;
    let sub = &ps.sub;
    let mut report = Report::new("partial smash");

    let assoc = amb.associativity_witness().map(|(i, j, k)| format!("basis triple ({i}, {j}, {k})"));
    let left_unit_fails = (0..amb.dim()).find(|&z| {
        let bz = vector::unit(field, amb.dim(), z);
        amb.mul(&ps.left_unit, &bz) != bz
    });
    report.push(
        Check::from_witness("partial_smash.ambient", assoc)
            .require(left_unit_fails.is_none(), || "1⊗1 is not a left unit".to_string())
            .with("dim_ambient", amb.dim()),
    );

    let unit_ok = sub.contains(&ps.left_unit)
        && sub.basis().iter().all(|s| amb.mul(&ps.left_unit, s) == *s && amb.mul(s, &ps.left_unit) == *s);
    report.push(
        Check::pass("partial_smash.subalgebra")
            .require(amb.is_closed(sub), || "sub is not closed under the product".to_string())
            .require(unit_ok, || "1⊗1 is not a unit of sub".to_string())
            .require(!pha.is_global() || sub.is_full(), || "global action but sub is proper".to_string())
            .with("dim_sub", sub.dim()),
    );

    // right comodule algebra: ρ = 1 ⊗ Δ into (A ⊗ H) ⊗ H
    let idm = Mat::identity(field, d);
    let coact = super::kron_mat(&idm, h.comult());
    let outer = tensor_constants(amb, h.algebra().constants());
    let sub_h = Subspace::span(
        field,
        d * n * n,
        sub.basis().iter().flat_map(|s| (0..n).map(move |l| vector::kron(s, &vector::unit(field, n, l)))).collect(),
    );
    let sb = sub.basis();
    let comod = exec::first_some(sb.len() * sb.len(), |xy| {
        let (x, y) = (&sb[xy / sb.len()], &sb[xy % sb.len()]);
        let lhs = coact.apply(&amb.mul(x, y));
        (lhs != outer.mul(&coact.apply(x), &coact.apply(y)) || !sub_h.contains(&coact.apply(x)))
            .then(|| format!("sub basis pair ({}, {})", xy / sb.len(), xy % sb.len()))
    });
    report.push(Check::from_witness("partial_smash.comodule_algebra", comod));

    // left H^*-module algebra
    let t_mat = |f: &[Scalar]| -> Mat {
        let cols: Vec<Vec<Scalar>> = (0..d * n)
            .map(|u| {
                let (x, i) = (u / n, u % n);
                vector::kron(&a.basis_vector(x), &harpoon(h, Side::Left, f, &h.algebra().basis_vector(i)))
            })
            .collect();
        Mat::from_columns(field, d * n, &cols)
    };
    let ts: Vec<Mat> = (0..n).map(|j| t_mat(&vector::unit(field, n, j))).collect();
    let mut module_witness = None;
    'outer: for j in 0..n {
        if !sub.contains_subspace(&sub.image_under(&ts[j])).unwrap() {
            module_witness = Some(format!("{} does not preserve sub", dual.algebra().label(j)));
            break;
        }
        let expect = vector::scale(&ps.left_unit, &h.unit()[j]);
        if ts[j].apply(&ps.left_unit) != expect {
            module_witness = Some(format!("{} on the unit", dual.algebra().label(j)));
            break;
        }
        for x in sb {
            for y in sb {
                let lhs = ts[j].apply(&amb.mul(x, y));
                let mut rhs = vector::zeros(field, d * n);
                for (k, l, c) in dual.coproduct_terms(j) {
                    vector::axpy(&mut rhs, &c, &amb.mul(&ts[k].apply(x), &ts[l].apply(y)));
                }
                if lhs != rhs {
                    module_witness = Some(format!("{} on a product", dual.algebra().label(j)));
                    break 'outer;
                }
            }
        }
    }
    let eps_acts = t_mat(dual.unit()) == Mat::identity(field, d * n);
    report.push(
        Check::from_witness("partial_smash.module_algebra", module_witness)
            .require(eps_acts, || "ε does not act as the identity".to_string()),
    );
    report
}

/// For `H = k[G]`: `a1_h ⊗ h ↦ a1_h⟦h⟧` is an isomorphism from the partial
/// smash subalgebra onto the partial skew group ring.
pub fn grouplike_iso_check(pha: &PartialHopfAction, ps: &PartialSmash, skew: &SkewGroupRing) -> Check {
    let n = pha.hopf.dim();
    let a = &pha.algebra;
    let d = a.dim();
    let name = "partial_smash.grouplike_iso";
    if !pha.hopf.is_grouplike_basis() || skew.action().group().order() != n {
        return Check::skipped(name, "H is not the group algebra of the skew ring's group");
    }
    let map = |x: &[Scalar]| -> Option<Vec<Scalar>> {
        let mut out = skew.algebra().zero();
        for g in 0..n {
            let comp: Vec<Scalar> = (0..d).map(|y| x[y * n + g].clone()).collect();
            out = vector::add(&out, &skew.embed(g, &comp)?);
        }
        Some(out)
    };
    let sb = ps.sub.basis();
    let images: Option<Vec<Vec<Scalar>>> = sb.iter().map(|x| map(x)).collect();
    let Some(images) = images else {
        return Check::fail(name, "a component of sub lies outside D_g");
    };
    let field = a.field();
    let rank = Mat::from_columns(field, skew.dim(), &images).rank();
    let mult = (0..sb.len() * sb.len()).find(|&xy| {
        let (x, y) = (xy / sb.len(), xy % sb.len());
        map(&ps.ambient.mul(&sb[x], &sb[y])) != Some(skew.mul(&images[x], &images[y]))
    });
    Check::from_witness(name, mult.map(|xy| format!("sub basis pair ({}, {})", xy / sb.len(), xy % sb.len())))
        .require(rank == sb.len() && rank == skew.dim(), || {
            format!("rank {rank}, dim sub {}, dim skew {}", sb.len(), skew.dim())
        })
        .with("dim_sub", sb.len())
}

/// `Φ(a ⊗ h # f) = φ(a)ψ(h # f)` on `A ⊗ H # H^*`: multiplicative, `Φ(1) = e`
/// idempotent, and the image of `sub # H^*` inside `e (A ⊗ End H) e`.
pub fn big_phi_check(pha: &PartialHopfAction, reps: &Reps, pp: &PhiPsi, ps: &PartialSmash) -> Report {
    let a = &pha.algebra;
    let h = &pha.hopf;
    let dual = reps.dual();
    let n = h.dim();
    let d = a.dim();
    let field = a.field();
    let dim = d * n * n;
    let hb = |i: usize| vector::unit(field, n, i);

    // (a⊗h#f)(b⊗k#g) = Σ a(h₁·b) ⊗ h₂(f₁ ⇀ k) # f₂ g
    let domain = StructureConstants::from_fn(field, dim, |u, v| {
        let [x, i, j] = exec::unflatten(u, [d, n, n]);
        let [y, k, l] = exec::unflatten(v, [d, n, n]);
        let (ex, ey) = (a.basis_vector(x), a.basis_vector(y));
        let mut out = vector::zeros(field, dim);
        for (i1, i2, c1) in h.coproduct_terms(i) {
            let left = a.mul(&ex, &pha.act_basis(i1, &ey));
            if vector::is_zero(&left) {
                continue;
            }
            for (j1, j2, c2) in dual.coproduct_terms(j) {
                let mid = h.mul(&hb(i2), &harpoon(h, Side::Left, &hb(j1), &hb(k)));
                let right = dual.mul(&hb(j2), &hb(l));
                let term = vector::kron(&vector::kron(&left, &mid), &right);
                vector::axpy(&mut out, &(&c1 * &c2), &term);
            }
        }
        out
    });
    let t = &pp.target;
    let cols: Vec<Vec<Scalar>> = exec::map_range(dim, |u| {
        let [x, i, j] = exec::unflatten(u, [d, n, n]);
        t.mul(&pp.phi(&a.basis_vector(x)), &pp.psi(reps, a, &hb(i), &hb(j)))
    });
    let big = Mat::from_columns(field, t.dim(), &cols);

    let mut report = Report::new("big phi");
    let mult = exec::first_some(dim * dim, |uv| {
        let (u, v) = (uv / dim, uv % dim);
        (big.apply(&domain.basis_product(u, v)) != t.mul(&cols[u], &cols[v])).then(|| format!("domain basis pair ({u}, {v})"))
    });
    report.push(Check::from_witness("hopf.big_phi.multiplicative", mult).with("pairs", dim * dim));

    let one = vector::kron(&vector::kron(a.unit(), h.unit()), dual.unit());
    let e = pp.phi(a.unit());
    let idempotent = t.mul(&e, &e) == e;
    report.push(
        Check::pass("hopf.big_phi.unit_is_e")
            .require(big.apply(&one) == e, || "Φ(1⊗1#ε) differs from e".to_string())
            .require(idempotent, || "e is not idempotent".to_string())
            .with("e_idempotent", idempotent as i64),
    );

    let corner_vectors = exec::map_range(t.dim(), |m| {
        let bm = vector::unit(field, t.dim(), m);
        t.mul(&t.mul(&e, &bm), &e)
    });
    let corner = Subspace::span(field, t.dim(), corner_vectors);
    let gammas: Vec<Vec<Scalar>> = ps
        .sub
        .basis()
        .iter()
        .flat_map(|s| (0..n).map(move |j| vector::kron(s, &hb(j))))
        .collect();
    let outside = gammas.iter().position(|g| !corner.contains(&big.apply(g)));
    report.push(
        Check::from_witness("hopf.big_phi.corner", outside.map(|k| format!("sub#H* basis element {k}")))
            .with("checked", gammas.len())
            .with("dim_corner", corner.dim()),
    );
    report
}
