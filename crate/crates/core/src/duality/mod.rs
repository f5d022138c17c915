//! The duality map `Φ: B → M_n(A)`,
//! `a⟦g⟧ # p_h ↦ h⁻¹·(g⁻¹·a) E_{gh,h}`, with its kernel, its image (a corner
//! `e M_n(A) e`), the resulting decomposition of `B`, and the separability
//! idempotent of `B` over the skew ring.

use std::sync::Arc;

use crate::algebra::{matrix_algebra, AlgebraError, AlgebraMap, MatrixAlgebra};
use crate::exactla::{vector, Mat, Scalar, Subspace};
use crate::exec;
use crate::report::{Check, Report};
use crate::smash::SmashAlgebra;

#[derive(Debug, Clone)]
pub struct DualityData {
    smash: Arc<SmashAlgebra>,
    target: MatrixAlgebra,
    phi: AlgebraMap,
    bold_e: Vec<Scalar>,
    kernel: Subspace,
    corner: Subspace,
    ideal_i: Subspace,
}

impl DualityData {
    pub fn smash(&self) -> &Arc<SmashAlgebra> {
        &self.smash
    }
    pub fn target(&self) -> &MatrixAlgebra {
        &self.target
    }
    pub fn phi(&self) -> &AlgebraMap {
        &self.phi
    }
    /// `Σ_g 1_{g⁻¹} E_{g,g}`.
    pub fn bold_e(&self) -> &[Scalar] {
        &self.bold_e
    }
    /// `Ker Φ`, by linear algebra on the matrix of `Φ`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }
    /// `Im Φ`.
    pub fn corner(&self) -> &Subspace {
        &self.corner
    }
    /// `I = ⊕ A 1_{gh} 1_g ⟦g⟧ # p_h`.
    pub fn ideal_i(&self) -> &Subspace {
        &self.ideal_i
    }

    /// `Φ(a⟦g⟧ # p_h)` for `a ∈ D_g`, from the defining formula.
    pub fn phi_formula(&self, g: usize, a: &[Scalar], h: usize) -> Vec<Scalar> {
        phi_on(&self.smash, &self.target, g, a, h)
    }
}

fn phi_on(smash: &SmashAlgebra, target: &MatrixAlgebra, g: usize, a: &[Scalar], h: usize) -> Vec<Scalar> {
    let pa = smash.skew().action();
    let grp = pa.group();
    let entry = pa.dot(grp.inv(h), &pa.dot(grp.inv(g), a));
    target.embed(grp.mul(g, h), h, &entry)
}

/// Span of `x⟦g⟧ # p_h` for `x` running over `A·c(g, h)`, where `c(g, h)` is
/// a central idempotent below `1_g`.
fn graded_span(smash: &SmashAlgebra, idem: impl Fn(usize, usize) -> Vec<Scalar> + Sync + Send) -> Subspace {
    let pa = smash.skew().action();
    let a = pa.algebra();
    let n = pa.group().order();
    let vectors: Vec<Vec<Scalar>> = exec::map_range(n * n, |gh| {
        let (g, h) = (gh / n, gh % n);
        let c = idem(g, h);
        (0..a.dim())
            .map(|i| {
                let x = a.mul(&a.basis_vector(i), &c);
                smash.element(g, &x, h).expect("element of D_g")
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();
    Subspace::span(a.field(), smash.dim(), vectors)
}

pub fn build_phi(smash: Arc<SmashAlgebra>) -> Result<DualityData, AlgebraError> {
    let pa = smash.skew().action().clone();
    let grp = pa.group().clone();
    let a = pa.algebra().clone();
    let field = a.field();
    let target = matrix_algebra(&a, &grp);
    let cols: Vec<Vec<Scalar>> = exec::map_range(smash.dim(), |x| {
        let (g, i, h) = smash.tag(x);
        phi_on(&smash, &target, g, &smash.skew().block(g)[i], h)
    });
    let phi = AlgebraMap::new(smash.algebra().clone(), target.algebra.clone(), Mat::from_columns(field, target.algebra.dim(), &cols))?;

    let mut bold_e = target.algebra.zero();
    for g in grp.elements() {
        target.add_at(&mut bold_e, g, g, pa.idempotent(grp.inv(g)));
    }
    let kernel = phi.kernel();
    let corner = phi.image();
    let ideal_i = graded_span(&smash, |g, h| a.mul(pa.idempotent(grp.mul(g, h)), pa.idempotent(g)));
    Ok(DualityData { smash, target, phi, bold_e, kernel, corner, ideal_i })
}

/// Multiplicativity of `Φ` on all basis pairs, `Φ(1) = e`, `e² = e`, and
/// the identity
/// `k⁻¹·((gh)⁻¹·(a(g·b))) = ((hk)⁻¹·(g⁻¹·a))(k⁻¹·(h⁻¹·b))`
/// for all `g, h, k` and basis vectors `a ∈ D_g`, `b ∈ D_h`.
pub fn phi_check(d: &DualityData) -> Report {
    let mut report = Report::new("duality map");
    let b = d.smash.algebra();
    let m = &d.target.algebra;
    let mult = d.phi.multiplicativity_witness().map(|(i, j)| format!("{} times {}", b.label(i), b.label(j)));
    report.push(Check::from_witness("duality.phi.multiplicative", mult).with("pairs", b.dim() * b.dim()));

    let unit_image = d.phi.apply(b.unit());
    report.push(
        Check::pass("duality.phi.unit_is_e")
            .require(unit_image == d.bold_e, || format!("Φ(1) = {}", m.show(&unit_image)))
            .require(m.is_idempotent(&d.bold_e), || "e is not idempotent".to_string()),
    );

    let pa = d.smash.skew().action();
    let grp = pa.group();
    let a = pa.algebra();
    let n = grp.order();
    let skew = d.smash.skew();
    let eq1 = exec::first_some(n * n * n, |idx| {
        let [g, h, k] = exec::unflatten(idx, [n, n, n]);
        let inv = |x: usize| grp.inv(x);
        for x in skew.block(g) {
            for y in skew.block(h) {
                let lhs = pa.dot(inv(k), &pa.dot(inv(grp.mul(g, h)), &a.mul(x, &pa.dot(g, y))));
                let rhs = a.mul(
                    &pa.dot(inv(grp.mul(h, k)), &pa.dot(inv(g), x)),
                    &pa.dot(inv(k), &pa.dot(inv(h), y)),
                );
                if lhs != rhs {
                    return Some(format!(
                        "g={}, h={}, k={}, a={}, b={}",
                        grp.label(g),
                        grp.label(h),
                        grp.label(k),
                        a.show(x),
                        a.show(y)
                    ));
                }
            }
        }
        None
    });
    report.push(Check::from_witness("duality.eq_twisted_composition", eq1).with("triples", n * n * n));

    let rank = d.corner.dim();
    report.push(
        Check::pass("duality.phi.global_bijective")
            .require(!pa.is_global() || (d.kernel.is_zero() && d.corner.is_full()), || {
                format!("global action but rank {rank} of {}", m.dim())
            })
            .with("rank", rank)
            .with("global", pa.is_global() as i64),
    );
    report
}

/// `Ker Φ` against `⊕ A(1 − 1_{gh})1_g ⟦g⟧ # p_h`.
pub fn kernel_check(d: &DualityData) -> Report {
    let pa = d.smash.skew().action();
    let grp = pa.group();
    let a = pa.algebra();
    let formula = graded_span(&d.smash, |g, h| {
        a.mul(&vector::sub(a.unit(), pa.idempotent(grp.mul(g, h))), pa.idempotent(g))
    });
    let mut report = Report::new("kernel");
    report.push(
        Check::pass("duality.kernel")
            .require(formula == d.kernel, || {
                format!("formula has dimension {}, kernel has dimension {}", formula.dim(), d.kernel.dim())
            })
            .with("dim_kernel", d.kernel.dim())
            .with("dim_formula", formula.dim()),
    );
    report
}

/// `Im Φ` three ways: the matrix image, the entry-wise description
/// `(b_{r,s} 1_{r⁻¹} 1_{s⁻¹})`, and `e M_n(A) e`.
pub fn corner_check(d: &DualityData) -> Report {
    let pa = d.smash.skew().action();
    let grp = pa.group();
    let a = pa.algebra();
    let t = &d.target;
    let m = &t.algebra;
    let n = grp.order();
    let field = a.field();

    let entry_vectors: Vec<Vec<Scalar>> = exec::map_range(n * n, |rs| {
        let (r, s) = (rs / n, rs % n);
        let c = a.mul(pa.idempotent(grp.inv(r)), pa.idempotent(grp.inv(s)));
        (0..a.dim()).map(|i| t.embed(r, s, &a.mul(&a.basis_vector(i), &c))).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();
    let entrywise = Subspace::span(field, m.dim(), entry_vectors);

    let e = &d.bold_e;
    let sandwich = exec::map_range(m.dim(), |i| m.mul(&m.mul(e, &m.basis_vector(i)), e));
    let ese = Subspace::span(field, m.dim(), sandwich);

    let unit_image = d.phi.apply(d.smash.algebra().unit());
    let mut report = Report::new("corner");
    report.push(
        Check::pass("duality.corner")
            .require(entrywise == d.corner, || {
                format!("entry-wise description has dimension {}, image {}", entrywise.dim(), d.corner.dim())
            })
            .require(ese == d.corner, || format!("e M e has dimension {}, image {}", ese.dim(), d.corner.dim()))
            .require(unit_image == *e, || "Φ(1) differs from e".to_string())
            .with("dim_corner", d.corner.dim())
            .with("dim_entrywise", entrywise.dim())
            .with("dim_eme", ese.dim()),
    );
    report.push(
        Check::pass("duality.rank_nullity")
            .require(d.kernel.dim() + d.corner.dim() == d.smash.dim(), || {
                format!("{} + {} != {}", d.kernel.dim(), d.corner.dim(), d.smash.dim())
            })
            .with("dim_smash", d.smash.dim()),
    );
    report
}

/// Candidate Kronecker factors for `(b⟦k⟧ # p_l)(a⟦g⟧ # p_h)`.
pub const DELTA_CONVENTIONS: [&str; 3] = ["delta_l_gh", "delta_k_gh", "delta_h_kl"];

fn delta_holds(convention: usize, g: usize, h: usize, k: usize, l: usize, mul: impl Fn(usize, usize) -> usize) -> bool {
    match convention {
        0 => l == mul(g, h),
        1 => k == mul(g, h),
        _ => h == mul(k, l),
    }
}

/// `B ≅ Ker Φ × e M_n(A) e` via `B = I ⊕ Ker Φ`.
pub fn theorem_check(d: &DualityData) -> Report {
    let smash = &d.smash;
    let b = smash.algebra();
    let pa = smash.skew().action();
    let grp = pa.group();
    let a = pa.algebra();
    let i_space = &d.ideal_i;
    let ker = &d.kernel;
    let mut report = Report::new("theorem");

    report.push(
        Check::pass("theorem.ideals")
            .require(b.is_two_sided_ideal(i_space), || "I is not a two-sided ideal".to_string())
            .require(b.is_two_sided_ideal(ker), || "Ker Φ is not a two-sided ideal".to_string())
            .with("dim_i", i_space.dim())
            .with("dim_kernel", ker.dim()),
    );

    let sum = i_space.sum(ker).unwrap();
    let meet = i_space.intersect(ker).unwrap();
    report.push(
        Check::pass("theorem.direct_sum")
            .require(sum.is_full(), || format!("I + Ker has dimension {} of {}", sum.dim(), b.dim()))
            .require(meet.is_zero(), || format!("I ∩ Ker has dimension {}", meet.dim())),
    );

    let cross = exec::first_some(i_space.dim() * ker.dim(), |idx| {
        let (x, y) = (&i_space.basis()[idx / ker.dim()], &ker.basis()[idx % ker.dim()]);
        (!vector::is_zero(&b.mul(x, y)) || !vector::is_zero(&b.mul(y, x)))
            .then(|| format!("{} and {}", b.show(x), b.show(y)))
    });
    report.push(Check::from_witness("theorem.cross_products", cross));

    let image_i = i_space.image_under(d.phi.matrix());
    report.push(
        Check::pass("theorem.phi_on_i")
            .require(image_i == d.corner, || format!("Φ(I) has dimension {}, corner {}", image_i.dim(), d.corner.dim()))
            .require(i_space.dim() == d.corner.dim(), || "Φ restricted to I is not injective".to_string()),
    );

    // the two product computations showing I is an ideal, on generators
    // a 1_{gh} 1_g ⟦g⟧ # p_h of I and b ⟦k⟧ # p_l of B
    let skew = smash.skew();
    let gens: Vec<(usize, usize, Vec<Scalar>)> = grp
        .elements()
        .flat_map(|g| grp.elements().map(move |h| (g, h)))
        .flat_map(|(g, h)| {
            let c = a.mul(pa.idempotent(grp.mul(g, h)), pa.idempotent(g));
            (0..a.dim()).map(move |i| (g, h, a.mul(&a.basis_vector(i), &c))).collect::<Vec<_>>()
        })
        .filter(|(_, _, x)| !vector::is_zero(x))
        .collect();
    let others: Vec<(usize, usize, Vec<Scalar>)> = grp
        .elements()
        .flat_map(|k| skew.block(k).iter().map(move |y| (k, y.clone())))
        .flat_map(|(k, y)| grp.elements().map(move |l| (k, l, y.clone())))
        .collect();
    let total = gens.len() * others.len();

    let right = exec::first_some(total, |idx| {
        let ((g, h, x), (k, l, y)) = (&gens[idx / others.len()], &others[idx % others.len()]);
        let lhs = b.mul(&smash.element(*g, x, *h).unwrap(), &smash.element(*k, y, *l).unwrap());
        let gk = grp.mul(*g, *k);
        let rhs = if *h == grp.mul(*k, *l) {
            let c = a.mul(pa.idempotent(grp.mul(gk, *l)), pa.idempotent(gk));
            smash.element(gk, &a.mul(&a.mul(x, &pa.dot(*g, y)), &c), *l).unwrap()
        } else {
            b.zero()
        };
        (lhs != rhs || !i_space.contains(&lhs)).then(|| format!("g={}, h={}, k={}, l={}", grp.label(*g), grp.label(*h), grp.label(*k), grp.label(*l)))
    });
    report.push(Check::from_witness("theorem.right_multiplication", right).with("products", total));

    // left multiplication: the factor forced by the smash rule is δ_{l,gh};
    // the other candidates are recorded for comparison
    let mut consistent = [true; 3];
    let mut left_witness = None;
    for idx in 0..total {
        let ((g, h, x), (k, l, y)) = (&gens[idx / others.len()], &others[idx % others.len()]);
        let lhs = b.mul(&smash.element(*k, y, *l).unwrap(), &smash.element(*g, x, *h).unwrap());
        if !i_space.contains(&lhs) && left_witness.is_none() {
            left_witness = Some(format!("product leaves I at g={}, h={}, k={}, l={}", grp.label(*g), grp.label(*h), grp.label(*k), grp.label(*l)));
        }
        let kg = grp.mul(*k, *g);
        let c = a.mul(pa.idempotent(grp.mul(kg, *h)), pa.idempotent(kg));
        let body = smash.element(kg, &a.mul(&a.mul(y, &pa.dot(*k, x)), &c), *h).unwrap();
        for (conv, ok) in consistent.iter_mut().enumerate() {
            if *ok {
                let rhs = if delta_holds(conv, *g, *h, *k, *l, |p, q| grp.mul(p, q)) { body.clone() } else { b.zero() };
                *ok = lhs == rhs;
            }
        }
    }
    let mut check = Check::from_witness("theorem.left_multiplication", left_witness)
        .require(consistent[0], || "the factor δ_{l,gh} does not reproduce the product".to_string())
        .with("products", total);
    for (name, ok) in DELTA_CONVENTIONS.iter().zip(consistent) {
        check = check.with(format!("consistent_{name}"), ok as i64);
    }
    report.push(check);
    report
}

/// `Φ ∘ (skew ↪ B)` is injective, and `∩_h A(1 − 1_{gh})1_g = 0` already at
/// `h = e`.
pub fn injectivity_on_skew(d: &DualityData) -> Report {
    let emb = d.smash.embedding();
    let composite = d.phi.matrix().matmul(emb.matrix());
    let ker = composite.kernel_basis();
    let pa = d.smash.skew().action();
    let a = pa.algebra();
    let witness = pa.group().elements().find(|&g| {
        let c = a.mul(&vector::sub(a.unit(), pa.idempotent(g)), pa.idempotent(g));
        !vector::is_zero(&c)
    });
    let mut report = Report::new("injectivity");
    report.push(
        Check::pass("duality.injective_on_skew")
            .require(ker.is_zero(), || format!("kernel of the composite has dimension {}", ker.dim()))
            .require(witness.is_none(), || "(1 - 1_g) 1_g is nonzero".to_string())
            .require(emb.is_injective(), || "the embedding into B is not injective".to_string())
            .with("rank", composite.rank()),
    );
    report
}

/// `B ⊗_{A⋆G} B`, realized as `B ⊗ B` modulo the span of `xb ⊗ y − x ⊗ by`.
#[derive(Debug, Clone)]
pub struct TensorOverSubring {
    dim_b: usize,
    relations: Subspace,
}

impl TensorOverSubring {
    pub fn new(smash: &SmashAlgebra) -> Self {
        let b = smash.algebra();
        let dim_b = b.dim();
        let subring = smash.embedding().matrix().columns();
        let basis: Vec<Vec<Scalar>> = (0..dim_b).map(|i| b.basis_vector(i)).collect();
        let gens: Vec<Vec<Scalar>> = exec::map_range(subring.len() * dim_b, |idx| {
            let (s, x) = (idx / dim_b, idx % dim_b);
            let xb = b.mul(&basis[x], &subring[s]);
            (0..dim_b)
                .map(|y| {
                    let by = b.mul(&subring[s], &basis[y]);
                    vector::sub(&vector::kron(&xb, &basis[y]), &vector::kron(&basis[x], &by))
                })
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
        let relations = Subspace::span(b.field(), dim_b * dim_b, gens);
        TensorOverSubring { dim_b, relations }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_b * self.dim_b
    }
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }
    pub fn quotient_dim(&self) -> usize {
        self.ambient_dim() - self.relations.dim()
    }
    pub fn equal(&self, u: &[Scalar], v: &[Scalar]) -> bool {
        self.relations.contains(&vector::sub(u, v))
    }
}

/// `t · b` and `b · t` on `B ⊗ B` for `b ∈ B`.
fn tensor_right(smash: &SmashAlgebra, t: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let alg = smash.algebra();
    let d = alg.dim();
    let right = alg.constants().right_mul_matrix(b);
    let mut out = vector::zeros(alg.field(), d * d);
    for x in 0..d {
        let row: Vec<Scalar> = t[x * d..(x + 1) * d].to_vec();
        if vector::is_zero(&row) {
            continue;
        }
        let img = right.apply(&row);
        out[x * d..(x + 1) * d].clone_from_slice(&img);
    }
    out
}

fn tensor_left(smash: &SmashAlgebra, b: &[Scalar], t: &[Scalar]) -> Vec<Scalar> {
    let alg = smash.algebra();
    let d = alg.dim();
    let left = alg.constants().left_mul_matrix(b);
    let mut out = vector::zeros(alg.field(), d * d);
    for y in 0..d {
        let col: Vec<Scalar> = (0..d).map(|x| t[x * d + y].clone()).collect();
        if vector::is_zero(&col) {
            continue;
        }
        for (x, c) in left.apply(&col).into_iter().enumerate() {
            out[x * d + y] = c;
        }
    }
    out
}

fn multiply_out(smash: &SmashAlgebra, t: &[Scalar]) -> Vec<Scalar> {
    let alg = smash.algebra();
    let d = alg.dim();
    let mut out = alg.zero();
    for x in 0..d {
        for y in 0..d {
            let c = &t[x * d + y];
            if !c.is_zero() {
                vector::axpy(&mut out, c, &alg.constants().basis_product(x, y));
            }
        }
    }
    out
}

/// `f = Σ_g (1⟦e⟧ # p_g) ⊗ (1⟦e⟧ # p_g)` commutes with the skew ring in
/// `B ⊗_{A⋆G} B` and multiplies out to `1_B`.
pub fn separability_check(d: &DualityData) -> Report {
    let smash = &d.smash;
    let b = smash.algebra();
    let skew = smash.skew();
    let pa = skew.action();
    let grp = pa.group();
    let tensor = TensorOverSubring::new(smash);

    let one_e = skew.algebra().unit().to_vec();
    let mut f = vector::zeros(b.field(), tensor.ambient_dim());
    for g in grp.elements() {
        let x = smash.pure(&one_e, g);
        f = vector::add(&f, &vector::kron(&x, &x));
    }

    let subring = smash.embedding().matrix().columns();
    let central = exec::first_some(subring.len(), |s| {
        let lhs = tensor_right(smash, &f, &subring[s]);
        let rhs = tensor_left(smash, &subring[s], &f);
        (!tensor.equal(&lhs, &rhs)).then(|| format!("f does not commute with {}", skew.algebra().label(s)))
    });
    let mu = multiply_out(smash, &f);
    let mu_relations = tensor.relations().basis().iter().position(|r| !vector::is_zero(&multiply_out(smash, r)));

    let mut report = Report::new("separability");
    report.push(
        Check::from_witness("separability.centralizing", central)
            .with("ambient_dim", tensor.ambient_dim())
            .with("relations_dim", tensor.relations().dim()),
    );
    report.push(
        Check::pass("separability.multiplies_to_unit")
            .require(mu == b.unit(), || format!("μ(f) = {}", b.show(&mu)))
            .require(mu_relations.is_none(), || "μ does not vanish on the relations".to_string()),
    );
    report
}

#[cfg(test)]
mod tests;
