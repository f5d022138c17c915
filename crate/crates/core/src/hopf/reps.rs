//! The Heisenberg double `H # H^*` acting on `H` from the left through `λ`,
//! and `H^* # H` acting from the right through `ρ`.

use std::sync::Arc;

use super::{dual_hopf, harpoon, HopfData, HopfError, Side};
use crate::algebra::{end_algebra, AlgebraMap, StructureAlgebra, StructureConstants};
use crate::exactla::{vector, Mat, Scalar};
use crate::exec;
use crate::report::{Check, Report};

#[derive(Debug, Clone)]
pub struct Reps {
    hopf: Arc<HopfData>,
    dual: Arc<HopfData>,
    end_h: Arc<StructureAlgebra>,
    /// `H # H^*`, basis `b_i # p_j` at `i*n + j`.
    heisenberg: Arc<StructureAlgebra>,
    /// `H^* # H`, basis `p_j # b_i` at `j*n + i`.
    right_smash: Arc<StructureAlgebra>,
    lambda: AlgebraMap,
    rho: AlgebraMap,
}

/// A matrix on `H` as an element of `End(H)` (`E[r,s]` at `r*n + s`).
pub(crate) fn mat_to_end(m: &Mat) -> Vec<Scalar> {
    let n = m.rows();
    (0..n * n).map(|rs| m.get(rs / n, rs % n).clone()).collect()
}

impl Reps {
    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }
    pub fn dual(&self) -> &Arc<HopfData> {
        &self.dual
    }
    pub fn end_h(&self) -> &Arc<StructureAlgebra> {
        &self.end_h
    }
    pub fn heisenberg(&self) -> &Arc<StructureAlgebra> {
        &self.heisenberg
    }
    pub fn right_smash(&self) -> &Arc<StructureAlgebra> {
        &self.right_smash
    }
    pub fn lambda(&self) -> &AlgebraMap {
        &self.lambda
    }
    pub fn rho(&self) -> &AlgebraMap {
        &self.rho
    }

    /// `λ(h # f)` for `h ∈ H`, `f ∈ H^*`.
    pub fn lambda_of(&self, h: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        self.lambda.apply(&vector::kron(h, f))
    }

    /// `ρ(f # 1)`.
    pub fn rho_of(&self, f: &[Scalar]) -> Vec<Scalar> {
        self.rho.apply(&vector::kron(f, self.hopf.unit()))
    }

    /// Checks `λ` multiplicative, `ρ` anti-multiplicative, `λ(1 # ε) = id`,
    /// and `λ(h#f)ρ(g#1) = Σ ρ(g₂#1) λ((h ↼ S(g₁)) # f)` on all basis triples.
    pub fn check(&self) -> Report {
        let mut report = Report::new("hopf representations");
        let hs = &self.heisenberg;
        let lam = self.lambda.multiplicativity_witness().map(|(i, j)| format!("{} times {}", hs.label(i), hs.label(j)));
        let id = self.lambda_of(self.hopf.unit(), self.dual.unit());
        report.push(
            Check::from_witness("hopf.lambda.multiplicative", lam)
                .require(id == self.end_h.unit(), || "λ(1#ε) is not the identity".to_string()),
        );

        let rs = &self.right_smash;
        let d = rs.dim();
        let anti = exec::first_some(d * d, |xy| {
            let (x, y) = (xy / d, xy % d);
            let lhs = self.rho.apply(&rs.constants().basis_product(x, y));
            let rhs = self.end_h.mul(&self.rho.image_of_basis(y), &self.rho.image_of_basis(x));
            (lhs != rhs).then(|| format!("{} times {}", rs.label(x), rs.label(y)))
        });
        report.push(
            Check::from_witness("hopf.rho.anti_multiplicative", anti)
                .require(self.rho.apply(rs.unit()) == self.end_h.unit(), || "ρ(ε#1) is not the identity".to_string()),
        );

        let n = self.hopf.dim();
        let field = self.hopf.field();
        let dual = &self.dual;
        let end = &self.end_h;
        let eq2 = exec::first_some(n * n * n, |idx| {
            let [i, j, k] = exec::unflatten(idx, [n, n, n]);
            let (h, f, g) = (vector::unit(field, n, i), vector::unit(field, n, j), vector::unit(field, n, k));
            let lhs = end.mul(&self.lambda_of(&h, &f), &self.rho_of(&g));
            let mut rhs = vector::zeros(field, n * n);
            for (a, b, c) in dual.coproduct_terms(k) {
                let s_ga = dual.antipode().column(a);
                let moved = harpoon(&self.hopf, Side::Right, &s_ga, &h);
                let term = end.mul(&self.rho_of(&vector::unit(field, n, b)), &self.lambda_of(&moved, &f));
                vector::axpy(&mut rhs, &c, &term);
            }
            (lhs != rhs).then(|| {
                let hl = self.hopf.algebra().labels();
                format!("h={}, f={}, g={}", hl[i], dual.algebra().label(j), dual.algebra().label(k))
            })
        });
        report.push(Check::from_witness("hopf.heisenberg_commutation", eq2).with("triples", n * n * n));
        report
    }
}

/// Builds `H^*`, `End(H)`, both smash products, `λ` and `ρ`.
pub fn reps(hopf: Arc<HopfData>) -> Result<Reps, HopfError> {
    let n = hopf.dim();
    let field = hopf.field();
    let dual = Arc::new(dual_hopf(&hopf)?);
    let end_h = Arc::new(end_algebra(field, n));
    let hb: Vec<Vec<Scalar>> = (0..n).map(|i| vector::unit(field, n, i)).collect();

    // (b_i # p_j)(b_k # p_l) = Σ b_i (p_a ⇀ b_k) # p_b p_l over Δ(p_j) = Σ p_a ⊗ p_b
    let heis = StructureConstants::from_fn(field, n * n, |x, y| {
        let ((i, j), (k, l)) = ((x / n, x % n), (y / n, y % n));
        let mut out = vector::zeros(field, n * n);
        for (a, b, c) in dual.coproduct_terms(j) {
            let left = hopf.mul(&hb[i], &harpoon(&hopf, Side::Left, &hb[a], &hb[k]));
            let right = dual.mul(&hb[b], &hb[l]);
            vector::axpy(&mut out, &c, &vector::kron(&left, &right));
        }
        out
    });
    let labels = |first: &StructureAlgebra, second: &StructureAlgebra| -> Vec<String> {
        first.labels().iter().flat_map(|x| second.labels().iter().map(move |y| format!("{x}#{y}"))).collect()
    };
    let heisenberg = Arc::new(StructureAlgebra::new(
        heis,
        vector::kron(hopf.unit(), dual.unit()),
        Some(labels(hopf.algebra(), dual.algebra())),
    )?);

    // (p_j # b_i)(p_l # b_k) = Σ p_j p_a # (b_i ↼ p_b) b_k over Δ(p_l) = Σ p_a ⊗ p_b
    let rs = StructureConstants::from_fn(field, n * n, |x, y| {
        let ((j, i), (l, k)) = ((x / n, x % n), (y / n, y % n));
        let mut out = vector::zeros(field, n * n);
        for (a, b, c) in dual.coproduct_terms(l) {
            let left = dual.mul(&hb[j], &hb[a]);
            let right = hopf.mul(&harpoon(&hopf, Side::Right, &hb[b], &hb[i]), &hb[k]);
            vector::axpy(&mut out, &c, &vector::kron(&left, &right));
        }
        out
    });
    let right_smash = Arc::new(StructureAlgebra::new(
        rs,
        vector::kron(dual.unit(), hopf.unit()),
        Some(labels(dual.algebra(), hopf.algebra())),
    )?);

    let lambda_cols: Vec<Vec<Scalar>> = (0..n * n)
        .map(|x| {
            let (i, j) = (x / n, x % n);
            let cols: Vec<Vec<Scalar>> =
                (0..n).map(|s| hopf.mul(&hb[i], &harpoon(&hopf, Side::Left, &hb[j], &hb[s]))).collect();
            mat_to_end(&Mat::from_columns(field, n, &cols))
        })
        .collect();
    let lambda = AlgebraMap::new(heisenberg.clone(), end_h.clone(), Mat::from_columns(field, n * n, &lambda_cols))?;

    let rho_cols: Vec<Vec<Scalar>> = (0..n * n)
        .map(|x| {
            let (j, i) = (x / n, x % n);
            let cols: Vec<Vec<Scalar>> =
                (0..n).map(|s| hopf.mul(&harpoon(&hopf, Side::Right, &hb[j], &hb[s]), &hb[i])).collect();
            mat_to_end(&Mat::from_columns(field, n, &cols))
        })
        .collect();
    let rho = AlgebraMap::new(right_smash.clone(), end_h.clone(), Mat::from_columns(field, n * n, &rho_cols))?;

    Ok(Reps { hopf, dual, end_h, heisenberg, right_smash, lambda, rho })
}
