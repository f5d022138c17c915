//! Declarative scenario files and the suite runner behind the CLI.
//!
//! A scenario is a single JSON document naming a field, a group, an algebra,
//! a partial action and optional Hopf data. Scalars are written as integers or
//! as exact strings such as `"-3/2"`. Matrices are row-major; column `j` is the
//! image of basis vector `j`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::Deserialize;
use thiserror::Error;

use crate::algebra::{
    base_field, direct_product, group_algebra, matrix_units, product_of_fields, StructureAlgebra,
    StructureConstants,
};
use crate::duality::{
    build_phi, corner_check, injectivity_on_skew, kernel_check, phi_check, separability_check, theorem_check,
    DualityData,
};
use crate::exactla::{vector, Field, Mat, Scalar, Subspace};
use crate::group::FiniteGroup;
use crate::hopf::{
    big_phi_check, group_hopf, grouplike_iso_check, lift_group_partial_action, make_hopf, make_partial_hopf_action,
    partial_coaction_check, partial_smash, partial_smash_check, phi_psi_check, phi_psi_maps, reps, sweedler,
    HopfData, PartialHopfAction,
};
use crate::partial_action::PartialAction;
use crate::report::{Check, Report};
use crate::skew::{build_skew, grading_check, strong_grading_test, SkewGroupRing};
use crate::smash::{build_smash, smash_check, SmashAlgebra};

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("validation failed [{axiom}]: {witness}")]
    Validation { axiom: String, witness: String },
}

impl ScenarioError {
    fn at(location: impl Into<String>, message: impl fmt::Display) -> Self {
        ScenarioError::Parse { location: location.into(), message: message.to_string() }
    }
    fn invalid(axiom: &str, witness: impl fmt::Display) -> Self {
        ScenarioError::Validation { axiom: axiom.to_string(), witness: witness.to_string() }
    }

    /// The violated axiom for validation errors.
    pub fn axiom(&self) -> Option<&str> {
        match self {
            ScenarioError::Validation { axiom, .. } => Some(axiom),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Lemma1,
    Grading,
    Duality,
    Separability,
    Hopf,
    Centers,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Lemma1, Suite::Grading, Suite::Duality, Suite::Separability, Suite::Hopf, Suite::Centers];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Grading => "grading",
            Suite::Duality => "duality",
            Suite::Separability => "separability",
            Suite::Hopf => "hopf",
            Suite::Centers => "centers",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Lemma1 => "dot-action identities, unit image and kernel of the partial action",
            Suite::Grading => "skew ring associativity, G-grading, strong grading versus globality",
            Suite::Duality => "smash product, the map into M_n(A), its kernel, image and ideal decomposition",
            Suite::Separability => "separability idempotent in the tensor product over the skew ring",
            Suite::Hopf => "Hopf data, Heisenberg double, partial coaction, partial smash and corner map",
            Suite::Centers => "centers of the smash product and of the matrix ring",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}` (see list-suites)"))
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Text(String),
}

type RawVec = Vec<RawScalar>;
type RawMat = Vec<Vec<RawScalar>>;

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum AlgebraSpec {
    BaseField,
    ProductOfFields(usize),
    Matrix {
        size: usize,
    },
    GroupAlgebra(GroupSpec),
    Constants {
        dim: usize,
        /// `table[i][j]` holds the coordinates of `b_i b_j`.
        table: Vec<Vec<RawVec>>,
        unit: RawVec,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    DirectProduct(Vec<AlgebraSpec>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum ActionSpec {
    Explicit { idempotents: Vec<RawVec>, beta: Vec<RawMat> },
    Global { automorphisms: Vec<RawMat> },
    RestrictGlobal { automorphisms: Vec<RawMat>, idempotent: RawVec },
    TrivialSplit { r: AlgebraSpec, s: AlgebraSpec },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum HopfStructure {
    Sweedler,
    GroupAlgebra(GroupSpec),
    Explicit { algebra: AlgebraSpec, comult: RawMat, counit: RawVec, antipode: RawMat },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum HopfActionSpec {
    /// `h·a = ε(h)a`.
    Counit,
    Matrices(Vec<RawMat>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfSpec {
    structure: HopfStructure,
    action: HopfActionSpec,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    name: String,
    #[serde(default = "default_field")]
    field: String,
    #[serde(default)]
    group: Option<GroupSpec>,
    #[serde(default)]
    algebra: Option<AlgebraSpec>,
    #[serde(default)]
    partial_action: Option<ActionSpec>,
    #[serde(default)]
    suites: Option<Vec<Suite>>,
    #[serde(default)]
    hopf_lift: bool,
    #[serde(default)]
    hopf: Option<HopfSpec>,
    #[serde(default)]
    expected: BTreeMap<String, i64>,
}

fn default_field() -> String {
    "q".to_string()
}

/// A loaded and validated scenario.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub field: Field,
    pub action: Option<Arc<PartialAction>>,
    pub hopf: Option<Arc<PartialHopfAction>>,
    /// Whether `hopf` is the lift of `action` to `k[G]`.
    pub hopf_is_lift: bool,
    pub suites: BTreeSet<Suite>,
    pub expected: BTreeMap<String, i64>,
}

struct Loader {
    field: Field,
}

impl Loader {
    fn scalar(&self, raw: &RawScalar, path: &str) -> Result<Scalar, ScenarioError> {
        match raw {
            RawScalar::Int(n) => Ok(self.field.from_i64(*n)),
            RawScalar::Text(t) => self.field.parse_scalar(t).map_err(|e| ScenarioError::at(path, e)),
        }
    }

    fn vector(&self, raw: &[RawScalar], len: usize, path: &str) -> Result<Vec<Scalar>, ScenarioError> {
        if raw.len() != len {
            return Err(ScenarioError::at(path, format!("expected {len} entries, found {}", raw.len())));
        }
        raw.iter().enumerate().map(|(i, x)| self.scalar(x, &format!("{path}[{i}]"))).collect()
    }

    fn matrix(&self, raw: &RawMat, rows: usize, cols: usize, path: &str) -> Result<Mat, ScenarioError> {
        if raw.len() != rows {
            return Err(ScenarioError::at(path, format!("expected {rows} rows, found {}", raw.len())));
        }
        let rows = raw
            .iter()
            .enumerate()
            .map(|(i, r)| self.vector(r, cols, &format!("{path}[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Mat::from_rows(self.field, cols, rows))
    }

    fn matrices(&self, raw: &[RawMat], count: usize, d: usize, path: &str) -> Result<Vec<Mat>, ScenarioError> {
        if raw.len() != count {
            return Err(ScenarioError::at(path, format!("expected {count} matrices, found {}", raw.len())));
        }
        raw.iter().enumerate().map(|(g, m)| self.matrix(m, d, d, &format!("{path}[{g}]"))).collect()
    }

    fn group(&self, spec: &GroupSpec) -> Result<FiniteGroup, ScenarioError> {
        match spec {
            GroupSpec::Cyclic(0) | GroupSpec::Symmetric(0) => Err(ScenarioError::at("group", "order must be positive")),
            GroupSpec::Cyclic(n) => Ok(FiniteGroup::cyclic(*n)),
            GroupSpec::Symmetric(m) if *m > 5 => Err(ScenarioError::at("group.symmetric", "degree above 5 is out of range")),
            GroupSpec::Symmetric(m) => Ok(FiniteGroup::symmetric(*m)),
            GroupSpec::Table { table, labels } => FiniteGroup::from_table(table.clone(), labels.clone())
                .map_err(|e| ScenarioError::invalid("group", e)),
        }
    }

    fn algebra(&self, spec: &AlgebraSpec, path: &str) -> Result<Arc<StructureAlgebra>, ScenarioError> {
        let f = self.field;
        let a = match spec {
            AlgebraSpec::BaseField => base_field(f),
            AlgebraSpec::ProductOfFields(0) => return Err(ScenarioError::at(path, "at least one factor is required")),
            AlgebraSpec::ProductOfFields(m) => product_of_fields(f, *m),
            AlgebraSpec::Matrix { size: 0 } => return Err(ScenarioError::at(path, "matrix size must be positive")),
            AlgebraSpec::Matrix { size } => matrix_units(f, *size),
            AlgebraSpec::GroupAlgebra(g) => group_algebra(f, &self.group(g)?),
            AlgebraSpec::Constants { dim, table, unit, labels } => {
                let d = *dim;
                if table.len() != d {
                    return Err(ScenarioError::at(format!("{path}.table"), format!("expected {d} rows")));
                }
                let mut cube = Vec::with_capacity(d);
                for (i, row) in table.iter().enumerate() {
                    if row.len() != d {
                        return Err(ScenarioError::at(format!("{path}.table[{i}]"), format!("expected {d} products")));
                    }
                    let plane = row
                        .iter()
                        .enumerate()
                        .map(|(j, v)| self.vector(v, d, &format!("{path}.table[{i}][{j}]")))
                        .collect::<Result<Vec<_>, _>>()?;
                    cube.push(plane);
                }
                let unit = self.vector(unit, d, &format!("{path}.unit"))?;
                let constants =
                    StructureConstants::from_dense(f, &cube).map_err(|e| ScenarioError::at(format!("{path}.table"), e))?;
                StructureAlgebra::new(constants, unit, labels.clone()).map_err(|e| ScenarioError::invalid(e.axiom(), e))?
            }
            AlgebraSpec::DirectProduct(parts) => {
                let mut iter = parts.iter().enumerate();
                let (_, first) = iter.next().ok_or_else(|| ScenarioError::at(path, "empty direct product"))?;
                let mut acc = self.algebra(first, &format!("{path}.direct_product[0]"))?;
                for (i, part) in iter {
                    let next = self.algebra(part, &format!("{path}.direct_product[{i}]"))?;
                    acc = direct_product(&acc, &next).map_err(|e| ScenarioError::invalid(e.axiom(), e))?.algebra;
                }
                return Ok(acc);
            }
        };
        Ok(Arc::new(a))
    }

    fn action(
        &self,
        spec: &ActionSpec,
        group: Arc<FiniteGroup>,
        algebra: Option<&AlgebraSpec>,
    ) -> Result<PartialAction, ScenarioError> {
        let n = group.order();
        let need_algebra = || -> Result<Arc<StructureAlgebra>, ScenarioError> {
            let spec = algebra.ok_or_else(|| ScenarioError::at("algebra", "required by this partial action"))?;
            self.algebra(spec, "algebra")
        };
        let invalid = |e: crate::partial_action::PartialActionError| ScenarioError::invalid(e.axiom(), e);
        match spec {
            ActionSpec::Explicit { idempotents, beta } => {
                let a = need_algebra()?;
                let d = a.dim();
                if idempotents.len() != n {
                    return Err(ScenarioError::at(
                        "partial_action.explicit.idempotents",
                        format!("expected {n} idempotents, found {}", idempotents.len()),
                    ));
                }
                let ids = idempotents
                    .iter()
                    .enumerate()
                    .map(|(g, e)| self.vector(e, d, &format!("partial_action.explicit.idempotents[{g}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                let maps = self.matrices(beta, n, d, "partial_action.explicit.beta")?;
                PartialAction::new(group, a, ids, maps).map_err(invalid)
            }
            ActionSpec::Global { automorphisms } => {
                let a = need_algebra()?;
                let maps = self.matrices(automorphisms, n, a.dim(), "partial_action.global.automorphisms")?;
                PartialAction::global(group, a, maps).map_err(invalid)
            }
            ActionSpec::RestrictGlobal { automorphisms, idempotent } => {
                let b = need_algebra()?;
                let d = b.dim();
                let maps = self.matrices(automorphisms, n, d, "partial_action.restrict_global.automorphisms")?;
                let e = self.vector(idempotent, d, "partial_action.restrict_global.idempotent")?;
                let global = PartialAction::global(group, b, maps).map_err(invalid)?;
                PartialAction::restrict_global(&global, &e).map_err(invalid)
            }
            ActionSpec::TrivialSplit { r, s } => {
                let r = self.algebra(r, "partial_action.trivial_split.r")?;
                let s = self.algebra(s, "partial_action.trivial_split.s")?;
                PartialAction::trivial_from_split(&r, &s, group).map_err(invalid)
            }
        }
    }

    fn hopf(&self, spec: &HopfStructure) -> Result<HopfData, ScenarioError> {
        match spec {
            HopfStructure::Sweedler => Ok(sweedler(self.field)),
            HopfStructure::GroupAlgebra(g) => Ok(group_hopf(self.field, &self.group(g)?)),
            HopfStructure::Explicit { algebra, comult, counit, antipode } => {
                let h = self.algebra(algebra, "hopf.structure.explicit.algebra")?;
                let n = h.dim();
                let comult = self.matrix(comult, n * n, n, "hopf.structure.explicit.comult")?;
                let counit = self.vector(counit, n, "hopf.structure.explicit.counit")?;
                let antipode = self.matrix(antipode, n, n, "hopf.structure.explicit.antipode")?;
                make_hopf(h, comult, counit, antipode).map_err(|e| ScenarioError::invalid(e.axiom(), e))
            }
        }
    }
}

/// Parses and validates a scenario document. `field_override` replaces the
/// field named in the document.
pub fn load_scenario(text: &str, field_override: Option<Field>) -> Result<Scenario, ScenarioError> {
    let file: ScenarioFile = serde_json::from_str(text)
        .map_err(|e| ScenarioError::at(format!("line {}, column {}", e.line(), e.column()), e))?;
    let field = match field_override {
        Some(f) => f,
        None => Field::parse(&file.field).map_err(|e| ScenarioError::at("field", e))?,
    };
    let loader = Loader { field };

    let action = match &file.partial_action {
        Some(spec) => {
            let g = file.group.as_ref().ok_or_else(|| ScenarioError::at("group", "required by partial_action"))?;
            let group = Arc::new(loader.group(g)?);
            Some(Arc::new(loader.action(spec, group, file.algebra.as_ref())?))
        }
        None => None,
    };

    if file.hopf_lift && file.hopf.is_some() {
        return Err(ScenarioError::at("hopf", "give either hopf_lift or an explicit hopf block, not both"));
    }
    let hopf_err = |e: crate::hopf::PartialHopfError| ScenarioError::invalid(e.axiom(), e);
    let hopf = if file.hopf_lift {
        let pa = action.as_ref().ok_or_else(|| ScenarioError::at("hopf_lift", "requires a partial_action"))?;
        Some(Arc::new(lift_group_partial_action(pa).map_err(hopf_err)?))
    } else if let Some(spec) = &file.hopf {
        let h = Arc::new(loader.hopf(&spec.structure)?);
        let a = match &action {
            Some(pa) => pa.algebra().clone(),
            None => {
                let spec = file.algebra.as_ref().ok_or_else(|| ScenarioError::at("algebra", "required by hopf"))?;
                loader.algebra(spec, "algebra")?
            }
        };
        let d = a.dim();
        let maps = match &spec.action {
            HopfActionSpec::Counit => h
                .counit()
                .iter()
                .map(|c| {
                    let mut m = Mat::zeros(field, d, d);
                    for i in 0..d {
                        m.set(i, i, c.clone());
                    }
                    m
                })
                .collect(),
            HopfActionSpec::Matrices(ms) => loader.matrices(ms, h.dim(), d, "hopf.action.matrices")?,
        };
        Some(Arc::new(make_partial_hopf_action(h, a, maps).map_err(hopf_err)?))
    } else {
        None
    };

    if action.is_none() && hopf.is_none() {
        return Err(ScenarioError::at("partial_action", "a scenario needs a partial action or Hopf data"));
    }
    let suites = match &file.suites {
        Some(list) => list.iter().copied().collect(),
        None => Suite::ALL.into_iter().collect(),
    };
    Ok(Scenario {
        name: file.name,
        field,
        action,
        hopf,
        hopf_is_lift: file.hopf_lift,
        suites,
        expected: file.expected,
    })
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Replaces the scenario's own suite selection when non-empty.
    pub suites: Vec<Suite>,
    /// Records wall time per check. Off by default so output is reproducible.
    pub timings: bool,
}

/// Reads, validates and runs a scenario file.
pub fn run_scenario(
    path: &Path,
    field_override: Option<Field>,
    opts: &RunOptions,
) -> Result<Report, ScenarioError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ScenarioError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let scenario = load_scenario(&text, field_override)?;
    Ok(run(&scenario, opts))
}

fn timed(report: &mut Report, timings: bool, f: impl FnOnce() -> Vec<Check>) {
    let start = Instant::now();
    let mut checks = f();
    if timings {
        let us = start.elapsed().as_micros() as u64;
        for c in &mut checks {
            c.wall_time_us = Some(us);
        }
    }
    report.extend(checks);
}

/// Runs the selected suites in dependency order: partial action, skew ring,
/// smash product, duality map, Hopf layer; then compares expectations.
pub fn run(s: &Scenario, opts: &RunOptions) -> Report {
    let suites: BTreeSet<Suite> =
        if opts.suites.is_empty() { s.suites.clone() } else { opts.suites.iter().copied().collect() };
    let on = |x: Suite| suites.contains(&x);
    let mut report = Report::new(s.name.clone());
    report.record("field_characteristic", match s.field {
        Field::Rational => 0,
        Field::Prime(p) => p as i64,
    });

    let mut skew: Option<Arc<SkewGroupRing>> = None;
    let mut duality: Option<DualityData> = None;

    if let Some(pa) = &s.action {
        report.record("group_order", pa.group().order());
        report.record("dim_algebra", pa.algebra().dim());
        let ideal_dims: Vec<String> = pa.group().elements().map(|g| pa.ideal(g).dim().to_string()).collect();
        report.push(
            Check::pass("partial_action.axioms")
                .with("global", pa.is_global() as i64)
                .note(format!("dim D_g: {}", ideal_dims.join(" "))),
        );
        if on(Suite::Lemma1) {
            timed(&mut report, opts.timings, || pa.verify_lemma1());
        }

        let need_skew = on(Suite::Grading)
            || on(Suite::Duality)
            || on(Suite::Separability)
            || on(Suite::Centers)
            || (on(Suite::Hopf) && s.hopf_is_lift);
        if need_skew {
            match build_skew(pa.clone()) {
                Ok(k) => {
                    report.record("dim_skew", k.dim());
                    skew = Some(Arc::new(k));
                }
                Err(e) => report.push(Check::fail("skew.build", e.to_string())),
            }
        }
        if let (true, Some(k)) = (on(Suite::Grading), &skew) {
            timed(&mut report, opts.timings, || {
                let assoc = k.algebra().constants().associativity_witness().map(|(i, j, l)| {
                    let lab = |x| k.algebra().label(x).to_string();
                    format!("({} {}) {}", lab(i), lab(j), lab(l))
                });
                let dim = k.dim();
                let mut checks = vec![
                    Check::from_witness("skew.associative", assoc).with("triples", dim * dim * dim),
                    strong_grading_test(k).to_check(),
                ];
                checks.extend(grading_check(k).checks);
                checks
            });
        }

        let need_smash = on(Suite::Duality) || on(Suite::Separability) || on(Suite::Centers);
        let mut smash: Option<Arc<SmashAlgebra>> = None;
        if let (true, Some(k)) = (need_smash, &skew) {
            match build_smash(k.clone()) {
                Ok(b) => {
                    report.record("dim_smash", b.dim());
                    smash = Some(Arc::new(b));
                }
                Err(e) => report.push(Check::fail("smash.build", e.to_string())),
            }
        }
        if let Some(b) = &smash {
            match build_phi(b.clone()) {
                Ok(d) => {
                    report.record("dim_kernel", d.kernel().dim());
                    report.record("dim_corner", d.corner().dim());
                    report.record("dim_ideal_i", d.ideal_i().dim());
                    report.record("dim_matrix_ring", d.target().algebra.dim());
                    duality = Some(d);
                }
                Err(e) => report.push(Check::fail("duality.build", e.to_string())),
            }
        }
        if let (true, Some(d)) = (on(Suite::Duality), &duality) {
            timed(&mut report, opts.timings, || {
                let mut checks = smash_check(d.smash()).checks;
                for r in [phi_check(d), kernel_check(d), corner_check(d), theorem_check(d), injectivity_on_skew(d)] {
                    checks.extend(r.checks);
                }
                checks
            });
        }
        if let (true, Some(d)) = (on(Suite::Separability), &duality) {
            timed(&mut report, opts.timings, || separability_check(d).checks);
        }
        if let (true, Some(d)) = (on(Suite::Centers), &duality) {
            let mut dims = Vec::new();
            timed(&mut report, opts.timings, || {
                let (checks, d) = center_checks(pa, d);
                dims = d;
                checks
            });
            for (k, v) in dims {
                report.record(k, v);
            }
        }
    }

    if on(Suite::Hopf) {
        match &s.hopf {
            Some(pha) => {
                let lifted = s.hopf_is_lift.then(|| (s.action.as_ref().unwrap(), skew.as_ref()));
                let mut dims = Vec::new();
                timed(&mut report, opts.timings, || {
                    let (checks, d) = hopf_checks(pha, lifted);
                    dims = d;
                    checks
                });
                for (k, v) in dims {
                    report.record(k, v);
                }
            }
            None => report.push(Check::skipped("hopf", "scenario has no Hopf data")),
        }
    }

    compare_expectations(&mut report, &s.expected);
    report
}

/// Dimension of the center of the subalgebra spanned by `u`.
fn self_center_dim(m: &StructureAlgebra, u: &Subspace) -> usize {
    let basis = u.basis();
    let k = basis.len();
    if k == 0 {
        return 0;
    }
    let field = m.field();
    // x = Σ c_i u_i commutes with every u_j
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for uj in basis {
        let comms: Vec<Vec<Scalar>> =
            basis.iter().map(|ui| vector::sub(&m.mul(ui, uj), &m.mul(uj, ui))).collect();
        for coord in 0..m.dim() {
            rows.push(comms.iter().map(|c| c[coord].clone()).collect());
        }
    }
    Mat::from_rows(field, k, rows).kernel_basis().dim()
}

fn center_checks(pa: &PartialAction, d: &DualityData) -> (Vec<Check>, Vec<(String, usize)>) {
    let b = d.smash().algebra();
    let m = &d.target().algebra;
    let zb = b.center_basis().dim();
    let z_corner = self_center_dim(m, d.corner());
    let z_kernel = self_center_dim(b, d.kernel());
    let mut checks = vec![Check::pass("centers.decomposition")
        .require(zb == z_corner + z_kernel, || {
            format!("dim Z(B) = {zb}, dim Z(corner) + dim Z(Ker) = {z_corner} + {z_kernel}")
        })
        .with("dim_center_smash", zb)
        .with("dim_center_corner", z_corner)
        .with("dim_center_kernel", z_kernel)];
    let mut dims = vec![("dim_center_smash".to_string(), zb)];
    if pa.is_global() {
        let zm = m.center_basis().dim();
        dims.push(("dim_center_matrix_ring".to_string(), zm));
        checks.push(
            Check::pass("centers.global_matches_matrix_ring")
                .require(zb == zm, || format!("dim Z(B) = {zb}, dim Z(M_n(A)) = {zm}"))
                .with("dim_center_matrix_ring", zm),
        );
    }
    (checks, dims)
}

fn hopf_checks(
    pha: &Arc<PartialHopfAction>,
    lifted: Option<(&Arc<PartialAction>, Option<&Arc<SkewGroupRing>>)>,
) -> (Vec<Check>, Vec<(String, usize)>) {
    let h = pha.hopf();
    let a = pha.algebra();
    let mut checks = vec![
        Check::pass("hopf.axioms").with("dim_hopf", h.dim()),
        Check::pass("hopf.partial_axioms").with("global", pha.is_global() as i64),
    ];
    let mut dims = vec![("dim_hopf".to_string(), h.dim())];
    if let Some((pa, _)) = lifted {
        let wit = pa.group().elements().find_map(|g| {
            (0..a.dim())
                .find(|&i| pha.act_basis(g, &a.basis_vector(i)) != pa.dot(g, &a.basis_vector(i)))
                .map(|i| format!("g = {}, a = {}", pa.group().label(g), a.label(i)))
        });
        checks.push(Check::from_witness("hopf.lift_matches_dot", wit));
    }
    let r = match reps(h.clone()) {
        Ok(r) => r,
        Err(e) => {
            checks.push(Check::fail("hopf.dual", e.to_string()));
            return (checks, dims);
        }
    };
    checks.extend(r.check().checks);
    checks.extend(partial_coaction_check(pha, &r).checks);
    let pp = phi_psi_maps(pha, &r);
    checks.extend(phi_psi_check(pha, &r, &pp).checks);
    let ps = partial_smash(pha);
    dims.push(("dim_partial_smash".to_string(), ps.sub().dim()));
    checks.extend(partial_smash_check(pha, &r, &ps).checks);
    if let Some((_, Some(skew))) = lifted {
        checks.push(grouplike_iso_check(pha, &ps, skew));
    }
    checks.extend(big_phi_check(pha, &r, &pp, &ps).checks);
    (checks, dims)
}

fn compare_expectations(report: &mut Report, expected: &BTreeMap<String, i64>) {
    if expected.is_empty() {
        return;
    }
    let mut check = Check::pass("expectations").with("compared", expected.len());
    let mut unmeasured = Vec::new();
    for (key, want) in expected {
        match report.measured.get(key) {
            Some(got) if got == want => {}
            Some(got) => check = check.fail_with(format!("{key}: expected {want}, measured {got}")),
            None => unmeasured.push(key.clone()),
        }
    }
    if !unmeasured.is_empty() {
        check = check.note(format!("not measured by the selected suites: {}", unmeasured.join(", ")));
    }
    report.push(check);
}

/// Scenarios shipped with the binary.
pub struct Bundled {
    pub file: &'static str,
    pub text: &'static str,
    /// `None` when the scenario must pass, otherwise the axiom it must violate.
    pub rejects: Option<&'static str>,
}

macro_rules! bundled {
    ($file:literal) => {
        Bundled { file: $file, text: include_str!(concat!("../fixtures/", $file)), rejects: None }
    };
    ($file:literal, $axiom:literal) => {
        Bundled { file: $file, text: include_str!(concat!("../fixtures/", $file)), rejects: Some($axiom) }
    };
}

pub const BUNDLED: &[Bundled] = &[
    bundled!("s1.json"),
    bundled!("global_z2_swap.json"),
    bundled!("z3_restriction.json"),
    bundled!("trivial_split_field.json"),
    bundled!("trivial_split_field2_z3.json"),
    bundled!("trivial_split_m2.json"),
    bundled!("s3_trivial_split.json"),
    bundled!("hopf_z2_explicit.json"),
    bundled!("sweedler_counit.json"),
    bundled!("sweedler_partial_on_field.json"),
    bundled!("corrupt_not_idempotent.json", "central_idempotent"),
    bundled!("corrupt_not_iso.json", "isomorphism_of_ideals"),
    bundled!("corrupt_axiom_ii.json", "axiom_ii"),
    bundled!("corrupt_axiom_iii.json", "axiom_iii"),
    bundled!("corrupt_hopf_axiom_2.json", "partial_hopf_axiom_2"),
];

