//! Lie algebras with a Hopf algebra action: module-algebra verification,
//! the grading induced by `c`, the graded identities satisfied by `v`,
//! invariant ideals and H-simplicity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cyclotomic::{q_binom, q_factorial, CycNum, CyclotomicField, Field};
use crate::error::{Error, Result};
use crate::exactla::{
    closure, eigenspace, is_zero_vector, operator_algebra_dim, random_vector, scale_vector, solve,
    sub_vectors, unit_vector, vector_json, Mat, SubspaceBasis, Vector,
};
use crate::hopf::{make_taft, HopfAlgebraTable, HopfKind};
use crate::liealg::{LieAlgebra, DEFAULT_SEED};
use crate::report::{Check, Report};

/// Number of random commutators of each length in the long-commutator check.
const LONG_COMMUTATOR_SAMPLES: usize = 24;

/// A Lie algebra `L` with an `H`-action, one matrix per basis element of `H`.
#[derive(Clone, PartialEq, Eq)]
pub struct HModuleLie {
    lie: LieAlgebra,
    hopf: HopfAlgebraTable,
    action: Vec<Mat>,
    generators: Vec<usize>,
}

impl std::fmt::Debug for HModuleLie {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HModuleLie({:?}, {:?})", self.lie, self.hopf)
    }
}

fn first_failure(report: &Report) -> Option<Error> {
    report.failures().next().map(|c| Error::Verification {
        check: c.check.clone(),
        witness: c.witness.clone().unwrap_or(Value::Null),
    })
}

fn mat_entry_witness(identity: &str, lhs: &Mat, rhs: &Mat) -> Option<Value> {
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs.get(i, j) != rhs.get(i, j) {
                return Some(json!({
                    "identity": identity,
                    "entry": [i, j],
                    "lhs": lhs.get(i, j).to_wire(),
                    "rhs": rhs.get(i, j).to_wire(),
                }));
            }
        }
    }
    None
}

impl HModuleLie {
    /// Taft module algebra from the matrices of `c` and `v`; every axiom is
    /// checked and the first failure is returned as an error with a witness.
    pub fn new_taft(lie: LieAlgebra, c: Mat, v: Mat) -> Result<Self> {
        let m = lie.conductor();
        let hopf = make_taft(m)?;
        make_hmodule(lie, hopf, c, v)
    }

    /// Arbitrary `H` with one action matrix per basis element of `H`.
    pub fn from_actions(lie: LieAlgebra, hopf: HopfAlgebraTable, action: Vec<Mat>) -> Result<Self> {
        if lie.conductor() != hopf.conductor() {
            return Err(Error::ConductorMismatch {
                left: lie.conductor(),
                right: hopf.conductor(),
            });
        }
        if action.len() != hopf.dim() {
            return Err(Error::DimensionMismatch {
                expected: hopf.dim(),
                found: action.len(),
            });
        }
        for a in &action {
            if a.rows() != lie.dim() || a.cols() != lie.dim() {
                return Err(Error::DimensionMismatch {
                    expected: lie.dim(),
                    found: a.rows().max(a.cols()),
                });
            }
        }
        let generators = (0..hopf.dim()).collect();
        let module = HModuleLie {
            lie,
            hopf,
            action,
            generators,
        };
        let report = module.verify_module_axioms();
        match first_failure(&report) {
            Some(e) => Err(e),
            None => Ok(module),
        }
    }

    /// Taft algebra acting through `C = I`, `V = 0`.
    pub fn trivial_taft(lie: LieAlgebra) -> Result<Self> {
        let f = lie.field().clone();
        let n = lie.dim();
        Self::new_taft(lie, Mat::identity(&f, n), Mat::zeros(&f, n, n))
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn hopf(&self) -> &HopfAlgebraTable {
        &self.hopf
    }

    pub fn field(&self) -> &Field {
        self.lie.field()
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    /// Matrix of the `i`-th basis element of `H`.
    pub fn action(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    /// Matrices of a generating set of `H` (for Taft: `C`, `V`).
    pub fn generator_matrices(&self) -> Vec<Mat> {
        self.generators.iter().map(|&i| self.action[i].clone()).collect()
    }

    /// `m` when `H` is the Taft algebra.
    pub fn taft_order(&self) -> Option<usize> {
        self.hopf.taft_order()
    }

    fn require_taft(&self) -> Result<usize> {
        self.taft_order()
            .ok_or_else(|| Error::Precondition("operation needs a Taft algebra action".into()))
    }

    pub fn c_matrix(&self) -> Option<&Mat> {
        self.hopf.taft_index(1, 0).map(|i| &self.action[i])
    }

    pub fn v_matrix(&self) -> Option<&Mat> {
        self.hopf.taft_index(0, 1).map(|i| &self.action[i])
    }

    /// Whether `v` acts by zero (false for non-Taft `H`).
    pub fn v_is_zero(&self) -> bool {
        self.v_matrix().is_some_and(Mat::is_zero)
    }

    /// Representation, unit, Taft relations and the module-algebra law.
    pub fn verify_module_axioms(&self) -> Report {
        let mut report = Report::new();
        let f = self.field();
        let n = self.dim();
        let h = &self.hopf;
        let d = h.dim();
        let id = Mat::identity(f, n);

        if let Some(m) = self.taft_order() {
            let c = self.c_matrix().expect("taft");
            let v = self.v_matrix().expect("taft");
            report.push(Check::from_witness(
                "vc = ζcv",
                mat_entry_witness("V·C = ζ·C·V", &(v * c), &(c * v).scale(&f.zeta())),
            ));
            report.push(Check::from_witness(
                "c^m = 1",
                mat_entry_witness("C^m = I", &c.pow(m as u32), &id),
            ));
            report.push(Check::from_witness(
                "v^m = 0",
                mat_entry_witness("V^m = 0", &v.pow(m as u32), &Mat::zeros(f, n, n)),
            ));
        }

        if let (Some(c), Some(v)) = (self.c_matrix(), self.v_matrix()) {
            let lie = &self.lie;
            let w = (0..n).find_map(|a| {
                (0..n).find_map(|b| {
                    let ea = unit_vector(f, n, a);
                    let eb = unit_vector(f, n, b);
                    let lhs = v.apply(lie.basis_bracket(a, b));
                    let mut rhs = lie.bracket(&c.apply(&ea), &v.apply(&eb));
                    for (r, x) in rhs.iter_mut().zip(lie.bracket(&v.apply(&ea), &eb)) {
                        *r += &x;
                    }
                    (lhs != rhs).then(|| {
                        json!({
                            "identity": "v[a,b] = [ca, vb] + [va, b]",
                            "basis": [lie.labels()[a], lie.labels()[b]],
                            "indices": [a, b],
                        })
                    })
                })
            });
            report.push(Check::from_witness("v skew-derivation", w));
        }

        let unit_action = self.combine_action(h.unit());
        report.push(Check::from_witness(
            "unit acts as identity",
            mat_entry_witness("ρ(1) = I", &unit_action, &id),
        ));

        let mut w = None;
        'rep: for i in 0..d {
            for j in 0..d {
                let lhs = self.combine_action(h.mul_basis(i, j));
                let rhs = &self.action[i] * &self.action[j];
                if let Some(mut e) = mat_entry_witness("ρ(xy) = ρ(x)ρ(y)", &lhs, &rhs) {
                    e["basis"] = json!([h.labels()[i], h.labels()[j]]);
                    w = Some(e);
                    break 'rep;
                }
            }
        }
        report.push(Check::from_witness("representation", w));

        let columns: Vec<Vec<Vector>> = self
            .action
            .iter()
            .map(|a| (0..n).map(|j| a.column(j)).collect())
            .collect();
        let mut w = None;
        'alg: for hi in 0..d {
            for a in 0..n {
                for b in 0..n {
                    let lhs = self.action[hi].apply(self.lie.basis_bracket(a, b));
                    let mut rhs = vec![f.zero(); n];
                    for (p, q, coef) in h.coproduct(hi) {
                        let br = self.lie.bracket(&columns[*p][a], &columns[*q][b]);
                        for (r, x) in rhs.iter_mut().zip(&br) {
                            r.add_mul(coef, x);
                        }
                    }
                    if lhs != rhs {
                        w = Some(json!({
                            "identity": "h[a,b] = [h(1)a, h(2)b]",
                            "h": h.labels()[hi],
                            "basis": [self.lie.labels()[a], self.lie.labels()[b]],
                            "indices": [a, b],
                            "residual": vector_json(&sub_vectors(&lhs, &rhs)),
                        }));
                        break 'alg;
                    }
                }
            }
        }
        report.push(Check::from_witness("module algebra", w));
        report
    }

    fn combine_action(&self, coeffs: &[CycNum]) -> Mat {
        let n = self.dim();
        let mut acc = Mat::zeros(self.field(), n, n);
        for (c, a) in coeffs.iter().zip(&self.action) {
            if !c.is_zero() {
                acc = acc.try_add(&a.scale(c)).expect("square");
            }
        }
        acc
    }

    /// Eigenspace decomposition of `C`.
    pub fn grading(&self) -> Result<Grading> {
        let m = self.require_taft()?;
        let f = self.field();
        let c = self.c_matrix().expect("taft");
        let components = (0..m)
            .map(|i| eigenspace(c, &f.zeta_pow(i as i64)))
            .collect::<Result<Vec<_>>>()?;
        let total: usize = components.iter().map(SubspaceBasis::dim).sum();
        if total != self.dim() {
            return Err(Error::verification(
                "grading is exhaustive",
                json!({ "component_dims": components.iter().map(|c| c.dim()).collect::<Vec<_>>(), "dim": self.dim() }),
            ));
        }
        for i in 0..m {
            for k in 0..m {
                let br = self.lie.bracket_subspaces(&components[i], &components[k]);
                if !components[(i + k) % m].contains_subspace(&br) {
                    return Err(Error::verification(
                        "bracket respects degrees",
                        json!({ "degrees": [i, k] }),
                    ));
                }
            }
        }
        Ok(Grading { components })
    }

    /// Closure of `seed` under every `ad b_i` and the action of `H`.
    pub fn h_invariant_ideal(&self, seed: &SubspaceBasis) -> Result<SubspaceBasis> {
        let mut ops = self.lie.ad_matrices();
        ops.extend(self.generator_matrices());
        closure(seed, &ops)
    }

    pub fn is_h_simple(&self) -> HSimplicity {
        self.is_h_simple_with_seed(DEFAULT_SEED)
    }

    pub fn is_h_simple_with_seed(&self, seed: u64) -> HSimplicity {
        let n = self.dim();
        let f = self.field();
        let derived = self.lie.derived_algebra();
        if derived.is_zero() {
            return HSimplicity::NotSimple {
                reason: "[L,L] = 0".into(),
                ideal: derived,
            };
        }
        let mut ops = self.lie.ad_matrices();
        ops.extend(self.generator_matrices());
        // A full operator algebra leaves no proper invariant subspace at all.
        let algebra_dim = operator_algebra_dim(f, n, &ops).expect("square ops");
        if algebra_dim == n * n {
            return HSimplicity::AbsolutelySimple { algebra_dim };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seeds = (0..n)
            .map(|i| unit_vector(f, n, i))
            .chain((0..2 * n).map(|_| random_vector(f, n, &mut rng)));
        for v in seeds {
            if is_zero_vector(&v) {
                continue;
            }
            let ideal = closure(&SubspaceBasis::span(f, n, [v]), &ops).expect("square ops");
            if !ideal.is_full() {
                return HSimplicity::NotSimple {
                    reason: "closure found a proper H-invariant ideal".into(),
                    ideal,
                };
            }
        }
        HSimplicity::Undetermined { algebra_dim }
    }

    /// Graded-simplicity: no nonzero proper `C`-invariant ideal.
    pub fn graded_simplicity(&self, seed: u64) -> Result<HSimplicity> {
        let grading = self.grading()?;
        let n = self.dim();
        let f = self.field();
        if self.lie.derived_algebra().is_zero() {
            return Ok(HSimplicity::NotSimple {
                reason: "[L,L] = 0".into(),
                ideal: SubspaceBasis::zero(f, n),
            });
        }
        let mut ops = self.lie.ad_matrices();
        ops.push(self.c_matrix().expect("taft").clone());
        let algebra_dim = operator_algebra_dim(f, n, &ops)?;
        if algebra_dim == n * n {
            return Ok(HSimplicity::AbsolutelySimple { algebra_dim });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seeds: Vec<Vector> = grading.homogeneous_basis().into_iter().map(|(_, v)| v).collect();
        for _ in 0..2 * n {
            let k = rng.gen_range(0..grading.components.len());
            if let Some(v) = grading.random_element(k, &mut rng) {
                seeds.push(v);
            }
        }
        for v in seeds {
            if is_zero_vector(&v) {
                continue;
            }
            let ideal = closure(&SubspaceBasis::span(f, n, [v]), &ops)?;
            if !ideal.is_full() {
                return Ok(HSimplicity::NotSimple {
                    reason: "closure found a proper graded ideal".into(),
                    ideal,
                });
            }
        }
        Ok(HSimplicity::Undetermined { algebra_dim })
    }

    pub fn verify_graded_lemmas(&self) -> Result<Report> {
        self.verify_graded_lemmas_with_seed(DEFAULT_SEED)
    }

    /// The identities satisfied by the skew-derivation `v` on homogeneous
    /// elements. Identities valid for every module algebra are always
    /// checked; those that need simplicity hypotheses are checked only when
    /// the hypotheses are certified and reported as not applicable otherwise.
    pub fn verify_graded_lemmas_with_seed(&self, seed: u64) -> Result<Report> {
        let m = self.require_taft()?;
        let f = self.field().clone();
        let grading = self.grading()?;
        let v = self.v_matrix().expect("taft").clone();
        let lie = &self.lie;
        let hb = grading.homogeneous_basis();
        let zeta_minus_one = |k: usize| &f.zeta_pow(k as i64) - &f.one();
        let mut report = Report::new();

        report.push(Check::pass("grading").with_detail(json!({ "component_dims": grading.dims() })));

        let w = (0..m).find_map(|k| {
            let target = &grading.components[(k + m - 1) % m];
            grading.components[k].vectors().iter().find_map(|x| {
                let vx = v.apply(x);
                (!target.contains(&vx)).then(|| json!({ "identity": "v L^(k) ⊆ L^(k-1)", "degree": k, "element": vector_json(x) }))
            })
        });
        report.push(Check::from_witness("v lowers degree", w));

        let mut w6 = None;
        let mut w7 = None;
        for (k, a) in &hb {
            let va = v.apply(a);
            for (l, b) in &hb {
                let vb = v.apply(b);
                let a_vb = lie.bracket(a, &vb);
                if w6.is_none() {
                    let lhs = scale_vector(&zeta_minus_one(*k), &a_vb);
                    let rhs = scale_vector(&zeta_minus_one(*l), &lie.bracket(&va, b));
                    if lhs != rhs {
                        w6 = Some(json!({
                            "identity": "(ζ^k-1)[a,vb] = (ζ^l-1)[va,b]",
                            "degrees": [k, l],
                            "a": vector_json(a),
                            "b": vector_json(b),
                        }));
                    }
                }
                if w7.is_none() {
                    let lhs = scale_vector(&zeta_minus_one(*l), &v.apply(&lie.bracket(a, b)));
                    let rhs = scale_vector(&zeta_minus_one(k + l), &a_vb);
                    if lhs != rhs {
                        w7 = Some(json!({
                            "identity": "(ζ^l-1)v[a,b] = (ζ^(k+l)-1)[a,vb]",
                            "degrees": [k, l],
                            "a": vector_json(a),
                            "b": vector_json(b),
                        }));
                    }
                }
            }
        }
        report.push(Check::from_witness("skew symmetry of v in brackets", w6));
        report.push(Check::from_witness("v of a homogeneous bracket", w7));

        let mut w5 = None;
        let mut triples = 0usize;
        'trip: for l in 1..m {
            for k in 1..m {
                for a in grading.components[l].vectors() {
                    for b in grading.components[k].vectors() {
                        for u in grading.components[m - k].vectors() {
                            triples += 1;
                            let lhs = scale_vector(
                                &zeta_minus_one(m - k),
                                &v.apply(&lie.bracket(a, &lie.bracket(b, u))),
                            );
                            let rhs = scale_vector(
                                &zeta_minus_one(l),
                                &lie.bracket(a, &lie.bracket(b, &v.apply(u))),
                            );
                            if lhs != rhs {
                                w5 = Some(json!({
                                    "identity": "(ζ^(m-k)-1)v[a,[b,u]] = (ζ^l-1)[a,[b,vu]]",
                                    "degrees": [l, k, m - k],
                                    "a": vector_json(a),
                                    "b": vector_json(b),
                                    "u": vector_json(u),
                                }));
                                break 'trip;
                            }
                        }
                    }
                }
            }
        }
        report.push(
            Check::from_witness("triple commutator identity", w5)
                .with_detail(json!({ "triples": triples })),
        );

        let v_zero = v.is_zero();
        let h_simple = self.is_h_simple_with_seed(seed);
        let graded = self.graded_simplicity(seed)?;
        report.push(Check::pass("hypotheses").with_detail(json!({
            "v_acts_by_zero": v_zero,
            "h_simple": h_simple.label(),
            "graded_simple": graded.label(),
            "seed": seed,
        })));
        let applicable = if v_zero {
            Err("v acts by zero")
        } else if !h_simple.is_absolutely_simple() {
            Err("H-simplicity is not certified")
        } else {
            Ok(())
        };

        let names = [
            "long commutator identity",
            "v kills L^(0)",
            "ker v = L^(0)",
            "v L^(k) = L^(k-1)",
            "phi bracket table",
            "curly bracket is proportional",
        ];
        if let Err(reason) = applicable {
            for name in names {
                report.push(Check::not_applicable(name, reason));
            }
            return Ok(report);
        }

        report.push(self.long_commutator_check(&grading, &v, seed));

        let w = grading.components[0].vectors().iter().find_map(|x| {
            let vx = v.apply(x);
            (!is_zero_vector(&vx)).then(|| json!({ "identity": "v L^(0) = 0", "element": vector_json(x) }))
        });
        report.push(Check::from_witness("v kills L^(0)", w));

        let ker = crate::exactla::kernel(&v);
        report.push(Check::from_witness(
            "ker v = L^(0)",
            (ker != grading.components[0]).then(|| {
                json!({ "identity": "ker v = L^(0)", "ker_dim": ker.dim(), "l0_dim": grading.components[0].dim() })
            }),
        ));

        let w = (1..m).find_map(|k| {
            let img = grading.components[k].image(&v);
            (img != grading.components[k - 1]).then(|| {
                json!({ "identity": "v L^(k) = L^(k-1)", "degree": k, "image_dim": img.dim(), "target_dim": grading.components[k - 1].dim() })
            })
        });
        report.push(Check::from_witness("v L^(k) = L^(k-1)", w));

        match PhiData::new(self, &grading) {
            Ok(phi) => {
                report.push(phi.bracket_table_check(self));
                report.push(match phi.proportionality(self) {
                    Ok(gamma) => Check::pass("curly bracket is proportional")
                        .with_detail(json!({ "gamma": gamma.to_wire() })),
                    Err(Error::Verification { witness, .. }) => {
                        Check::fail("curly bracket is proportional", witness)
                    }
                    Err(e) => Check::fail(
                        "curly bracket is proportional",
                        json!({ "error": e.to_string() }),
                    ),
                });
            }
            Err(e) => {
                let witness = json!({ "error": e.to_string() });
                report.push(Check::fail("phi bracket table", witness.clone()));
                report.push(Check::fail("curly bracket is proportional", witness));
            }
        }
        Ok(report)
    }

    /// Random right-normed commutators `[a_1,[a_2,…,[a_{s-1},a_s]]]` of
    /// homogeneous elements with `deg a_s > 0`, for `s = 3, 4`.
    fn long_commutator_check(&self, grading: &Grading, v: &Mat, seed: u64) -> Check {
        let m = grading.components.len();
        let f = self.field();
        let lie = &self.lie;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let nonzero: Vec<usize> = (0..m).filter(|&k| grading.components[k].dim() > 0).collect();
        let last_degrees: Vec<usize> = nonzero.iter().copied().filter(|&k| k > 0).collect();
        if last_degrees.is_empty() {
            return Check::not_applicable("long commutator identity", "no nonzero component of positive degree");
        }
        let mut samples = 0usize;
        for s in [3usize, 4] {
            for _ in 0..LONG_COMMUTATOR_SAMPLES {
                let mut degrees: Vec<usize> = (0..s - 1)
                    .map(|_| nonzero[rng.gen_range(0..nonzero.len())])
                    .collect();
                degrees.push(last_degrees[rng.gen_range(0..last_degrees.len())]);
                let elems: Vec<Vector> = degrees
                    .iter()
                    .map(|&k| grading.random_element(k, &mut rng).expect("nonzero component"))
                    .collect();
                let total: usize = degrees.iter().sum();
                let ks = degrees[s - 1];
                let nest = |last: Vector| {
                    elems[..s - 1].iter().rev().fold(last, |acc, a| lie.bracket(a, &acc))
                };
                let lhs = scale_vector(
                    &(&f.zeta_pow(ks as i64) - &f.one()),
                    &v.apply(&nest(elems[s - 1].clone())),
                );
                let rhs = scale_vector(
                    &(&f.zeta_pow(total as i64) - &f.one()),
                    &nest(v.apply(&elems[s - 1])),
                );
                samples += 1;
                if lhs != rhs {
                    return Check::fail(
                        "long commutator identity",
                        json!({
                            "identity": "(ζ^(k_s)-1) v[a_1,[…,a_s]] = (ζ^(Σk)-1) [a_1,[…,v a_s]]",
                            "degrees": degrees,
                            "elements": elems.iter().map(|e| vector_json(e)).collect::<Vec<_>>(),
                            "seed": seed,
                        }),
                    );
                }
            }
        }
        Check::pass("long commutator identity").with_detail(json!({ "samples": samples, "seed": seed }))
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "L": self.lie.to_json(),
            "m": self.lie.conductor(),
        });
        match self.hopf.kind() {
            HopfKind::Taft => {
                obj["H"] = json!("taft");
                obj["C"] = json!(self.c_matrix().expect("taft").to_wire());
                obj["V"] = json!(self.v_matrix().expect("taft").to_wire());
            }
            HopfKind::Custom => {
                obj["H"] = json!("custom");
                obj["hopf"] = self.hopf.to_json();
                obj["action"] = json!(self.action.iter().map(Mat::to_wire).collect::<Vec<_>>());
            }
        }
        obj
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let wire: HModuleWire = serde_json::from_value(value.clone())?;
        let lie = LieAlgebra::from_json(&wire.lie)?;
        if lie.conductor() != wire.m {
            return Err(Error::ConductorMismatch {
                left: wire.m,
                right: lie.conductor(),
            });
        }
        let field = CyclotomicField::get(wire.m)?;
        match wire.h.as_str() {
            "taft" => {
                let c = wire.c.ok_or_else(|| Error::Parse("missing \"C\"".into()))?;
                let v = wire.v.ok_or_else(|| Error::Parse("missing \"V\"".into()))?;
                Self::new_taft(lie, Mat::from_wire(&field, &c)?, Mat::from_wire(&field, &v)?)
            }
            "custom" => {
                let hopf = wire.hopf.ok_or_else(|| Error::Parse("missing \"hopf\"".into()))?;
                let hopf = HopfAlgebraTable::from_json(&hopf)?;
                let action = wire
                    .action
                    .ok_or_else(|| Error::Parse("missing \"action\"".into()))?
                    .iter()
                    .map(|a| Mat::from_wire(&field, a))
                    .collect::<Result<Vec<_>>>()?;
                Self::from_actions(lie, hopf, action)
            }
            other => Err(Error::Parse(format!("unknown H kind '{other}'"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct HModuleWire {
    #[serde(rename = "L")]
    lie: Value,
    #[serde(rename = "H")]
    h: String,
    m: usize,
    #[serde(rename = "C", default)]
    c: Option<Vec<Vec<Vec<String>>>>,
    #[serde(rename = "V", default)]
    v: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default)]
    hopf: Option<Value>,
    #[serde(default)]
    action: Option<Vec<Vec<Vec<Vec<String>>>>>,
}

/// Builds and verifies a Taft module algebra from `C` and `V`.
pub fn make_hmodule(lie: LieAlgebra, hopf: HopfAlgebraTable, c: Mat, v: Mat) -> Result<HModuleLie> {
    let m = hopf
        .taft_order()
        .ok_or_else(|| Error::Precondition("make_hmodule expects a Taft algebra".into()))?;
    if lie.conductor() != m {
        return Err(Error::ConductorMismatch {
            left: m,
            right: lie.conductor(),
        });
    }
    let n = lie.dim();
    for x in [&c, &v] {
        if x.rows() != n || x.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: x.rows().max(x.cols()),
            });
        }
    }
    let mut c_pows = vec![Mat::identity(lie.field(), n)];
    for i in 1..m {
        c_pows.push(&c_pows[i - 1] * &c);
    }
    let mut action = vec![Mat::zeros(lie.field(), n, n); m * m];
    for (i, ci) in c_pows.iter().enumerate() {
        let mut acc = ci.clone();
        for k in 0..m {
            action[k * m + i] = acc.clone();
            acc = &acc * &v;
        }
    }
    let generators = vec![1, m];
    let module = HModuleLie {
        lie,
        hopf,
        action,
        generators,
    };
    let report = module.verify_module_axioms();
    match first_failure(&report) {
        Some(e) => Err(e),
        None => Ok(module),
    }
}

/// `gl_2` over `Q` graded by diagonal and off-diagonal parts, with the dual
/// of the group algebra of `Z_2` acting by the two projections.
pub fn make_dual_idempotent_example() -> Result<HModuleLie> {
    let field = CyclotomicField::get(1)?;
    let gl2 = crate::liealg::make_gl(2, &field)?;
    let hopf = crate::hopf::make_dual_idempotent(1)?;
    let diag = |flags: [i64; 4]| {
        Mat::from_fn(&field, 4, 4, |i, j| {
            if i == j {
                field.from_int(flags[i])
            } else {
                field.zero()
            }
        })
    };
    HModuleLie::from_actions(gl2, hopf, vec![diag([1, 0, 0, 1]), diag([0, 1, 1, 0])])
}

/// The components `L^(0), …, L^(m-1)` of the grading induced by `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub components: Vec<SubspaceBasis>,
}

impl Grading {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(SubspaceBasis::dim).collect()
    }

    /// Concatenated component bases, tagged with their degree.
    pub fn homogeneous_basis(&self) -> Vec<(usize, Vector)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(k, c)| c.vectors().iter().map(move |v| (k, v.clone())))
            .collect()
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, x: &[CycNum]) -> Option<usize> {
        if is_zero_vector(x) {
            return None;
        }
        self.components.iter().position(|c| c.contains(x))
    }

    /// Matrix whose columns are [`Grading::homogeneous_basis`].
    pub fn basis_matrix(&self, field: &Field, n: usize) -> Mat {
        let cols: Vec<Vector> = self.homogeneous_basis().into_iter().map(|(_, v)| v).collect();
        Mat::from_columns(field, n, &cols)
    }

    pub fn random_element<R: Rng>(&self, k: usize, rng: &mut R) -> Option<Vector> {
        let comp = &self.components[k];
        if comp.is_zero() {
            return None;
        }
        loop {
            let coords = random_vector(comp.field(), comp.dim(), rng);
            if !is_zero_vector(&coords) {
                return Some(comp.combine(&coords));
            }
        }
    }
}

/// Outcome of an H-simplicity (or graded-simplicity) test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HSimplicity {
    AbsolutelySimple { algebra_dim: usize },
    NotSimple { reason: String, ideal: SubspaceBasis },
    Undetermined { algebra_dim: usize },
}

impl HSimplicity {
    pub fn is_absolutely_simple(&self) -> bool {
        matches!(self, HSimplicity::AbsolutelySimple { .. })
    }

    pub fn is_not_simple(&self) -> bool {
        matches!(self, HSimplicity::NotSimple { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            HSimplicity::AbsolutelySimple { .. } => "absolutely_simple",
            HSimplicity::NotSimple { .. } => "not_simple",
            HSimplicity::Undetermined { .. } => "undetermined",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            HSimplicity::AbsolutelySimple { algebra_dim } | HSimplicity::Undetermined { algebra_dim } => {
                json!({ "result": self.label(), "operator_algebra_dim": algebra_dim })
            }
            HSimplicity::NotSimple { reason, ideal } => json!({
                "result": self.label(),
                "reason": reason,
                "ideal_dim": ideal.dim(),
                "ideal": ideal.to_wire(),
            }),
        }
    }
}

/// The right inverse `φ` of `v` on the grading, with the data derived from it.
pub(crate) struct PhiData {
    pub m: usize,
    pub phi: Mat,
    pub l0: SubspaceBasis,
}

impl PhiData {
    pub fn new(module: &HModuleLie, grading: &Grading) -> Result<Self> {
        let phi = build_phi_from(module, grading)?;
        Ok(PhiData {
            m: grading.components.len(),
            phi,
            l0: grading.components[0].clone(),
        })
    }

    pub fn phi_pow(&self, x: &[CycNum], k: usize) -> Vector {
        (0..k).fold(x.to_vec(), |acc, _| self.phi.apply(&acc))
    }

    /// `{a,b} = (m-1)!_ζ [φ a, φ^{m-1} b]`.
    pub fn curly(&self, module: &HModuleLie, a: &[CycNum], b: &[CycNum]) -> Vector {
        let f = module.field();
        let br = module.lie().bracket(&self.phi_pow(a, 1), &self.phi_pow(b, self.m - 1));
        scale_vector(&q_factorial(f, self.m - 1), &br)
    }

    /// The scalar `γ` with `{a,b} = γ[a,b]` on all basis pairs of `L^(0)`.
    pub fn proportionality(&self, module: &HModuleLie) -> Result<CycNum> {
        let lie = module.lie();
        let basis = self.l0.vectors();
        let mut gamma: Option<CycNum> = None;
        for a in basis {
            for b in basis {
                let br = lie.bracket(a, b);
                if let Some(j) = br.iter().position(|x| !x.is_zero()) {
                    let cb = self.curly(module, a, b);
                    gamma.get_or_insert(cb[j].try_div(&br[j])?);
                }
            }
        }
        let gamma = gamma.ok_or_else(|| {
            Error::Precondition("[L^(0), L^(0)] = 0, so no scalar is determined".into())
        })?;
        for a in basis {
            for b in basis {
                let expected = scale_vector(&gamma, &lie.bracket(a, b));
                if self.curly(module, a, b) != expected {
                    return Err(Error::verification(
                        "curly bracket is proportional",
                        json!({
                            "identity": "{a,b} = γ[a,b]",
                            "a": vector_json(a),
                            "b": vector_json(b),
                            "gamma": gamma.to_wire(),
                        }),
                    ));
                }
            }
        }
        Ok(gamma)
    }

    /// `[φ^k a, φ^l b]` against the quantum binomial formula, for all basis
    /// pairs of `L^(0)` and all `0 ≤ k, l < m`.
    pub fn bracket_table_check(&self, module: &HModuleLie) -> Check {
        let f = module.field();
        let lie = module.lie();
        let m = self.m;
        let basis = self.l0.vectors();
        for (ia, a) in basis.iter().enumerate() {
            for (ib, b) in basis.iter().enumerate() {
                let ab = lie.bracket(a, b);
                let curly = self.curly(module, a, b);
                for k in 0..m {
                    for l in 0..m {
                        let lhs = lie.bracket(&self.phi_pow(a, k), &self.phi_pow(b, l));
                        let rhs = if k + l < m {
                            let coef = q_binom(f, k + l, k).expect("k + l < m");
                            scale_vector(&coef, &self.phi_pow(&ab, k + l))
                        } else {
                            let coef = q_factorial(f, k + l - m)
                                .try_div(&(&q_factorial(f, k) * &q_factorial(f, l)))
                                .expect("k, l < m");
                            scale_vector(&coef, &self.phi_pow(&curly, k + l - m))
                        };
                        if lhs != rhs {
                            return Check::fail(
                                "phi bracket table",
                                json!({
                                    "identity": "[φ^k a, φ^l b] by quantum binomials",
                                    "k": k,
                                    "l": l,
                                    "a_index": ia,
                                    "b_index": ib,
                                }),
                            );
                        }
                    }
                }
            }
        }
        Check::pass("phi bracket table")
    }
}

/// The map `φ` with `vφ = id` on `L^(0..m-2)`, raising degree by one and
/// vanishing on `L^(m-1)`.
pub fn build_phi(module: &HModuleLie) -> Result<Mat> {
    let grading = module.grading()?;
    build_phi_from(module, &grading)
}

fn build_phi_from(module: &HModuleLie, grading: &Grading) -> Result<Mat> {
    let f = module.field();
    let n = module.dim();
    let m = grading.components.len();
    let v = module.v_matrix().expect("taft");
    let mut images: Vec<Vector> = Vec::with_capacity(n);
    for k in 0..m {
        let comp = &grading.components[k];
        if k == m - 1 {
            images.extend(comp.vectors().iter().map(|_| vec![f.zero(); n]));
            continue;
        }
        let upper = &grading.components[k + 1];
        if upper.dim() != comp.dim() {
            return Err(Error::verification(
                "v is bijective between components",
                json!({ "degrees": [k + 1, k], "dims": [upper.dim(), comp.dim()] }),
            ));
        }
        let cols: Vec<Vector> = upper.vectors().iter().map(|u| v.apply(u)).collect();
        let w = Mat::from_columns(f, n, &cols);
        for y in comp.vectors() {
            let coords = solve(&w, y).ok_or_else(|| {
                Error::verification(
                    "v is bijective between components",
                    json!({ "degrees": [k + 1, k], "missing": vector_json(y) }),
                )
            })?;
            images.push(upper.combine(&coords));
        }
        if crate::exactla::rank(&w) != comp.dim() {
            return Err(Error::verification(
                "v is bijective between components",
                json!({ "degrees": [k + 1, k], "reason": "not injective" }),
            ));
        }
    }
    let g = grading.basis_matrix(f, n);
    let g_inv = g
        .inverse()
        .ok_or_else(|| Error::verification("grading basis is invertible", Value::Null))?;
    let img = Mat::from_columns(f, n, &images);
    Ok(&img * &g_inv)
}
