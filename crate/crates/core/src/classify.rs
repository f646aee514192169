//! Recognition of a Taft module Lie algebra as one of the canonical cases,
//! with certificates for every claim.

use serde_json::{json, Value};

use crate::construct::{build_l_alpha, build_l_gamma, iso_shift, verify_iso, Family, FamilyParams, HModuleIso};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::exactla::{closure, kernel, Mat, SubspaceBasis};
use crate::hmod::{Grading, HModuleLie, PhiData};
use crate::liealg::LieAlgebra;
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    VZero,
    SemisimpleNonsimple,
    NonSemisimple,
    Unrecognized,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::VZero => "v_zero",
            Case::SemisimpleNonsimple => "semisimple_nonsimple",
            Case::NonSemisimple => "non_semisimple",
            Case::Unrecognized => "unrecognized",
        }
    }
}

/// `(dim, radical dim, Killing rank)`.
pub type Profile = (usize, usize, usize);

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub case: Case,
    pub gamma: Option<CycNum>,
    pub t: Option<usize>,
    pub b_profile: Profile,
    pub grading: Vec<usize>,
    pub certificates: Report,
}

impl ClassificationResult {
    pub fn is_recognized(&self) -> bool {
        self.case != Case::Unrecognized
    }

    pub fn to_json(&self) -> Value {
        let failed: Vec<&str> = self.certificates.failures().map(|c| c.check.as_str()).collect();
        let mut v = json!({
            "case": self.case.name(),
            "gamma": self.gamma.as_ref().map(|g| g.to_string()),
            "gamma_coeffs": self.gamma.as_ref().map(CycNum::to_wire),
            "t": self.t,
            "B_profile": {
                "dim": self.b_profile.0,
                "radical_dim": self.b_profile.1,
                "killing_rank": self.b_profile.2,
            },
            "grading_dims": self.grading,
            "certificates": self.certificates,
        });
        if !failed.is_empty() {
            v["failed_certificates"] = json!(failed);
        }
        v
    }
}

fn phi_data(m: &HModuleLie, grading: &Grading) -> Result<PhiData> {
    if m.v_is_zero() {
        return Err(Error::Precondition("v acts by zero".into()));
    }
    PhiData::new(m, grading)
}

/// The scalar `γ` with `{a,b} = γ[a,b]` on `L^(0)`.
pub fn extract_gamma(m: &HModuleLie) -> Result<CycNum> {
    let grading = m.grading()?;
    phi_data(m, &grading)?.proportionality(m)
}

fn positive_part(grading: &Grading) -> SubspaceBasis {
    grading.components[1..]
        .iter()
        .fold(SubspaceBasis::zero(grading.components[0].field(), grading.components[0].ambient_dim()), |acc, c| acc.sum(c))
}

fn simple_core(lie: &LieAlgebra, l0: &SubspaceBasis, certs: &mut Report) -> Option<LieAlgebra> {
    let b = match lie.restrict(l0) {
        Ok(b) => b,
        Err(e) => {
            certs.push(Check::fail("L^(0) is a simple subalgebra", json!({ "error": e.to_string() })));
            return None;
        }
    };
    let s = b.is_simple();
    certs.push(if s.is_simple() {
        Check::pass("L^(0) is a simple subalgebra").with_detail(s.to_json())
    } else {
        Check::fail("L^(0) is a simple subalgebra", s.to_json())
    });
    Some(b)
}

/// Maps `φ^k(g_i)` of `L(B_0, γ)` to `φ^k(g_i)` of `M`, where `g_i` is the
/// basis of `L^(0)` that defines `B_0`, and verifies it.
fn structure_table_certificate(m: &HModuleLie, phi: &PhiData, b0: &LieAlgebra, gamma: &CycNum, certs: &mut Report) {
    let name = "structure table matches the canonical family";
    let canonical = match build_l_gamma(b0, phi.m, gamma) {
        Ok(c) => c,
        Err(e) => {
            certs.push(Check::fail(name, json!({ "error": e.to_string() })));
            return;
        }
    };
    let cols: Vec<_> = (0..phi.m)
        .flat_map(|k| phi.l0.vectors().iter().map(move |g| phi.phi_pow(g, k)))
        .collect();
    let iso = HModuleIso {
        source: canonical,
        target: m.clone(),
        matrix: Mat::from_columns(m.field(), m.dim(), &cols),
    };
    let r = verify_iso(&iso);
    certs.push(match r.failures().next() {
        None => Check::pass(name),
        Some(c) => Check::fail(name, json!({ "failed": c.check, "witness": c.witness })),
    });
}

fn ker_v_certificate(m: &HModuleLie, grading: &Grading, certs: &mut Report) {
    let ker = kernel(m.v_matrix().expect("taft"));
    certs.push(Check::from_witness(
        "ker v = L^(0)",
        (ker != grading.components[0])
            .then(|| json!({ "ker_dim": ker.dim(), "l0_dim": grading.components[0].dim() })),
    ));
}

/// Decision tree over `v = 0`, semisimple and non-semisimple `L`.
pub fn classify(m: &HModuleLie) -> Result<ClassificationResult> {
    let order = m
        .taft_order()
        .ok_or_else(|| Error::Precondition("classification needs a Taft algebra action".into()))?;
    let hs = m.is_h_simple();
    if hs.is_not_simple() {
        return Err(Error::Precondition("the algebra is not H-simple".into()));
    }
    let grading = m.grading()?;
    let lie = m.lie();
    let mut certs = Report::new();
    certs.push(Check::pass("H-simplicity is not refuted").with_detail(hs.to_json()));

    if m.v_is_zero() {
        certs.push(Check::pass("v acts by zero"));
        return Ok(ClassificationResult {
            case: Case::VZero,
            gamma: None,
            t: None,
            b_profile: lie.profile(),
            grading: grading.dims(),
            certificates: certs,
        });
    }

    let rad = lie.solvable_radical();
    let mut result = if rad.is_zero() {
        certs.push(Check::pass("solvable radical is zero"));
        classify_semisimple(m, &grading, certs)
    } else {
        certs.push(Check::pass("solvable radical is nonzero").with_detail(json!({ "dim": rad.dim() })));
        classify_non_semisimple(m, &grading, &rad, order, certs)
    };
    if !result.certificates.passed() {
        result.case = Case::Unrecognized;
    }
    Ok(result)
}

fn classify_semisimple(m: &HModuleLie, grading: &Grading, mut certs: Report) -> ClassificationResult {
    ker_v_certificate(m, grading, &mut certs);
    let mut out = ClassificationResult {
        case: Case::SemisimpleNonsimple,
        gamma: None,
        t: None,
        b_profile: (0, 0, 0),
        grading: grading.dims(),
        certificates: Report::new(),
    };
    let phi = match phi_data(m, grading) {
        Ok(p) => p,
        Err(e) => {
            certs.push(Check::fail("phi exists", json!({ "error": e.to_string() })));
            out.certificates = certs;
            return out;
        }
    };
    certs.push(Check::pass("phi exists"));
    let b0 = simple_core(m.lie(), &grading.components[0], &mut certs);
    match phi.proportionality(m) {
        Ok(g) => {
            certs.push(Check::from_witness(
                "gamma is nonzero",
                g.is_zero().then(|| json!({ "gamma": g.to_wire() })),
            ));
            if let Some(b0) = &b0 {
                structure_table_certificate(m, &phi, b0, &g, &mut certs);
                out.b_profile = b0.profile();
            }
            out.gamma = Some(g);
        }
        Err(e) => certs.push(Check::fail("curly bracket is proportional", json!({ "error": e.to_string() }))),
    }
    out.certificates = certs;
    out
}

fn classify_non_semisimple(
    m: &HModuleLie,
    grading: &Grading,
    rad: &SubspaceBasis,
    order: usize,
    mut certs: Report,
) -> ClassificationResult {
    let lie = m.lie();
    let v = m.v_matrix().expect("taft");
    let mut out = ClassificationResult {
        case: Case::NonSemisimple,
        gamma: None,
        t: None,
        b_profile: (0, 0, 0),
        grading: grading.dims(),
        certificates: Report::new(),
    };
    certs.push(Check::from_witness(
        "radical is nilpotent",
        (!lie.is_nilpotent_subspace(rad)).then(|| json!({ "radical_dim": rad.dim() })),
    ));
    let pos = positive_part(grading);
    certs.push(Check::from_witness(
        "radical is the positive part of the grading",
        (*rad != pos).then(|| json!({ "radical_dim": rad.dim(), "positive_dim": pos.dim() })),
    ));
    ker_v_certificate(m, grading, &mut certs);
    let b0 = simple_core(lie, &grading.components[0], &mut certs);

    // Ñ: a minimal graded ideal inside the last nonzero term of the lower central series of R.
    let lcs = lie.lower_central_series(rad);
    let last = lcs.iter().rev().find(|s| !s.is_zero()).cloned().unwrap_or_else(|| rad.clone());
    let mut ops = lie.ad_matrices();
    ops.push(m.c_matrix().expect("taft").clone());
    let homogeneous = |u: &SubspaceBasis| -> Vec<Vec<CycNum>> {
        grading
            .components
            .iter()
            .flat_map(|c| c.intersection(u).vectors().to_vec())
            .collect()
    };
    let tilde = homogeneous(&last)
        .into_iter()
        .filter_map(|x| closure(&SubspaceBasis::span(m.field(), m.dim(), [x]), &ops).ok())
        .min_by_key(SubspaceBasis::dim);
    let Some(tilde) = tilde else {
        certs.push(Check::fail("minimal graded ideal", json!({ "reason": "no homogeneous element" })));
        out.certificates = certs;
        return out;
    };
    let minimal = homogeneous(&tilde).into_iter().all(|x| {
        closure(&SubspaceBasis::span(m.field(), m.dim(), [x]), &ops).is_ok_and(|c| c == tilde)
    });
    certs.push(
        Check::from_witness(
            "minimal graded ideal",
            (!minimal).then(|| json!({ "dim": tilde.dim() })),
        )
        .with_detail(json!({ "dim": tilde.dim() })),
    );

    // N_k = Σ_{i ≤ k} v^i Ñ, until it fills L.
    let mut levels = vec![tilde.clone()];
    let mut power = tilde.clone();
    while !levels.last().expect("nonempty").is_full() && levels.len() <= order {
        power = power.image(v);
        let next = levels.last().expect("nonempty").sum(&power);
        if next == *levels.last().expect("nonempty") {
            break;
        }
        levels.push(next);
    }
    let full = levels.last().expect("nonempty").is_full();
    let t = levels.len() - 1;
    let ker_dim = kernel(v).dim();
    let steps: Vec<usize> = levels
        .iter()
        .enumerate()
        .map(|(k, n)| n.dim() - if k == 0 { 0 } else { levels[k - 1].dim() })
        .collect();
    certs.push(
        Check::from_witness("N_t = L", (!full).then(|| json!({ "dims": levels.iter().map(|l| l.dim()).collect::<Vec<_>>() })))
            .with_detail(json!({ "t": t })),
    );
    certs.push(Check::from_witness(
        "dim N_k/N_(k-1) = dim ker v",
        steps.iter().any(|&s| s != ker_dim).then(|| json!({ "steps": steps, "ker_dim": ker_dim })),
    ));
    certs.push(Check::from_witness(
        "R = N_(t-1)",
        (t == 0 || levels[t - 1] != *rad).then(|| json!({ "t": t, "radical_dim": rad.dim() })),
    ));
    certs.push(Check::from_witness(
        "t + 1 = m",
        (t + 1 != order).then(|| json!({ "t": t, "m": order })),
    ));
    out.t = Some(t);

    match phi_data(m, grading) {
        Ok(phi) => {
            let table = phi.bracket_table_check(m);
            certs.push(Check { check: "bracket table".into(), ..table });
            match phi.proportionality(m) {
                Ok(g) => {
                    certs.push(Check::from_witness(
                        "wrap-around branch vanishes",
                        (!g.is_zero()).then(|| json!({ "gamma": g.to_wire() })),
                    ));
                    if let Some(b0) = &b0 {
                        structure_table_certificate(m, &phi, b0, &g, &mut certs);
                    }
                    out.gamma = Some(g);
                }
                Err(e) => certs.push(Check::fail("wrap-around branch vanishes", json!({ "error": e.to_string() }))),
            }
        }
        Err(e) => certs.push(Check::fail("phi exists", json!({ "error": e.to_string() }))),
    }
    if let Some(b0) = &b0 {
        out.b_profile = b0.profile();
    }
    out.certificates = certs;
    out
}

/// Outcome of comparing two members of the `L_α` family.
#[derive(Clone, Debug)]
pub struct FamilyComparison {
    pub isomorphic: bool,
    pub shift: Option<usize>,
    pub certificate: Option<Report>,
    pub gammas: (Option<CycNum>, Option<CycNum>),
}

impl FamilyComparison {
    pub fn to_json(&self) -> Value {
        let g = |x: &Option<CycNum>| x.as_ref().map(|g| g.to_string());
        json!({
            "isomorphic": self.isomorphic,
            "k": self.shift,
            "certificate": self.certificate,
            "gamma_invariants": [g(&self.gammas.0), g(&self.gammas.1)],
        })
    }
}

/// Same-`B`, same-`m` comparison: isomorphic iff `α_2 = ζ^k α_1`.
pub fn are_isomorphic_family(p1: &FamilyParams, p2: &FamilyParams) -> Result<FamilyComparison> {
    if p1.family != Family::LAlpha || p2.family != Family::LAlpha {
        return Err(Error::Precondition("both parameters must be from the L_alpha family".into()));
    }
    if p1.m != p2.m {
        return Err(Error::Precondition("different conductors".into()));
    }
    if p1.b != p2.b {
        return Err(Error::Precondition("different B".into()));
    }
    let f = p1.b.field();
    let gamma_of = |a: &CycNum| -> Result<Option<CycNum>> {
        if a.is_zero() {
            Ok(None)
        } else {
            extract_gamma(&build_l_alpha(&p1.b, p1.m, a)?).map(Some)
        }
    };
    let gammas = (gamma_of(&p1.scalar)?, gamma_of(&p2.scalar)?);
    let shift = (0..p1.m).find(|&k| &p1.scalar * &f.zeta_pow(k as i64) == p2.scalar);
    let certificate = match shift {
        Some(k) => Some(verify_iso(&iso_shift(&p1.b, p1.m, &p1.scalar, k, &Mat::identity(f, p1.b.dim()))?)),
        None => None,
    };
    let isomorphic = certificate.as_ref().is_some_and(Report::passed);
    Ok(FamilyComparison {
        isomorphic,
        shift,
        certificate,
        gammas,
    })
}
