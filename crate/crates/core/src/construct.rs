//! The two canonical families of Taft module Lie algebras and the explicit
//! isomorphisms between them.

use serde_json::{json, Value};

use crate::cyclotomic::{gaussian_binomial, q_binom, q_factorial, CycNum, Field};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, scale_vector, vector_json, zero_vector, Mat, Vector};
use crate::hmod::HModuleLie;
use crate::liealg::LieAlgebra;
use crate::report::{Check, Report};

pub use crate::hmod::build_phi;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    LAlpha,
    LGamma,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::LAlpha => "L_alpha",
            Family::LGamma => "L_gamma",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L_alpha" => Ok(Family::LAlpha),
            "L_gamma" => Ok(Family::LGamma),
            other => Err(Error::Parse(format!("unknown family '{other}'"))),
        }
    }
}

/// A member of one of the two families: `L_α(B)` or `L(B, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub b: LieAlgebra,
    pub m: usize,
    pub scalar: CycNum,
}

impl FamilyParams {
    /// Checks conductors and that `B` is not provably non-simple.
    pub fn new(family: Family, b: LieAlgebra, m: usize, scalar: CycNum) -> Result<Self> {
        if b.conductor() != m {
            return Err(Error::ConductorMismatch {
                left: m,
                right: b.conductor(),
            });
        }
        if scalar.conductor() != m {
            return Err(Error::ConductorMismatch {
                left: m,
                right: scalar.conductor(),
            });
        }
        if b.is_simple().is_not_simple() {
            return Err(Error::Precondition("B is not simple".into()));
        }
        Ok(FamilyParams {
            family,
            b,
            m,
            scalar,
        })
    }

    pub fn build(&self) -> Result<HModuleLie> {
        match self.family {
            Family::LAlpha => build_l_alpha(&self.b, self.m, &self.scalar),
            Family::LGamma => build_l_gamma(&self.b, self.m, &self.scalar),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.name(),
            "m": self.m,
            "scalar": self.scalar.to_wire(),
            "B_dim": self.b.dim(),
        })
    }
}

fn check_inputs(b: &LieAlgebra, m: usize, scalar: &CycNum) -> Result<Field> {
    if m == 0 {
        return Err(Error::InvalidConductor(m));
    }
    if b.conductor() != m {
        return Err(Error::ConductorMismatch {
            left: m,
            right: b.conductor(),
        });
    }
    if scalar.conductor() != m {
        return Err(Error::ConductorMismatch {
            left: m,
            right: scalar.conductor(),
        });
    }
    Ok(b.field().clone())
}

/// `m` copies of `B` with `c` cycling the copies and
/// `v(a_1, …, a_m) = α(a_1 - a_m, ζ(a_2 - a_1), …, ζ^{m-1}(a_m - a_{m-1}))`.
/// Basis element `i` of copy `j` has index `j·dim B + i`.
pub fn build_l_alpha(b: &LieAlgebra, m: usize, alpha: &CycNum) -> Result<HModuleLie> {
    let f = check_inputs(b, m, alpha)?;
    let d = b.dim();
    let n = m * d;
    let labels = (0..m)
        .flat_map(|j| b.labels().iter().map(move |l| format!("{l}[{j}]")))
        .collect();
    let lie = LieAlgebra::from_basis_brackets(&f, n, Some(labels), |x, y| {
        let (jx, ix) = (x / d, x % d);
        let (jy, iy) = (y / d, y % d);
        let mut out = zero_vector(&f, n);
        if jx == jy {
            for (k, c) in b.basis_bracket(ix, iy).iter().enumerate() {
                out[jx * d + k] = c.clone();
            }
        }
        out
    })?;
    let c = Mat::from_fn(&f, n, n, |r, s| {
        if r % d == s % d && r / d == (s / d + 1) % m {
            f.one()
        } else {
            f.zero()
        }
    });
    let mut v = Mat::zeros(&f, n, n);
    for j in 0..m {
        let here = alpha * &f.zeta_pow(j as i64);
        let next = -(alpha * &f.zeta_pow(j as i64 + 1));
        for i in 0..d {
            let col = j * d + i;
            *v.get_mut(col, col) += &here;
            *v.get_mut(((j + 1) % m) * d + i, col) += &next;
        }
    }
    HModuleLie::new_taft(lie, c, v)
}

/// The closed form for `v^ℓ` on `L_α(B)`, applied to a tuple of `m`
/// vectors of `B`.
pub fn v_power_closed_form(alpha: &CycNum, ell: usize, tuple: &[Vector]) -> Result<Vec<Vector>> {
    let f = alpha.field().clone();
    let m = f.conductor();
    if tuple.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: tuple.len(),
        });
    }
    if ell > m {
        return Err(Error::OutOfRange(format!("power {ell} exceeds m = {m}")));
    }
    let d = tuple.first().map_or(0, Vec::len);
    let q = f.zeta_pow(-1);
    let coeffs: Vec<CycNum> = (0..=ell)
        .map(|j| {
            let sign = if j % 2 == 0 { f.one() } else { -f.one() };
            let e = (j * j.saturating_sub(1) / 2) as i64;
            &(&sign * &f.zeta_pow(-e)) * &gaussian_binomial(&q, ell, j)
        })
        .collect();
    let lead = alpha.pow(ell as u32);
    Ok((0..m)
        .map(|k| {
            let mut acc = zero_vector(&f, d);
            for (j, cj) in coeffs.iter().enumerate() {
                let src = &tuple[(k + m * (ell + 1) - j) % m];
                for (x, y) in acc.iter_mut().zip(src) {
                    x.add_mul(cj, y);
                }
            }
            let s = &lead * &f.zeta_pow((ell * k) as i64);
            scale_vector(&s, &acc)
        })
        .collect())
}

fn phi_label(k: usize, l: &str) -> String {
    match k {
        0 => l.to_string(),
        1 => format!("φ{l}"),
        _ => format!("φ^{k}{l}"),
    }
}

/// `⊕_k φ^k(B)` with the quantum-binomial bracket and wrap-around
/// parameter `γ`; `c φ^k(b) = ζ^k φ^k(b)`, `v φ^k(b) = φ^{k-1}(b)`, `vB = 0`.
/// `φ^k(b_i)` has index `k·dim B + i`.
pub fn build_l_gamma(b: &LieAlgebra, m: usize, gamma: &CycNum) -> Result<HModuleLie> {
    let f = check_inputs(b, m, gamma)?;
    let d = b.dim();
    let n = m * d;
    let fact: Vec<CycNum> = (0..m).map(|k| q_factorial(&f, k)).collect();
    if fact.iter().any(CycNum::is_zero) {
        return Err(Error::Precondition("vanishing quantum factorial below m".into()));
    }
    let mut coef = vec![f.zero(); m * m];
    for k in 0..m {
        for l in 0..m {
            coef[k * m + l] = if k + l < m {
                q_binom(&f, k + l, k)?
            } else {
                let num = gamma * &fact[k + l - m];
                num.try_div(&(&fact[k] * &fact[l]))?
            };
        }
    }
    let labels = (0..m)
        .flat_map(|k| b.labels().iter().map(move |l| phi_label(k, l)))
        .collect();
    let lie = LieAlgebra::from_basis_brackets(&f, n, Some(labels), |x, y| {
        let (k, ix) = (x / d, x % d);
        let (l, iy) = (y / d, y % d);
        let target = (k + l) % m;
        let c = &coef[k * m + l];
        let mut out = zero_vector(&f, n);
        if !c.is_zero() {
            for (r, x) in b.basis_bracket(ix, iy).iter().enumerate() {
                if !x.is_zero() {
                    out[target * d + r] = c * x;
                }
            }
        }
        out
    })?;
    let c = Mat::from_fn(&f, n, n, |r, s| {
        if r == s {
            f.zeta_pow((r / d) as i64)
        } else {
            f.zero()
        }
    });
    let v = Mat::from_fn(&f, n, n, |r, s| {
        if s >= d && r + d == s {
            f.one()
        } else {
            f.zero()
        }
    });
    HModuleLie::new_taft(lie, c, v)
}

/// A linear map between two H-module Lie algebras, meant to be an isomorphism.
#[derive(Clone, Debug)]
pub struct HModuleIso {
    pub source: HModuleLie,
    pub target: HModuleLie,
    pub matrix: Mat,
}

impl HModuleIso {
    pub fn inverse(&self) -> Option<HModuleIso> {
        Some(HModuleIso {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "matrix": self.matrix.to_wire(),
        })
    }
}

/// `L(B, 1/(α^m(1-ζ)^m)) → L_α(B)`, sending `φ^k(b)` to
/// `(b, ζ^{-k}b, …, ζ^{-(m-1)k}b) / (α^k(1-ζ)^k k!_ζ)`.
pub fn iso_equivdef(b: &LieAlgebra, m: usize, alpha: &CycNum) -> Result<HModuleIso> {
    let f = check_inputs(b, m, alpha)?;
    if alpha.is_zero() {
        return Err(Error::Precondition("α must be nonzero".into()));
    }
    let one_minus_zeta = &f.one() - &f.zeta();
    let gamma = (alpha * &one_minus_zeta).pow(m as u32).inv()?;
    let source = build_l_gamma(b, m, &gamma)?;
    let target = build_l_alpha(b, m, alpha)?;
    let d = b.dim();
    let n = m * d;
    let scales: Vec<CycNum> = (0..m)
        .map(|k| {
            (&(alpha * &one_minus_zeta).pow(k as u32) * &q_factorial(&f, k))
                .inv()
                .expect("nonzero for k < m")
        })
        .collect();
    let matrix = Mat::from_fn(&f, n, n, |r, s| {
        let (j, ir) = (r / d, r % d);
        let (k, is) = (s / d, s % d);
        if ir == is {
            &scales[k] * &f.zeta_pow(-((j * k) as i64))
        } else {
            f.zero()
        }
    });
    Ok(HModuleIso {
        source,
        target,
        matrix,
    })
}

fn check_lie_iso(b: &LieAlgebra, psi: &Mat) -> Result<()> {
    let d = b.dim();
    if psi.rows() != d || psi.cols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: psi.rows().max(psi.cols()),
        });
    }
    if psi.inverse().is_none() {
        return Err(Error::Precondition("ψ is not invertible".into()));
    }
    let cols: Vec<Vector> = (0..d).map(|j| psi.column(j)).collect();
    for x in 0..d {
        for y in 0..d {
            if psi.apply(b.basis_bracket(x, y)) != b.bracket(&cols[x], &cols[y]) {
                return Err(Error::verification(
                    "ψ preserves brackets",
                    json!({ "basis": [b.labels()[x], b.labels()[y]] }),
                ));
            }
        }
    }
    Ok(())
}

/// `θ(b_1, …, b_m) = (ψ(b_{k+1}), …, ψ(b_m), ψ(b_1), …, ψ(b_k))` from
/// `L_α(B)` to `L_{ζ^k α}(B)`.
pub fn iso_shift(b: &LieAlgebra, m: usize, alpha: &CycNum, k: usize, psi: &Mat) -> Result<HModuleIso> {
    let f = check_inputs(b, m, alpha)?;
    if k >= m {
        return Err(Error::OutOfRange(format!("shift {k} must be below m = {m}")));
    }
    check_lie_iso(b, psi)?;
    let source = build_l_alpha(b, m, alpha)?;
    let target = build_l_alpha(b, m, &(alpha * &f.zeta_pow(k as i64)))?;
    let d = b.dim();
    let n = m * d;
    let matrix = Mat::from_fn(&f, n, n, |r, s| {
        let (jr, ir) = (r / d, r % d);
        let (js, is) = (s / d, s % d);
        if (jr + k) % m == js {
            psi.get(ir, is).clone()
        } else {
            f.zero()
        }
    });
    Ok(HModuleIso {
        source,
        target,
        matrix,
    })
}

/// Invertibility, bracket compatibility and compatibility with every
/// generator of the acting Hopf algebra.
pub fn verify_iso(iso: &HModuleIso) -> Report {
    let mut report = Report::new();
    let (src, tgt, t) = (&iso.source, &iso.target, &iso.matrix);
    let n = src.dim();
    if t.rows() != tgt.dim() || t.cols() != n {
        report.push(Check::fail(
            "shape",
            json!({ "rows": t.rows(), "cols": t.cols(), "source_dim": n, "target_dim": tgt.dim() }),
        ));
        return report;
    }
    report.push(Check::pass("shape"));
    report.push(Check::from_witness(
        "invertible",
        (n != tgt.dim() || t.inverse().is_none()).then(|| json!({ "identity": "θ invertible" })),
    ));

    let cols: Vec<Vector> = (0..n).map(|j| t.column(j)).collect();
    let mut w = None;
    'br: for x in 0..n {
        for y in x + 1..n {
            let lhs = t.apply(src.lie().basis_bracket(x, y));
            let rhs = tgt.lie().bracket(&cols[x], &cols[y]);
            if lhs != rhs {
                w = Some(json!({
                    "identity": "θ[a,b] = [θa,θb]",
                    "basis": [src.lie().labels()[x], src.lie().labels()[y]],
                    "indices": [x, y],
                }));
                break 'br;
            }
        }
    }
    report.push(Check::from_witness("bracket", w));

    let sg = src.generator_matrices();
    let tg = tgt.generator_matrices();
    let labels = src.hopf().labels();
    if sg.len() != tg.len() {
        report.push(Check::fail("action", json!({ "reason": "different acting algebras" })));
        return report;
    }
    let gen_labels: Vec<String> = if src.taft_order().is_some() {
        vec!["c".into(), "v".into()]
    } else {
        labels.to_vec()
    };
    for ((a, b), name) in sg.iter().zip(&tg).zip(&gen_labels) {
        let lhs = t * a;
        let rhs = b * t;
        let w = (0..n).find(|&j| lhs.column(j) != rhs.column(j)).map(|j| {
            json!({
                "identity": format!("θ∘{name} = {name}∘θ"),
                "basis": src.lie().labels()[j],
                "residual": vector_json(&crate::exactla::sub_vectors(&lhs.column(j), &rhs.column(j))),
            })
        });
        report.push(Check::from_witness(format!("intertwines {name}"), w));
    }
    report
}

/// The identity map of `M` as an `HModuleIso`.
pub fn identity_iso(m: &HModuleLie) -> HModuleIso {
    HModuleIso {
        source: m.clone(),
        target: m.clone(),
        matrix: Mat::identity(m.field(), m.dim()),
    }
}

/// `V^ℓ` applied to a tuple of `B`-vectors through the matrix of `L_α(B)`.
pub fn v_power_iterated(m: &HModuleLie, ell: usize, tuple: &[Vector]) -> Result<Vec<Vector>> {
    let v = m
        .v_matrix()
        .ok_or_else(|| Error::Precondition("needs a Taft action".into()))?;
    let k = tuple.len();
    let d = tuple.first().map_or(0, Vec::len);
    if k * d != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: k * d,
        });
    }
    let mut flat: Vector = tuple.iter().flatten().cloned().collect();
    for _ in 0..ell {
        flat = v.apply(&flat);
    }
    Ok(flat.chunks(d.max(1)).map(<[CycNum]>::to_vec).take(k).collect())
}

pub fn is_zero_tuple(t: &[Vector]) -> bool {
    t.iter().all(|v| is_zero_vector(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CyclotomicField;
    use crate::exactla::unit_vector;
    use crate::liealg::make_sl;

    #[test]
    fn l_alpha_one_step() {
        let f = CyclotomicField::get(2).unwrap();
        let sl2 = make_sl(2, &f).unwrap();
        let m = build_l_alpha(&sl2, 2, &f.one()).unwrap();
        let e0 = unit_vector(&f, 6, 0);
        let got = m.v_matrix().unwrap().apply(&e0);
        let mut want = zero_vector(&f, 6);
        want[0] = f.one();
        want[3] = f.one();
        assert_eq!(got, want);
    }

    #[test]
    fn l_alpha_cycles_copies() {
        let f = CyclotomicField::get(3).unwrap();
        let sl2 = make_sl(2, &f).unwrap();
        let m = build_l_alpha(&sl2, 3, &f.one()).unwrap();
        let x = vec![f.one(), f.zero(), f.zero(), f.zero(), f.from_int(2), f.zero(), f.zero(), f.zero(), f.from_int(3)];
        let want = vec![f.zero(), f.zero(), f.from_int(3), f.one(), f.zero(), f.zero(), f.zero(), f.from_int(2), f.zero()];
        assert_eq!(m.c_matrix().unwrap().apply(&x), want);
    }

    #[test]
    fn l_gamma_wraparound() {
        let f = CyclotomicField::get(2).unwrap();
        let sl2 = make_sl(2, &f).unwrap();
        let zero = build_l_gamma(&sl2, 2, &f.zero()).unwrap();
        assert!(is_zero_vector(zero.lie().basis_bracket(3, 5)));
        let one = build_l_gamma(&sl2, 2, &f.one()).unwrap();
        assert_eq!(one.lie().basis_bracket(3, 5), &unit_vector(&f, 6, 1)[..]);
    }

    #[test]
    fn closed_form_kills_at_m() {
        let f = CyclotomicField::get(4).unwrap();
        let t: Vec<Vector> = (0..4).map(|i| unit_vector(&f, 3, i % 3)).collect();
        let z = v_power_closed_form(&f.from_int(3), 4, &t).unwrap();
        assert!(is_zero_tuple(&z));
        assert_eq!(v_power_closed_form(&f.from_int(3), 0, &t).unwrap(), t);
    }

    #[test]
    fn equivdef_and_shift_verify() {
        let f = CyclotomicField::get(3).unwrap();
        let sl2 = make_sl(2, &f).unwrap();
        let iso = iso_equivdef(&sl2, 3, &f.one()).unwrap();
        assert!(verify_iso(&iso).passed(), "{:?}", verify_iso(&iso));
        let sh = iso_shift(&sl2, 3, &f.one(), 2, &Mat::identity(&f, 3)).unwrap();
        assert!(verify_iso(&sh).passed());
    }

    #[test]
    fn scaled_identity_is_not_iso() {
        let f = CyclotomicField::get(2).unwrap();
        let sl2 = make_sl(2, &f).unwrap();
        let m = build_l_alpha(&sl2, 2, &f.one()).unwrap();
        let mut iso = identity_iso(&m);
        iso.matrix = iso.matrix.scale(&f.from_int(2));
        let r = verify_iso(&iso);
        assert_eq!(r.status_of("bracket"), Some(crate::report::Status::Fail));
    }
}
