//! Finite-dimensional Hopf algebras as explicit structure tables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cyclotomic::{CycNum, CyclotomicField, Field};
use crate::error::{Error, Result};
use crate::exactla::{unit_vector, vector_json, zero_vector, Mat, Vector};
use crate::report::{Check, Report};

/// Sparse element of `H ⊗ H`: `(left index, right index, coefficient)`.
pub type Tensor2 = Vec<(usize, usize, CycNum)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HopfKind {
    /// `H_{m²}(ζ)` on the basis `c^i v^k` at index `k·m + i`.
    Taft,
    Custom,
}

/// Hopf algebra with basis `h_0..h_{dim-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct HopfAlgebraTable {
    field: Field,
    kind: HopfKind,
    dim: usize,
    labels: Vec<String>,
    mult: Vec<Vector>,
    unit: Vector,
    coproduct: Vec<Tensor2>,
    counit: Vector,
    antipode: Mat,
}

impl std::fmt::Debug for HopfAlgebraTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HopfAlgebraTable({:?}, dim {}, basis {:?})", self.kind, self.dim, self.labels)
    }
}

fn taft_label(i: usize, k: usize) -> String {
    let c = match i {
        0 => String::new(),
        1 => "c".into(),
        _ => format!("c^{i}"),
    };
    let v = match k {
        0 => String::new(),
        1 => "v".into(),
        _ => format!("v^{k}"),
    };
    if c.is_empty() && v.is_empty() {
        "1".into()
    } else {
        c + &v
    }
}

/// Expands `Σ c · h_a ⊗ h_b` into a dense `dim²` vector.
fn tensor_dense(field: &Field, dim: usize, t: &[(usize, usize, CycNum)]) -> Vector {
    let mut out = zero_vector(field, dim * dim);
    for (a, b, c) in t {
        out[a * dim + b] += c;
    }
    out
}

fn tensor_sparse(dense: &[CycNum], dim: usize) -> Tensor2 {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| (idx / dim, idx % dim, c.clone()))
        .collect()
}

impl HopfAlgebraTable {
    /// Assembles a table without checking the Hopf axioms.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        field: &Field,
        kind: HopfKind,
        labels: Vec<String>,
        mult: Vec<Vector>,
        unit: Vector,
        coproduct: Vec<Tensor2>,
        counit: Vector,
        antipode: Mat,
    ) -> Result<Self> {
        let dim = labels.len();
        let check = |expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected, found })
            }
        };
        check(dim * dim, mult.len())?;
        for v in &mult {
            check(dim, v.len())?;
        }
        check(dim, unit.len())?;
        check(dim, coproduct.len())?;
        for t in &coproduct {
            if t.iter().any(|&(a, b, _)| a >= dim || b >= dim) {
                return Err(Error::OutOfRange("coproduct index".into()));
            }
        }
        check(dim, counit.len())?;
        check(dim, antipode.rows())?;
        check(dim, antipode.cols())?;
        Ok(HopfAlgebraTable {
            field: field.clone(),
            kind,
            dim,
            labels,
            mult,
            unit,
            coproduct,
            counit,
            antipode,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn conductor(&self) -> usize {
        self.field.conductor()
    }

    pub fn kind(&self) -> HopfKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `h_i · h_j` in coordinates.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[CycNum] {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, x: &[CycNum], y: &[CycNum]) -> Vector {
        let mut out = zero_vector(&self.field, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, p) in out.iter_mut().zip(self.mul_basis(i, j)) {
                    if !p.is_zero() {
                        o.add_mul(&ab, p);
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self) -> &[CycNum] {
        &self.unit
    }

    pub fn coproduct(&self, i: usize) -> &[(usize, usize, CycNum)] {
        &self.coproduct[i]
    }

    pub fn counit(&self) -> &[CycNum] {
        &self.counit
    }

    pub fn counit_of(&self, x: &[CycNum]) -> CycNum {
        let mut acc = self.field.zero();
        for (a, e) in x.iter().zip(&self.counit) {
            acc.add_mul(a, e);
        }
        acc
    }

    /// Matrix of `S`; column `j` is `S(h_j)`.
    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(&self.field, self.dim, i)
    }

    /// Replaces the antipode; used to build deliberately broken tables.
    pub fn with_antipode(mut self, s: Mat) -> Result<Self> {
        if s.rows() != self.dim || s.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.rows(),
            });
        }
        self.antipode = s;
        Ok(self)
    }

    /// Index of `c^i v^k` in a Taft table.
    pub fn taft_index(&self, i: usize, k: usize) -> Option<usize> {
        let m = self.taft_order()?;
        (i < m && k < m).then_some(k * m + i)
    }

    /// `m` when this is the Taft algebra `H_{m²}(ζ)`.
    pub fn taft_order(&self) -> Option<usize> {
        (self.kind == HopfKind::Taft).then(|| self.field.conductor())
    }

    /// Product in `H ⊗ H`, both factors dense of length `dim²`.
    fn tensor_mul(&self, x: &[CycNum], y: &[CycNum]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(&self.field, d * d);
        for (p, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (q, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let left = self.mul_basis(p / d, q / d);
                let right = self.mul_basis(p % d, q % d);
                for (l, lc) in left.iter().enumerate() {
                    if lc.is_zero() {
                        continue;
                    }
                    let abl = &ab * lc;
                    for (r, rc) in right.iter().enumerate() {
                        if !rc.is_zero() {
                            out[l * d + r].add_mul(&abl, rc);
                        }
                    }
                }
            }
        }
        out
    }

    fn coproduct_dense_of(&self, x: &[CycNum]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(&self.field, d * d);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, r, c) in &self.coproduct[i] {
                out[l * d + r].add_mul(a, c);
            }
        }
        out
    }

    /// `Δ^{(n-1)}(h)` obtained by repeatedly splitting the leftmost factor.
    pub fn iterated_coproduct(&self, h: &[CycNum], n: usize) -> Result<Vec<(CycNum, Vec<usize>)>> {
        self.iterated_coproduct_at(h, n, Slot::Left)
    }

    /// `Δ^{(n-1)}(h)` splitting the chosen tensor factor at every step.
    /// Terms are sorted by basis tuple and zero terms are dropped.
    pub fn iterated_coproduct_at(
        &self,
        h: &[CycNum],
        n: usize,
        slot: Slot,
    ) -> Result<Vec<(CycNum, Vec<usize>)>> {
        if n == 0 {
            return Err(Error::OutOfRange("iterated coproduct needs n >= 1".into()));
        }
        if h.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: h.len(),
            });
        }
        let mut terms: BTreeMap<Vec<usize>, CycNum> = h
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i], c.clone()))
            .collect();
        for _ in 1..n {
            let mut next: BTreeMap<Vec<usize>, CycNum> = BTreeMap::new();
            for (tuple, c) in &terms {
                let pos = match slot {
                    Slot::Left => 0,
                    Slot::Right => tuple.len() - 1,
                };
                for (a, b, d) in &self.coproduct[tuple[pos]] {
                    let mut t = Vec::with_capacity(tuple.len() + 1);
                    t.extend_from_slice(&tuple[..pos]);
                    t.push(*a);
                    t.push(*b);
                    t.extend_from_slice(&tuple[pos + 1..]);
                    next.entry(t).or_insert_with(|| self.field.zero()).add_mul(c, d);
                }
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
        Ok(terms.into_iter().map(|(t, c)| (c, t)).collect())
    }

    /// Human-readable form such as `c⊗v + v⊗1`.
    pub fn format_terms(&self, terms: &[(CycNum, Vec<usize>)]) -> String {
        if terms.is_empty() {
            return "0".into();
        }
        terms
            .iter()
            .map(|(c, t)| {
                let word: Vec<&str> = t.iter().map(|&i| self.labels[i].as_str()).collect();
                let word = word.join("⊗");
                if c.is_one() {
                    word
                } else {
                    format!("({c})*{word}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Checks every Hopf algebra axiom exactly on the basis.
    pub fn verify_hopf_axioms(&self) -> Report {
        let d = self.dim;
        let f = &self.field;
        let label = |i: usize| self.labels[i].clone();
        let mut report = Report::new();

        let mut w = None;
        'assoc: for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j).to_vec();
                for k in 0..d {
                    let lhs = self.mul(&ij, &self.basis_vector(k));
                    let rhs = self.mul(&self.basis_vector(i), self.mul_basis(j, k));
                    if lhs != rhs {
                        w = Some(json!({
                            "identity": "(xy)z = x(yz)",
                            "basis": [label(i), label(j), label(k)],
                        }));
                        break 'assoc;
                    }
                }
            }
        }
        report.push(Check::from_witness("associativity", w));

        let w = (0..d).find_map(|i| {
            let e = self.basis_vector(i);
            (self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e)
                .then(|| json!({ "identity": "1x = x = x1", "basis": [label(i)] }))
        });
        report.push(Check::from_witness("unit", w));

        let w = (0..d).find_map(|i| {
            let left = self.iterated_coproduct_at(&self.basis_vector(i), 3, Slot::Left).ok()?;
            let right = self.iterated_coproduct_at(&self.basis_vector(i), 3, Slot::Right).ok()?;
            (left != right).then(|| {
                json!({
                    "identity": "(Δ⊗id)Δ(h) = (id⊗Δ)Δ(h)",
                    "basis": [label(i)],
                    "left": self.format_terms(&left),
                    "right": self.format_terms(&right),
                })
            })
        });
        report.push(Check::from_witness("coassociativity", w));

        let w = (0..d).find_map(|i| {
            let mut left = zero_vector(f, d);
            let mut right = zero_vector(f, d);
            for (a, b, c) in &self.coproduct[i] {
                left[*b].add_mul(c, &self.counit[*a]);
                right[*a].add_mul(c, &self.counit[*b]);
            }
            let e = self.basis_vector(i);
            (left != e || right != e).then(|| {
                json!({
                    "identity": "(ε⊗id)Δ(h) = h = (id⊗ε)Δ(h)",
                    "basis": [label(i)],
                    "left": vector_json(&left),
                    "right": vector_json(&right),
                })
            })
        });
        report.push(Check::from_witness("counit", w));

        let w = (0..d).find_map(|i| {
            let mut left = zero_vector(f, d);
            let mut right = zero_vector(f, d);
            for (a, b, c) in &self.coproduct[i] {
                let sa = self.antipode.column(*a);
                let sb = self.antipode.column(*b);
                let l = self.mul(&sa, &self.basis_vector(*b));
                let r = self.mul(&self.basis_vector(*a), &sb);
                for (x, y) in left.iter_mut().zip(&l) {
                    x.add_mul(c, y);
                }
                for (x, y) in right.iter_mut().zip(&r) {
                    x.add_mul(c, y);
                }
            }
            let expected: Vector = self.unit.iter().map(|u| u * &self.counit[i]).collect();
            (left != expected || right != expected).then(|| {
                json!({
                    "identity": "μ(S⊗id)Δ(h) = ε(h)1 = μ(id⊗S)Δ(h)",
                    "basis": [label(i)],
                    "left": vector_json(&left),
                    "right": vector_json(&right),
                    "expected": vector_json(&expected),
                })
            })
        });
        report.push(Check::from_witness("antipode", w));

        let mut w = None;
        let unit_tensor: Vector = {
            let mut t = zero_vector(f, d * d);
            for (a, x) in self.unit.iter().enumerate() {
                for (b, y) in self.unit.iter().enumerate() {
                    t[a * d + b] = x * y;
                }
            }
            t
        };
        if self.coproduct_dense_of(&self.unit) != unit_tensor {
            w = Some(json!({ "identity": "Δ(1) = 1⊗1" }));
        }
        if w.is_none() {
            'mult: for i in 0..d {
                let di = tensor_dense(f, d, &self.coproduct[i]);
                for j in 0..d {
                    let lhs = self.coproduct_dense_of(self.mul_basis(i, j));
                    let rhs = self.tensor_mul(&di, &tensor_dense(f, d, &self.coproduct[j]));
                    if lhs != rhs {
                        w = Some(json!({
                            "identity": "Δ(xy) = Δ(x)Δ(y)",
                            "basis": [label(i), label(j)],
                        }));
                        break 'mult;
                    }
                }
            }
        }
        report.push(Check::from_witness("coproduct_multiplicative", w));

        let mut w = None;
        if !self.counit_of(&self.unit).is_one() {
            w = Some(json!({ "identity": "ε(1) = 1" }));
        }
        if w.is_none() {
            'counit: for i in 0..d {
                for j in 0..d {
                    let lhs = self.counit_of(self.mul_basis(i, j));
                    let rhs = &self.counit[i] * &self.counit[j];
                    if lhs != rhs {
                        w = Some(json!({
                            "identity": "ε(xy) = ε(x)ε(y)",
                            "basis": [label(i), label(j)],
                        }));
                        break 'counit;
                    }
                }
            }
        }
        report.push(Check::from_witness("counit_multiplicative", w));
        report
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self.to_wire()).expect("wire form serializes")
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let wire: HopfWire = serde_json::from_value(value.clone())?;
        let field = CyclotomicField::get(wire.m)?;
        let d = wire.dim;
        let cyc = |w: &Vec<String>| CycNum::from_wire(&field, w);
        let vec_of = |ws: &Vec<Vec<String>>| -> Result<Vector> {
            if ws.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: ws.len(),
                });
            }
            ws.iter().map(cyc).collect()
        };
        let mut mult = vec![zero_vector(&field, d); d * d];
        for (i, j, k, c) in &wire.mult {
            if *i >= d || *j >= d || *k >= d {
                return Err(Error::OutOfRange("multiplication index".into()));
            }
            mult[i * d + j][*k] = cyc(c)?;
        }
        let mut coproduct = vec![Vec::new(); d];
        for (i, a, b, c) in &wire.coproduct {
            if *i >= d {
                return Err(Error::OutOfRange("coproduct index".into()));
            }
            coproduct[*i].push((*a, *b, cyc(c)?));
        }
        let labels = wire
            .labels
            .clone()
            .unwrap_or_else(|| (0..d).map(|i| format!("h{i}")).collect());
        Self::from_parts(
            &field,
            wire.kind,
            labels,
            mult,
            vec_of(&wire.unit)?,
            coproduct,
            vec_of(&wire.counit)?,
            Mat::from_wire(&field, &wire.antipode)?,
        )
    }

    fn to_wire(&self) -> HopfWire {
        let d = self.dim;
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.mul_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        mult.push((i, j, k, c.to_wire()));
                    }
                }
            }
        }
        let coproduct = (0..d)
            .flat_map(|i| self.coproduct[i].iter().map(move |(a, b, c)| (i, *a, *b, c.to_wire())))
            .collect();
        HopfWire {
            kind: self.kind,
            m: self.conductor(),
            dim: d,
            labels: Some(self.labels.clone()),
            mult,
            unit: self.unit.iter().map(CycNum::to_wire).collect(),
            coproduct,
            counit: self.counit.iter().map(CycNum::to_wire).collect(),
            antipode: self.antipode.to_wire(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct HopfWire {
    kind: HopfKind,
    m: usize,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    mult: Vec<(usize, usize, usize, Vec<String>)>,
    unit: Vec<Vec<String>>,
    coproduct: Vec<(usize, usize, usize, Vec<String>)>,
    counit: Vec<Vec<String>>,
    antipode: Vec<Vec<Vec<String>>>,
}

/// Which tensor factor an iterated coproduct splits at each step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Left,
    Right,
}

/// The Taft algebra `H_{m²}(ζ)` over `Q(ζ_m)`.
pub fn make_taft(m: usize) -> Result<HopfAlgebraTable> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("Taft algebra needs m >= 2, got {m}")));
    }
    let field = CyclotomicField::get(m)?;
    let d = m * m;
    let idx = |i: usize, k: usize| k * m + i;
    let labels = (0..d).map(|p| taft_label(p % m, p / m)).collect();
    let mut mult = vec![zero_vector(&field, d); d * d];
    for p in 0..d {
        let (i, k) = (p % m, p / m);
        for q in 0..d {
            let (j, l) = (q % m, q / m);
            if k + l < m {
                // v^k c^j = ζ^{kj} c^j v^k
                mult[p * d + q][idx((i + j) % m, k + l)] = field.zeta_pow((k * j) as i64);
            }
        }
    }
    let mut table = HopfAlgebraTable {
        field: field.clone(),
        kind: HopfKind::Taft,
        dim: d,
        labels,
        mult,
        unit: unit_vector(&field, d, 0),
        coproduct: vec![Vec::new(); d],
        counit: (0..d)
            .map(|p| if p < m { field.one() } else { field.zero() })
            .collect(),
        antipode: Mat::zeros(&field, d, d),
    };

    let c = idx(1, 0);
    let v = idx(0, 1);
    let delta_c = tensor_dense(&field, d, &[(c, c, field.one())]);
    let delta_v = tensor_dense(&field, d, &[(c, v, field.one()), (v, 0, field.one())]);
    let one_one = tensor_dense(&field, d, &[(0, 0, field.one())]);
    let mut c_pows = vec![one_one];
    for i in 1..m {
        let next = table.tensor_mul(&c_pows[i - 1], &delta_c);
        c_pows.push(next);
    }
    for i in 0..m {
        let mut acc = c_pows[i].clone();
        for k in 0..m {
            table.coproduct[idx(i, k)] = tensor_sparse(&acc, d);
            acc = table.tensor_mul(&acc, &delta_v);
        }
    }

    // S(c^i v^k) = S(v)^k S(c)^i with S(c) = c^{m-1}, S(v) = -c^{m-1} v
    let s_c = unit_vector(&field, d, idx(m - 1, 0));
    let s_v: Vector = unit_vector(&field, d, idx(m - 1, 1)).iter().map(|x| -x).collect();
    for i in 0..m {
        let mut s_ci = table.unit.clone();
        for _ in 0..i {
            s_ci = table.mul(&s_ci, &s_c);
        }
        let mut s_vk = table.unit.clone();
        for k in 0..m {
            let s = table.mul(&s_vk, &s_ci);
            for (r, x) in s.into_iter().enumerate() {
                table.antipode.set(r, idx(i, k), x);
            }
            s_vk = table.mul(&s_vk, &s_v);
        }
    }
    Ok(table)
}

/// The one-dimensional Hopf algebra `F·1` over `Q(ζ_m)`.
pub fn make_trivial(m: usize) -> Result<HopfAlgebraTable> {
    let field = CyclotomicField::get(m)?;
    HopfAlgebraTable::from_parts(
        &field,
        HopfKind::Custom,
        vec!["1".into()],
        vec![vec![field.one()]],
        vec![field.one()],
        vec![vec![(0, 0, field.one())]],
        vec![field.one()],
        Mat::identity(&field, 1),
    )
}

/// `F e_0 ⊕ F e_1` with orthogonal idempotents, `Δ(e_0) = e_0⊗e_0 + e_1⊗e_1`,
/// `Δ(e_1) = e_0⊗e_1 + e_1⊗e_0`, `ε(e_0) = 1`, `ε(e_1) = 0` and `S = id`.
pub fn make_dual_idempotent(m: usize) -> Result<HopfAlgebraTable> {
    let field = CyclotomicField::get(m)?;
    let (o, z) = (field.one(), field.zero());
    HopfAlgebraTable::from_parts(
        &field,
        HopfKind::Custom,
        vec!["e0".into(), "e1".into()],
        vec![
            vec![o.clone(), z.clone()],
            vec![z.clone(), z.clone()],
            vec![z.clone(), z.clone()],
            vec![z.clone(), o.clone()],
        ],
        vec![o.clone(), o.clone()],
        vec![
            vec![(0, 0, o.clone()), (1, 1, o.clone())],
            vec![(0, 1, o.clone()), (1, 0, o.clone())],
        ],
        vec![o.clone(), z.clone()],
        Mat::identity(&field, 2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::is_zero_vector;

    #[test]
    fn taft_small_products() {
        let h = make_taft(2).unwrap();
        let cv = h.taft_index(1, 1).unwrap();
        assert!(is_zero_vector(h.mul_basis(cv, cv)));
        let v = h.taft_index(0, 1).unwrap();
        let c = h.taft_index(1, 0).unwrap();
        // vc = ζ cv
        let vc = h.mul_basis(v, c).to_vec();
        let mut expected = zero_vector(h.field(), 4);
        expected[cv] = h.field().zeta();
        assert_eq!(vc, expected);
        assert_eq!(h.counit()[c], h.field().one());
        assert!(h.counit()[v].is_zero());
        assert_eq!(h.labels(), &["1", "c", "v", "cv"]);
    }

    #[test]
    fn taft_coproduct_of_cv() {
        let h = make_taft(3).unwrap();
        let cv = h.taft_index(1, 1).unwrap();
        let terms = h.iterated_coproduct(&h.basis_vector(cv), 2).unwrap();
        // Δ(cv) = c²⊗cv + cv⊗c
        let c2 = h.taft_index(2, 0).unwrap();
        let c = h.taft_index(1, 0).unwrap();
        let mut expected = vec![(h.field().one(), vec![c2, cv]), (h.field().one(), vec![cv, c])];
        expected.sort_by(|a, b| a.1.cmp(&b.1));
        assert_eq!(terms, expected);
    }

    #[test]
    fn taft_axioms() {
        for m in 2..=4 {
            let r = make_taft(m).unwrap().verify_hopf_axioms();
            assert!(r.passed(), "m = {m}: {r:?}");
        }
    }

    #[test]
    fn broken_antipode_is_caught() {
        let h = make_taft(2).unwrap();
        let broken = h.clone().with_antipode(Mat::identity(h.field(), 4)).unwrap();
        let r = broken.verify_hopf_axioms();
        let check = r.get("antipode").unwrap();
        assert!(!check.passed());
        assert_eq!(check.witness.as_ref().unwrap()["basis"], json!(["v"]));
    }

    #[test]
    fn iterated_coproduct_of_v() {
        let h = make_taft(2).unwrap();
        let v = h.basis_vector(h.taft_index(0, 1).unwrap());
        assert_eq!(h.format_terms(&h.iterated_coproduct(&v, 1).unwrap()), "v");
        assert_eq!(h.format_terms(&h.iterated_coproduct(&v, 2).unwrap()), "c⊗v + v⊗1");
        let three = h.iterated_coproduct(&v, 3).unwrap();
        assert_eq!(h.format_terms(&three), "c⊗c⊗v + c⊗v⊗1 + v⊗1⊗1");
        assert_eq!(three, h.iterated_coproduct_at(&v, 3, Slot::Right).unwrap());
    }

    #[test]
    fn small_custom_tables() {
        assert!(make_trivial(1).unwrap().verify_hopf_axioms().passed());
        let e = make_dual_idempotent(1).unwrap();
        assert!(e.verify_hopf_axioms().passed());
        assert!(is_zero_vector(e.mul_basis(0, 1)));
        assert!(e.counit()[1].is_zero());
    }

    #[test]
    fn json_round_trip() {
        let h = make_taft(3).unwrap();
        assert_eq!(HopfAlgebraTable::from_json(&h.to_json()).unwrap(), h);
        let e = make_dual_idempotent(2).unwrap();
        assert_eq!(HopfAlgebraTable::from_json(&e.to_json()).unwrap(), e);
    }
}
