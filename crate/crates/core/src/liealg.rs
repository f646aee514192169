//! Finite-dimensional Lie algebras given by structure constants.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::cyclotomic::{CycNum, CyclotomicField, Field};
use crate::error::{Error, Result};
use crate::exactla::{
    closure, is_zero_vector, operator_algebra_dim, random_vector, rank, unit_vector, vector_json,
    zero_vector, Echelon, Mat, SubspaceBasis, Vector,
};
use crate::report::{Check, Report};

/// Seed used for every pseudo-random sample unless the caller picks one.
pub const DEFAULT_SEED: u64 = 1729;

/// Lie algebra with basis `b_0..b_{dim-1}` and `[b_i, b_j] = Σ_k c_{ij}^k b_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    dim: usize,
    sc: Vec<CycNum>,
    labels: Vec<String>,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LieAlgebra(dim {} over Q(zeta_{}), basis {:?})",
            self.dim,
            self.field.conductor(),
            self.labels
        )
    }
}

fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("b{i}")).collect()
}

impl LieAlgebra {
    /// Builds from a bracket on basis pairs. No axioms are checked here.
    pub fn from_basis_brackets(
        field: &Field,
        dim: usize,
        labels: Option<Vec<String>>,
        mut bracket: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let mut sc = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = bracket(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                sc.extend(v);
            }
        }
        Self::from_dense(field, dim, sc, labels)
    }

    fn from_dense(
        field: &Field,
        dim: usize,
        sc: Vec<CycNum>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        if labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: labels.len(),
            });
        }
        Ok(LieAlgebra {
            field: field.clone(),
            dim,
            sc,
            labels,
        })
    }

    /// Builds from sparse triples `(i, j, k, c)` meaning `c_{ij}^k = c`.
    /// Omitted entries are zero; both orders of each pair must be listed.
    pub fn from_structure_constants(
        field: &Field,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, CycNum)>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut sc = vec![field.zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::OutOfRange(format!(
                    "structure constant index ({i}, {j}, {k}) for dimension {dim}"
                )));
            }
            if c.conductor() != field.conductor() {
                return Err(Error::ConductorMismatch {
                    left: field.conductor(),
                    right: c.conductor(),
                });
            }
            sc[(i * dim + j) * dim + k] = c;
        }
        Self::from_dense(field, dim, sc, labels)
    }

    pub fn abelian(field: &Field, dim: usize) -> Self {
        LieAlgebra {
            field: field.clone(),
            dim,
            sc: vec![field.zero(); dim * dim * dim],
            labels: default_labels(dim),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn conductor(&self) -> usize {
        self.field.conductor()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &CycNum {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Mutable access to `c_{ij}^k`; useful for building perturbed tables.
    pub fn structure_constant_mut(&mut self, i: usize, j: usize, k: usize) -> &mut CycNum {
        &mut self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// `[b_i, b_j]` in coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[CycNum] {
        let start = (i * self.dim + j) * self.dim;
        &self.sc[start..start + self.dim]
    }

    pub fn try_bracket(&self, x: &[CycNum], y: &[CycNum]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket(x, y))
    }

    /// Bilinear extension of the structure constants. Panics on length mismatch.
    pub fn bracket(&self, x: &[CycNum], y: &[CycNum]) -> Vector {
        assert!(x.len() == self.dim && y.len() == self.dim, "vector length mismatch");
        let mut out = zero_vector(&self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, s) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !s.is_zero() {
                        o.add_mul(&c, s);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x = [x, -]`.
    pub fn ad(&self, x: &[CycNum]) -> Mat {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vector(&self.field, self.dim, j)))
            .collect();
        Mat::from_columns(&self.field, self.dim, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        Mat::from_fn(&self.field, self.dim, self.dim, |k, j| {
            self.structure_constant(i, j, k).clone()
        })
    }

    pub fn ad_matrices(&self) -> Vec<Mat> {
        (0..self.dim).map(|i| self.ad_basis(i)).collect()
    }

    fn basis_json(&self, idx: &[usize]) -> Value {
        json!(idx.iter().map(|&i| self.labels[i].clone()).collect::<Vec<_>>())
    }

    /// Antisymmetry on all basis pairs and Jacobi on all basis triples.
    pub fn check_lie_axioms(&self) -> Report {
        let n = self.dim;
        let mut report = Report::new();
        let mut anti_failures = 0usize;
        let mut anti_witness = None;
        for i in 0..n {
            for j in i..n {
                let residual: Vector = self
                    .basis_bracket(i, j)
                    .iter()
                    .zip(self.basis_bracket(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                let residual = if i == j {
                    self.basis_bracket(i, i).to_vec()
                } else {
                    residual
                };
                if !is_zero_vector(&residual) {
                    anti_failures += 1;
                    anti_witness.get_or_insert_with(|| {
                        json!({
                            "identity": "[a,b] + [b,a] = 0",
                            "basis": self.basis_json(&[i, j]),
                            "indices": [i, j],
                            "residual": vector_json(&residual),
                        })
                    });
                }
            }
        }
        report.push(
            Check::from_witness("antisymmetry", anti_witness)
                .with_detail(json!({ "failing_pairs": anti_failures })),
        );

        let mut jac_failures = 0usize;
        let mut jac_witness = None;
        for i in 0..n {
            for j in (i + 1)..n {
                let ij = self.basis_bracket(i, j).to_vec();
                for k in (j + 1)..n {
                    let ei = unit_vector(&self.field, n, i);
                    let ej = unit_vector(&self.field, n, j);
                    let ek = unit_vector(&self.field, n, k);
                    let t1 = self.bracket(&ei, self.basis_bracket(j, k));
                    let t2 = self.bracket(&ej, self.basis_bracket(k, i));
                    let t3 = self.bracket(&ek, &ij);
                    let residual: Vector = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .map(|((a, b), c)| &(a + b) + c)
                        .collect();
                    if !is_zero_vector(&residual) {
                        jac_failures += 1;
                        jac_witness.get_or_insert_with(|| {
                            json!({
                                "identity": "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0",
                                "basis": self.basis_json(&[i, j, k]),
                                "indices": [i, j, k],
                                "residual": vector_json(&residual),
                            })
                        });
                    }
                }
            }
        }
        report.push(
            Check::from_witness("jacobi", jac_witness)
                .with_detail(json!({ "failing_triples": jac_failures })),
        );
        report
    }

    /// `κ(b_i, b_j) = tr(ad b_i · ad b_j)`.
    pub fn killing_form(&self) -> Mat {
        let n = self.dim;
        let ads = self.ad_matrices();
        Mat::from_fn(&self.field, n, n, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..n {
                for l in 0..n {
                    let a = ads[i].get(k, l);
                    if !a.is_zero() {
                        acc.add_mul(a, ads[j].get(l, k));
                    }
                }
            }
            acc
        })
    }

    pub fn killing_rank(&self) -> usize {
        rank(&self.killing_form())
    }

    /// Span of `[u, w]` for `u ∈ U`, `w ∈ W`.
    pub fn bracket_subspaces(&self, u: &SubspaceBasis, w: &SubspaceBasis) -> SubspaceBasis {
        let mut ech = Echelon::new(&self.field, self.dim);
        for a in u.vectors() {
            for b in w.vectors() {
                if ech.is_full() {
                    return ech.into_subspace();
                }
                ech.insert(self.bracket(a, b));
            }
        }
        ech.into_subspace()
    }

    pub fn full_space(&self) -> SubspaceBasis {
        SubspaceBasis::full(&self.field, self.dim)
    }

    pub fn derived_algebra(&self) -> SubspaceBasis {
        SubspaceBasis::span(
            &self.field,
            self.dim,
            (0..self.dim)
                .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
                .map(|(i, j)| self.basis_bracket(i, j).to_vec()),
        )
    }

    /// `U, [U,U], [[U,U],[U,U]], …` up to and including the first repeat.
    pub fn derived_series(&self, u: &SubspaceBasis) -> Vec<SubspaceBasis> {
        let mut series = vec![u.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_subspaces(last, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// `U, [U,U], [U,[U,U]], …` up to and including the first repeat.
    pub fn lower_central_series(&self, u: &SubspaceBasis) -> Vec<SubspaceBasis> {
        let mut series = vec![u.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_subspaces(u, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable_subspace(&self, u: &SubspaceBasis) -> bool {
        self.derived_series(u).last().is_some_and(SubspaceBasis::is_zero)
    }

    pub fn is_nilpotent_subspace(&self, u: &SubspaceBasis) -> bool {
        self.lower_central_series(u).last().is_some_and(SubspaceBasis::is_zero)
    }

    pub fn is_subalgebra(&self, u: &SubspaceBasis) -> bool {
        u.contains_subspace(&self.bracket_subspaces(u, u))
    }

    pub fn is_ideal(&self, u: &SubspaceBasis) -> bool {
        u.contains_subspace(&self.bracket_subspaces(&self.full_space(), u))
    }

    /// Ideal generated by a subspace.
    pub fn ideal_generated(&self, seed: &SubspaceBasis) -> SubspaceBasis {
        closure(seed, &self.ad_matrices()).expect("ad matrices are square of size dim")
    }

    pub fn center(&self) -> SubspaceBasis {
        let n = self.dim;
        // x central iff Σ_i x_i c_{ij}^k = 0 for all j, k
        let rows: Vec<Vector> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| self.structure_constant(i, j, k).clone()).collect())
            .collect();
        if rows.is_empty() {
            return SubspaceBasis::zero(&self.field, 0);
        }
        crate::exactla::kernel(&Mat::from_rows(&self.field, rows).expect("uniform rows"))
    }

    /// Killing-orthogonal complement of `[L, L]`.
    pub fn solvable_radical(&self) -> SubspaceBasis {
        let n = self.dim;
        let derived = self.derived_algebra();
        if derived.is_zero() {
            return self.full_space();
        }
        let kappa = self.killing_form();
        let rows: Vec<Vector> = derived.vectors().iter().map(|y| kappa.apply(y)).collect();
        debug_assert!(rows.iter().all(|r| r.len() == n));
        crate::exactla::kernel(&Mat::from_rows(&self.field, rows).expect("uniform rows"))
    }

    pub fn is_semisimple(&self) -> bool {
        self.dim > 0 && self.killing_rank() == self.dim
    }

    /// (dimension, radical dimension, Killing rank).
    pub fn profile(&self) -> (usize, usize, usize) {
        (self.dim, self.solvable_radical().dim(), self.killing_rank())
    }

    /// Lie algebra on the RREF basis of a subalgebra.
    pub fn restrict(&self, u: &SubspaceBasis) -> Result<LieAlgebra> {
        let d = u.dim();
        let mut sc = Vec::with_capacity(d * d * d);
        for a in u.vectors() {
            for b in u.vectors() {
                let c = self.bracket(a, b);
                let coords = u.coordinates(&c).ok_or_else(|| {
                    Error::Precondition("subspace is not closed under the bracket".into())
                })?;
                sc.extend(coords);
            }
        }
        Self::from_dense(&self.field, d, sc, None)
    }

    /// `L ⊕ K` with basis of `L` followed by that of `K`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.conductor() != other.conductor() {
            return Err(Error::ConductorMismatch {
                left: self.conductor(),
                right: other.conductor(),
            });
        }
        let (a, b) = (self.dim, other.dim);
        let n = a + b;
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{l}'"))
            .chain(other.labels.iter().map(|l| format!("{l}''")))
            .collect();
        Self::from_basis_brackets(&self.field, n, Some(labels), |i, j| {
            let mut v = zero_vector(&self.field, n);
            if i < a && j < a {
                v[..a].clone_from_slice(self.basis_bracket(i, j));
            } else if i >= a && j >= a {
                v[a..].clone_from_slice(other.basis_bracket(i - a, j - a));
            }
            v
        })
    }

    pub fn is_simple(&self) -> Simplicity {
        self.is_simple_with_seed(DEFAULT_SEED)
    }

    /// Ideal search first, then the operator-algebra certificate.
    pub fn is_simple_with_seed(&self, seed: u64) -> Simplicity {
        let n = self.dim;
        if n == 0 {
            return Simplicity::NotSimple {
                reason: "zero algebra".into(),
                ideal: self.full_space(),
            };
        }
        let derived = self.derived_algebra();
        if !derived.is_full() {
            return Simplicity::NotSimple {
                reason: "[L,L] is a proper ideal".into(),
                ideal: derived,
            };
        }
        let ads = self.ad_matrices();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seeds = (0..n)
            .map(|i| unit_vector(&self.field, n, i))
            .chain((0..2 * n).map(|_| random_vector(&self.field, n, &mut rng)));
        for v in seeds {
            if is_zero_vector(&v) {
                continue;
            }
            let ideal = closure(&SubspaceBasis::span(&self.field, n, [v]), &ads)
                .expect("ad matrices are square");
            if !ideal.is_full() {
                return Simplicity::NotSimple {
                    reason: "closure under ad found a proper ideal".into(),
                    ideal,
                };
            }
        }
        let algebra_dim =
            operator_algebra_dim(&self.field, n, &ads).expect("ad matrices are square");
        if algebra_dim == n * n {
            Simplicity::Simple { algebra_dim }
        } else {
            Simplicity::Undetermined { algebra_dim }
        }
    }

    pub(crate) fn to_wire(&self) -> LieAlgebraWire {
        let n = self.dim;
        let mut sc = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        sc.push((i, j, k, c.to_wire()));
                    }
                }
            }
        }
        LieAlgebraWire {
            m: self.conductor(),
            dim: n,
            sc,
            labels: Some(self.labels.clone()),
        }
    }

    pub(crate) fn from_wire(wire: LieAlgebraWire) -> Result<Self> {
        let field = CyclotomicField::get(wire.m)?;
        let entries = wire
            .sc
            .into_iter()
            .map(|(i, j, k, c)| Ok((i, j, k, CycNum::from_wire(&field, &c)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_structure_constants(&field, wire.dim, entries, wire.labels)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("wire form serializes")
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let wire: LieAlgebraWire = serde_json::from_value(value.clone())?;
        Self::from_wire(wire)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct LieAlgebraWire {
    m: usize,
    dim: usize,
    sc: Vec<(usize, usize, usize, Vec<String>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for LieAlgebra {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LieAlgebra {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = LieAlgebraWire::deserialize(d)?;
        LieAlgebra::from_wire(wire).map_err(serde::de::Error::custom)
    }
}

/// Outcome of a simplicity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// The adjoint action generates all of `End(L)`.
    Simple { algebra_dim: usize },
    NotSimple { reason: String, ideal: SubspaceBasis },
    /// No ideal found, but the generated algebra is smaller than `End(L)`.
    Undetermined { algebra_dim: usize },
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple { .. })
    }

    pub fn is_not_simple(&self) -> bool {
        matches!(self, Simplicity::NotSimple { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Simplicity::Simple { .. } => "simple",
            Simplicity::NotSimple { .. } => "not_simple",
            Simplicity::Undetermined { .. } => "undetermined",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Simplicity::Simple { algebra_dim } => {
                json!({ "result": self.label(), "operator_algebra_dim": algebra_dim })
            }
            Simplicity::NotSimple { reason, ideal } => json!({
                "result": self.label(),
                "reason": reason,
                "ideal_dim": ideal.dim(),
                "ideal": ideal.to_wire(),
            }),
            Simplicity::Undetermined { algebra_dim } => {
                json!({ "result": self.label(), "operator_algebra_dim": algebra_dim })
            }
        }
    }
}

/// `sl_n`: upper matrix units `E_ij` (i < j) in lexicographic order, then
/// `H_i = E_ii - E_{i+1,i+1}`, then lower matrix units. For `n = 2` this is
/// `e, h, f`.
pub fn make_sl(n: usize, field: &Field) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("sl_n needs n >= 2, got {n}")));
    }
    let mut basis: Vec<Basis> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            basis.push(Basis::Unit(i, j));
        }
    }
    for i in 0..n - 1 {
        basis.push(Basis::Diag(i));
    }
    for i in 0..n {
        for j in 0..i {
            basis.push(Basis::Unit(i, j));
        }
    }
    let labels: Vec<String> = if n == 2 {
        vec!["e".into(), "h".into(), "f".into()]
    } else {
        basis
            .iter()
            .map(|b| match b {
                Basis::Unit(i, j) => format!("E{}{}", i + 1, j + 1),
                Basis::Diag(i) => format!("H{}", i + 1),
            })
            .collect()
    };
    let mats: Vec<Vec<i64>> = basis.iter().map(|b| b.matrix(n)).collect();
    let dim = basis.len();
    LieAlgebra::from_basis_brackets(field, dim, Some(labels), |a, b| {
        let c = commutator(&mats[a], &mats[b], n);
        let mut out = zero_vector(field, dim);
        for (idx, bv) in basis.iter().enumerate() {
            out[idx] = match bv {
                Basis::Unit(i, j) => field.from_int(c[i * n + j]),
                // diagonal d = Σ c_k H_k has d_1 + … + d_{k} = c_k
                Basis::Diag(k) => field.from_int((0..=*k).map(|t| c[t * n + t]).sum()),
            };
        }
        out
    })
}

/// `gl_n` on the matrix units `E_ij` in lexicographic order.
pub fn make_gl(n: usize, field: &Field) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::OutOfRange("gl_n needs n >= 1".into()));
    }
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1)))
        .collect();
    let mats: Vec<Vec<i64>> = (0..n * n).map(|ij| Basis::Unit(ij / n, ij % n).matrix(n)).collect();
    LieAlgebra::from_basis_brackets(field, n * n, Some(labels), |a, b| {
        commutator(&mats[a], &mats[b], n)
            .into_iter()
            .map(|x| field.from_int(x))
            .collect()
    })
}

enum Basis {
    Unit(usize, usize),
    Diag(usize),
}

impl Basis {
    fn matrix(&self, n: usize) -> Vec<i64> {
        let mut m = vec![0; n * n];
        match *self {
            Basis::Unit(i, j) => m[i * n + j] = 1,
            Basis::Diag(i) => {
                m[i * n + i] = 1;
                m[(i + 1) * n + i + 1] = -1;
            }
        }
        m
    }
}

fn commutator(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i * n + j] += a[i * n + k] * b[k * n + j] - b[i * n + k] * a[k * n + j];
            }
        }
    }
    out
}

/// Built-in names accepted wherever a simple `B` is requested.
pub fn builtin(name: &str, field: &Field) -> Result<LieAlgebra> {
    match name {
        "sl2" | "sl_2" => make_sl(2, field),
        "sl3" | "sl_3" => make_sl(3, field),
        "sl4" | "sl_4" => make_sl(4, field),
        other => Err(Error::Parse(format!(
            "unknown Lie algebra '{other}' (built in: sl2, sl3, sl4)"
        ))),
    }
}
