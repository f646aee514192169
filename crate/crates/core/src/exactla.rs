//! Dense exact linear algebra over `Q(ζ_m)`.
//!
//! Subspaces are kept in reduced row echelon form with leading ones, which
//! makes the representation canonical: two [`SubspaceBasis`] values span the
//! same space exactly when they compare equal.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use crate::cyclotomic::{CycNum, Field};
use crate::error::{Error, Result};

mod modular;

/// A coordinate vector.
pub type Vector = Vec<CycNum>;

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[CycNum]) -> bool {
    v.iter().all(CycNum::is_zero)
}

pub fn add_vectors(a: &[CycNum], b: &[CycNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[CycNum], b: &[CycNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &CycNum, v: &[CycNum]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Vector with small random integer coordinates in the power basis.
pub fn random_vector<R: rand::Rng>(field: &Field, n: usize, rng: &mut R) -> Vector {
    (0..n)
        .map(|_| {
            let coeffs = (0..field.degree())
                .map(|_| num_rational::BigRational::from_integer(rng.gen_range(-2i64..=2).into()))
                .collect();
            field.from_coeffs(coeffs).expect("length matches degree")
        })
        .collect()
}

/// JSON form of a vector: a list of `CycNum` serializations.
pub fn vector_json(v: &[CycNum]) -> serde_json::Value {
    serde_json::Value::Array(
        v.iter()
            .map(|x| serde_json::to_value(x.to_wire()).expect("strings serialize"))
            .collect(),
    )
}

/// Dense row-major matrix with entries in a single cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over Q(zeta_{})", self.rows, self.cols, self.field.conductor())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycNum,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            for x in r {
                if x.conductor() != field.conductor() {
                    return Err(Error::ConductorMismatch {
                        left: field.conductor(),
                        right: x.conductor(),
                    });
                }
                data.push(x);
            }
        }
        Ok(Mat {
            field: field.clone(),
            rows: nrows,
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, n: usize, cols: &[Vector]) -> Self {
        Self::from_fn(field, n, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycNum) {
        self.data[i * self.cols + j] = x;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut CycNum {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &CycNum) -> Mat {
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, other: &Mat) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    /// Matrix product; skips zero entries of the left factor.
    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Mat::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · v`.
    pub fn apply(&self, v: &[CycNum]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = zero_vector(&self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    o.add_mul(a, x);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut ech = Echelon::new(&self.field, 2 * n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            row.extend(unit_vector(&self.field, n, i));
            ech.insert(row);
        }
        let rref = ech.into_subspace();
        if rref.pivots().iter().take(n).copied().ne(0..n) || rref.dim() < n {
            return None;
        }
        Some(Mat::from_fn(&self.field, n, n, |i, j| {
            rref.vectors()[i][n + j].clone()
        }))
    }

    /// Each entry serialized as a `CycNum`, rows nested.
    pub fn to_wire(&self) -> Vec<Vec<Vec<String>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(CycNum::to_wire).collect())
            .collect()
    }

    pub fn from_wire(field: &Field, wire: &[Vec<Vec<String>>]) -> Result<Mat> {
        let rows = wire
            .iter()
            .map(|r| r.iter().map(|x| CycNum::from_wire(field, x)).collect())
            .collect::<Result<Vec<Vector>>>()?;
        if rows.is_empty() {
            return Ok(Mat::zeros(field, 0, 0));
        }
        Mat::from_rows(field, rows)
    }
}

impl Mul<&Mat> for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

/// Incremental semi-echelon basis used for rank, closure and spans.
///
/// Each stored row has a leading one at its pivot and zeros at the pivots of
/// every row inserted before it, which is enough to reduce new vectors by a
/// single pass in insertion order.
pub struct Echelon {
    field: Field,
    n: usize,
    rows: Vec<Vec<(usize, CycNum)>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, n: usize) -> Self {
        Echelon {
            field: field.clone(),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn reduce(&self, v: &mut [CycNum]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, x) in row {
                v[*j].sub_mul(&c, x);
            }
        }
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vector(&w)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        let row: Vec<(usize, CycNum)> = v
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, if j == p { self.field.one() } else { &x * &inv }))
            .collect();
        self.rows.push(row);
        self.pivots.push(p);
        true
    }

    /// Canonical reduced echelon basis of the span.
    pub fn into_subspace(self) -> SubspaceBasis {
        let n = self.n;
        let field = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut dense: Vec<Vector> = order
            .iter()
            .map(|&i| {
                let mut v = zero_vector(&field, n);
                for (j, x) in &self.rows[i] {
                    v[*j] = x.clone();
                }
                v
            })
            .collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for i in (0..dense.len()).rev() {
            let p = pivots[i];
            let (head, tail) = dense.split_at_mut(i);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                if row[p].is_zero() {
                    continue;
                }
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    if !y.is_zero() {
                        x.sub_mul(&c, y);
                    }
                }
            }
        }
        SubspaceBasis {
            field,
            ambient_dim: n,
            vectors: dense,
            pivots,
        }
    }
}

/// A subspace of `Q(ζ_m)^n` in reduced row echelon form.
#[derive(Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: Field,
    ambient_dim: usize,
    vectors: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubspaceBasis(dim {} in {})", self.dim(), self.ambient_dim)
    }
}

impl SubspaceBasis {
    pub fn zero(field: &Field, n: usize) -> Self {
        SubspaceBasis {
            field: field.clone(),
            ambient_dim: n,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, n: usize) -> Self {
        SubspaceBasis {
            field: field.clone(),
            ambient_dim: n,
            vectors: (0..n).map(|i| unit_vector(field, n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn span<I: IntoIterator<Item = Vector>>(field: &Field, n: usize, vectors: I) -> Self {
        let mut ech = Echelon::new(field, n);
        for v in vectors {
            ech.insert(v);
        }
        ech.into_subspace()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.vectors.len() == self.ambient_dim
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn echelon(&self) -> Echelon {
        Echelon {
            field: self.field.clone(),
            n: self.ambient_dim,
            rows: self
                .vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(j, x)| (j, x.clone()))
                        .collect()
                })
                .collect(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[CycNum]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (c, b) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    x.sub_mul(c, y);
                }
            }
        }
        is_zero_vector(&w).then_some(coords)
    }

    /// `Σ coords[i] · basis[i]`.
    pub fn combine(&self, coords: &[CycNum]) -> Vector {
        let mut out = zero_vector(&self.field, self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.vectors) {
            for (x, y) in out.iter_mut().zip(b) {
                x.add_mul(c, y);
            }
        }
        out
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let mut ech = self.echelon();
        for v in &other.vectors {
            ech.insert(v.clone());
        }
        ech.into_subspace()
    }

    pub fn intersection(&self, other: &SubspaceBasis) -> SubspaceBasis {
        // x = Σ a_i u_i = Σ b_j w_j; solve [U | -W] (a, b) = 0.
        let n = self.ambient_dim;
        let cols: Vec<Vector> = self
            .vectors
            .iter()
            .cloned()
            .chain(other.vectors.iter().map(|w| w.iter().map(|x| -x).collect()))
            .collect();
        let k = kernel(&Mat::from_columns(&self.field, n, &cols));
        let d = self.dim();
        SubspaceBasis::span(
            &self.field,
            n,
            k.vectors.iter().map(|sol| self.combine(&sol[..d])),
        )
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, a: &Mat) -> SubspaceBasis {
        SubspaceBasis::span(&self.field, a.rows(), self.vectors.iter().map(|v| a.apply(v)))
    }

    pub fn to_wire(&self) -> Vec<Vec<Vec<String>>> {
        self.vectors
            .iter()
            .map(|v| v.iter().map(CycNum::to_wire).collect())
            .collect()
    }
}

/// Rank by Gaussian elimination on the rows.
pub fn rank(a: &Mat) -> usize {
    let mut ech = Echelon::new(a.field(), a.cols());
    for i in 0..a.rows() {
        if ech.is_full() {
            break;
        }
        ech.insert(a.row(i).to_vec());
    }
    ech.rank()
}

/// Right null space `{x : a x = 0}`.
pub fn kernel(a: &Mat) -> SubspaceBasis {
    let n = a.cols();
    let field = a.field();
    let rref = SubspaceBasis::span(field, n, (0..a.rows()).map(|i| a.row(i).to_vec()));
    let mut is_pivot = vec![false; n];
    for &p in rref.pivots() {
        is_pivot[p] = true;
    }
    let basis = (0..n).filter(|&j| !is_pivot[j]).map(|free| {
        let mut x = unit_vector(field, n, free);
        for (row, &p) in rref.vectors().iter().zip(rref.pivots()) {
            x[p] = -&row[free];
        }
        x
    });
    SubspaceBasis::span(field, n, basis)
}

/// Some solution of `a x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &Mat, b: &[CycNum]) -> Option<Vector> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let field = a.field();
    let rref = SubspaceBasis::span(
        field,
        n + 1,
        (0..a.rows()).map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        }),
    );
    let mut x = zero_vector(field, n);
    for (row, &p) in rref.vectors().iter().zip(rref.pivots()) {
        if p == n {
            return None;
        }
        x[p] = row[n].clone();
    }
    Some(x)
}

/// `ker(a - λ I)`.
pub fn eigenspace(a: &Mat, lambda: &CycNum) -> Result<SubspaceBasis> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let shifted = a.try_sub(&Mat::identity(a.field(), a.rows()).scale(lambda))?;
    Ok(kernel(&shifted))
}

/// Smallest subspace containing `seed` and invariant under every operator.
///
/// Breadth-first over (basis vector, operator) pairs in a fixed order.
pub fn closure(seed: &SubspaceBasis, ops: &[Mat]) -> Result<SubspaceBasis> {
    let n = seed.ambient_dim();
    for op in ops {
        if op.rows() != n || op.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: op.rows().max(op.cols()),
            });
        }
    }
    let mut ech = Echelon::new(seed.field(), n);
    let mut queue = VecDeque::new();
    for v in seed.vectors() {
        if ech.insert(v.clone()) {
            queue.push_back(v.clone());
        }
    }
    'outer: while let Some(w) = queue.pop_front() {
        for op in ops {
            if ech.is_full() {
                break 'outer;
            }
            let u = op.apply(&w);
            if ech.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    Ok(ech.into_subspace())
}

/// Dimension of the unital associative algebra generated by `gens` inside
/// the `n × n` matrices.
///
/// The span is first computed over a prime field `F_p` through a ring map
/// `Z[ζ] → F_p`. Linear independence survives lifting, so that dimension is
/// a lower bound for the true one. When it already reaches `n²` it is exact;
/// otherwise the span is recomputed over `Q(ζ_m)`.
pub fn operator_algebra_dim(field: &Field, n: usize, gens: &[Mat]) -> Result<usize> {
    for g in gens {
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.rows().max(g.cols()),
            });
        }
    }
    if n == 0 {
        return Ok(0);
    }
    if let Some(d) = modular::algebra_dim_mod_p(field, n, gens) {
        if d == n * n {
            return Ok(d);
        }
    }
    Ok(operator_algebra_dim_exact(field, n, gens))
}

/// Exact span closure of words in `gens`, without the modular shortcut.
pub fn operator_algebra_dim_exact(field: &Field, n: usize, gens: &[Mat]) -> usize {
    let mut ech = Echelon::new(field, n * n);
    let id = Mat::identity(field, n);
    let mut queue = VecDeque::new();
    ech.insert(id.entries().to_vec());
    queue.push_back(id);
    'outer: while let Some(x) = queue.pop_front() {
        for g in gens {
            if ech.is_full() {
                break 'outer;
            }
            let prod = &x * g;
            if ech.insert(prod.entries().to_vec()) {
                queue.push_back(prod);
            }
        }
    }
    ech.rank()
}
