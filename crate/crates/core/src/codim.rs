//! H-codimensions of small degree, computed as the rank of the evaluation
//! matrix of decorated left-normed commutators on basis tuples.
//!
//! Left-normed commutators `[x_σ(1)^{h_1}, …, x_σ(n)^{h_n}]` span the
//! multilinear H-polynomials of degree `n` (Jacobi rewrites every other
//! bracketing), so no other bracketings are enumerated.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, Echelon, Vector};
use crate::hmod::HModuleLie;
use crate::hopf::HopfAlgebraTable;
use crate::report::{Check, Report};

pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Words evaluated in parallel before their rows are reduced in order.
const CHUNK: usize = 32;

/// `[x_{perm(1)}^{h_1}, x_{perm(2)}^{h_2}, …, x_{perm(n)}^{h_n}]`, left-normed.
/// Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HWord {
    pub perm: Vec<usize>,
    pub h: Vec<usize>,
}

impl HWord {
    pub fn new(perm: Vec<usize>, h: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        if h.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: h.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::OutOfRange(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(HWord { perm, h })
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn display(&self, hopf: &HopfAlgebraTable) -> String {
        let parts: Vec<String> = self
            .perm
            .iter()
            .zip(&self.h)
            .map(|(p, h)| format!("x{}^{}", p + 1, hopf.labels()[*h]))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn tuples(base: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = base.checked_pow(n as u32).expect("tuple count overflow");
    (0..total).map(move |mut idx| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % base;
            idx /= base;
        }
        t
    })
}

/// All `n!·(dim H)^n` words, ordered by permutation and then by decoration.
pub fn enumerate_spanning(n: usize, hopf: &HopfAlgebraTable) -> Result<Vec<HWord>> {
    if n == 0 {
        return Err(Error::OutOfRange("degree must be at least 1".into()));
    }
    let hs: Vec<Vec<usize>> = tuples(hopf.dim(), n).collect();
    Ok(permutations(n)
        .into_iter()
        .flat_map(|p| hs.iter().map(move |h| HWord { perm: p.clone(), h: h.clone() }))
        .collect())
}

/// Precomputed `h_k · b_a` for every H basis element and L basis element.
struct ActionTable {
    cols: Vec<Vec<Vector>>,
}

impl ActionTable {
    fn new(m: &HModuleLie) -> Self {
        let n = m.dim();
        ActionTable {
            cols: m.actions().iter().map(|a| (0..n).map(|j| a.column(j)).collect()).collect(),
        }
    }

    fn eval(&self, m: &HModuleLie, w: &HWord, tuple: &[usize]) -> Vector {
        let mut acc = self.cols[w.h[0]][tuple[w.perm[0]]].clone();
        for (p, h) in w.perm.iter().zip(&w.h).skip(1) {
            if is_zero_vector(&acc) {
                return acc;
            }
            acc = m.lie().bracket(&acc, &self.cols[*h][tuple[*p]]);
        }
        acc
    }
}

fn check_word(m: &HModuleLie, w: &HWord, tuple: &[usize]) -> Result<()> {
    if tuple.len() != w.degree() {
        return Err(Error::DimensionMismatch {
            expected: w.degree(),
            found: tuple.len(),
        });
    }
    if let Some(&t) = tuple.iter().find(|&&t| t >= m.dim()) {
        return Err(Error::OutOfRange(format!("basis index {t}")));
    }
    if let Some(&h) = w.h.iter().find(|&&h| h >= m.hopf().dim()) {
        return Err(Error::OutOfRange(format!("H basis index {h}")));
    }
    Ok(())
}

/// Value of `w` with basis element `tuple[i]` substituted for `x_{i+1}`.
pub fn evaluate_word(m: &HModuleLie, w: &HWord, tuple: &[usize]) -> Result<Vector> {
    check_word(m, w, tuple)?;
    Ok(ActionTable::new(m).eval(m, w, tuple))
}

/// Matrix entries needed for degree `n`: `n!·(dim H)^n·(dim L)^{n+1}`.
pub fn required_entries(m: &HModuleLie, n: usize) -> u128 {
    let fact: u128 = (1..=n as u128).product();
    let dh = m.hopf().dim() as u128;
    let dl = m.dim() as u128;
    fact.saturating_mul(dh.saturating_pow(n as u32))
        .saturating_mul(dl.saturating_pow(n as u32 + 1))
}

fn thread_pool() -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(k) = std::env::var("TAFTLIE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        b = b.num_threads(k.max(1));
    }
    b.build().expect("thread pool")
}

/// Rank of the evaluation rows of `words`; rows are produced in parallel and
/// reduced in word order, so the result does not depend on scheduling.
pub fn evaluation_rank(m: &HModuleLie, n: usize, words: &[HWord]) -> Result<usize> {
    let table = ActionTable::new(m);
    let all: Vec<Vec<usize>> = tuples(m.dim(), n).collect();
    if let (Some(w), Some(t)) = (words.first(), all.first()) {
        check_word(m, w, t)?;
    }
    for w in words {
        if w.degree() != n {
            return Err(Error::Precondition("words of mixed degree".into()));
        }
    }
    let row_len = all.len() * m.dim();
    let mut ech = Echelon::new(m.field(), row_len);
    let pool = thread_pool();
    for chunk in words.chunks(CHUNK) {
        let rows: Vec<Vector> = pool.install(|| {
            chunk
                .par_iter()
                .map(|w| all.iter().flat_map(|t| table.eval(m, w, t)).collect())
                .collect()
        });
        for r in rows {
            ech.insert(r);
            if ech.is_full() {
                return Ok(ech.rank());
            }
        }
    }
    Ok(ech.rank())
}

/// `c_n^H(L)`, refusing when the evaluation matrix exceeds `budget` entries.
pub fn codimension(m: &HModuleLie, n: usize, budget: u128) -> Result<usize> {
    let required = required_entries(m, n);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let words = enumerate_spanning(n, m.hopf())?;
    evaluation_rank(m, n, &words)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimResult {
    pub n: usize,
    pub c_n: usize,
    pub bound: u128,
}

impl CodimResult {
    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "c_n": self.c_n, "bound": self.bound.to_string() })
    }
}

/// `c_n ≤ (dim L)^{n+1}`.
pub fn check_bound(m: &HModuleLie, n: usize, budget: u128) -> Result<(CodimResult, Report)> {
    let c_n = codimension(m, n, budget)?;
    let bound = (m.dim() as u128).saturating_pow(n as u32 + 1);
    let detail = json!({
        "n": n,
        "c_n": c_n,
        "bound": bound.to_string(),
        "ratio": c_n as f64 / bound as f64,
    });
    let check = if (c_n as u128) <= bound {
        Check::pass("c_n <= (dim L)^(n+1)").with_detail(detail)
    } else {
        Check::fail("c_n <= (dim L)^(n+1)", detail)
    };
    Ok((CodimResult { n, c_n, bound }, [check].into_iter().collect()))
}

/// Whether `Σ c_i w_i` vanishes on every basis tuple.
pub fn is_h_identity(m: &HModuleLie, combination: &[(CycNum, HWord)]) -> Result<bool> {
    let Some((_, first)) = combination.first() else {
        return Ok(true);
    };
    let n = first.degree();
    if combination.iter().any(|(_, w)| w.degree() != n) {
        return Err(Error::Precondition("words of mixed degree".into()));
    }
    let table = ActionTable::new(m);
    for t in tuples(m.dim(), n) {
        let mut acc = vec![m.field().zero(); m.dim()];
        for (c, w) in combination {
            check_word(m, w, &t)?;
            for (a, x) in acc.iter_mut().zip(table.eval(m, w, &t)) {
                a.add_mul(c, &x);
            }
        }
        if !is_zero_vector(&acc) {
            return Ok(false);
        }
    }
    Ok(true)
}
