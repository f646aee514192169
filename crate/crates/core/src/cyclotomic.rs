//! Exact arithmetic in the cyclotomic field `Q(ζ_m)` and quantum integers.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` and every
//! operation reduces modulo the m-th cyclotomic polynomial `Φ_m`, so two
//! elements are equal exactly when their coefficient vectors are equal.
//!
//! ```
//! use taftlie::cyclotomic::{CyclotomicField, q_int};
//!
//! let f = CyclotomicField::get(3).unwrap();
//! let z = f.zeta();
//! assert!((f.one() + &z + z.pow(2)).is_zero());
//! assert!(q_int(&f, 3).is_zero());
//! ```

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shared handle to a cyclotomic field.
pub type Field = Arc<CyclotomicField>;

/// The field `Q(ζ_m)` together with the tables needed to reduce products.
pub struct CyclotomicField {
    m: usize,
    phi: usize,
    /// Coefficients of `Φ_m`, lowest degree first, monic.
    modulus: Vec<BigInt>,
    /// `x^{φ+j} mod Φ_m` for `j = 0..φ-1`.
    reduction: Vec<Vec<BigRational>>,
    /// `ζ^k` for `k = 0..m-1`.
    powers: Vec<Vec<BigRational>>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.m)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for CyclotomicField {}

fn field_cache() -> &'static Mutex<HashMap<usize, Field>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer polynomial division by a monic divisor; the remainder must vanish.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let t = rem[i + dd].clone();
        if t.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &t * d;
        }
        quot[i] = t;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// `Φ_n` via `x^n - 1 = Π_{d | n} Φ_d`.
pub(crate) fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = -BigInt::one();
    num[n] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

impl CyclotomicField {
    /// Returns the (cached) field `Q(ζ_m)`.
    pub fn get(m: usize) -> Result<Field> {
        if m == 0 {
            return Err(Error::InvalidConductor(m));
        }
        let mut cache = field_cache().lock().expect("field cache poisoned");
        if let Some(f) = cache.get(&m) {
            return Ok(f.clone());
        }
        let f = Arc::new(Self::build(m));
        cache.insert(m, f.clone());
        Ok(f)
    }

    fn build(m: usize) -> Self {
        let modulus = cyclotomic_polynomial(m);
        let phi = modulus.len() - 1;
        debug_assert_eq!(phi, euler_phi(m));
        let top = (2 * phi).max(m) + 1;
        // successive powers x^k mod Φ_m
        let mut all = Vec::with_capacity(top);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..top {
            all.push(cur.clone());
            let carry = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !carry.is_zero() {
                for i in 0..phi {
                    next[i] -= &carry * &modulus[i];
                }
            }
            cur = next;
        }
        let to_q = |v: &Vec<BigInt>| -> Vec<BigRational> {
            v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
        };
        let reduction = (0..phi.saturating_sub(1))
            .map(|j| to_q(&all[phi + j]))
            .collect();
        let powers = (0..m).map(|k| to_q(&all[k])).collect();
        CyclotomicField {
            m,
            phi,
            modulus,
            reduction,
            powers,
        }
    }

    pub fn conductor(&self) -> usize {
        self.m
    }

    /// `φ(m)`, the degree of the field over Q.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Coefficients of `Φ_m`, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CycNum {
        CycNum {
            field: self.clone(),
            coeffs: vec![BigRational::zero(); self.phi],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycNum {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> CycNum {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(self: &Arc<Self>, q: BigRational) -> CycNum {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    pub fn from_ratio(self: &Arc<Self>, p: i64, q: i64) -> CycNum {
        assert!(q != 0, "zero denominator");
        self.from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The distinguished primitive root `ζ = ζ_m`.
    pub fn zeta(self: &Arc<Self>) -> CycNum {
        self.zeta_pow(1)
    }

    /// `ζ^k` for any integer `k` (negative exponents allowed).
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycNum {
        let idx = k.rem_euclid(self.m as i64) as usize;
        CycNum {
            field: self.clone(),
            coeffs: self.powers[idx].clone(),
        }
    }

    /// Builds an element from power-basis coefficients; length must be `φ(m)`.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<BigRational>) -> Result<CycNum> {
        if coeffs.len() != self.phi {
            return Err(Error::DimensionMismatch {
                expected: self.phi,
                found: coeffs.len(),
            });
        }
        Ok(CycNum {
            field: self.clone(),
            coeffs,
        })
    }
}

/// An exact element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct CycNum {
    field: Field,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn conductor(&self) -> usize {
        self.field.m
    }

    /// Power-basis coefficients, lowest power first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &CycNum) -> Result<()> {
        if self.field.m != other.field.m {
            Err(Error::ConductorMismatch {
                left: self.field.m,
                right: other.field.m,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        Ok(CycNum {
            field: self.field.clone(),
            coeffs: self.mul_coeffs(other),
        })
    }

    pub fn try_div(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    fn mul_coeffs(&self, other: &CycNum) -> Vec<BigRational> {
        let phi = self.field.phi;
        if phi == 1 {
            return vec![&self.coeffs[0] * &other.coeffs[0]];
        }
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let high = prod.split_off(phi);
        for (d, t) in high.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            for (i, r) in self.field.reduction[d].iter().enumerate() {
                if !r.is_zero() {
                    prod[i] += t * r;
                }
            }
        }
        prod
    }

    /// Multiplicative inverse, found by solving `self · x = 1` in the power basis.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = self.field.phi;
        if phi == 1 {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        // column j of the multiplication matrix is self * ζ^j
        let cols: Vec<Vec<BigRational>> = (0..phi)
            .map(|j| {
                CycNum {
                    field: self.field.clone(),
                    coeffs: self.field.powers[j].clone(),
                }
                .mul_coeffs(self)
            })
            .collect();
        // augmented rows [M | e_0]
        let mut rows: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut r: Vec<BigRational> = (0..phi).map(|j| cols[j][i].clone()).collect();
                r.push(if i == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                r
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi)
                .find(|&r| !rows[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            rows.swap(col, piv);
            let p = rows[col][col].recip();
            for x in rows[col].iter_mut() {
                *x *= &p;
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        Ok(CycNum {
            field: self.field.clone(),
            coeffs: rows.into_iter().map(|mut r| r.pop().unwrap()).collect(),
        })
    }

    /// Integer power; negative exponents invert first.
    pub fn try_pow(&self, e: i64) -> Result<CycNum> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Non-negative power.
    pub fn pow(&self, e: u32) -> CycNum {
        self.try_pow(e as i64).expect("non-negative power cannot fail")
    }

    /// `self += a * b`.
    pub fn add_mul(&mut self, a: &CycNum, b: &CycNum) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_coeffs(b);
        for (x, y) in self.coeffs.iter_mut().zip(p) {
            *x += y;
        }
    }

    /// `self -= a * b`.
    pub fn sub_mul(&mut self, a: &CycNum, b: &CycNum) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_coeffs(b);
        for (x, y) in self.coeffs.iter_mut().zip(p) {
            *x -= y;
        }
    }

    /// Serialized form: `φ(m)` strings `"p/q"` in lowest terms, lowest power first.
    pub fn to_wire(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    pub fn from_wire(field: &Field, wire: &[String]) -> Result<CycNum> {
        let coeffs = wire
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        field.from_coeffs(coeffs)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let zeta = match i {
                0 => String::new(),
                1 => "zeta".to_string(),
                _ => format!("zeta^{i}"),
            };
            if i == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{zeta}")?;
            } else {
                write!(f, "{}*{zeta}", fmt_rational(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Q(zeta_{})", self, self.field.m)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.m.hash(state);
        self.coeffs.hash(state);
    }
}

// Operator impls panic on conductor mismatch; use the `try_*` methods to
// get an error instead.
macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$try(rhs).expect("cyclotomic arithmetic across conductors")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        assert_eq!(self.field.m, rhs.field.m, "cyclotomic arithmetic across conductors");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        assert_eq!(self.field.m, rhs.field.m, "cyclotomic arithmetic across conductors");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for c in self.coeffs.iter_mut() {
            *c = -&*c;
        }
        self
    }
}

/// Parses a scalar: either a JSON array of power-basis rationals, or an
/// expression such as `0`, `-3/2`, `zeta`, `zeta^2`, `1 + zeta`, `2*zeta^-1`.
pub fn parse_scalar(field: &Field, text: &str) -> Result<CycNum> {
    let t = text.trim();
    if t.starts_with('[') {
        let wire: Vec<String> = serde_json::from_str(t)?;
        return CycNum::from_wire(field, &wire);
    }
    let chars: Vec<char> = t.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let err = |msg: &str| Error::Parse(format!("{msg} in scalar {text:?}"));
    let mut pos = 0;
    let mut total = field.zero();
    let read_int = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            None
        } else {
            chars[start..*pos].iter().collect::<String>().parse().ok()
        }
    };
    while pos < chars.len() {
        let mut sign = BigInt::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(err("expected '+' or '-'"));
        }
        let mut coeff = BigRational::from_integer(sign);
        let mut saw_number = false;
        if let Some(p) = read_int(&mut pos) {
            saw_number = true;
            let mut q = BigInt::one();
            if pos < chars.len() && chars[pos] == '/' {
                pos += 1;
                q = read_int(&mut pos).ok_or_else(|| err("missing denominator"))?;
                if q.is_zero() {
                    return Err(err("zero denominator"));
                }
            }
            coeff *= BigRational::new(p, q);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
            }
        }
        let rest: String = chars[pos..].iter().collect();
        let mut exp: i64 = 0;
        let zeta_len = ["zeta", "ζ", "z"]
            .iter()
            .find(|w| rest.starts_with(*w))
            .map(|w| w.chars().count());
        if let Some(len) = zeta_len {
            pos += len;
            exp = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let neg = pos < chars.len() && chars[pos] == '-';
                if neg {
                    pos += 1;
                }
                let e = read_int(&mut pos).ok_or_else(|| err("missing exponent"))?;
                let e: i64 = e.try_into().map_err(|_| err("exponent too large"))?;
                exp = if neg { -e } else { e };
            }
        } else if !saw_number {
            return Err(err("expected a number or zeta"));
        }
        total += &(field.from_rational(coeff) * field.zeta_pow(exp));
    }
    Ok(total)
}

/// A quantum integer `n_ζ = 1 + ζ + … + ζ^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInt {
    pub n: usize,
    pub value: CycNum,
}

impl QInt {
    pub fn new(field: &Field, n: usize) -> Self {
        QInt {
            n,
            value: q_int(field, n),
        }
    }
}

/// `n_ζ`; the empty sum gives `0_ζ = 0`.
pub fn q_int(field: &Field, n: usize) -> CycNum {
    let mut acc = field.zero();
    for i in 0..n {
        acc += &field.zeta_pow(i as i64);
    }
    acc
}

/// `n!_ζ = n_ζ (n-1)_ζ ⋯ 1_ζ`, with `0!_ζ = 1`.
pub fn q_factorial(field: &Field, n: usize) -> CycNum {
    (1..=n).fold(field.one(), |acc, j| acc * q_int(field, j))
}

/// Quantum binomial `n!_ζ / ((n-k)!_ζ k!_ζ)` for `0 ≤ k ≤ n ≤ m-1`.
pub fn q_binom(field: &Field, n: usize, k: usize) -> Result<CycNum> {
    if n >= field.conductor() {
        return Err(Error::OutOfRange(format!(
            "quantum binomial needs n < m (n = {n}, m = {})",
            field.conductor()
        )));
    }
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    let den = q_factorial(field, n - k) * q_factorial(field, k);
    q_factorial(field, n).try_div(&den)
}

/// Gaussian binomial coefficient evaluated at an arbitrary base `q`.
///
/// Computed with the q-Pascal recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`,
/// so no division occurs and `n ≥ m` is allowed.
pub fn gaussian_binomial(q: &CycNum, n: usize, k: usize) -> CycNum {
    let field = q.field();
    if k > n {
        return field.zero();
    }
    let qpow: Vec<CycNum> = (0..=k).map(|j| q.pow(j as u32)).collect();
    let mut row = vec![field.zero(); k + 1];
    row[0] = field.one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let t = &qpow[j] * &row[j];
            row[j] = &row[j - 1] + &t;
        }
    }
    row[k].clone()
}
