//! Reduction of `Z[ζ_m]`-integral data modulo a prime `p ≡ 1 (mod m)`.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Mat;
use crate::cyclotomic::{CycNum, Field};

const PRIME_CEILING: u64 = 1 << 31;
const PRIMES_TO_TRY: usize = 4;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Element of multiplicative order exactly `m` in `F_p`.
fn root_of_unity(m: u64, p: u64) -> u64 {
    let factors = prime_factors(m);
    (2..p)
        .map(|a| pow_mod(a, (p - 1) / m, p))
        .find(|&r| factors.iter().all(|&q| pow_mod(r, m / q, p) != 1))
        .expect("F_p* is cyclic of order divisible by m")
}

/// Candidate primes `p ≡ 1 (mod m)` below `2^31`, largest first.
fn candidate_primes(m: u64) -> impl Iterator<Item = u64> {
    let top = (PRIME_CEILING - 1) / m * m + 1;
    let top = if top >= PRIME_CEILING { top - m } else { top };
    (0..)
        .map(move |i| top - i * m)
        .take_while(|&p| p > 2)
        .filter(|&p| is_prime(p))
}

struct Reducer {
    p: u64,
    root_powers: Vec<u64>,
}

impl Reducer {
    fn big_mod(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }

    fn reduce(&self, x: &CycNum) -> Option<u64> {
        let mut acc = 0u64;
        for (c, r) in x.coeffs().iter().zip(&self.root_powers) {
            if c.is_zero() {
                continue;
            }
            let den = self.big_mod(c.denom());
            if den == 0 {
                return None;
            }
            let num = self.big_mod(c.numer());
            let val = num * pow_mod(den, self.p - 2, self.p) % self.p;
            acc = (acc + val * r) % self.p;
        }
        Some(acc)
    }

    fn reduce_mat(&self, a: &Mat) -> Option<Vec<u64>> {
        a.entries().iter().map(|x| self.reduce(x)).collect()
    }
}

struct EchelonModP {
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl EchelonModP {
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if *y != 0 {
                    *x = (*x + p - c * y % p) % p;
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = pow_mod(v[piv], p - 2, p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }
}

fn mul_mod(a: &[u64], b: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    let o = &mut out[i * n + j];
                    *o = (*o + x * y) % p;
                }
            }
        }
    }
    out
}

/// Dimension of the generated algebra after reduction modulo some prime, or
/// `None` when no suitable prime keeps every entry integral.
pub(super) fn algebra_dim_mod_p(field: &Field, n: usize, gens: &[Mat]) -> Option<usize> {
    let m = field.conductor() as u64;
    for p in candidate_primes(m.max(1)).take(PRIMES_TO_TRY) {
        let r = match m {
            1 => 1,
            2 => p - 1,
            _ => root_of_unity(m, p),
        };
        let mut root_powers = Vec::with_capacity(field.degree());
        let mut acc = 1u64;
        for _ in 0..field.degree() {
            root_powers.push(acc);
            acc = acc * r % p;
        }
        let red = Reducer { p, root_powers };
        let Some(gs) = gens.iter().map(|g| red.reduce_mat(g)).collect::<Option<Vec<_>>>() else {
            continue;
        };
        let mut ech = EchelonModP {
            p,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        let mut id = vec![0u64; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        ech.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        'outer: while let Some(x) = queue.pop_front() {
            for g in &gs {
                if ech.rows.len() == n * n {
                    break 'outer;
                }
                let prod = mul_mod(&x, g, n, p);
                if ech.insert(prod.clone()) {
                    queue.push_back(prod);
                }
            }
        }
        return Some(ech.rows.len());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_have_exact_order() {
        for m in [3u64, 4, 5, 6, 12] {
            let p = candidate_primes(m).next().unwrap();
            assert_eq!(p % m, 1);
            assert!(p < PRIME_CEILING);
            let r = root_of_unity(m, p);
            assert_eq!(pow_mod(r, m, p), 1);
            for d in 1..m {
                assert_ne!(pow_mod(r, d, p), 1);
            }
        }
    }
}
