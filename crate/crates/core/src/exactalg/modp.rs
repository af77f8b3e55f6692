//! Word-size prime field arithmetic and dense univariate polynomials over it.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `i`-th prime below `2^62`, counting downwards.
pub fn prime(i: usize) -> u64 {
    static PRIMES: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    let cell = PRIMES.get_or_init(|| Mutex::new(Vec::new()));
    let mut v = cell.lock().unwrap_or_else(|e| e.into_inner());
    while v.len() <= i {
        let mut c = v.last().copied().unwrap_or((1u64 << 62) + 1) - 2;
        while !is_prime(c) {
            c -= 2;
        }
        v.push(c);
    }
    v[i]
}

pub fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap_or(0)
}

pub fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
}

/// Remainder of `a` by `b` (`b` nonzero, trimmed).
fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv_lc = inv(b[db], p);
    trim(&mut a);
    while a.len() > db {
        let da = a.len() - 1;
        let f = mul(a[da], inv_lc, p);
        let off = da - db;
        for (i, &bc) in b.iter().enumerate() {
            a[off + i] = sub(a[off + i], mul(f, bc, p), p);
        }
        trim(&mut a);
    }
    a
}

/// Monic gcd; zero polynomial for `gcd(0, 0)`.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lc) = x.last() {
        let il = inv(lc, p);
        for c in x.iter_mut() {
            *c = mul(*c, il, p);
        }
    }
    x
}

/// Combines a residue vector modulo `p` into residues modulo `m`.
///
/// `acc` holds values in `[0, m)`; on return they live in `[0, m*p)`.
pub fn crt_extend(acc: &mut [BigInt], m: &BigInt, res: &[u64], p: u64) {
    let m_mod_p = reduce(m, p);
    let m_inv = inv(m_mod_p, p);
    for (a, &r) in acc.iter_mut().zip(res) {
        let a_mod = reduce(a, p);
        let k = mul(sub(r, a_mod, p), m_inv, p);
        if k != 0 {
            *a += m * BigInt::from(k);
        }
    }
}

/// Symmetric representative of `a` modulo `m`.
pub fn symmetric(a: &BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    if a > half {
        a - m
    } else {
        a.clone()
    }
}
