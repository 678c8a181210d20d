//! Modular arithmetic on machine words.
//!
//! All moduli in the sieve fit comfortably in 64 bits (the largest are
//! prime powers below 2^62), so residues are carried as `u64` with `u128`
//! intermediates. Arbitrary-precision arithmetic is reserved for norms,
//! resultants and curves over Q.

use crate::error::{Error, Result};

/// A residue together with its modulus, for values whose modulus is part
/// of the contract (Hensel-lifted roots, eigenvalue residues).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1);
        Residue {
            value: value % modulus,
            modulus,
        }
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

/// Reduce a signed integer into `[0, m)`.
#[inline]
pub fn reduce_i64(a: i64, m: u64) -> u64 {
    let r = a.rem_euclid(m as i64);
    r as u64
}

/// base^exp mod m by square-and-multiply. `m = 1` gives 0.
pub fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    assert!(m >= 1);
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    result
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs()) as i64
}

/// Modular inverse via extended Euclid; `None` when gcd(a, m) > 1.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Test whether a unit x mod p lies in the subgroup of n-th powers of F_p*.
///
/// Uses x^((p-1)/d) = 1 with d = gcd(n, p-1): the n-th powers form the
/// unique subgroup of index d.
pub fn is_nth_power(x: u64, n: u64, p: u64) -> Result<bool> {
    assert!(n >= 1);
    let xr = x % p;
    if xr == 0 {
        return Err(Error::NotAUnit {
            value: x,
            modulus: p,
        });
    }
    if p == 2 {
        return Ok(true);
    }
    let d = gcd_u64(n, p - 1);
    Ok(pow_mod(xr, (p - 1) / d, p) == 1)
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).map(|s| s <= n).unwrap_or(false) {
        x += 1;
    }
    x
}
