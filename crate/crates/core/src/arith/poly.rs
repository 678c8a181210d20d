//! Exact integer polynomials.
//!
//! Coefficients are arbitrary precision: resultants of degree-11 minimal
//! polynomials against eigenvalue polynomials overflow 64 bits immediately.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::modpoly::ModPoly;

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// x - r
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation with all arithmetic reduced modulo m.
    pub fn eval_mod(&self, x: u64, m: u64) -> u64 {
        assert!(m >= 1);
        if m == 1 {
            return 0;
        }
        let mb = BigInt::from(m);
        let xr = x % m;
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            let cr = c.mod_floor(&mb);
            let cr: u64 = cr.try_into().expect("reduced coefficient fits u64");
            acc = (super::modular::mul_mod(acc, xr, m) + cr) % m;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as u64 + 1))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Content: positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder: lc(divisor)^(deg a - deg b + 1) * a = q*b + r.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let d = b.lc().clone();
        let Some(mut dr) = r.degree() else {
            return r;
        };
        let delta = dr.saturating_sub(db) + 1;
        let mut steps = 0usize;
        while !r.is_zero() && dr >= db {
            // r <- d*r - lc(r) * x^(dr-db) * b
            let lr = r.lc().clone();
            let shift = dr - db;
            let mut coeffs = vec![BigInt::zero(); dr.max(db + shift) + 1];
            for (i, c) in r.coeffs.iter().enumerate() {
                coeffs[i] = c * &d;
            }
            for (i, c) in b.coeffs.iter().enumerate() {
                coeffs[i + shift] -= c * &lr;
            }
            r = IntPoly::new(coeffs);
            steps += 1;
            match r.degree() {
                Some(nd) => dr = nd,
                None => break,
            }
        }
        // pad the multiplier so exactly delta powers of d were applied
        for _ in steps..delta {
            r = r.mul_scalar(&d);
        }
        r
    }

    /// Exact division by an integer, asserting exactness.
    fn div_exact(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(s);
                    debug_assert!(r.is_zero(), "inexact division in PRS");
                    q
                })
                .collect(),
        )
    }

    /// Degree of gcd(self, other) over Q, via a primitive polynomial
    /// remainder sequence.
    pub fn gcd_degree(&self, other: &IntPoly) -> usize {
        if self.is_zero() {
            return other.degree().unwrap_or(0);
        }
        if other.is_zero() {
            return self.degree().unwrap_or(0);
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return 0;
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.degree().unwrap_or(0)
    }

    /// Squarefree over Q: gcd with the derivative is constant.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            Some(1) => true,
            _ => self.gcd_degree(&self.derivative()) == 0,
        }
    }

    /// Reduction modulo a prime l. Errors when the whole polynomial
    /// vanishes mod l.
    pub fn reduce_mod(&self, l: u64) -> Result<ModPoly> {
        let lb = BigInt::from(l);
        let coeffs: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&lb);
                let r: u64 = r.try_into().expect("residue fits u64");
                r
            })
            .collect();
        let p = ModPoly::new(l, coeffs);
        if p.is_zero() {
            return Err(Error::ZeroModulo(l));
        }
        Ok(p)
    }
}

/// Resultant of two nonzero integer polynomials via the subresultant
/// polynomial remainder sequence (Cohen, Algorithm 3.3.7).
///
/// Sign convention: Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the
/// roots alpha_i of f, so Res(f, g) = (-1)^(deg f * deg g) Res(g, f).
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = BigInt::one();
    if a.degree() < b.degree() {
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.degree() == Some(0) {
        let da = a.degree().unwrap();
        return Ok(sign * b.lc().pow(da as u32));
    }
    let ca = a.content();
    let cb = b.content();
    a = a.div_exact(&ca);
    b = b.div_exact(&cb);
    let mut t = ca.pow(b.degree().unwrap() as u32) * cb.pow(a.degree().unwrap() as u32);
    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g_ * h.pow(delta);
        b = r.div_exact(&divisor);
        g_ = a.lc().clone();
        // h <- h^(1-delta) * g^delta
        h = match delta {
            0 => h,
            1 => g_.clone(),
            _ => {
                let num = g_.pow(delta);
                let den = h.pow(delta - 1);
                let (q, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                q
            }
        };
        if b.is_zero() {
            // positive-degree gcd
            return Ok(BigInt::zero());
        }
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u32;
            // h^(1-da) * lc(b)^da
            let num = b.lc().pow(da);
            let val = if da <= 1 {
                num
            } else {
                let den = h.pow(da - 1);
                let (q, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                q
            };
            // content scaling applies before the sign
            t *= val;
            return Ok(sign * t);
        }
    }
}
