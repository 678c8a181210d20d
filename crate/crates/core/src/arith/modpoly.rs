//! Polynomials over the prime field F_l, l small.
//!
//! Sized for the sieve's needs: l <= 100 and degree <= 16 (the largest
//! input is a degree-11 minimal polynomial reduced mod 3). Factorization
//! is distinct-degree followed by equal-degree splitting with a
//! deterministic trial sequence, so output order is reproducible.

use super::modular::{inv_mod, mul_mod, sub_mod};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModPoly {
    l: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(l: u64, mut coeffs: Vec<u64>) -> Self {
        assert!(l >= 2);
        for c in coeffs.iter_mut() {
            *c %= l;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { l, coeffs }
    }

    pub fn zero(l: u64) -> Self {
        ModPoly { l, coeffs: vec![] }
    }

    pub fn one(l: u64) -> Self {
        ModPoly::new(l, vec![1])
    }

    pub fn x(l: u64) -> Self {
        ModPoly::new(l, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.l
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
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

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().expect("lc of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc() == 1
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.l) + c) % self.l;
        }
        acc
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.l, other.l);
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.l,
            (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.l).collect(),
        )
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.l, other.l);
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.l,
            (0..n)
                .map(|i| sub_mod(self.coeff(i), other.coeff(i), self.l))
                .collect(),
        )
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.l, other.l);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.l);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.l)) % self.l;
            }
        }
        ModPoly::new(self.l, out)
    }

    pub fn mul_scalar(&self, s: u64) -> ModPoly {
        ModPoly::new(self.l, self.coeffs.iter().map(|&c| mul_mod(c, s, self.l)).collect())
    }

    /// Monic rescaling (division by the leading coefficient).
    pub fn monic(&self) -> ModPoly {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.l).expect("prime modulus");
        self.mul_scalar(inv)
    }

    pub fn divrem(&self, divisor: &ModPoly) -> (ModPoly, ModPoly) {
        debug_assert_eq!(self.l, divisor.l);
        let dd = divisor.degree().expect("division by zero polynomial");
        let l = self.l;
        let inv_lc = inv_mod(divisor.lc(), l).expect("prime modulus");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (ModPoly::zero(l), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mul_mod(rem[i], inv_lc, l);
            quot[i - dd] = c;
            if c != 0 {
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[i - dd + j] = sub_mod(rem[i - dd + j], mul_mod(c, b, l), l);
                }
            }
        }
        rem.truncate(dd);
        (ModPoly::new(l, quot), ModPoly::new(l, rem))
    }

    pub fn rem(&self, divisor: &ModPoly) -> ModPoly {
        self.divrem(divisor).1
    }

    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) monic with s*self + t*other = g.
    pub fn xgcd(&self, other: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let l = self.l;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (ModPoly::one(l), ModPoly::zero(l));
        let (mut t0, mut t1) = (ModPoly::zero(l), ModPoly::one(l));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            (r0, r1) = (r1, r);
            let ns = s0.sub(&q.mul(&s1));
            (s0, s1) = (s1, ns);
            let nt = t0.sub(&q.mul(&t1));
            (t0, t1) = (t1, nt);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let scale = inv_mod(r0.lc(), l).expect("prime modulus");
        (r0.mul_scalar(scale), s0.mul_scalar(scale), t0.mul_scalar(scale))
    }

    pub fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.l);
        }
        ModPoly::new(
            self.l,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| mul_mod(c, (i as u64 + 1) % self.l, self.l))
                .collect(),
        )
    }

    /// self^e mod modpoly.
    pub fn pow_mod(&self, mut e: u64, modulus: &ModPoly) -> ModPoly {
        let mut base = self.rem(modulus);
        let mut acc = ModPoly::one(self.l);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// l-th root of a polynomial of the form g(x^l) (coefficientwise, since
    /// a^l = a in F_l).
    fn lth_root(&self) -> ModPoly {
        let l = self.l as usize;
        let mut out = Vec::with_capacity(self.coeffs.len() / l + 1);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i % l == 0 {
                out.push(c);
            } else {
                debug_assert_eq!(c, 0, "not of the form g(x^l)");
            }
        }
        ModPoly::new(self.l, out)
    }
}

/// Squarefree decomposition of a monic polynomial over F_l:
/// f = prod g_i^(m_i) with the g_i squarefree and pairwise coprime.
fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let l = f.modulus();
    let mut out: Vec<(ModPoly, u32)> = Vec::new();
    let mut stack = vec![(f.monic(), 1u32)];
    while let Some((f, outer)) = stack.pop() {
        if f.degree() == Some(0) {
            continue;
        }
        let fp = f.derivative();
        if fp.is_zero() {
            // f = h(x^l) = (l-th root of h)^l
            stack.push((f.lth_root(), outer * l as u32));
            continue;
        }
        let mut c = f.gcd(&fp);
        let mut w = f.divrem(&c).0;
        let mut i = 1u32;
        while w.degree() != Some(0) {
            let y = w.gcd(&c);
            let fac = w.divrem(&y).0;
            if fac.degree().unwrap_or(0) > 0 {
                out.push((fac.monic(), i * outer));
            }
            w = y;
            c = c.divrem(&w).0;
            i += 1;
        }
        if c.degree().unwrap_or(0) > 0 {
            // remaining l-th power part
            stack.push((c.lth_root(), outer * l as u32));
        }
    }
    out
}

/// Splits a monic squarefree product of degree-d irreducibles into its
/// irreducible factors, by equal-degree splitting with a deterministic
/// trial sequence.
fn equal_degree_factor(f: &ModPoly, d: usize) -> Vec<ModPoly> {
    let l = f.modulus();
    if f.degree() == Some(d) {
        return vec![f.monic()];
    }
    // deterministic enumeration of candidate splitters: all monic
    // polynomials of degree 1, then 2, ... with ascending coefficients
    let mut trial_deg = 1usize;
    let mut counter = vec![0u64; 1];
    loop {
        let mut coeffs = counter.clone();
        coeffs.push(1);
        let u = ModPoly::new(l, coeffs);
        let w = if l == 2 {
            // trace map u + u^2 + ... + u^(2^(d-1))
            let mut acc = u.rem(f);
            let mut term = u.rem(f);
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                acc = acc.add(&term);
            }
            acc
        } else {
            let e = (l.pow(d as u32) - 1) / 2;
            let p = u.pow_mod(e, f);
            p.sub(&ModPoly::one(l))
        };
        if !w.is_zero() {
            let g = f.gcd(&w);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < f.degree().unwrap() {
                let h = f.divrem(&g).0;
                let mut out = equal_degree_factor(&g, d);
                out.extend(equal_degree_factor(&h, d));
                return out;
            }
        }
        // advance counter (odometer over F_l^trial_deg)
        let mut pos = 0;
        loop {
            if pos == counter.len() {
                trial_deg += 1;
                assert!(
                    trial_deg <= f.degree().unwrap() + 1,
                    "equal-degree splitting exhausted trial polynomials"
                );
                counter = vec![0; trial_deg];
                break;
            }
            counter[pos] += 1;
            if counter[pos] < l {
                break;
            }
            counter[pos] = 0;
            pos += 1;
        }
    }
}

/// Complete factorization of f mod l into monic irreducibles with
/// multiplicities. The product of factor^multiplicity times lc(f)
/// reproduces f. Errors on f = 0 mod l.
pub fn factor_mod_l(f: &ModPoly) -> Result<Vec<(ModPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroModulo(f.modulus()));
    }
    let mut out: Vec<(ModPoly, u32)> = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    for (g, mult) in squarefree_decomposition(&f.monic()) {
        // distinct-degree on the squarefree part
        let mut g = g;
        let l = g.modulus();
        let x = ModPoly::x(l);
        let mut frob = x.clone(); // x^(l^d) mod g, updated per degree
        let mut d = 0usize;
        while let Some(dg) = g.degree() {
            if dg == 0 {
                break;
            }
            d += 1;
            if 2 * d > dg {
                // remainder is a single irreducible
                out.push((g.monic(), mult));
                break;
            }
            frob = frob.pow_mod(l, &g);
            let h = g.gcd(&frob.sub(&x));
            if h.degree().unwrap_or(0) > 0 {
                for irr in equal_degree_factor(&h, d) {
                    out.push((irr, mult));
                }
                g = g.divrem(&h).0;
                frob = frob.rem(&g);
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::IntPoly;

    fn refactor(l: u64, factors: &[(ModPoly, u32)], lc: u64) -> ModPoly {
        let mut acc = ModPoly::new(l, vec![lc]);
        for (f, m) in factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Brute-force irreducibility for small l^deg: no monic divisor of
    /// degree 1..=deg/2.
    fn is_irreducible_bruteforce(f: &ModPoly) -> bool {
        let l = f.modulus();
        let deg = f.degree().unwrap();
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            for idx in 0..l.pow(d as u32) {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut v = idx;
                for _ in 0..d {
                    coeffs.push(v % l);
                    v /= l;
                }
                coeffs.push(1);
                let div = ModPoly::new(l, coeffs);
                if f.rem(&div).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn factor_spec_examples() {
        // x^2 + 1 mod 3 is irreducible
        let f = ModPoly::new(3, vec![1, 0, 1]);
        let fac = factor_mod_l(&f).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].0, f);
        assert_eq!(fac[0].1, 1);

        // t^3 - 5t^2 - 2t + 25 mod 3 = (t+1)(t^2+1)
        let g = IntPoly::from_i64(&[25, -2, -5, 1]).reduce_mod(3).unwrap();
        let fac = factor_mod_l(&g).unwrap();
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[0].0, ModPoly::new(3, vec![1, 1]));
        assert_eq!(fac[0].1, 1);
        assert_eq!(fac[1].0, ModPoly::new(3, vec![1, 0, 1]));
        assert_eq!(fac[1].1, 1);

        // x^2 - 4x + 7 mod 3 = (x+1)^2
        let h = IntPoly::from_i64(&[7, -4, 1]).reduce_mod(3).unwrap();
        let fac = factor_mod_l(&h).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].0, ModPoly::new(3, vec![1, 1]));
        assert_eq!(fac[0].1, 2);
    }

    #[test]
    fn factor_reproduces_input_and_is_irreducible() {
        let mut state = 0x853c49e6748fea9bu64;
        let mut next = move |bound: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % bound
        };
        for &l in &[2u64, 3, 5, 7, 13] {
            for _ in 0..60 {
                let deg = 1 + (next(8) as usize);
                let mut coeffs: Vec<u64> = (0..deg).map(|_| next(l)).collect();
                coeffs.push(1 + next(l - 1).min(l - 2));
                let f = ModPoly::new(l, coeffs);
                if f.is_zero() || f.degree() == Some(0) {
                    continue;
                }
                let fac = factor_mod_l(&f).unwrap();
                assert_eq!(refactor(l, &fac, f.lc()), f, "l={l} f={:?}", f.coeffs());
                for (g, _) in &fac {
                    assert!(g.is_monic());
                    if l.pow(g.degree().unwrap() as u32) < 100_000 {
                        assert!(is_irreducible_bruteforce(g), "l={l} g={:?}", g.coeffs());
                    }
                }
            }
        }
    }

    #[test]
    fn factor_degree11_min_poly_mod_3() {
        // the degree-11 coefficient-field generator polynomial at level 935
        let p = IntPoly::from_i64(&[
            -168, -770, -449, 1212, 705, -827, -225, 222, 26, -25, -1, 1,
        ]);
        let f = p.reduce_mod(3).unwrap();
        let fac = factor_mod_l(&f).unwrap();
        let product = refactor(3, &fac, f.lc());
        assert_eq!(product, f.monic());
        // exactly two linear factors: t (simple) and t+1 (doubled)
        let linear: Vec<_> = fac.iter().filter(|(g, _)| g.degree() == Some(1)).collect();
        assert_eq!(linear.len(), 2);
        assert_eq!(linear[0].0, ModPoly::new(3, vec![0, 1]));
        assert_eq!(linear[0].1, 1);
        assert_eq!(linear[1].0, ModPoly::new(3, vec![1, 1]));
        assert_eq!(linear[1].1, 2);
        // degree bookkeeping
        let total: usize = fac.iter().map(|(g, m)| g.degree().unwrap() * *m as usize).sum();
        assert_eq!(total, 11);
    }

    #[test]
    fn rejects_zero_mod_l() {
        let f = IntPoly::from_i64(&[3, 9, 27]);
        assert!(matches!(f.reduce_mod(3), Err(Error::ZeroModulo(3))));
    }
}
