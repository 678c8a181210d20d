//! Elliptic curves in long Weierstrass form over prime fields and over Q:
//! point counting, traces of Frobenius, reduction, exact group law and
//! torsion probes.
//!
//! Counting is O(p) per curve by a quadratic-character sum; all the primes
//! that matter stay below 218^2, so nothing faster is needed. The
//! character table for a fixed p is built once and shared across the many
//! curves counted at that prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::modular::{isqrt, mul_mod, reduce_i64, sub_mod};
use crate::error::{Error, Result};

/// Quadratic-character lookup table for F_p, p odd: chi[v] is 1 on nonzero
/// squares, -1 on non-squares, 0 at 0.
pub struct QuadTable {
    p: u64,
    chi: Vec<i8>,
}

impl QuadTable {
    pub fn new(p: u64) -> Self {
        assert!(p % 2 == 1 && p > 2);
        let mut chi = vec![-1i8; p as usize];
        chi[0] = 0;
        for y in 1..=(p - 1) / 2 {
            chi[mul_mod(y, y, p) as usize] = 1;
        }
        QuadTable { p, chi }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn chi(&self, v: u64) -> i8 {
        self.chi[v as usize]
    }

    /// Smallest quadratic non-residue.
    pub fn non_residue(&self) -> u64 {
        (2..self.p).find(|&v| self.chi[v as usize] == -1).expect("non-residue exists")
    }
}

/// Sum over x in F_p of chi(c3 x^3 + c2 x^2 + c1 x + c0), via forward
/// differences (no multiplications in the loop).
pub fn char_sum_cubic(table: &QuadTable, c3: u64, c2: u64, c1: u64, c0: u64) -> i64 {
    let p = table.p;
    let mut d0 = c0 % p;
    let mut d1 = (c3 + c2 + c1) % p;
    let mut d2 = (6 * c3 + 2 * c2) % p;
    let d3 = (6 * c3) % p;
    let mut sum = 0i64;
    for _ in 0..p {
        sum += table.chi[d0 as usize] as i64;
        d0 += d1;
        if d0 >= p {
            d0 -= p;
        }
        d1 += d2;
        if d1 >= p {
            d1 -= p;
        }
        d2 += d3;
        if d2 >= p {
            d2 -= p;
        }
    }
    sum
}

/// Long-Weierstrass curve over F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveFp {
    pub p: u64,
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
    pub a4: u64,
    pub a6: u64,
}

impl CurveFp {
    pub fn new(p: u64, a: [u64; 5]) -> Result<Self> {
        let curve = CurveFp {
            p,
            a1: a[0] % p,
            a2: a[1] % p,
            a3: a[2] % p,
            a4: a[3] % p,
            a6: a[4] % p,
        };
        if curve.discriminant() == 0 {
            return Err(Error::SingularCurve { p });
        }
        Ok(curve)
    }

    /// y^2 = x(x - r)(x + s)
    pub fn two_torsion_model(p: u64, r: u64, s: u64) -> Result<Self> {
        let r = r % p;
        let s = s % p;
        // x^3 + (s - r) x^2 - rs x
        let a2 = sub_mod(s, r, p);
        let a4 = sub_mod(0, mul_mod(r, s, p), p);
        CurveFp::new(p, [0, a2, 0, a4, 0])
    }

    fn b_invariants(&self) -> (u64, u64, u64, u64) {
        let p = self.p;
        let b2 = (mul_mod(self.a1, self.a1, p) + 4 * self.a2 % p) % p;
        let b4 = (2 * self.a4 % p + mul_mod(self.a1, self.a3, p)) % p;
        let b6 = (mul_mod(self.a3, self.a3, p) + 4 * self.a6 % p) % p;
        // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
        let t1 = mul_mod(mul_mod(self.a1, self.a1, p), self.a6, p);
        let t2 = mul_mod(4 * self.a2 % p, self.a6, p);
        let t3 = mul_mod(mul_mod(self.a1, self.a3, p), self.a4, p);
        let t4 = mul_mod(self.a2, mul_mod(self.a3, self.a3, p), p);
        let t5 = mul_mod(self.a4, self.a4, p);
        let b8 = sub_mod((t1 + t2 + t4) % p, (t3 + t5) % p, p);
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> u64 {
        let p = self.p;
        let (b2, b4, b6, b8) = self.b_invariants();
        // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        let t1 = mul_mod(mul_mod(b2, b2, p), b8, p);
        let t2 = mul_mod(8 % p, mul_mod(b4, mul_mod(b4, b4, p), p), p);
        let t3 = mul_mod(27 % p, mul_mod(b6, b6, p), p);
        let t4 = mul_mod(9 % p, mul_mod(b2, mul_mod(b4, b6, p), p), p);
        sub_mod(t4, (t1 + t2 + t3) % p, p)
    }

    /// #E(F_p) including the point at infinity.
    ///
    /// For odd p the count is p + 1 + sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6)
    /// after completing the square in y; p = 2 and 3 are scanned
    /// exhaustively.
    pub fn count_points(&self) -> u64 {
        if self.p <= 3 {
            return self.count_points_exhaustive();
        }
        let table = QuadTable::new(self.p);
        self.count_points_with(&table)
    }

    pub fn count_points_with(&self, table: &QuadTable) -> u64 {
        assert_eq!(table.p, self.p);
        if self.p <= 3 {
            return self.count_points_exhaustive();
        }
        let p = self.p;
        let (b2, b4, b6, _) = self.b_invariants();
        let sum = char_sum_cubic(table, 4 % p, b2, 2 * b4 % p, b6);
        (p as i64 + 1 + sum) as u64
    }

    fn count_points_exhaustive(&self) -> u64 {
        let p = self.p;
        let mut count = 1u64;
        for x in 0..p {
            for y in 0..p {
                let lhs = (mul_mod(y, y, p)
                    + mul_mod(self.a1, mul_mod(x, y, p), p)
                    + mul_mod(self.a3, y, p))
                    % p;
                let rhs = (mul_mod(x, mul_mod(x, x, p), p)
                    + mul_mod(self.a2, mul_mod(x, x, p), p)
                    + mul_mod(self.a4, x, p)
                    + self.a6)
                    % p;
                if lhs == rhs {
                    count += 1;
                }
            }
        }
        count
    }

    /// Trace of Frobenius: p + 1 - #E(F_p).
    pub fn trace_frobenius(&self) -> i64 {
        self.p as i64 + 1 - self.count_points() as i64
    }

    pub fn trace_frobenius_with(&self, table: &QuadTable) -> i64 {
        self.p as i64 + 1 - self.count_points_with(table) as i64
    }

    /// The curve carries a 3-isogeny iff its trace is congruent to
    /// +-(p+1) mod 3 (equivalently, the curve or its quadratic twist has
    /// a point of order 3).
    pub fn has_3_isogeny(&self) -> bool {
        let a = self.trace_frobenius().rem_euclid(3);
        let t = ((self.p + 1) % 3) as i64;
        a == t || a == (3 - t) % 3
    }
}

/// Long-Weierstrass curve over Q with integral model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveQ {
    pub a1: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
    pub a4: BigInt,
    pub a6: BigInt,
}

impl CurveQ {
    pub fn new(a: [BigInt; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a;
        let curve = CurveQ { a1, a2, a3, a4, a6 };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve { p: 0 });
        }
        Ok(curve)
    }

    pub fn from_i64(a: [i64; 5]) -> Result<Self> {
        Ok(Self::new(a.map(BigInt::from))?)
    }

    pub fn b_invariants(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        let b2 = &self.a1 * &self.a1 + 4 * &self.a2;
        let b4 = 2 * &self.a4 + &self.a1 * &self.a3;
        let b6 = &self.a3 * &self.a3 + 4 * &self.a6;
        let b8 = &self.a1 * &self.a1 * &self.a6 + 4 * &self.a2 * &self.a6
            - &self.a1 * &self.a3 * &self.a4
            + &self.a2 * &self.a3 * &self.a3
            - &self.a4 * &self.a4;
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> BigInt {
        let (b2, b4, b6, b8) = self.b_invariants();
        -(&b2 * &b2 * &b8) - 8 * (&b4 * &b4 * &b4) - 27 * (&b6 * &b6) + 9 * (&b2 * &b4 * &b6)
    }

    /// Reduction mod p on this model; errors when the model is singular
    /// mod p.
    pub fn reduce(&self, p: u64) -> Result<CurveFp> {
        let pb = BigInt::from(p);
        let red = |c: &BigInt| -> u64 {
            let r = c.mod_floor(&pb);
            r.try_into().expect("residue fits u64")
        };
        CurveFp::new(
            p,
            [
                red(&self.a1),
                red(&self.a2),
                red(&self.a3),
                red(&self.a4),
                red(&self.a6),
            ],
        )
        .map_err(|_| Error::BadReduction { p })
    }

    /// Trace of Frobenius of the reduction mod p (good reduction on this
    /// model required).
    pub fn reduce_and_ap(&self, p: u64) -> Result<i64> {
        Ok(self.reduce(p)?.trace_frobenius())
    }

    fn eval_at(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let a1 = BigRational::from(self.a1.clone());
        let a2 = BigRational::from(self.a2.clone());
        let a3 = BigRational::from(self.a3.clone());
        let a4 = BigRational::from(self.a4.clone());
        let a6 = BigRational::from(self.a6.clone());
        y * y + &a1 * x * y + &a3 * y - (x * x * x + &a2 * x * x + &a4 * x + &a6)
    }

    pub fn contains(&self, pt: &RationalPoint) -> bool {
        match pt {
            RationalPoint::Infinity => true,
            RationalPoint::Affine { x, y } => self.eval_at(x, y).is_zero(),
        }
    }

    fn neg_point(&self, pt: &RationalPoint) -> RationalPoint {
        match pt {
            RationalPoint::Infinity => RationalPoint::Infinity,
            RationalPoint::Affine { x, y } => {
                let a1 = BigRational::from(self.a1.clone());
                let a3 = BigRational::from(self.a3.clone());
                RationalPoint::Affine {
                    x: x.clone(),
                    y: -y - a1 * x - a3,
                }
            }
        }
    }

    /// Exact chord-and-tangent addition.
    pub fn add_points(&self, p1: &RationalPoint, p2: &RationalPoint) -> Result<RationalPoint> {
        if !self.contains(p1) || !self.contains(p2) {
            return Err(Error::PointNotOnCurve);
        }
        let (x1, y1) = match p1 {
            RationalPoint::Infinity => return Ok(p2.clone()),
            RationalPoint::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match p2 {
            RationalPoint::Infinity => return Ok(p1.clone()),
            RationalPoint::Affine { x, y } => (x, y),
        };
        let a1 = BigRational::from(self.a1.clone());
        let a2 = BigRational::from(self.a2.clone());
        let a3 = BigRational::from(self.a3.clone());
        let a4 = BigRational::from(self.a4.clone());
        if x1 == x2 {
            // P2 = -P1 ?
            let neg = self.neg_point(p1);
            if let RationalPoint::Affine { y: ny, .. } = &neg {
                if ny == y2 {
                    return Ok(RationalPoint::Infinity);
                }
            }
        }
        let lambda = if x1 == x2 {
            // tangent slope
            let num = BigRational::from(BigInt::from(3)) * x1 * x1
                + BigRational::from(BigInt::from(2)) * &a2 * x1
                + &a4
                - &a1 * y1;
            let den = BigRational::from(BigInt::from(2)) * y1 + &a1 * x1 + &a3;
            num / den
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda + &a1 * &lambda - &a2 - x1 - x2;
        let y3 = -(&lambda + &a1) * &x3 - &nu - &a3;
        Ok(RationalPoint::Affine { x: x3, y: y3 })
    }
}

/// Point with exact rational coordinates, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalPoint {
    Infinity,
    Affine { x: BigRational, y: BigRational },
}

impl RationalPoint {
    pub fn affine_i64(x: i64, y: i64) -> Self {
        RationalPoint::Affine {
            x: BigRational::from(BigInt::from(x)),
            y: BigRational::from(BigInt::from(y)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointOrder {
    Exact(u32),
    ExceedsCap,
}

/// Exact order of a point by repeated addition, up to `cap` (cap <= 16).
pub fn rational_point_order(curve: &CurveQ, pt: &RationalPoint, cap: u32) -> Result<PointOrder> {
    assert!(cap <= 16);
    if !curve.contains(pt) {
        return Err(Error::PointNotOnCurve);
    }
    if *pt == RationalPoint::Infinity {
        return Ok(PointOrder::Exact(1));
    }
    let mut acc = pt.clone();
    for k in 2..=cap {
        acc = curve.add_points(&acc, pt)?;
        if acc == RationalPoint::Infinity {
            return Ok(PointOrder::Exact(k));
        }
    }
    Ok(PointOrder::ExceedsCap)
}

/// Upper bound for the rational torsion order: gcd of #E(F_p) over the
/// probe primes (odd, good reduction; torsion injects into each
/// reduction).
pub fn torsion_bound(curve: &CurveQ, probe_primes: &[u64]) -> Result<u64> {
    let mut g = 0u64;
    for &p in probe_primes {
        if p == 2 {
            return Err(Error::Precondition("probe primes must be odd".into()));
        }
        let count = curve.reduce(p)?.count_points();
        g = crate::arith::modular::gcd_u64(g, count);
    }
    Ok(g)
}

/// Weil bound check |a| <= 2 sqrt(p), i.e. a^2 <= 4p.
pub fn within_weil_bound(trace: i64, p: u64) -> bool {
    let a2 = (trace as i128) * (trace as i128);
    a2 <= 4 * p as i128
}

/// Build a curve over F_p from signed integer coefficients.
pub fn curve_fp_from_i64(p: u64, a: [i64; 5]) -> Result<CurveFp> {
    CurveFp::new(p, a.map(|c| reduce_i64(c, p)))
}

/// The spread of admissible traces at p: used in tests and trace-set
/// construction bounds.
pub fn trace_bound(p: u64) -> i64 {
    isqrt(4 * p) as i64
}
