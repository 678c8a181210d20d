//! Twisted Fermat triples, the Frey curve attached to a hypothetical
//! solution, and its specializations over prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::modular::{gcd_i64, pow_mod, reduce_i64};
use crate::arith::primes;
use crate::elliptic::{CurveFp, CurveQ};
use crate::error::{Error, Result};

/// Coefficients (a, b, c) of a twisted Fermat equation
/// a·x^n + b·y^n + c·z^n = 0, pairwise coprime and nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    a: i64,
    b: i64,
    c: i64,
    /// distinct odd primes dividing abc, ascending
    odd_primes: Vec<u64>,
}

impl Triple {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidTriple("coefficients must be nonzero".into()));
        }
        if gcd_i64(a, b) != 1 || gcd_i64(b, c) != 1 || gcd_i64(a, c) != 1 {
            return Err(Error::InvalidTriple(format!(
                "coefficients must be pairwise coprime: ({a}, {b}, {c})"
            )));
        }
        let mut odd_primes: Vec<u64> = Vec::new();
        for v in [a, b, c] {
            odd_primes.extend(primes::odd_prime_divisors(v));
        }
        odd_primes.sort_unstable();
        odd_primes.dedup();
        Ok(Triple { a, b, c, odd_primes })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// The level: squarefree product of the odd primes dividing abc.
    pub fn level_n0(&self) -> u64 {
        self.odd_primes.iter().product()
    }

    pub fn odd_primes(&self) -> &[u64] {
        &self.odd_primes
    }

    pub fn divides_abc(&self, p: u64) -> bool {
        let p = p as i64;
        self.a % p == 0 || self.b % p == 0 || self.c % p == 0
    }

    /// (a/c, b/c) reduced mod p; requires p odd and coprime to abc.
    pub fn ratios_mod(&self, p: u64) -> Result<(u64, u64)> {
        if self.divides_abc(p) {
            return Err(Error::Precondition(format!("p = {p} divides abc")));
        }
        let a = reduce_i64(self.a, p);
        let b = reduce_i64(self.b, p);
        let c = reduce_i64(self.c, p);
        let c_inv = crate::arith::modular::inv_mod(c, p).expect("c unit mod p");
        Ok((
            crate::arith::modular::mul_mod(a, c_inv, p),
            crate::arith::modular::mul_mod(b, c_inv, p),
        ))
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A triple with an exponent and an exact witness satisfying the
/// normalization the minimal Frey model requires: b·y^n even with 16 | b,
/// a·x^n = -1 mod 4, and the three terms pairwise coprime.
#[derive(Debug, Clone)]
pub struct FreySpec {
    pub triple: Triple,
    pub n: u32,
    pub witness: (i64, i64, i64),
}

impl FreySpec {
    pub fn new(triple: Triple, n: u32, witness: (i64, i64, i64)) -> Result<Self> {
        let (x, y, z) = witness;
        let ta = BigInt::from(triple.a) * BigInt::from(x).pow(n);
        let tb = BigInt::from(triple.b) * BigInt::from(y).pow(n);
        let tc = BigInt::from(triple.c) * BigInt::from(z).pow(n);
        if (&ta + &tb + &tc) != BigInt::zero() {
            return Err(Error::Precondition(format!(
                "witness does not satisfy the equation for {triple} with n = {n}"
            )));
        }
        if triple.b % 16 != 0 {
            return Err(Error::Normalization(format!(
                "b = {} is not divisible by 16",
                triple.b
            )));
        }
        if !tb.is_even() {
            return Err(Error::Normalization("b*y^n must be even".into()));
        }
        if ta.mod_floor(&BigInt::from(4)) != BigInt::from(3) {
            return Err(Error::Normalization("a*x^n must be -1 mod 4".into()));
        }
        let pairwise = [(&ta, &tb), (&tb, &tc), (&ta, &tc)];
        for (u, v) in pairwise {
            if u.gcd(v) != BigInt::from(1) {
                return Err(Error::Normalization(
                    "terms a*x^n, b*y^n, c*z^n must be pairwise coprime".into(),
                ));
            }
        }
        Ok(FreySpec { triple, n, witness })
    }

    fn terms(&self) -> (BigInt, BigInt) {
        let (x, y, _) = self.witness;
        let a_term = BigInt::from(self.triple.a) * BigInt::from(x).pow(self.n);
        let b_term = BigInt::from(self.triple.b) * BigInt::from(y).pow(self.n);
        (a_term, b_term)
    }
}

/// Invariants reported alongside the minimal Frey model.
#[derive(Debug, Clone)]
pub struct FreyInvariants {
    pub delta_min: BigInt,
    /// squarefree product of odd primes dividing a*b*c*x*y*z
    pub conductor_radical: u64,
}

/// Global minimal model
/// Y^2 + XY = X^3 + (b y^n - a x^n - 1)/4 * X^2 - (a b x^n y^n)/16 * X
/// with minimal discriminant (a b c x^n y^n z^n)^2 / 2^8.
pub fn frey_minimal_model(spec: &FreySpec) -> Result<(CurveQ, FreyInvariants)> {
    let (a_term, b_term) = spec.terms();
    let a2_num = &b_term - &a_term - BigInt::from(1);
    let (a2, r2) = a2_num.div_rem(&BigInt::from(4));
    debug_assert!(r2.is_zero());
    let a4_num = -(&a_term * &b_term);
    let (a4, r4) = a4_num.div_rem(&BigInt::from(16));
    debug_assert!(r4.is_zero());
    let curve = CurveQ::new([
        BigInt::from(1),
        a2,
        BigInt::zero(),
        a4,
        BigInt::zero(),
    ])?;

    let (x, y, z) = spec.witness;
    let prod = BigInt::from(spec.triple.a)
        * BigInt::from(spec.triple.b)
        * BigInt::from(spec.triple.c)
        * (BigInt::from(x) * BigInt::from(y) * BigInt::from(z)).pow(spec.n);
    let (delta_min, r8) = (&prod * &prod).div_rem(&BigInt::from(256));
    debug_assert!(r8.is_zero());

    let mut radical_primes: Vec<u64> = spec.triple.odd_primes().to_vec();
    for w in [x, y, z] {
        radical_primes.extend(primes::odd_prime_divisors(w));
    }
    radical_primes.sort_unstable();
    radical_primes.dedup();
    let conductor_radical = radical_primes.iter().product();

    Ok((
        curve,
        FreyInvariants {
            delta_min,
            conductor_radical,
        },
    ))
}

/// The specialized curve y^2 = x(x - a·alpha^n)(x + b·beta^n) over F_p.
pub fn frey_fiber_curve(triple: &Triple, n: u32, p: u64, alpha: u64, beta: u64) -> Result<CurveFp> {
    if p < 3 || !primes::is_prime(p) {
        return Err(Error::Precondition(format!("p = {p} must be an odd prime")));
    }
    if triple.divides_abc(p) {
        return Err(Error::Precondition(format!("p = {p} divides abc")));
    }
    let a_red = reduce_i64(triple.a, p);
    let b_red = reduce_i64(triple.b, p);
    let big_a = crate::arith::modular::mul_mod(a_red, pow_mod(alpha, n as u64, p), p);
    let big_b = crate::arith::modular::mul_mod(b_red, pow_mod(beta, n as u64, p), p);
    if big_a == 0 || big_b == 0 || (big_a + big_b) % p == 0 {
        return Err(Error::SingularSpecialization { p });
    }
    CurveFp::two_torsion_model(p, big_a, big_b)
        .map_err(|_| Error::SingularSpecialization { p })
}

/// Finds the permutation/global-sign arrangement of the triple and witness
/// meeting the normalization, trying the six slot orders with both signs
/// in a fixed order.
pub fn normalize(triple: &Triple, n: u32, witness: (i64, i64, i64)) -> Result<FreySpec> {
    let (x, y, z) = witness;
    let ta = BigInt::from(triple.a) * BigInt::from(x).pow(n);
    let tb = BigInt::from(triple.b) * BigInt::from(y).pow(n);
    let tc = BigInt::from(triple.c) * BigInt::from(z).pow(n);
    if (&ta + &tb + &tc) != BigInt::zero() {
        return Err(Error::Precondition(
            "witness does not satisfy the equation".into(),
        ));
    }
    let slots = [(triple.a, x), (triple.b, y), (triple.c, z)];
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for perm in PERMS {
        for sign in [1i64, -1] {
            let (a, x) = slots[perm[0]];
            let (b, y) = slots[perm[1]];
            let (c, z) = slots[perm[2]];
            let Ok(t) = Triple::new(sign * a, sign * b, sign * c) else {
                continue;
            };
            if let Ok(spec) = FreySpec::new(t, n, (x, y, z)) {
                return Ok(spec);
            }
        }
    }
    Err(Error::Normalization(
        "no permutation/sign arrangement satisfies the normalization".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels_of_the_five_worked_triples() {
        let rows = [
            (25i64, 16i64, 279_841i64, 115u64),
            (390_625, 16, 37, 185),
            (78_125, 16, 2_488_651_484_819, 295),
            (7, 16, 506_623_120_463, 329),
            (11, 16, 7_225, 935),
        ];
        for (a, b, c, level) in rows {
            let t = Triple::new(a, b, c).unwrap();
            assert_eq!(t.level_n0(), level, "({a},{b},{c})");
        }
        assert_eq!(Triple::new(1, 16, 1).unwrap().level_n0(), 1);
    }

    #[test]
    fn level_is_squarefree_and_divides_abc() {
        let t = Triple::new(78_125, 16, 2_488_651_484_819).unwrap();
        let n0 = t.level_n0();
        for (p, e) in primes::factorize(n0) {
            assert_eq!(e, 1);
            assert!(t.divides_abc(p));
        }
    }

    #[test]
    fn rejects_invalid_triples() {
        assert!(Triple::new(0, 16, 1).is_err());
        assert!(Triple::new(5, 15, 7).is_err());
    }

    #[test]
    fn minimal_model_worked_example() {
        // (3, 16, -19), n = 1, witness (1, 1, 1)
        let t = Triple::new(3, 16, -19).unwrap();
        let spec = FreySpec::new(t, 1, (1, 1, 1)).unwrap();
        let (curve, inv) = frey_minimal_model(&spec).unwrap();
        assert_eq!(curve.a1, BigInt::from(1));
        assert_eq!(curve.a2, BigInt::from(3));
        assert_eq!(curve.a4, BigInt::from(-3));
        assert!(curve.a3.is_zero() && curve.a6.is_zero());
        assert_eq!(inv.delta_min, BigInt::from(3249));
        assert_eq!(curve.discriminant(), BigInt::from(3249));
        assert_eq!(inv.conductor_radical, 3 * 19);
    }

    #[test]
    fn minimal_discriminant_matches_model_discriminant() {
        // internal consistency on a batch of small valid specs
        let mut checked = 0;
        for a in (-40..40i64).step_by(2) {
            let a = a + 1; // odd a
            for y in 1..4i64 {
                for x in [1i64, -1, 3] {
                    let n = 1u32;
                    let bterm = 16 * y;
                    let c = -(a * x + bterm);
                    if c == 0 {
                        continue;
                    }
                    let Ok(t) = Triple::new(a, 16, c) else {
                        continue;
                    };
                    let Ok(spec) = FreySpec::new(t, n, (x, y, 1)) else {
                        continue;
                    };
                    let (curve, inv) = frey_minimal_model(&spec).unwrap();
                    assert_eq!(curve.discriminant(), inv.delta_min);
                    checked += 1;
                }
            }
        }
        assert!(checked > 20, "exercised {checked} specs");
    }

    #[test]
    fn minimal_model_is_rescaled_two_torsion_model() {
        // same j-invariant as y^2 = x(x - ax^n)(x + by^n), discriminant
        // ratio 2^12 and c4 ratio 2^4
        let t = Triple::new(3, 16, -19).unwrap();
        let spec = FreySpec::new(t, 1, (1, 1, 1)).unwrap();
        let (min_model, _) = frey_minimal_model(&spec).unwrap();
        let big = CurveQ::from_i64([0, 16 - 3, 0, -(3 * 16), 0]).unwrap();
        let (b2m, b4m, _, _) = min_model.b_invariants();
        let (b2b, b4b, _, _) = big.b_invariants();
        let c4m = &b2m * &b2m - 24 * &b4m;
        let c4b = &b2b * &b2b - 24 * &b4b;
        assert_eq!(&c4b, &(&c4m * BigInt::from(16)));
        assert_eq!(big.discriminant(), min_model.discriminant() * BigInt::from(4096));
        // j-invariants agree: c4^3 * delta' = c4'^3 * delta
        assert_eq!(
            &c4m * &c4m * &c4m * big.discriminant(),
            &c4b * &c4b * &c4b * min_model.discriminant()
        );
    }

    #[test]
    fn normalization_error_paths() {
        let t = Triple::new(3, 16, -19).unwrap();
        // a*x^n = +1 mod 4 violates the normalization as given
        assert!(FreySpec::new(t.clone(), 1, (-1, 1, 1)).is_err());
        // but normalize() repairs it by the global sign flip
        let bad = Triple::new(-3, -16, 19).unwrap();
        let spec = normalize(&bad, 1, (1, 1, 1)).unwrap();
        assert_eq!(
            (spec.triple.a(), spec.triple.b(), spec.triple.c()),
            (3, 16, -19)
        );
        // already-normalized input is returned as-is
        let spec2 = normalize(&t, 1, (1, 1, 1)).unwrap();
        assert_eq!(
            (spec2.triple.a(), spec2.triple.b(), spec2.triple.c()),
            (3, 16, -19)
        );
        // no even coefficient divisible by 16 anywhere: unreachable
        let odd = Triple::new(1, 3, -4).unwrap();
        assert!(normalize(&odd, 1, (1, 1, 1)).is_err());
    }

    #[test]
    fn fiber_curve_construction() {
        let t = Triple::new(3, 16, -19).unwrap();
        let c = frey_fiber_curve(&t, 1, 7, 1, 1).unwrap();
        // y^2 = x(x - 3)(x + 2) over F_7
        assert_eq!((c.a2, c.a4), ((2 + 7 - 3) % 7, (7 - 6) % 7));
        // singular specialization: a*alpha^n = -b*beta^n mod p
        // 3*alpha = -16 = 5 mod 7 -> alpha = 4
        assert!(matches!(
            frey_fiber_curve(&t, 1, 7, 4, 1),
            Err(Error::SingularSpecialization { p: 7 })
        ));
        // p dividing abc rejected
        assert!(frey_fiber_curve(&t, 1, 3, 1, 1).is_err());
    }
}
