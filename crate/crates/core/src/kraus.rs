//! The finite trace sets that drive every elimination: the generic sets
//! A_p and T_p, the refined sets A_{n,p} and T_{n,p} cut out by the
//! equation mod p, their mod-3 images, and the norm products L_{f,p}
//! against newform eigenvalue data.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::modular::{inv_mod, mul_mod, pow_mod, reduce_i64};
use crate::arith::primes;
use crate::elliptic::{char_sum_cubic, trace_bound, QuadTable};
use crate::error::{Error, Result};
use crate::frey::Triple;
use crate::newforms::NewformClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Generic,
    Kraus { n: u32 },
    KrausSecondCase { n: u32 },
}

/// A finite symmetric set of admissible Frobenius traces at p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceSet {
    entries: BTreeSet<i64>,
    p: u64,
    provenance: Provenance,
}

impl TraceSet {
    pub fn entries(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().copied()
    }

    pub fn as_vec(&self) -> Vec<i64> {
        self.entries.iter().copied().collect()
    }

    pub fn contains(&self, t: i64) -> bool {
        self.entries.contains(&t)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|t| self.entries.contains(&-t))
    }

    /// Image in F_3, closed under negation by symmetry.
    pub fn reduce_mod3(&self) -> TraceSetMod3 {
        let mut mask = TraceSetMod3::empty();
        for &t in &self.entries {
            mask.insert_trace(t);
        }
        mask
    }
}

/// Subset of {0, 1, 2} closed under negation mod 3; the image of a trace
/// set under reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceSetMod3 {
    mask: u8,
}

impl TraceSetMod3 {
    pub fn empty() -> Self {
        TraceSetMod3 { mask: 0 }
    }

    pub fn full() -> Self {
        TraceSetMod3 { mask: 0b111 }
    }

    /// Inserts t mod 3 together with -t mod 3.
    pub fn insert_trace(&mut self, t: i64) {
        let r = t.rem_euclid(3) as u8;
        self.mask |= 1 << r;
        self.mask |= 1 << ((3 - r) % 3);
    }

    pub fn contains(&self, r: u8) -> bool {
        debug_assert!(r < 3);
        self.mask & (1 << r) != 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == 0b111
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_subset_of(&self, other: &TraceSetMod3) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn residues(&self) -> Vec<u8> {
        (0..3).filter(|&r| self.contains(r)).collect()
    }
}

/// A_p: traces admissible for curves with full rational 2-torsion —
/// a = p+1 mod 4 within the Weil bound for odd p, and {-1, 1} at p = 2.
pub fn set_ap(p: u64) -> TraceSet {
    let mut entries = BTreeSet::new();
    if p == 2 {
        entries.insert(-1);
        entries.insert(1);
    } else {
        let bound = trace_bound(p);
        let residue = ((p + 1) % 4) as i64;
        // smallest a >= -bound with a = p+1 mod 4
        let mut a = -bound + (residue - (-bound).rem_euclid(4)).rem_euclid(4);
        while a <= bound {
            entries.insert(a);
            a += 4;
        }
    }
    TraceSet {
        entries,
        p,
        provenance: Provenance::Generic,
    }
}

/// T_p = A_p with the two Steinberg traces +-(p+1) adjoined.
pub fn set_tp(p: u64) -> TraceSet {
    let mut out = set_ap(p);
    out.entries.insert(p as i64 + 1);
    out.entries.insert(-(p as i64 + 1));
    out
}

/// Bit table of the n-th powers of F_p* (index 0 false), built through
/// the subgroup shortcut d = gcd(n, p-1).
pub fn nth_power_table(n: u32, p: u64) -> Vec<bool> {
    let d = crate::arith::modular::gcd_u64(n as u64, p - 1);
    let mut table = vec![false; p as usize];
    for x in 1..p {
        table[pow_mod(x, d, p) as usize] = true;
    }
    table
}

fn check_tnp_preconditions(triple: &Triple, n: u32, p: u64) -> Result<()> {
    if p == 2 || !primes::is_prime(p) {
        return Err(Error::Precondition(format!("p = {p} must be an odd prime")));
    }
    if n as u64 % p == 0 {
        return Err(Error::Precondition(format!("p = {p} divides n = {n}")));
    }
    if triple.divides_abc(p) {
        return Err(Error::Precondition(format!("p = {p} divides abc")));
    }
    Ok(())
}

/// The second-case condition: one of a/b, b/c, c/a is an n-th power
/// mod p. Holding means the Steinberg traces +-(p+1) are admissible.
pub fn second_case(triple: &Triple, n: u32, p: u64) -> Result<bool> {
    check_tnp_preconditions(triple, n, p)?;
    let table = nth_power_table(n, p);
    Ok(second_case_with(triple, p, &table))
}

pub(crate) fn second_case_with(triple: &Triple, p: u64, npowers: &[bool]) -> bool {
    let a = reduce_i64(triple.a(), p);
    let b = reduce_i64(triple.b(), p);
    let c = reduce_i64(triple.c(), p);
    let ratios = [
        mul_mod(a, inv_mod(b, p).expect("unit"), p),
        mul_mod(b, inv_mod(c, p).expect("unit"), p),
        mul_mod(c, inv_mod(a, p).expect("unit"), p),
    ];
    ratios.into_iter().any(|r| npowers[r as usize])
}

/// S'_{n,p}: the units alpha with (a/c) alpha^n + (b/c) an n-th power.
/// Full O(p) enumeration over alpha.
pub fn set_sprime(triple: &Triple, n: u32, p: u64) -> Result<Vec<u64>> {
    check_tnp_preconditions(triple, n, p)?;
    let table = nth_power_table(n, p);
    let (u, v) = triple.ratios_mod(p)?;
    let mut out = Vec::new();
    for alpha in 1..p {
        let t = pow_mod(alpha, n as u64, p);
        let w = (mul_mod(u, t, p) + v) % p;
        if table[w as usize] {
            out.push(alpha);
        }
    }
    Ok(out)
}

/// Visits the trace of one specialization curve per distinct admissible
/// n-th power t (the curve y^2 = x(x - a t)(x + b), scaled by 1/c), in
/// ascending t order. `visit` returns false to stop early; the return
/// value says whether the enumeration ran to completion.
pub(crate) fn visit_tnp_traces(
    triple: &Triple,
    p: u64,
    quad: &QuadTable,
    npowers: &[bool],
    mut visit: impl FnMut(i64) -> bool,
) -> bool {
    let (u, v) = triple.ratios_mod(p).expect("preconditions checked");
    let a_red = reduce_i64(triple.a(), p);
    let b_red = reduce_i64(triple.b(), p);
    for t in 1..p {
        if !npowers[t as usize] {
            continue;
        }
        let w = (mul_mod(u, t, p) + v) % p;
        if !npowers[w as usize] {
            continue;
        }
        // y^2 = x(x - A)(x + B) with A = a t, B = b; the condition above
        // already rules out A + B = 0, so the model is nonsingular
        let big_a = mul_mod(a_red, t, p);
        let c2 = (p - big_a + b_red) % p; // B - A
        let c1 = (p - mul_mod(big_a, b_red, p)) % p; // -A B
        let sum = char_sum_cubic(quad, 1, c2, c1, 0);
        if !visit(-sum) {
            return false;
        }
    }
    true
}

/// T_{n,p}: the signed traces of all admissible specialization curves,
/// with +-(p+1) adjoined exactly when the second-case condition holds.
pub fn set_tnp(triple: &Triple, n: u32, p: u64) -> Result<TraceSet> {
    check_tnp_preconditions(triple, n, p)?;
    let npowers = nth_power_table(n, p);
    let quad = QuadTable::new(p);
    let mut entries = BTreeSet::new();
    visit_tnp_traces(triple, p, &quad, &npowers, |t| {
        entries.insert(t);
        entries.insert(-t);
        true
    });
    let second = second_case_with(triple, p, &npowers);
    let provenance = if second {
        entries.insert(p as i64 + 1);
        entries.insert(-(p as i64 + 1));
        Provenance::KrausSecondCase { n }
    } else {
        Provenance::Kraus { n }
    };
    Ok(TraceSet {
        entries,
        p,
        provenance,
    })
}

/// Image of T_{n,p} in F_3.
pub fn tbar(triple: &Triple, n: u32, p: u64) -> Result<TraceSetMod3> {
    Ok(set_tnp(triple, n, p)?.reduce_mod3())
}

/// L_{f,p} = p * prod over a in T_p of Norm(a - a_p(f)), exact.
pub fn l_fp(f: &NewformClass, p: u64) -> Result<BigInt> {
    if f.level() % p == 0 {
        return Err(Error::Precondition(format!(
            "p = {p} divides the level {}",
            f.level()
        )));
    }
    let mut acc = BigInt::from(p);
    for a in set_tp(p).entries() {
        acc *= f.eigen_norm(p, a)?;
        if acc.is_zero() {
            return Ok(acc);
        }
    }
    Ok(acc)
}

/// Result of the gcd sieve for one class: either a finite set of odd
/// primes, or the explicit "no information" sentinel when every L_{f,p}
/// vanished (gcd 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Survivors {
    AllPrimes,
    Odd(BTreeSet<u64>),
}

impl Survivors {
    pub fn contains(&self, l: u64) -> bool {
        match self {
            Survivors::AllPrimes => true,
            Survivors::Odd(set) => set.contains(&l),
        }
    }
}

/// Odd primes dividing gcd { L_{f,p} : p <= p_max, p not dividing the
/// level }. Zero terms are skipped; an all-zero gcd maps to
/// [`Survivors::AllPrimes`]. With `exclude_p_eq_l`, a surviving l is
/// additionally required to divide the gcd taken over p distinct from l.
pub fn survivor_primes(f: &NewformClass, p_max: u64, exclude_p_eq_l: bool) -> Result<Survivors> {
    let terms: Vec<(u64, BigInt)> = primes::primes_up_to(p_max)
        .into_iter()
        .filter(|&p| f.level() % p != 0)
        .map(|p| l_fp(f, p).map(|v| (p, v)))
        .collect::<Result<_>>()?;
    let gcd_over = |skip: Option<u64>| -> BigInt {
        let mut g = BigInt::zero();
        for (p, v) in &terms {
            if Some(*p) == skip || v.is_zero() {
                continue;
            }
            g = g.gcd(v);
        }
        g
    };
    let g = gcd_over(None);
    if g.is_zero() {
        return Ok(Survivors::AllPrimes);
    }
    let mut odd = odd_prime_divisors_bigint(&g)?;
    if exclude_p_eq_l {
        odd.retain(|&l| {
            let g_without = gcd_over(Some(l));
            g_without.is_zero() || (&g_without % BigInt::from(l)).is_zero()
        });
    }
    Ok(Survivors::Odd(odd))
}

/// Odd prime divisors of a positive integer, by trial division with a
/// 64-bit rho fallback for the cofactor.
fn odd_prime_divisors_bigint(n: &BigInt) -> Result<BTreeSet<u64>> {
    let mut out = BTreeSet::new();
    let mut rest = n.abs();
    for p in primes::primes_up_to(100_000) {
        let pb = BigInt::from(p);
        if (&rest % &pb).is_zero() {
            if p != 2 {
                out.insert(p);
            }
            while (&rest % &pb).is_zero() {
                rest /= &pb;
            }
        }
    }
    if !rest.is_one() {
        let small: u64 = rest
            .clone()
            .try_into()
            .map_err(|_| Error::GcdTooLarge(rest.to_string()))?;
        for (p, _) in primes::factorize(small) {
            if p != 2 {
                out.insert(p);
            }
        }
    }
    Ok(out)
}
