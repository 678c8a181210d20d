//! Root lifting modulo prime powers.

use super::modular::{inv_mod, mul_mod, sub_mod, Residue};
use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Lifts a simple root r of f mod l to the unique root of f mod l^k
/// congruent to r mod l. Errors with [`Error::NonSimpleRoot`] when
/// f'(r) = 0 mod l, in which case the caller must lift coprime
/// components instead.
pub fn hensel_lift_root(f: &IntPoly, r: u64, l: u64, k: u32) -> Result<Residue> {
    assert!(l >= 3 && l % 2 == 1, "odd prime modulus required");
    assert!(k >= 1);
    let r = r % l;
    if f.eval_mod(r, l) != 0 {
        return Err(Error::Precondition(format!(
            "{r} is not a root of the polynomial mod {l}"
        )));
    }
    let deriv = f.derivative();
    let d_at_r = deriv.eval_mod(r, l);
    if d_at_r == 0 {
        return Err(Error::NonSimpleRoot { root: r, l });
    }
    let target = l
        .checked_pow(k)
        .expect("l^k fits in u64");
    let mut modulus = l;
    let mut root = r;
    while modulus < target {
        let next = (modulus * l).min(target);
        // Newton step: root <- root - f(root) / f'(root)  (mod next)
        let fv = f.eval_mod(root, next);
        let dv = deriv.eval_mod(root, next);
        // f'(root) is a unit mod l, hence mod any power of l
        let inv = inv_mod(dv % next, next).expect("derivative unit");
        root = sub_mod(root, mul_mod(fv, inv, next), next);
        modulus = next;
    }
    debug_assert_eq!(f.eval_mod(root, target), 0);
    debug_assert_eq!(root % l, r);
    Ok(Residue::new(root, target))
}

/// All roots of f modulo m by exhaustive scan; the independent oracle
/// used in tests, also handy for tiny moduli.
pub fn roots_mod_exhaustive(f: &IntPoly, m: u64) -> Vec<u64> {
    (0..m).filter(|&x| f.eval_mod(x, m) == 0).collect()
}

#[allow(dead_code)]
fn _is_prime_guard(l: u64) -> bool {
    super::primes::is_prime(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_root_persists() {
        let f = IntPoly::from_i64(&[-1, 0, 1]); // x^2 - 1
        let lifted = hensel_lift_root(&f, 1, 3, 2).unwrap();
        assert_eq!(lifted, Residue::new(1, 9));
    }

    #[test]
    fn level71_cubic_roots_mod_27() {
        let f1 = IntPoly::from_i64(&[25, -2, -5, 1]);
        let f2 = IntPoly::from_i64(&[-7, -2, 3, 1]);
        let r1 = hensel_lift_root(&f1, 2, 3, 3).unwrap();
        let r2 = hensel_lift_root(&f2, 2, 3, 3).unwrap();
        assert_eq!(r1.value, 11);
        assert_eq!(r2.value, 20);
        // the pair is what matters downstream; both reduce to 2 mod 9
        let mut pair = [r1.value, r2.value];
        pair.sort_unstable();
        assert_eq!(pair, [11, 20]);
        assert_eq!(r1.value % 9, 2);
        assert_eq!(r2.value % 9, 2);
    }

    #[test]
    fn non_simple_root_is_distinct_error() {
        let f = IntPoly::from_i64(&[7, -4, 1]); // (x+1)^2 mod 3, root 2
        assert!(matches!(
            hensel_lift_root(&f, 2, 3, 2),
            Err(Error::NonSimpleRoot { root: 2, l: 3 })
        ));
    }

    /// Lifted roots agree with exhaustive evaluation for every prime power
    /// l^k <= 243 over a corpus of polynomials.
    #[test]
    fn lift_matches_exhaustive_scan() {
        let polys = [
            IntPoly::from_i64(&[25, -2, -5, 1]),
            IntPoly::from_i64(&[-7, -2, 3, 1]),
            IntPoly::from_i64(&[-1, 0, 1]),
            IntPoly::from_i64(&[2, 3, 0, 1]),
            IntPoly::from_i64(&[-4, 1, 1, 0, 1]),
        ];
        for l in [3u64, 5, 7, 11, 13] {
            for k in 1..=5u32 {
                let m = match l.checked_pow(k) {
                    Some(m) if m <= 243 => m,
                    _ => continue,
                };
                for f in &polys {
                    let deriv = f.derivative();
                    for r in 0..l {
                        if f.eval_mod(r, l) != 0 || deriv.eval_mod(r, l) == 0 {
                            continue;
                        }
                        let lifted = hensel_lift_root(f, r, l, k).unwrap();
                        let expected: Vec<u64> = roots_mod_exhaustive(f, m)
                            .into_iter()
                            .filter(|x| x % l == r)
                            .collect();
                        assert_eq!(expected, vec![lifted.value], "l={l} k={k}");
                    }
                }
            }
        }
    }
}
