//! Primality, prime enumeration and 64-bit factorization.

use super::modular::{gcd_u64, mul_mod, pow_mod};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs with the fixed
/// base set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in [2, bound] by sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return vec![];
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

fn pollard_rho(n: u64) -> u64 {
    // n odd composite; the deterministic offset sequence keeps the
    // output reproducible.
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("pollard rho exhausted offsets for {n}")
}

/// Full factorization of n >= 1 as sorted (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n <= 1 {
        return out;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    let mut stack = vec![n];
    let mut found: Vec<u64> = Vec::new();
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            found.push(m);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    found.sort_unstable();
    for p in found {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => out.push((p, 1)),
        }
    }
    out.sort_unstable();
    out
}

/// Distinct odd prime divisors of |n|, ascending.
pub fn odd_prime_divisors(n: i64) -> Vec<u64> {
    factorize(n.unsigned_abs())
        .into_iter()
        .map(|(p, _)| p)
        .filter(|&p| p != 2)
        .collect()
}

/// p-adic valuation of n != 0.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    assert!(n != 0 && p >= 2);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_matches_sieve() {
        let primes = primes_up_to(10_000);
        let mut idx = 0;
        for n in 0..=10_000u64 {
            let in_sieve = idx < primes.len() && primes[idx] == n;
            if in_sieve {
                idx += 1;
            }
            assert_eq!(is_prime(n), in_sieve, "n={n}");
        }
    }

    #[test]
    fn factors_paper_scale_inputs() {
        // 59^7 appears as a coefficient.
        let c = 59u64.pow(7);
        assert_eq!(factorize(c), vec![(59, 7)]);
        assert_eq!(factorize(2_488_651_484_819), vec![(59, 7)]);
        assert_eq!(factorize(935), vec![(5, 1), (11, 1), (17, 1)]);
        assert_eq!(
            factorize(25 * 16 * 279_841),
            vec![(2, 4), (5, 2), (23, 4)]
        );
        assert_eq!(factorize(1), vec![]);
    }

    #[test]
    fn odd_divisors() {
        assert_eq!(odd_prime_divisors(-16), Vec::<u64>::new());
        assert_eq!(odd_prime_divisors(7225), vec![5, 17]);
    }
}
