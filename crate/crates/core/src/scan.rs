//! Parallel execution helpers.
//!
//! Scans over disjoint primes are the only hot loops. With the `parallel`
//! feature (default) they fan out through rayon; results are collected in
//! input order so reports are byte-identical across thread counts. Built
//! without the feature, everything runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over the items, in parallel when the `parallel` feature is
/// enabled. Output order always matches input order.
pub fn pmap<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Always-sequential variant, kept public so benchmarks can compare the
/// two paths on identical workloads.
pub fn pmap_seq<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    F: Fn(&I) -> T,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let out = pmap(&items, |&x| x * x);
        let seq = pmap_seq(&items, |&x| x * x);
        assert_eq!(out, seq);
        assert_eq!(out[17], 289);
    }
}
