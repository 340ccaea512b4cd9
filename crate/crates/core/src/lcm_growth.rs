//! Exact `L(N) = lcm(1..N)`, the Chebyshev theta function, and the growth
//! ratio `ln L(N) / N`.
//!
//! `L(N) = prod_p p^{k_p}` with `k_p` the largest power with `p^{k_p} <= N`,
//! so `ln L(N) = sum_{p <= N} k_p ln p = sum_{k >= 1} theta(N^{1/k})`. The
//! ratio `ln L(N) / N` oscillates around and converges to 1.

use num::bigint::BigUint;
use num::traits::One;

use crate::error::Error;

/// Sieve of Eratosthenes with the prime list kept for summation passes.
pub struct PrimeSieve {
    limit: u64,
    is_prime: Vec<bool>,
    primes: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Self {
        let n = limit as usize;
        let mut is_prime = vec![true; n + 1];
        is_prime[0] = false;
        if n >= 1 {
            is_prime[1] = false;
        }
        let mut p = 2usize;
        while p * p <= n {
            if is_prime[p] {
                let mut q = p * p;
                while q <= n {
                    is_prime[q] = false;
                    q += p;
                }
            }
            p += 1;
        }
        let primes = (2..=n).filter(|&i| is_prime[i]).map(|i| i as u64).collect();
        PrimeSieve {
            limit,
            is_prime,
            primes,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n <= self.limit && self.is_prime[n as usize]
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `pi(n)`: number of primes up to `n`.
    pub fn prime_count(&self, n: u64) -> Result<usize, Error> {
        self.check(n)?;
        Ok(self.primes.partition_point(|&p| p <= n))
    }

    fn check(&self, n: u64) -> Result<(), Error> {
        if n > self.limit {
            return Err(Error::SieveTooSmall {
                limit: self.limit,
                n,
            });
        }
        Ok(())
    }

    /// Chebyshev `theta(n) = sum_{p <= n} ln p`.
    pub fn theta(&self, n: u64) -> Result<f64, Error> {
        self.check(n)?;
        Ok(self
            .primes
            .iter()
            .take_while(|&&p| p <= n)
            .map(|&p| (p as f64).ln())
            .sum())
    }

    /// `ln L(n)`, summed prime by prime with exact integer exponents.
    pub fn log_lcm(&self, n: u64) -> Result<f64, Error> {
        self.check(n)?;
        Ok(self
            .primes
            .iter()
            .take_while(|&&p| p <= n)
            .map(|&p| max_power_exponent(p, n) as f64 * (p as f64).ln())
            .sum())
    }

    /// `ln L(n)` through the theta decomposition
    /// `sum_{k >= 1} theta(floor(n^{1/k}))`, stopping once the root drops
    /// below 2.
    pub fn log_lcm_via_theta(&self, n: u64) -> Result<f64, Error> {
        self.check(n)?;
        let mut acc = 0.0;
        let mut k = 1u32;
        loop {
            let root = integer_kth_root(n, k);
            if root < 2 {
                break;
            }
            acc += self.theta(root)?;
            k += 1;
        }
        Ok(acc)
    }
}

/// Largest `k` with `p^k <= n`, by exact integer multiplication. The
/// floating-point shortcut `floor(ln n / ln p)` misrounds at perfect
/// powers; this never does.
fn max_power_exponent(p: u64, n: u64) -> u32 {
    let mut k = 0u32;
    let mut power = 1u128;
    let p = p as u128;
    let n = n as u128;
    while power <= n / p {
        power *= p;
        k += 1;
    }
    // power = p^k <= n < p^{k+1}
    k
}

/// Floor of the `k`-th root of `n`, exact.
pub fn integer_kth_root(n: u64, k: u32) -> u64 {
    if k == 1 || n <= 1 {
        return n;
    }
    let mut lo = 1u64;
    let mut hi = 2u64;
    while checked_pow(hi, k).map_or(false, |v| v <= n) {
        hi *= 2;
    }
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if checked_pow(mid, k).map_or(false, |v| v <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Exact `L(N) = lcm(1, 2, ..., N)` via the prime-power factorization.
pub fn lcm_exact(n: u64) -> BigUint {
    if n <= 1 {
        return BigUint::one();
    }
    let sieve = PrimeSieve::new(n);
    let mut acc = BigUint::one();
    for &p in sieve.primes() {
        let k = max_power_exponent(p, n);
        acc *= BigUint::from(p).pow(k);
    }
    acc
}

/// One sampled point of the growth series.
#[derive(Clone, Copy, Debug)]
pub struct LcmRecord {
    pub n: u64,
    pub log_lcm: f64,
    /// `ln L(n) / n`.
    pub ratio: f64,
}

/// Samples `ln L(N) / N` at `N = step, 2 step, ...` up to `n_max` in a
/// single sieve pass: `ln L` increases by `ln p` exactly at prime powers
/// `p^k`, so one prefix sum over the event array yields every record.
pub fn ratio_series(n_max: u64, step: u64) -> Vec<LcmRecord> {
    assert!(step >= 1);
    let sieve = PrimeSieve::new(n_max);
    let mut events = vec![0.0f64; n_max as usize + 1];
    for &p in sieve.primes() {
        let lp = (p as f64).ln();
        let mut q = p as u128;
        while q <= n_max as u128 {
            events[q as usize] += lp;
            q *= p as u128;
        }
    }
    let mut records = Vec::new();
    let mut acc = 0.0f64;
    for n in 1..=n_max {
        acc += events[n as usize];
        if n % step == 0 {
            records.push(LcmRecord {
                n,
                log_lcm: acc,
                ratio: acc / n as f64,
            });
        }
    }
    records
}

/// The empirical statistic `max |ln L(N) - N| / (sqrt(N) ln N)` over the
/// sampled records, reported (never asserted) together with where the
/// maximum occurs.
pub fn growth_error_statistic(records: &[LcmRecord]) -> Option<(f64, u64)> {
    records
        .iter()
        .filter(|r| r.n >= 2)
        .map(|r| {
            let stat = (r.log_lcm - r.n as f64).abs() / ((r.n as f64).sqrt() * (r.n as f64).ln());
            (stat, r.n)
        })
        .max_by(|a, b| a.0.total_cmp(&b.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values() {
        assert_eq!(lcm_exact(1), BigUint::one());
        assert_eq!(lcm_exact(10), BigUint::from(2520u32));
        assert_eq!(lcm_exact(20), BigUint::from(232792560u64));
        assert_eq!(lcm_exact(30), BigUint::from(2329089562800u64));
    }

    #[test]
    fn theta_values() {
        let sieve = PrimeSieve::new(100);
        assert_eq!(sieve.theta(1).unwrap(), 0.0);
        assert!((sieve.theta(2).unwrap() - 2f64.ln()).abs() < 1e-12);
        let expected = 2f64.ln() + 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert!((sieve.theta(10).unwrap() - expected).abs() < 1e-12);
        assert!(sieve.theta(101).is_err());
    }

    #[test]
    fn log_lcm_matches_exact_value() {
        let sieve = PrimeSieve::new(2000);
        assert_eq!(sieve.log_lcm(1).unwrap(), 0.0);
        let expected = 2520f64.ln();
        assert!((sieve.log_lcm(10).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn exponents_exact_at_perfect_powers() {
        assert_eq!(max_power_exponent(2, 1024), 10);
        assert_eq!(max_power_exponent(2, 1023), 9);
        assert_eq!(max_power_exponent(3, 243), 5);
        assert_eq!(max_power_exponent(997, 997), 1);
    }

    #[test]
    fn integer_roots() {
        assert_eq!(integer_kth_root(1_000_000, 2), 1000);
        assert_eq!(integer_kth_root(999_999, 2), 999);
        assert_eq!(integer_kth_root(27, 3), 3);
        assert_eq!(integer_kth_root(26, 3), 2);
        assert_eq!(integer_kth_root(1, 5), 1);
    }

    #[test]
    fn ratio_series_samples() {
        let records = ratio_series(100, 10);
        assert_eq!(records.len(), 10);
        let r10 = records[0];
        assert_eq!(r10.n, 10);
        assert!((r10.log_lcm - 2520f64.ln()).abs() < 1e-12);
        assert!((r10.ratio - 2520f64.ln() / 10.0).abs() < 1e-12);
        // log_lcm is non-decreasing in N.
        for pair in records.windows(2) {
            assert!(pair[1].log_lcm >= pair[0].log_lcm);
        }
    }

    #[test]
    fn theta_decomposition_identity() {
        let sieve = PrimeSieve::new(100_000);
        for n in [10u64, 100, 1234, 99_991, 100_000] {
            let direct = sieve.log_lcm(n).unwrap();
            let via_theta = sieve.log_lcm_via_theta(n).unwrap();
            assert!(
                (direct - via_theta).abs() <= 1e-9 * direct.max(1.0),
                "n = {n}: {direct} vs {via_theta}"
            );
        }
    }

    #[test]
    fn successive_lcm_ratio_is_one_or_prime() {
        // L(N) / L(N-1) is 1 unless N is a prime power p^k, where it is p.
        let mut prev = lcm_exact(1);
        let sieve = PrimeSieve::new(300);
        for n in 2..=300u64 {
            let cur = lcm_exact(n);
            let quotient = &cur / &prev;
            let expected = sieve
                .primes()
                .iter()
                .find(|&&p| {
                    let mut q = p;
                    while q < n {
                        match q.checked_mul(p) {
                            Some(next) => q = next,
                            None => return false,
                        }
                    }
                    q == n
                })
                .copied()
                .unwrap_or(1);
            assert_eq!(quotient, BigUint::from(expected), "n = {n}");
            prev = cur;
        }
    }
}
