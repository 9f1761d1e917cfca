//! Independent brute-force reference implementations.
//!
//! Everything in this module is deliberately naive and self-contained: it
//! shares no code with the modules it is used to check, so a bug would have
//! to appear twice, independently, to slip through the test suite.

use crate::{Error, Result};

/// Work budget for the per-value oracles; inputs beyond this are refused.
const DESK_SCALE_LIMIT: u64 = 10_000_000;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Largest integer not representable as a nonnegative integer combination of
/// `generators`, by reachability DP.
///
/// Returns `-1` when every nonnegative integer is representable (that is,
/// when `1` is among the generators). The table is sized from the Sylvester
/// number of the cheapest coprime pair when one exists, and grown until a
/// full window of `min(generators)` consecutive representable values proves
/// there is nothing larger to find.
pub fn frobenius_dp(generators: &[u64]) -> Result<i64> {
    if generators.is_empty() {
        return Err(Error::Domain("empty generator set".into()));
    }
    if generators.contains(&0) {
        return Err(Error::Domain("generator 0 is not allowed".into()));
    }
    let overall = generators.iter().copied().fold(0, gcd);
    if overall != 1 {
        return Err(Error::Domain(format!(
            "gcd of generators is {overall}, expected 1"
        )));
    }
    if generators.contains(&1) {
        return Ok(-1);
    }

    // Cheapest pairwise-coprime Sylvester number, if any pair is coprime.
    let mut bound: Option<u64> = None;
    for (i, &x) in generators.iter().enumerate() {
        for &y in &generators[i + 1..] {
            if gcd(x, y) == 1 {
                let s = x * y - x - y;
                bound = Some(bound.map_or(s, |b| b.min(s)));
            }
        }
    }
    let smallest = *generators.iter().min().expect("nonempty");
    let mut limit = bound.unwrap_or_else(|| {
        let largest = *generators.iter().max().expect("nonempty");
        (smallest - 1) * (largest - 1)
    });

    loop {
        if limit > DESK_SCALE_LIMIT {
            return Err(Error::Resource(format!(
                "reachability table of {limit} entries exceeds the oracle budget"
            )));
        }
        let n = limit as usize + 1;
        let mut reachable = vec![false; n];
        reachable[0] = true;
        for value in 1..n {
            for &g in generators {
                let g = g as usize;
                if g <= value && reachable[value - g] {
                    reachable[value] = true;
                    break;
                }
            }
        }
        // A window of min(generators) consecutive representable values means
        // everything beyond it is representable too.
        let window = smallest as usize;
        let tail_ok = n >= window && reachable[n - window..].iter().all(|&b| b);
        if tail_ok {
            let g = reachable.iter().rposition(|&b| !b).map_or(-1, |p| p as i64);
            return Ok(g);
        }
        limit = limit * 2 + 1;
    }
}

/// Dense minimum-part-count table over an arbitrary part set.
///
/// `table[n]` is the least number of parts from `parts` summing to `n`, or
/// `None` when `n` has no such representation. Unbounded multiplicities.
pub fn min_parts_table(parts: &[u64], max: usize) -> Vec<Option<u32>> {
    let mut table = vec![None; max + 1];
    table[0] = Some(0);
    for n in 1..=max {
        let mut best: Option<u32> = None;
        for &p in parts {
            let p = p as usize;
            if p <= n {
                if let Some(v) = table[n - p] {
                    let candidate = v + 1;
                    if best.is_none_or(|b| candidate < b) {
                        best = Some(candidate);
                    }
                }
            }
        }
        table[n] = best;
    }
    table
}

fn check_desk_scale(n: u64) -> Result<usize> {
    if n > DESK_SCALE_LIMIT {
        return Err(Error::Resource(format!(
            "oracle input {n} exceeds the desk-scale budget {DESK_SCALE_LIMIT}"
        )));
    }
    Ok(n as usize)
}

/// Minimum number of positive squares summing to `n`, by exhaustive DP.
pub fn iota_bruteforce(n: u64) -> Result<u32> {
    let n = check_desk_scale(n)?;
    if n == 0 {
        return Err(Error::Domain("iota is defined for n >= 1".into()));
    }
    let squares: Vec<u64> = (1..).map(|i: u64| i * i).take_while(|&s| s <= n as u64).collect();
    let table = min_parts_table(&squares, n);
    Ok(table[n].expect("1 is a square, so every n >= 1 is representable"))
}

/// Minimum number of squares from `{1^2, ..., k^2}` summing to `n`.
pub fn iota_k_bruteforce(k: u32, n: u64) -> Result<u32> {
    let n = check_desk_scale(n)?;
    if k == 0 {
        return Err(Error::Domain("iota_k requires k >= 1".into()));
    }
    let squares: Vec<u64> = (1..=k as u64).map(|i| i * i).collect();
    let table = min_parts_table(&squares, n);
    Ok(table[n].expect("1 is a square, so every n >= 0 is representable"))
}

/// Primes up to `max` by a plain sieve of Eratosthenes.
pub fn sieve_primes(max: usize) -> Vec<u64> {
    if max < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; max + 1];
    let mut primes = Vec::new();
    for p in 2..=max {
        if !composite[p] {
            primes.push(p as u64);
            let mut multiple = p * p;
            while multiple <= max {
                composite[multiple] = true;
                multiple += p;
            }
        }
    }
    primes
}

/// Minimum number of parts from the primes plus one summing to `n`.
pub fn tau_bruteforce(n: u64) -> Result<u32> {
    let n = check_desk_scale(n)?;
    if n == 0 {
        return Err(Error::Domain("tau is defined for n >= 1".into()));
    }
    let mut parts = vec![1u64];
    parts.extend(sieve_primes(n));
    let table = min_parts_table(&parts, n);
    Ok(table[n].expect("1 is a part, so every n >= 1 is representable"))
}
