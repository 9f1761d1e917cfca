//! Min-plus generating-function engine for `iota_k`.
//!
//! `iota_k(n)` is the least number of squares from `{1^2, ..., k^2}` summing
//! to `n`. The full two-variable series `prod_i 1/(1 - t q^{i^2})` is never
//! materialized: per `q`-coefficient only the minimum `t`-degree survives, so
//! the product collapses to a bounded-count coin DP over a dense table. Each
//! factor `sum_{x=0}^{h_i} t^x q^{i^2 x}` is folded in by `h_i` relaxation
//! rounds, where the caps `h_i` bound the multiplicity of `i^2` in any
//! optimal representation.
//!
//! Beyond the table, values follow from the stability law
//! `iota_k(n + k^2) = iota_k(n) + 1`, which provably holds from
//! `(ceil(3k/2) - 2) * k^2` on; tables built with at least the
//! [`MinRepTable::default_truncation`] extrapolate to every `n`.

use crate::{Error, Result};

/// Hard ceiling on dense table size.
const MAX_TRUNCATION: usize = 1 << 26;

pub(crate) fn ceil_3k_over_2(k: u32) -> u64 {
    (3 * k as u64).div_ceil(2)
}

/// Smallest truncation from which a table can extrapolate via stability.
fn extrapolation_truncation(k: u32) -> usize {
    let kk = (k as usize).pow(2);
    (ceil_3k_over_2(k) as usize - 1) * kk
}

/// Proven stability onset `(ceil(3k/2) - 2) * k^2`: from here on,
/// `iota_k(r + k^2) = iota_k(r) + 1` is guaranteed. The verified threshold
/// of a concrete table is usually smaller.
pub fn proven_stability_bound(k: u32) -> u64 {
    assert!(k >= 1, "proven_stability_bound requires k >= 1");
    (ceil_3k_over_2(k) - 2) * (k as u64).pow(2)
}

/// Per-index multiplicity caps `h_1, ..., h_k` for the truncated product.
///
/// `h_i = 3` for `i <= floor(k/2)`, `h_i = floor(4k^2 / (k^2 - i^2))` for
/// `floor(k/2) < i <= k - 1`, and `h_k = ceil(3k/2) - 1`. The `i = k` rule
/// takes precedence where the rules overlap (`k = 1, 2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapVector {
    k: u32,
    h: Vec<u64>,
}

impl CapVector {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Slice of caps; entry `i - 1` is the cap for the square `i^2`.
    pub fn caps(&self) -> &[u64] {
        &self.h
    }

    /// Cap for the square `i^2`, `1 <= i <= k`.
    pub fn cap(&self, i: u32) -> u64 {
        self.h[i as usize - 1]
    }
}

/// Multiplicity caps valid for every optimal representation.
pub fn caps(k: u32) -> CapVector {
    assert!(k >= 1, "caps requires k >= 1");
    let kk = k as u128 * k as u128;
    let h = (1..=k)
        .map(|i| {
            if i == k {
                ceil_3k_over_2(k) - 1
            } else if i <= k / 2 {
                3
            } else {
                let ii = i as u128 * i as u128;
                (4 * kk / (kk - ii)) as u64
            }
        })
        .collect();
    CapVector { k, h }
}

/// Truncated min-plus series: `coeff[n]` is the minimum `t`-degree over all
/// terms in `q^n`, or `None` where no term of degree `<= truncation` exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPlusSeries {
    truncation: usize,
    coeff: Vec<Option<u64>>,
}

impl MinPlusSeries {
    /// The series `1`: a single term at `q^0` of `t`-degree 0.
    fn one(truncation: usize) -> Self {
        let mut coeff = vec![None; truncation + 1];
        coeff[0] = Some(0);
        MinPlusSeries { truncation, coeff }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Minimum `t`-degree of the `q^n` coefficient, if any term survives.
    pub fn coefficient(&self, n: usize) -> Option<u64> {
        self.coeff.get(n).copied().flatten()
    }

    pub fn coefficients(&self) -> &[Option<u64>] {
        &self.coeff
    }

    /// Min-plus product with `sum_{x=0}^{cap} t^x q^{step * x}`, truncated.
    ///
    /// One in-place descending pass admits exactly one more copy of `step`,
    /// so `cap` passes enforce the multiplicity bound.
    fn mul_geometric(&mut self, step: usize, cap: u64) {
        if step == 0 || step > self.truncation {
            return;
        }
        for _ in 0..cap {
            let mut changed = false;
            for n in (step..=self.truncation).rev() {
                if let Some(v) = self.coeff[n - step] {
                    let candidate = v + 1;
                    if self.coeff[n].is_none_or(|w| candidate < w) {
                        self.coeff[n] = Some(candidate);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
}

fn check_truncation(truncation: usize) -> Result<()> {
    if truncation > MAX_TRUNCATION {
        return Err(Error::Resource(format!(
            "table of {truncation} entries exceeds the {MAX_TRUNCATION} budget"
        )));
    }
    Ok(())
}

/// Effective cap for folding `i^2` into a table truncated at `truncation`:
/// the structural cap for `i < k`, and the trivial count bound
/// `truncation / i^2` for `i = k` (no representation of `n <= truncation`
/// can use more).
fn effective_cap(cap_vector: &CapVector, i: u32, step: usize, truncation: usize) -> u64 {
    let fit = (truncation / step) as u64;
    if i == cap_vector.k() {
        fit
    } else {
        cap_vector.cap(i).min(fit)
    }
}

/// All intermediate stages `f_1, ..., f_k` of the capped product.
///
/// Stage `i` (index `i - 1`) is the min-degree table over the squares
/// `1^2, ..., i^2` only; the last stage is the full `iota_k` table.
pub fn iota_table_stages(k: u32, truncation: usize) -> Result<Vec<MinPlusSeries>> {
    assert!(k >= 1, "iota_table_stages requires k >= 1");
    check_truncation(truncation)?;
    let cap_vector = caps(k);
    let mut series = MinPlusSeries::one(truncation);
    let mut stages = Vec::with_capacity(k as usize);
    for i in 1..=k {
        let step = (i as usize).pow(2);
        if step <= truncation {
            series.mul_geometric(step, effective_cap(&cap_vector, i, step, truncation));
        }
        stages.push(series.clone());
    }
    Ok(stages)
}

/// Dense table of `iota_k(n)` for `0 <= n <= truncation`, with the verified
/// stability threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinRepTable {
    k: u32,
    truncation: usize,
    values: Vec<u64>,
    stable_from: usize,
}

/// Builds the `iota_k` table up to `truncation` by the capped product.
pub fn iota_table(k: u32, truncation: usize) -> Result<MinRepTable> {
    let stages = iota_table_stages(k, truncation)?;
    let series = stages.last().expect("k >= 1 yields at least one stage");
    let values: Vec<u64> = series
        .coefficients()
        .iter()
        .map(|c| c.expect("1^2 is available, so every n is representable"))
        .collect();

    let kk = (k as usize).pow(2);
    let mut stable_from = 0;
    if truncation >= kk {
        for r in (0..=truncation - kk).rev() {
            if values[r + kk] != values[r] + 1 {
                stable_from = r + 1;
                break;
            }
        }
    }
    Ok(MinRepTable {
        k,
        truncation,
        values,
        stable_from,
    })
}

impl MinRepTable {
    /// Default truncation `ceil(3k/2) * k^2`: the proven stability bound plus
    /// one extra period of slack.
    pub fn default_truncation(k: u32) -> usize {
        extrapolation_truncation(k) + (k as usize).pow(2)
    }

    pub fn with_default_truncation(k: u32) -> Result<Self> {
        iota_table(k, Self::default_truncation(k))
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Table values; entry `n` is `iota_k(n)` (entry 0 is 0).
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Smallest verified `r0` such that `iota_k(r + k^2) = iota_k(r) + 1` for
    /// every table index `r >= r0`.
    pub fn stability_threshold(&self) -> usize {
        self.stable_from
    }

    fn shift_for(&self, n: u64) -> u64 {
        // Shift n down by whole periods k^2 until it lands in the table; the
        // landing index then sits above truncation - k^2, which the assert
        // keeps inside the proven stable region.
        assert!(
            self.truncation >= extrapolation_truncation(self.k),
            "table truncated at {} cannot extrapolate for k = {}",
            self.truncation,
            self.k
        );
        let kk = (self.k as u64).pow(2);
        (n - self.truncation as u64).div_ceil(kk)
    }

    /// `iota_k(n)`; values beyond the table follow from stability.
    pub fn iota_k(&self, n: u64) -> u64 {
        if n <= self.truncation as u64 {
            return self.values[n as usize];
        }
        let s = self.shift_for(n);
        let kk = (self.k as u64).pow(2);
        self.values[(n - s * kk) as usize] + s
    }

    /// A multiset of indices `i` with `sum i^2 = n` of size `iota_k(n)`,
    /// recovered by predecessor descent (no parent links are stored).
    pub fn optimal_representation(&self, n: u64) -> Vec<u32> {
        let kk = (self.k as u64).pow(2);
        let mut parts = Vec::new();
        let mut cur = n;
        if cur > self.truncation as u64 {
            let s = self.shift_for(cur);
            parts.extend(std::iter::repeat_n(self.k, s as usize));
            cur -= s * kk;
        }
        let mut cur = cur as usize;
        while cur > 0 {
            let value = self.values[cur];
            let step = (1..=self.k)
                .rev()
                .find(|&i| {
                    let sq = (i as usize).pow(2);
                    sq <= cur && self.values[cur - sq] + 1 == value
                })
                .expect("every positive table value has a predecessor");
            parts.push(step);
            cur -= (step as usize).pow(2);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}
