//! Frobenius numbers of the finite square sequence `(a, a+1, a+4, ..., a+k^2)`.
//!
//! Direct route: `g = max_r N_r - a` with
//! `N_r = min_m iota_k(m*a + r) * a + m*a + r`. For `a >= 3k^2` the minimum
//! sits at `m = 0`; smaller `a` use a branch-and-bound sweep cut off by the
//! lower bound `ceil(n/k^2) <= iota_k(n)`.
//!
//! Formula route: for each residue class `j = a mod k^2` there are fixed
//! coefficients `(t_{k,j}, r_{k,j})` such that
//! `g = t_j*a + r_j + (a + k^2) * (floor(a/k^2) - ceil(3k/2) - 1)` for all
//! large enough `a`. The coefficients come straight from the `iota_k` table
//! on the window `[u - k^2, u + k^2)` with `u = (ceil(3k/2) + 1) k^2`, and
//! the exact validity threshold `u_hat` is found by comparing the two routes
//! over every `a` up to `u`.

use crate::infinite::{ResidueRecord, MAX_MODULUS};
use crate::minplus::{ceil_3k_over_2, iota_table, MinRepTable};
use crate::{Error, Result};

/// Safety cap on the `m`-sweep; the branch-and-bound cutoff provably fires
/// first (`m <= 6` suffices for `r < a < 3k^2`).
fn sweep_cap(k: u32) -> u64 {
    8 * (k as u64).pow(2) + 8
}

/// Modulus ceiling for the finite routes. Results grow like `a^2 / k^2`, so
/// the ceiling scales with `k` to keep every value inside `i64`.
pub fn max_modulus_for(k: u32) -> u64 {
    MAX_MODULUS.min(u64::from(k) * 1_000_000_000)
}

/// `u = (ceil(3k/2) + 1) k^2`: from here on the residue maximum is attained
/// in the top window `[a - k^2, a - 1]`.
pub fn formula_onset(k: u32) -> u64 {
    (ceil_3k_over_2(k) + 1) * (k as u64).pow(2)
}

/// Table size covering the coefficient window and every sweep lookup.
pub fn recommended_truncation(k: u32) -> usize {
    formula_onset(k) as usize + (k as usize).pow(2)
}

/// The `iota_k` table sized for all computations at this `k`.
pub fn table_for(k: u32) -> Result<MinRepTable> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    iota_table(k, recommended_truncation(k))
}

/// Smallest semigroup element congruent to `r mod a` for the finite square
/// sequence; `r = 0` yields 0 (the empty sum).
pub fn n_r_finite(a: u64, r: u64, table: &MinRepTable) -> ResidueRecord {
    assert!(a >= 2, "modulus must be at least 2");
    assert!(
        a <= max_modulus_for(table.k()),
        "modulus {a} exceeds the supported range"
    );
    assert!(r < a, "residue must lie in [0, a-1]");
    if r == 0 {
        return ResidueRecord {
            r: 0,
            m_star: 0,
            n_r: 0,
            coefficient: 0,
        };
    }
    let k = table.k();
    let kk = (k as u64).pow(2);

    let record_at = |m: u64| {
        let n = m * a + r;
        let coefficient = table.iota_k(n);
        ResidueRecord {
            r,
            m_star: m,
            n_r: coefficient * a + n,
            coefficient,
        }
    };

    let mut best = record_at(0);
    if a >= 3 * kk {
        return best;
    }
    for m in 1..=sweep_cap(k) {
        let n = m * a + r;
        let lower_bound = n.div_ceil(kk) * a + n;
        if lower_bound >= best.n_r {
            break;
        }
        let candidate = record_at(m);
        if candidate.n_r < best.n_r {
            best = candidate;
        }
    }
    best
}

/// Direct Frobenius number over a prebuilt table (which fixes `k`).
pub fn frobenius_direct_with(a: u64, table: &MinRepTable) -> Result<u64> {
    if a <= 2 {
        return Err(Error::Domain(format!(
            "modulus {a} is too small; the sequence requires a >= 3"
        )));
    }
    if a > max_modulus_for(table.k()) {
        return Err(Error::Range(format!("{a} exceeds the supported range")));
    }
    let max_n_r = (0..a)
        .map(|r| n_r_finite(a, r, table).n_r)
        .max()
        .expect("a >= 3 gives at least one residue");
    Ok(max_n_r - a)
}

/// Frobenius number of `(a, a+1, a+4, ..., a+k^2)` by the direct route.
pub fn frobenius_direct(a: u64, k: u32) -> Result<u64> {
    let table = table_for(k)?;
    frobenius_direct_with(a, &table)
}

/// Residue-class coefficients of the closed-form Frobenius formula.
///
/// `t` and `r` are indexed by `j = a mod k^2`; `u` is the onset from which
/// the construction is proven, and `u_hat <= u` the exact verified onset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCoefficients {
    pub k: u32,
    pub u: u64,
    pub t: Vec<u64>,
    pub r: Vec<u64>,
    pub u_hat: u64,
}

/// Per-class `(t_j, r_j)`: scan the window `[a - k^2, a - 1]` for `a = u + j`,
/// take the maximal `iota_k` value and the largest residue attaining it.
fn window_coefficients(table: &MinRepTable) -> (u64, Vec<u64>, Vec<u64>) {
    let k = table.k();
    let kk = (k as u64).pow(2);
    let u = formula_onset(k);
    let mut t = Vec::with_capacity(kk as usize);
    let mut r = Vec::with_capacity(kk as usize);
    for j in 0..kk {
        let a = u + j;
        let (best_r, best_iota) = (a - kk..a)
            .map(|candidate| (candidate, table.iota_k(candidate)))
            .max_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
            .expect("window is nonempty");
        t.push(best_iota - 1);
        r.push(best_r);
    }
    (u, t, r)
}

/// Closed-form value without the validity check; negative below the onset.
fn formula_value(a: u64, k: u32, t: &[u64], r: &[u64]) -> i64 {
    let kk = (k as u64).pow(2);
    let j = (a % kk) as usize;
    let linear = (t[j] * a + r[j]) as i64;
    let periods = (a / kk) as i64 - (ceil_3k_over_2(k) as i64 + 1);
    linear + (a + kk) as i64 * periods
}

/// Smallest `a >= 3` from which the formula agrees with the direct route for
/// every `a` up to the proven onset `u`.
fn verify_onset(table: &MinRepTable, u: u64, t: &[u64], r: &[u64]) -> Result<u64> {
    let k = table.k();
    let mut last_disagreement = None;
    for a in 3..=u {
        let direct = frobenius_direct_with(a, table)? as i64;
        if formula_value(a, k, t, r) != direct {
            last_disagreement = Some(a);
        }
    }
    Ok(last_disagreement.map_or(3, |a| a + 1))
}

/// Coefficient sequences `(t_k, r_k)` with both onsets.
pub fn coefficient_sequences(k: u32) -> Result<FormulaCoefficients> {
    let table = table_for(k)?;
    let (u, t, r) = window_coefficients(&table);
    let u_hat = verify_onset(&table, u, &t, &r)?;
    Ok(FormulaCoefficients { k, u, t, r, u_hat })
}

/// Closed-form Frobenius number; valid only from `coefficients.u_hat` on.
pub fn g_formula(a: u64, coefficients: &FormulaCoefficients) -> Result<u64> {
    if a < coefficients.u_hat {
        return Err(Error::FormulaValidity {
            a,
            u_hat: coefficients.u_hat,
        });
    }
    if a > max_modulus_for(coefficients.k) {
        return Err(Error::Range(format!("{a} exceeds the supported range")));
    }
    let value = formula_value(a, coefficients.k, &coefficients.t, &coefficients.r);
    debug_assert!(value >= 0);
    Ok(value as u64)
}

/// Exact lower bound `u_hat` alone.
pub fn exact_lower_bound(k: u32) -> Result<u64> {
    Ok(coefficient_sequences(k)?.u_hat)
}
