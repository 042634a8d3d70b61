//! Named example polytopes.

use itertools::Itertools;

use crate::error::{Result, TropError};
use crate::point::TropPoint;
use crate::scalar::rat;

/// Vertices of the tropical hypersimplex `Δ_k^d`: the points `Σ_{i∈J} −e_i`
/// for every `k`-subset `J` of `{0,…,d}`, in lexicographic order of `J`.
pub fn hypersimplex(d: usize, k: usize) -> Result<Vec<TropPoint>> {
    if d == 0 {
        return Err(TropError::TooFewCoordinates(1));
    }
    if k == 0 || k > d {
        return Err(TropError::Precondition(format!(
            "hypersimplex needs 1 <= k <= d, got d = {d}, k = {k}"
        )));
    }
    (0..=d)
        .combinations(k)
        .map(|set| {
            let raw = (0..=d).map(|i| rat(if set.contains(&i) { -1 } else { 0 })).collect();
            TropPoint::canonicalize(raw)
        })
        .collect()
}

/// The tropical standard simplex `Δ^d = Δ_1^d`.
pub fn standard_simplex(d: usize) -> Result<Vec<TropPoint>> {
    hypersimplex(d, 1)
}

/// Generators of the ordinary `±1` cube in the affine chart:
/// `−e_0 − 2e_i` for `i = 1,…,d` and `e_1 + … + e_d`.
pub fn cube(d: usize) -> Result<Vec<TropPoint>> {
    if d == 0 {
        return Err(TropError::TooFewCoordinates(1));
    }
    let mut out = Vec::with_capacity(d + 1);
    for i in 1..=d {
        let raw = (0..=d)
            .map(|j| rat(match j {
                0 => -1,
                j if j == i => -2,
                _ => 0,
            }))
            .collect();
        out.push(TropPoint::canonicalize(raw)?);
    }
    out.push(TropPoint::canonicalize((0..=d).map(|j| rat((j > 0) as i64)).collect())?);
    Ok(out)
}
