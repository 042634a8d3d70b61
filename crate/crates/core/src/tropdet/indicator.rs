//! Point configurations whose positive τ-region is a prescribed union of
//! open sectors at the origin.
//!
//! Take a spanning tree of the complete bipartite graph between `K` and its
//! complement `C` and turn every edge `{a, b}` into the point `−e_a − e_b`.
//! For `x` in the open sector `S_k` the matrix `(x, u_1, …, u_d)` has a unique
//! optimal permutation: row 0 takes column `k` and every edge row takes its
//! endpoint pointing away from `k` in the tree, all other choices cost
//! strictly more. Moving `k` across one tree edge composes that permutation
//! with a transposition, so τ alternates between the two sides of the
//! bipartition. Swapping two rows fixes the overall sign.

use std::collections::BTreeSet;

use super::{tau, Sign};
use crate::error::{Result, TropError};
use crate::point::TropPoint;
use crate::scalar::rat;

fn edge_point(d: usize, a: usize, b: usize) -> Result<TropPoint> {
    TropPoint::canonicalize((0..=d).map(|i| rat(if i == a || i == b { -1 } else { 0 })).collect())
}

/// Returns `d` points `u_1, …, u_d` with `{x : τ(x) = +1} = ∪_{k∈K} S_k`.
pub fn sector_indicator_points(d: usize, indices: &BTreeSet<usize>) -> Result<Vec<TropPoint>> {
    if d == 0 {
        return Err(TropError::TooFewCoordinates(1));
    }
    if let Some(&bad) = indices.iter().find(|&&k| k > d) {
        return Err(TropError::IndexOutOfRange { index: bad, dim: d });
    }
    if indices.is_empty() || indices.len() > d {
        return Err(TropError::Precondition(format!(
            "sector set must have between 1 and {d} elements, got {}",
            indices.len()
        )));
    }
    let complement: Vec<usize> = (0..=d).filter(|k| !indices.contains(k)).collect();
    let k0 = *indices.first().expect("non-empty");
    let c0 = complement[0];
    let mut points = Vec::with_capacity(d);
    for &c in &complement {
        points.push(edge_point(d, k0, c)?);
    }
    for &k in indices.iter().skip(1) {
        points.push(edge_point(d, k, c0)?);
    }

    // Any point strictly inside S_k0 decides the sign on all of K.
    let probe = TropPoint::canonicalize((0..=d).map(|i| rat((i != k0) as i64)).collect())?;
    if tau(&points, &probe)? == Sign::Negative {
        if d < 2 {
            return Err(TropError::Precondition(format!(
                "no single point of TP^1 is positive exactly on sector {k0}"
            )));
        }
        points.swap(0, 1);
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(d: usize, k: usize) -> TropPoint {
        TropPoint::canonicalize((0..=d).map(|i| rat(if i == k { 0 } else { 1 + i as i64 })).collect())
            .unwrap()
    }

    #[test]
    fn classifies_sectors_in_low_dimensions() {
        for d in 2..=4 {
            for mask in 1u32..(1 << (d + 1)) - 1 {
                let k: BTreeSet<usize> = (0..=d).filter(|i| mask & (1 << i) != 0).collect();
                let pts = sector_indicator_points(d, &k).unwrap();
                for s in 0..=d {
                    let want = if k.contains(&s) { Sign::Positive } else { Sign::Negative };
                    assert_eq!(tau(&pts, &sample(d, s)).unwrap(), want, "d={d} K={k:?} s={s}");
                }
            }
        }
    }

    #[test]
    fn line_case() {
        let pts = sector_indicator_points(1, &BTreeSet::from([0])).unwrap();
        assert_eq!(tau(&pts, &sample(1, 0)).unwrap(), Sign::Positive);
        assert_eq!(tau(&pts, &sample(1, 1)).unwrap(), Sign::Negative);
        assert!(sector_indicator_points(1, &BTreeSet::from([1])).is_err());
    }

    #[test]
    fn rejects_empty_and_full_sets() {
        assert!(sector_indicator_points(3, &BTreeSet::new()).is_err());
        assert!(sector_indicator_points(2, &BTreeSet::from([0, 1, 2])).is_err());
        assert!(sector_indicator_points(2, &BTreeSet::from([3])).is_err());
    }

    #[test]
    fn alternative_configuration_from_sector_pairs() {
        // (1,0,0,1), (1,1,0,0), (0,1,1,0): positive on S_0, negative on S_1
        let pts: Vec<TropPoint> = [[1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0]]
            .iter()
            .map(|r| TropPoint::from_ints(r).unwrap())
            .collect();
        assert_eq!(tau(&pts, &TropPoint::from_ints(&[0, 1, 1, 1]).unwrap()).unwrap(), Sign::Positive);
        assert_eq!(tau(&pts, &TropPoint::from_ints(&[1, 0, 1, 1]).unwrap()).unwrap(), Sign::Negative);
    }
}
