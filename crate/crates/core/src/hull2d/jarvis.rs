//! Tropical gift wrapping: `O(nh)` orientation tests.

use super::{dedupe, extreme_markers, jarvis_step, AffinePoint2, HullResult, HullStats};
use crate::error::{Result, TropError};
use crate::scalar::Scalar;

pub fn hull_jarvis<T: Scalar>(points: &[AffinePoint2<T>]) -> Result<HullResult<T>> {
    if points.is_empty() {
        return Err(TropError::Empty);
    }
    let mut stats = HullStats::default();
    let (unique, origin) = dedupe(points);
    let start_point = extreme_markers(&unique)?.lr;
    stats.comparisons += 4 * unique.len() as u64;
    let start = unique.iter().position(|p| *p == start_point).expect("marker is an input point");
    let mut remaining: Vec<usize> = (0..unique.len()).collect();
    let mut hull: Vec<usize> = Vec::new();
    let mut v = start;
    loop {
        let w = jarvis_step(&unique, &unique[v], remaining.iter().copied(), &mut stats)
            .expect("the start point is only removed last");
        let pos = remaining.iter().position(|&r| r == w).expect("candidate is remaining");
        remaining.remove(pos);
        hull.push(w);
        v = w;
        if v == start {
            break;
        }
        assert!(hull.len() <= unique.len(), "gift wrapping failed to close the cycle");
    }
    hull.rotate_right(1);
    Ok(HullResult {
        vertices: hull.iter().map(|&i| unique[i].clone()).collect(),
        vertex_indices: hull.iter().map(|&i| origin[i]).collect(),
        stats,
    })
}
