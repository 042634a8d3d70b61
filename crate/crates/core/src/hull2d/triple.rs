//! Hull by sorting the points three times.

use super::chains::{BucketSort, ComparisonSort, PolygonIndex, SortStrategy};
use super::{dedupe, AffinePoint2, HullResult, HullStats};
use crate::error::{Result, TropError};
use crate::scalar::{Fast, Scalar};

fn run<T: Scalar, S: SortStrategy<T>>(points: &[AffinePoint2<T>], sorter: &S) -> Result<HullResult<T>> {
    if points.is_empty() {
        return Err(TropError::Empty);
    }
    let mut stats = HullStats::default();
    let (unique, origin) = dedupe(points);
    let index = PolygonIndex::build(unique, origin, sorter, &mut stats);
    let hull = index.hull_indices(&mut stats);
    Ok(HullResult {
        vertices: hull.iter().map(|&i| index.points()[i].clone()).collect(),
        vertex_indices: hull.iter().map(|&i| index.origin()[i]).collect(),
        stats,
    })
}

/// `O(n log n)` hull from the orders by `y`, by `x` and by `y − x`.
pub fn hull_triple_sort<T: Scalar>(points: &[AffinePoint2<T>]) -> Result<HullResult<T>> {
    run(points, &ComparisonSort)
}

/// Same output as [`hull_triple_sort`], with bucket sorting in place of
/// comparison sorting: expected linear time for uniformly spread input.
pub fn hull_triple_sort_bucketed(points: &[AffinePoint2<Fast>]) -> Result<HullResult<Fast>> {
    run(points, &BucketSort)
}
