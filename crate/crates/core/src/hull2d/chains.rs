//! The three sorted orders of a planar point set and their monotone chains.
//!
//! * `below`: prefix minima of `s = y − x` along the order (y ascending,
//!   x descending). It starts at `lr`.
//! * `upper`: prefix maxima of `y` along (x descending, y descending).
//!   It runs from `rh` to `hl`.
//! * `left`: prefix minima of `x` along (s descending, x ascending).
//!   It ends at `lh`.
//!
//! Along each chain the tracked coordinate is strictly monotone, and so is
//! the sort key, so both can be binary searched. The hull is read off the
//! chains, and the chains answer sector-emptiness and next-vertex queries in
//! logarithmic time.

use std::cmp::Ordering;

use super::{close_cycle, dedupe, jarvis_step, push_vertex, AffinePoint2, HullResult, HullStats, Markers};
use crate::error::{Result, TropError};
use crate::scalar::{Fast, Rat, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// y ascending, then x descending.
    Y,
    /// x descending, then y descending.
    LeftRev,
    /// s descending, then x ascending.
    Skew,
}

fn compare<T: Scalar>(order: Order, pts: &[AffinePoint2<T>], skew: &[T], a: usize, b: usize) -> Ordering {
    let (p, q) = (&pts[a], &pts[b]);
    match order {
        Order::Y => p.y.cmp(&q.y).then_with(|| q.x.cmp(&p.x)),
        Order::LeftRev => q.x.cmp(&p.x).then_with(|| q.y.cmp(&p.y)),
        Order::Skew => skew[b].cmp(&skew[a]).then_with(|| p.x.cmp(&q.x)),
    }
}

pub(crate) trait SortStrategy<T> {
    fn sort(&self, idx: &mut [usize], pts: &[AffinePoint2<T>], skew: &[T], order: Order, stats: &mut HullStats);
}

/// Plain comparison sort.
pub(crate) struct ComparisonSort;

impl<T: Scalar> SortStrategy<T> for ComparisonSort {
    fn sort(&self, idx: &mut [usize], pts: &[AffinePoint2<T>], skew: &[T], order: Order, stats: &mut HullStats) {
        idx.sort_unstable_by(|&a, &b| {
            stats.comparisons += 1;
            compare(order, pts, skew, a, b)
        });
    }
}

/// Distributes by the primary key into `n` equal-width buckets and sorts each
/// bucket; expected linear time on uniformly spread input.
pub(crate) struct BucketSort;

impl SortStrategy<Fast> for BucketSort {
    fn sort(&self, idx: &mut [usize], pts: &[AffinePoint2<Fast>], skew: &[Fast], order: Order, stats: &mut HullStats) {
        let key = |i: usize| -> f64 {
            match order {
                Order::Y => pts[i].y.0,
                Order::LeftRev => -pts[i].x.0,
                Order::Skew => -skew[i].0,
            }
        };
        let n = idx.len();
        if n < 2 {
            return;
        }
        let (lo, hi) = idx.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &i| {
            (lo.min(key(i)), hi.max(key(i)))
        });
        let width = hi - lo;
        let bucket_of = |i: usize| -> usize {
            if width > 0.0 {
                ((((key(i) - lo) / width) * (n - 1) as f64) as usize).min(n - 1)
            } else {
                0
            }
        };
        // counting placement into one flat array
        let mut start = vec![0usize; n + 1];
        for &i in idx.iter() {
            start[bucket_of(i) + 1] += 1;
        }
        for b in 0..n {
            start[b + 1] += start[b];
        }
        let mut fill = start.clone();
        let mut placed = vec![0usize; n];
        for &i in idx.iter() {
            let b = bucket_of(i);
            placed[fill[b]] = i;
            fill[b] += 1;
        }
        for b in 0..n {
            placed[start[b]..start[b + 1]].sort_unstable_by(|&a, &b| {
                stats.comparisons += 1;
                compare(order, pts, skew, a, b)
            });
        }
        idx.copy_from_slice(&placed);
    }
}

/// Sorted chains of a planar point set, supporting logarithmic queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonIndex<T = Rat> {
    points: Vec<AffinePoint2<T>>,
    origin: Vec<usize>,
    skew: Vec<T>,
    below: Vec<usize>,
    upper: Vec<usize>,
    left: Vec<usize>,
}

impl<T: Scalar> PolygonIndex<T> {
    /// Indexes a point set; duplicates are dropped.
    pub fn new(points: &[AffinePoint2<T>]) -> Result<Self> {
        if points.is_empty() {
            return Err(TropError::Empty);
        }
        let (unique, origin) = dedupe(points);
        Ok(Self::build(unique, origin, &ComparisonSort, &mut HullStats::default()))
    }

    /// Indexes the vertices of a computed hull.
    pub fn from_hull(hull: &HullResult<T>) -> Result<Self> {
        Self::new(&hull.vertices)
    }

    /// `points` must be distinct; `origin[i]` is the caller's label of `points[i]`.
    pub(crate) fn build<S: SortStrategy<T>>(
        points: Vec<AffinePoint2<T>>,
        origin: Vec<usize>,
        sorter: &S,
        stats: &mut HullStats,
    ) -> Self {
        let skew: Vec<T> = points.iter().map(AffinePoint2::s).collect();
        let n = points.len();
        let mut by_y: Vec<usize> = (0..n).collect();
        let mut by_x: Vec<usize> = (0..n).collect();
        let mut by_s: Vec<usize> = (0..n).collect();
        sorter.sort(&mut by_y, &points, &skew, Order::Y, stats);
        sorter.sort(&mut by_x, &points, &skew, Order::LeftRev, stats);
        sorter.sort(&mut by_s, &points, &skew, Order::Skew, stats);
        let below = prefix_extrema(&by_y, |a, b| skew[a] < skew[b], stats);
        let upper = prefix_extrema(&by_x, |a, b| points[a].y > points[b].y, stats);
        let left = prefix_extrema(&by_s, |a, b| points[a].x < points[b].x, stats);
        PolygonIndex {
            points,
            origin,
            skew,
            below,
            upper,
            left,
        }
    }

    pub fn points(&self) -> &[AffinePoint2<T>] {
        &self.points
    }

    pub(crate) fn origin(&self) -> &[usize] {
        &self.origin
    }

    fn lr(&self) -> usize {
        self.below[0]
    }

    fn rh(&self) -> usize {
        self.upper[0]
    }

    fn hl(&self) -> usize {
        *self.upper.last().expect("non-empty")
    }

    fn lh(&self) -> usize {
        *self.left.last().expect("non-empty")
    }

    pub fn markers(&self) -> Markers<T> {
        Markers {
            lr: self.points[self.lr()].clone(),
            rh: self.points[self.rh()].clone(),
            hl: self.points[self.hl()].clone(),
            lh: self.points[self.lh()].clone(),
        }
    }

    /// Hull vertices (indices into [`PolygonIndex::points`]), counter-clockwise
    /// from `lr`.
    pub(crate) fn hull_indices(&self, stats: &mut HullStats) -> Vec<usize> {
        let (lr, rh, hl, lh) = (self.lr(), self.rh(), self.hl(), self.lh());
        let pts = &self.points;
        let mut hull = vec![lr];
        for &w in &self.below[1..] {
            stats.comparisons += 1;
            if pts[w].y >= pts[rh].y {
                break;
            }
            push_vertex(&mut hull, w);
        }
        push_vertex(&mut hull, rh);
        for &w in &self.upper[1..] {
            stats.comparisons += 1;
            if pts[w].x <= pts[hl].x {
                break;
            }
            push_vertex(&mut hull, w);
        }
        push_vertex(&mut hull, hl);
        for &w in &self.left {
            stats.comparisons += 2;
            if self.skew[w] <= self.skew[lh] {
                break;
            }
            if pts[w].x < pts[hl].x {
                push_vertex(&mut hull, w);
            }
        }
        push_vertex(&mut hull, lh);
        close_cycle(&mut hull);
        hull
    }

    /// The first point in (y ascending, x descending) order with `s < s0`.
    pub(crate) fn first_below(&self, s0: &T, stats: &mut HullStats) -> Option<usize> {
        let k = self.below.partition_point(|&i| {
            stats.comparisons += 1;
            self.skew[i] >= *s0
        });
        self.below.get(k).copied()
    }

    /// The first point in (x descending, y descending) order with `y > y0`.
    pub(crate) fn first_above(&self, y0: &T, stats: &mut HullStats) -> Option<usize> {
        let k = self.upper.partition_point(|&i| {
            stats.comparisons += 1;
            self.points[i].y <= *y0
        });
        self.upper.get(k).copied()
    }

    /// The first point in (s descending, x ascending) order with `x < x0`.
    pub(crate) fn first_left(&self, x0: &T, stats: &mut HullStats) -> Option<usize> {
        let k = self.left.partition_point(|&i| {
            stats.comparisons += 1;
            self.points[i].x >= *x0
        });
        self.left.get(k).copied()
    }

    /// Whether `v` lies in the tropical convex hull of the indexed points,
    /// i.e. each of the three closed sectors at `v` contains one of them.
    pub fn contains(&self, v: &AffinePoint2<T>, stats: &mut HullStats) -> bool {
        let pts = &self.points;
        let vs = v.s();
        // quadrant: some point with x >= v.x has y >= v.y
        let k = self.upper.partition_point(|&i| {
            stats.comparisons += 1;
            pts[i].x >= v.x
        });
        let quadrant = k > 0 && pts[self.upper[k - 1]].y >= v.y;
        // left wedge: some point with s >= v.s has x <= v.x
        let k = self.left.partition_point(|&i| {
            stats.comparisons += 1;
            self.skew[i] >= vs
        });
        let left = k > 0 && pts[self.left[k - 1]].x <= v.x;
        // bottom wedge: some point with y <= v.y has s <= v.s
        let k = self.below.partition_point(|&i| {
            stats.comparisons += 1;
            pts[i].y <= v.y
        });
        let bottom = k > 0 && self.skew[self.below[k - 1]] <= vs;
        stats.comparisons += 3;
        quadrant && left && bottom
    }
}

/// Positions in `order` where `better(current, best so far)` holds strictly.
fn prefix_extrema(order: &[usize], mut better: impl FnMut(usize, usize) -> bool, stats: &mut HullStats) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &i in order {
        match out.last() {
            None => out.push(i),
            Some(&best) => {
                stats.comparisons += 1;
                if better(i, best) {
                    out.push(i);
                }
            }
        }
    }
    out
}

/// The vertex following `v` on the hull of `polygon ∪ {v}`, found with
/// logarithmically many comparisons and a constant number of `τ̄` tests.
///
/// The candidates are the extreme markers of `polygon ∪ {v}` and the answers
/// of the three chain queries; the successor is always among them, and a
/// gift-wrapping step over any subset containing it returns it.
pub fn tangent_binary_search<T: Scalar>(
    polygon: &PolygonIndex<T>,
    v: &AffinePoint2<T>,
    stats: &mut HullStats,
) -> Result<AffinePoint2<T>> {
    if polygon.contains(v, stats) {
        return Err(TropError::Precondition(format!(
            "query point {v:?} lies inside the polygon"
        )));
    }
    let pts = &polygon.points;
    let joint = polygon.markers().with(v);
    let mut candidates: Vec<usize> = Vec::with_capacity(7);
    let own = [polygon.lr(), polygon.rh(), polygon.hl(), polygon.lh()];
    for (m, i) in [&joint.lr, &joint.rh, &joint.hl, &joint.lh].into_iter().zip(own) {
        stats.comparisons += 1;
        if m != v {
            candidates.push(i);
        }
    }
    candidates.extend(polygon.first_below(&v.s(), stats));
    candidates.extend(polygon.first_above(&v.y, stats));
    candidates.extend(polygon.first_left(&v.x, stats));
    candidates.sort_unstable();
    candidates.dedup();
    let w = jarvis_step(pts, v, candidates, stats).expect("a polygon has a vertex");
    Ok(pts[w].clone())
}
