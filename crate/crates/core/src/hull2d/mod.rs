//! Tropical polygons in `TP²`.
//!
//! Points are handled in the affine chart `(x, y) = (ξ_1 − ξ_0, ξ_2 − ξ_0)`.
//! Writing `s = y − x`, the closed sectors at a point `v` are the quadrant
//! `{x ≥ v.x, y ≥ v.y}`, the left wedge `{x ≤ v.x, s ≥ v.s}` and the bottom
//! wedge `{y ≤ v.y, s ≤ v.s}`. The hull boundary, walked counter-clockwise from
//! the lowest point `lr`, consists of three monotone chains (towards `rh`, `hl`
//! and `lh`) followed by the facet `[lh, lr]`.

mod chan;
mod chains;
mod exterior;
mod faces;
mod jarvis;
mod triple;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Result, TropError};
use crate::point::TropPoint;
use crate::scalar::{Rat, Scalar};
use crate::tropdet::{tau_closure3, Sign};

pub use chains::{tangent_binary_search, PolygonIndex};
pub use chan::hull_chan;
pub use exterior::{minimal_halfspaces2d, MinimalHalfspaceSet, NotFullWarning};
pub use faces::{facets2d, pseudovertices, FaceLattice, Facets};
pub use jarvis::hull_jarvis;
pub use triple::{hull_triple_sort, hull_triple_sort_bucketed};

/// A point of the affine chart of `TP²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePoint2<T = Rat> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> AffinePoint2<T> {
    pub fn new(x: T, y: T) -> Self {
        AffinePoint2 { x, y }
    }

    /// The skew coordinate `y − x`.
    pub fn s(&self) -> T {
        self.y.clone() - self.x.clone()
    }

    /// Homogeneous coordinates `(0, x, y)`.
    pub fn homogeneous(&self) -> [T; 3] {
        [T::zero(), self.x.clone(), self.y.clone()]
    }
}

impl AffinePoint2<Rat> {
    pub fn from_trop(p: &TropPoint) -> Result<Self> {
        if p.dim() != 2 {
            return Err(TropError::NotPlanar(p.dim()));
        }
        let chart = p.affine_chart();
        Ok(AffinePoint2 {
            x: chart[0].clone(),
            y: chart[1].clone(),
        })
    }

    pub fn to_trop(&self) -> TropPoint {
        TropPoint::from_affine(&[self.x.clone(), self.y.clone()]).expect("two chart coordinates")
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        AffinePoint2 {
            x: crate::scalar::rat(x),
            y: crate::scalar::rat(y),
        }
    }
}

impl<T: fmt::Display> fmt::Display for AffinePoint2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Converts points of `TP²` to the chart.
pub fn to_chart(points: &[TropPoint]) -> Result<Vec<AffinePoint2>> {
    points.iter().map(AffinePoint2::from_trop).collect()
}

/// Work counters of a hull computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HullStats {
    /// Coordinate comparisons, including those made while sorting.
    pub comparisons: u64,
    /// Evaluations of the orientation predicate `τ̄`.
    pub tau_evals: u64,
    /// Guessing rounds (only used by the output-sensitive algorithm).
    pub rounds: u32,
}

/// Vertices of a tropical polygon, counter-clockwise from `lr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullResult<T = Rat> {
    pub vertices: Vec<AffinePoint2<T>>,
    /// Position of each vertex in the input (its first occurrence).
    pub vertex_indices: Vec<usize>,
    pub stats: HullStats,
}

/// Available hull algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HullAlgorithm {
    TripleSort,
    Jarvis,
    Chan,
}

pub fn hull<T: Scalar>(points: &[AffinePoint2<T>], algorithm: HullAlgorithm) -> Result<HullResult<T>> {
    match algorithm {
        HullAlgorithm::TripleSort => hull_triple_sort(points),
        HullAlgorithm::Jarvis => hull_jarvis(points),
        HullAlgorithm::Chan => hull_chan(points),
    }
}

/// The four extreme points of a planar set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Markers<T = Rat> {
    /// Lowest, ties broken to the right.
    pub lr: AffinePoint2<T>,
    /// Rightmost, ties broken upwards.
    pub rh: AffinePoint2<T>,
    /// Highest, ties broken to the right.
    pub hl: AffinePoint2<T>,
    /// Leftmost, ties broken upwards.
    pub lh: AffinePoint2<T>,
}

pub fn extreme_markers<T: Scalar>(points: &[AffinePoint2<T>]) -> Result<Markers<T>> {
    let first = points.first().ok_or(TropError::Empty)?;
    let mut m = Markers {
        lr: first.clone(),
        rh: first.clone(),
        hl: first.clone(),
        lh: first.clone(),
    };
    for p in &points[1..] {
        m.absorb(p);
    }
    Ok(m)
}

impl<T: Scalar> Markers<T> {
    fn absorb(&mut self, p: &AffinePoint2<T>) {
        if (&p.y, std::cmp::Reverse(&p.x)) < (&self.lr.y, std::cmp::Reverse(&self.lr.x)) {
            self.lr = p.clone();
        }
        if (&p.x, &p.y) > (&self.rh.x, &self.rh.y) {
            self.rh = p.clone();
        }
        if (&p.y, &p.x) > (&self.hl.y, &self.hl.x) {
            self.hl = p.clone();
        }
        if (&p.x, std::cmp::Reverse(&p.y)) < (&self.lh.x, std::cmp::Reverse(&self.lh.y)) {
            self.lh = p.clone();
        }
    }

    fn with(&self, p: &AffinePoint2<T>) -> Markers<T> {
        let mut m = self.clone();
        m.absorb(p);
        m
    }
}

/// Distinct points in first-occurrence order, with their input positions.
pub(crate) fn dedupe<T: Scalar>(points: &[AffinePoint2<T>]) -> (Vec<AffinePoint2<T>>, Vec<usize>) {
    let mut seen: HashMap<&AffinePoint2<T>, ()> = HashMap::with_capacity(points.len());
    let mut unique = Vec::with_capacity(points.len());
    let mut origin = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if seen.insert(p, ()).is_none() {
            unique.push(p.clone());
            origin.push(i);
        }
    }
    (unique, origin)
}

/// `‖p − v‖` in the chart.
fn chart_dist<T: Scalar>(p: &AffinePoint2<T>, v: &AffinePoint2<T>) -> T {
    let dx = p.x.clone() - v.x.clone();
    let dy = p.y.clone() - v.y.clone();
    let zero = T::zero();
    let hi = std::cmp::max(std::cmp::max(dx.clone(), dy.clone()), zero.clone());
    let lo = std::cmp::min(std::cmp::min(dx, dy), zero);
    hi - lo
}

/// `τ̄_{v,w}(p)`: the closed orientation of the rows `(p, v, w)`.
pub fn orientation<T: Scalar>(p: &AffinePoint2<T>, v: &AffinePoint2<T>, w: &AffinePoint2<T>) -> Sign {
    tau_closure3(&[p.homogeneous(), v.homogeneous(), w.homogeneous()])
}

/// One gift-wrapping step over `points[c]` for `c` in `candidates`: the
/// candidate `w` that no other candidate `p` beats, where `p` beats `w` if
/// `τ̄_{v,w}(p) = −1`, or `τ̄_{v,w}(p) = 0` and `p` is farther from `v`.
pub(crate) fn jarvis_step<T: Scalar>(
    points: &[AffinePoint2<T>],
    v: &AffinePoint2<T>,
    candidates: impl IntoIterator<Item = usize>,
    stats: &mut HullStats,
) -> Option<usize> {
    let mut iter = candidates.into_iter();
    let mut w = iter.next()?;
    for p in iter {
        stats.tau_evals += 1;
        let better = match orientation(&points[p], v, &points[w]) {
            Sign::Negative => true,
            Sign::Zero => chart_dist(&points[p], v) > chart_dist(&points[w], v),
            Sign::Positive => false,
        };
        if better {
            w = p;
        }
    }
    Some(w)
}

/// Consecutive-duplicate-free push.
fn push_vertex(hull: &mut Vec<usize>, i: usize) {
    if hull.last() != Some(&i) {
        hull.push(i);
    }
}

/// Drops a closing repetition of the first vertex.
fn close_cycle(hull: &mut Vec<usize>) {
    if hull.len() > 1 && hull.last() == hull.first() {
        hull.pop();
    }
}
