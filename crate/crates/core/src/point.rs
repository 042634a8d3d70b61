//! Points of the tropical projective space `TP^d`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Result, TropError};
use crate::scalar::{rat, Rat};

/// A point of `TP^d` in canonical coordinates: `d + 1` non-negative rationals
/// with minimum exactly zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropPoint {
    coords: Vec<Rat>,
}

impl TropPoint {
    /// Canonicalizes a raw representative by subtracting its minimum entry.
    pub fn canonicalize(raw: Vec<Rat>) -> Result<Self> {
        if raw.len() < 2 {
            return Err(TropError::TooFewCoordinates(raw.len()));
        }
        let min = raw.iter().min().cloned().unwrap_or_else(Rat::zero);
        let coords = raw.into_iter().map(|c| c - &min).collect();
        Ok(TropPoint { coords })
    }

    pub fn from_ints(raw: &[i64]) -> Result<Self> {
        Self::canonicalize(raw.iter().map(|&v| rat(v)).collect())
    }

    /// Inverse of [`TropPoint::affine_chart`]: prepends a zero coordinate.
    pub fn from_affine(chart: &[Rat]) -> Result<Self> {
        let mut raw = Vec::with_capacity(chart.len() + 1);
        raw.push(Rat::zero());
        raw.extend(chart.iter().cloned());
        Self::canonicalize(raw)
    }

    /// The dimension `d` of the ambient `TP^d`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    /// `(ξ_1 − ξ_0, …, ξ_d − ξ_0)`.
    pub fn affine_chart(&self) -> Vec<Rat> {
        let base = &self.coords[0];
        self.coords[1..].iter().map(|c| c - base).collect()
    }

    /// Tropical norm: the largest canonical coordinate.
    pub fn norm(&self) -> Rat {
        self.coords.iter().max().cloned().unwrap_or_else(Rat::zero)
    }

    /// Raw difference `self − other` (a representative, not canonicalized).
    pub fn diff(&self, other: &TropPoint) -> Result<Vec<Rat>> {
        self.check_dim(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect())
    }

    pub(crate) fn check_dim(&self, other: &TropPoint) -> Result<()> {
        if self.coords.len() != other.coords.len() {
            return Err(TropError::DimensionMismatch {
                expected: self.coords.len(),
                found: other.coords.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for TropPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Norm of a raw representative: `max_i ξ_i − min_i ξ_i`.
pub(crate) fn spread(raw: &[Rat]) -> Rat {
    match (raw.iter().max(), raw.iter().min()) {
        (Some(hi), Some(lo)) => hi - lo,
        _ => Rat::zero(),
    }
}

pub fn trop_norm(x: &TropPoint) -> Rat {
    x.norm()
}

/// The tropical metric `‖x − y‖`.
pub fn trop_dist(x: &TropPoint, y: &TropPoint) -> Result<Rat> {
    Ok(spread(&x.diff(y)?))
}

/// `λ ⊙ x ⊕ μ ⊙ y`, canonicalized.
pub fn segment_eval(x: &TropPoint, y: &TropPoint, lambda: &Rat, mu: &Rat) -> Result<TropPoint> {
    x.check_dim(y)?;
    let raw = x
        .coords
        .iter()
        .zip(&y.coords)
        .map(|(a, b)| std::cmp::min(lambda + a, mu + b))
        .collect();
    TropPoint::canonicalize(raw)
}

/// The tropical segment `[x, y]` as an ordinary polyline from `x` to `y`.
///
/// With `t = μ − λ` the segment is `t ↦ min(x, t + y)`, which is affine in `t`
/// between consecutive values of `x_i − y_i`; evaluating at those values from
/// the largest (giving `x`) to the smallest (giving `y`) yields the breakpoints.
pub fn segment_breakpoints(x: &TropPoint, y: &TropPoint) -> Result<Vec<TropPoint>> {
    let mut shifts = x.diff(y)?;
    shifts.sort();
    shifts.dedup();
    let zero = Rat::zero();
    let mut out: Vec<TropPoint> = Vec::with_capacity(shifts.len());
    for t in shifts.iter().rev() {
        let p = segment_eval(x, y, &zero, t)?;
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    Ok(out)
}
