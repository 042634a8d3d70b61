//! Tropical hyperplanes, their sectors, and tropical halfspaces.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Result, TropError};
use crate::point::TropPoint;
use crate::scalar::Rat;

/// Indices where `x − apex` attains its minimum.
pub(crate) fn argmin_set(x: &TropPoint, apex: &TropPoint) -> Result<Vec<usize>> {
    let diff = x.diff(apex)?;
    let min = diff.iter().min().expect("points have at least two coordinates");
    Ok(diff
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == min)
        .map(|(i, _)| i)
        .collect())
}

/// The tropical hyperplane with the given apex, i.e. with linear form `−apex`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub apex: TropPoint,
}

impl Hyperplane {
    pub fn new(apex: TropPoint) -> Self {
        Hyperplane { apex }
    }

    /// The minimum of `x_j − apex_j` is attained at least twice.
    pub fn contains(&self, x: &TropPoint) -> Result<bool> {
        Ok(argmin_set(x, &self.apex)?.len() >= 2)
    }
}

/// The sector `apex + S_k` (open) or `apex + S̄_k` (closed).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sector {
    pub apex: TropPoint,
    pub index: usize,
    pub closed: bool,
}

impl Sector {
    pub fn new(apex: TropPoint, index: usize, closed: bool) -> Result<Self> {
        if index > apex.dim() {
            return Err(TropError::IndexOutOfRange {
                index,
                dim: apex.dim(),
            });
        }
        Ok(Sector {
            apex,
            index,
            closed,
        })
    }

    pub fn closed(apex: TropPoint, index: usize) -> Result<Self> {
        Self::new(apex, index, true)
    }

    pub fn open(apex: TropPoint, index: usize) -> Result<Self> {
        Self::new(apex, index, false)
    }

    /// `x_k − a_k ≤ x_j − a_j` for all `j` (strict for `j ≠ k` if open).
    pub fn contains(&self, x: &TropPoint) -> Result<bool> {
        let arg = argmin_set(x, &self.apex)?;
        Ok(if self.closed {
            arg.contains(&self.index)
        } else {
            arg == [self.index]
        })
    }
}

/// A tropical halfspace: the union of the sectors `apex + S̄_k`, `k ∈ K`, when
/// closed; the complement of the opposite closed halfspace when open.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub apex: TropPoint,
    indices: BTreeSet<usize>,
    pub closed: bool,
}

impl Halfspace {
    pub fn new(apex: TropPoint, indices: impl IntoIterator<Item = usize>, closed: bool) -> Result<Self> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        let d = apex.dim();
        if let Some(&bad) = indices.iter().find(|&&k| k > d) {
            return Err(TropError::IndexOutOfRange { index: bad, dim: d });
        }
        if indices.is_empty() || indices.len() > d {
            return Err(TropError::Precondition(format!(
                "a halfspace of TP^{d} needs between 1 and {d} sector indices, got {}",
                indices.len()
            )));
        }
        Ok(Halfspace {
            apex,
            indices,
            closed,
        })
    }

    pub fn closed(apex: TropPoint, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(apex, indices, true)
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn dim(&self) -> usize {
        self.apex.dim()
    }

    /// The halfspace formed by the remaining sectors, with the same closedness.
    pub fn opposite(&self) -> Halfspace {
        Halfspace {
            apex: self.apex.clone(),
            indices: (0..=self.dim()).filter(|k| !self.indices.contains(k)).collect(),
            closed: self.closed,
        }
    }

    pub fn contains(&self, x: &TropPoint) -> Result<bool> {
        let arg = argmin_set(x, &self.apex)?;
        Ok(if self.closed {
            arg.iter().any(|k| self.indices.contains(k))
        } else {
            arg.iter().all(|k| self.indices.contains(k))
        })
    }

    /// Whether `x` lies on the common boundary of this halfspace and its opposite.
    pub fn boundary_contains(&self, x: &TropPoint) -> Result<bool> {
        let arg = argmin_set(x, &self.apex)?;
        Ok(arg.iter().any(|k| self.indices.contains(k)) && arg.iter().any(|k| !self.indices.contains(k)))
    }

    /// Exact inclusion test between closed halfspaces.
    ///
    /// `self ⊆ other` iff no closed sector of `self` meets the open complement
    /// of `other`. Each such intersection is a system of difference constraints
    /// `x_u − x_v ≤ c` / `< c`, decided by negative-cycle detection.
    pub fn is_subset_of(&self, other: &Halfspace) -> Result<bool> {
        if !self.closed || !other.closed {
            return Err(TropError::Precondition(
                "inclusion is only decided for closed halfspaces".into(),
            ));
        }
        self.apex.check_dim(&other.apex)?;
        let n = self.dim() + 1;
        let a = self.apex.coords();
        let b = other.apex.coords();
        for &k in &self.indices {
            for j in (0..n).filter(|j| !other.indices.contains(j)) {
                let mut sys = DifferenceSystem::new(n);
                // closed sector a + S̄_k: x_k − x_i ≤ a_k − a_i
                for i in (0..n).filter(|&i| i != k) {
                    sys.add(k, i, &a[k] - &a[i], false);
                }
                // open complement piece: x_j − x_l < b_j − b_l for all l ∈ K(other)
                for &l in &other.indices {
                    sys.add(j, l, &b[j] - &b[l], true);
                }
                if sys.feasible() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ", self.apex)?;
        let bar = if self.closed { "S̄" } else { "S" };
        for (i, k) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{bar}_{k}")?;
        }
        Ok(())
    }
}

/// Upper bound on `x_u − x_v`; `strict` marks `<` instead of `≤`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bound {
    value: Rat,
    strict: bool,
}

impl Bound {
    fn tighter_than(&self, other: &Bound) -> bool {
        self.value < other.value || (self.value == other.value && self.strict && !other.strict)
    }

    fn plus(&self, other: &Bound) -> Bound {
        Bound {
            value: &self.value + &other.value,
            strict: self.strict || other.strict,
        }
    }
}

/// Feasibility of `x_u − x_v ≤ c` / `< c` constraints by Floyd–Warshall.
struct DifferenceSystem {
    n: usize,
    dist: Vec<Option<Bound>>,
}

impl DifferenceSystem {
    fn new(n: usize) -> Self {
        DifferenceSystem {
            n,
            dist: vec![None; n * n],
        }
    }

    /// Records `x_u − x_v ≤ c` (or `< c`) as an edge `v → u` of weight `c`.
    fn add(&mut self, u: usize, v: usize, c: Rat, strict: bool) {
        let bound = Bound { value: c, strict };
        let slot = &mut self.dist[v * self.n + u];
        if slot.as_ref().is_none_or(|cur| bound.tighter_than(cur)) {
            *slot = Some(bound);
        }
    }

    fn feasible(mut self) -> bool {
        let n = self.n;
        for m in 0..n {
            for i in 0..n {
                let Some(im) = self.dist[i * n + m].clone() else {
                    continue;
                };
                for j in 0..n {
                    let Some(mj) = &self.dist[m * n + j] else {
                        continue;
                    };
                    let via = im.plus(mj);
                    let slot = &mut self.dist[i * n + j];
                    if slot.as_ref().is_none_or(|cur| via.tighter_than(cur)) {
                        *slot = Some(via);
                    }
                }
            }
        }
        (0..n).all(|i| match &self.dist[i * n + i] {
            None => true,
            Some(b) => b.value > Rat::from_integer(0.into()) || (b.value == Rat::from_integer(0.into()) && !b.strict),
        })
    }
}
