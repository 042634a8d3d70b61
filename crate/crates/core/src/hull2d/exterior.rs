//! Minimal closed tropical halfspaces containing a planar polytope.
//!
//! Every minimal halfspace has a pseudovertex as its apex, and a halfspace of
//! `TP²` is one of six sector unions at its apex, so the candidates are
//! finite. Keep the candidates containing all vertices, then drop those that
//! strictly contain another candidate; inclusion is decided exactly.

use super::{faces::pseudovertices, hull_triple_sort, AffinePoint2};
use crate::error::Result;
use crate::halfspace::Halfspace;
use crate::point::TropPoint;

const SECTOR_SETS: [&[usize]; 6] = [&[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]];

/// Raised when the polytope lies in the boundary of some halfspace, where the
/// minimal halfspaces need not be determined by their boundary traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotFullWarning {
    /// A halfspace whose boundary contains the polytope.
    pub witness: Halfspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalHalfspaceSet {
    pub halfspaces: Vec<Halfspace>,
    pub warning: Option<NotFullWarning>,
}

fn contains_all(h: &Halfspace, points: &[TropPoint]) -> bool {
    points.iter().all(|p| h.contains(p).expect("planar points"))
}

pub fn minimal_halfspaces2d(points: &[AffinePoint2]) -> Result<MinimalHalfspaceSet> {
    let vertices: Vec<TropPoint> = hull_triple_sort(points)?
        .vertices
        .iter()
        .map(AffinePoint2::to_trop)
        .collect();
    let mut containing: Vec<Halfspace> = Vec::new();
    let mut warning = None;
    for apex in pseudovertices(points)? {
        let apex = apex.to_trop();
        for k in SECTOR_SETS {
            let h = Halfspace::closed(apex.clone(), k.iter().copied())?;
            if !contains_all(&h, &vertices) {
                continue;
            }
            if warning.is_none() && contains_all(&h.opposite(), &vertices) {
                log::warn!("polytope lies in the boundary of {h}; minimal halfspaces may not be unique");
                warning = Some(NotFullWarning { witness: h.clone() });
            }
            containing.push(h);
        }
    }
    let n = containing.len();
    let subset: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i == j || containing[i].is_subset_of(&containing[j]).expect("closed planar halfspaces"))
                .collect()
        })
        .collect();
    let halfspaces = (0..n)
        .filter(|&i| {
            !(0..n).any(|j| {
                j != i && subset[j][i] && (!subset[i][j] || j < i)
            })
        })
        .map(|i| containing[i].clone())
        .collect();
    Ok(MinimalHalfspaceSet { halfspaces, warning })
}
