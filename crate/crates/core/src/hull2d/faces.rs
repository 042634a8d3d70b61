//! Boundary structure of a tropical polygon: facets and pseudovertices.

use std::collections::BTreeSet;

use super::{hull_triple_sort, AffinePoint2};
use crate::error::Result;
use crate::point::segment_breakpoints;
use crate::scalar::Rat;

/// Face counts of a tropical polygon with `h` vertices. For `h ≥ 3` this is
/// the lattice of an ordinary `h`-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceLattice {
    pub vertices: usize,
    pub edges: usize,
}

impl FaceLattice {
    pub fn ngon(h: usize) -> Self {
        FaceLattice {
            vertices: h,
            edges: if h >= 3 { h } else { 0 },
        }
    }

    /// Dimension of the polygon itself.
    pub fn dimension(&self) -> usize {
        match self.vertices {
            0 | 1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    /// Number of faces of each dimension from `−1` (the empty face) up to the
    /// polygon itself.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dimension() {
            0 => vec![1, 1],
            1 => vec![1, 2, 1],
            _ => vec![1, self.vertices, self.edges, 1],
        }
    }
}

/// Facets as pairs of cyclically consecutive hull vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facets {
    pub facets: Vec<(AffinePoint2, AffinePoint2)>,
    pub lattice: FaceLattice,
}

pub fn facets2d(points: &[AffinePoint2]) -> Result<Facets> {
    let vertices = hull_triple_sort(points)?.vertices;
    let h = vertices.len();
    let facets = if h >= 3 {
        (0..h)
            .map(|i| (vertices[i].clone(), vertices[(i + 1) % h].clone()))
            .collect()
    } else {
        Vec::new()
    };
    Ok(Facets {
        facets,
        lattice: FaceLattice::ngon(h),
    })
}

/// The hull boundary as an ordinary closed polyline, starting at `lr`.
pub(crate) fn boundary_polyline(vertices: &[AffinePoint2]) -> Vec<AffinePoint2> {
    let h = vertices.len();
    if h == 1 {
        return vertices.to_vec();
    }
    let mut out: Vec<AffinePoint2> = Vec::new();
    for i in 0..h {
        let (u, w) = (&vertices[i], &vertices[(i + 1) % h]);
        let pieces = segment_breakpoints(&u.to_trop(), &w.to_trop()).expect("planar points");
        for p in pieces {
            let p = AffinePoint2::from_trop(&p).expect("planar points");
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Vertices of the arrangement of horizontal, vertical and diagonal lines
/// through the hull vertices that lie on the hull boundary, in boundary order
/// from `lr`.
pub fn pseudovertices(points: &[AffinePoint2]) -> Result<Vec<AffinePoint2>> {
    let vertices = hull_triple_sort(points)?.vertices;
    let xs: BTreeSet<Rat> = vertices.iter().map(|v| v.x.clone()).collect();
    let ys: BTreeSet<Rat> = vertices.iter().map(|v| v.y.clone()).collect();
    let ss: BTreeSet<Rat> = vertices.iter().map(AffinePoint2::s).collect();
    let on_lines = |p: &AffinePoint2| {
        xs.contains(&p.x) as u8 + ys.contains(&p.y) as u8 + ss.contains(&p.s()) as u8
    };

    let line = boundary_polyline(&vertices);
    let mut out: Vec<AffinePoint2> = Vec::new();
    let push = |p: AffinePoint2, out: &mut Vec<AffinePoint2>| {
        if on_lines(&p) >= 2 && !out.contains(&p) {
            out.push(p);
        }
    };
    if line.len() == 1 {
        push(line[0].clone(), &mut out);
        return Ok(out);
    }
    let zero = Rat::from_integer(0.into());
    let one = Rat::from_integer(1.into());
    for k in 0..line.len() {
        let (p, q) = (&line[k], &line[(k + 1) % line.len()]);
        let dx = &q.x - &p.x;
        let dy = &q.y - &p.y;
        let ds = &dy - &dx;
        let mut params: Vec<Rat> = vec![zero.clone()];
        if dx != zero {
            params.extend(xs.iter().map(|a| (a - &p.x) / &dx));
        }
        if dy != zero {
            params.extend(ys.iter().map(|b| (b - &p.y) / &dy));
        }
        if ds != zero {
            let ps = p.s();
            params.extend(ss.iter().map(|c| (c - &ps) / &ds));
        }
        params.retain(|t| *t >= zero && *t < one);
        params.sort();
        params.dedup();
        for t in params {
            push(
                AffinePoint2 {
                    x: &p.x + &t * &dx,
                    y: &p.y + &t * &dy,
                },
                &mut out,
            );
        }
    }
    Ok(out)
}
