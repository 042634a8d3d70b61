//! Output-sensitive hull: gift wrapping over group hulls with logarithmic
//! per-group queries and a squaring guess for the number of vertices.
//!
//! In round `t` the input is cut into groups of `m = 2^(2^t)` points and each
//! group is indexed by its sorted chains. Wrapping then walks the three
//! phases `lr → rh → hl → lh`. In each step every group proposes the next
//! chain point after the current vertex, found by binary search, and a
//! gift-wrapping step over the proposals and the phase's end marker selects
//! the successor. A round gives up once it has produced more than `m`
//! vertices.

use super::chains::{ComparisonSort, PolygonIndex};
use super::{close_cycle, dedupe, extreme_markers, jarvis_step, push_vertex, AffinePoint2, HullResult, HullStats};
use crate::error::{Result, TropError};
use crate::scalar::Scalar;

fn group_size(t: u32, n: usize) -> usize {
    if t >= 6 {
        return n;
    }
    (1usize << (1u32 << t)).min(n).max(1)
}

pub fn hull_chan<T: Scalar>(points: &[AffinePoint2<T>]) -> Result<HullResult<T>> {
    if points.is_empty() {
        return Err(TropError::Empty);
    }
    let mut stats = HullStats::default();
    let (unique, origin) = dedupe(points);
    let n = unique.len();
    let markers = extreme_markers(&unique)?;
    stats.comparisons += 4 * n as u64;
    let locate = |p: &AffinePoint2<T>| unique.iter().position(|q| q == p).expect("marker is an input point");
    let ends = [locate(&markers.lr), locate(&markers.rh), locate(&markers.hl), locate(&markers.lh)];

    let mut t = 1;
    loop {
        stats.rounds += 1;
        let m = group_size(t, n);
        let groups: Vec<PolygonIndex<T>> = (0..n)
            .step_by(m)
            .map(|lo| {
                let hi = (lo + m).min(n);
                PolygonIndex::build(unique[lo..hi].to_vec(), (lo..hi).collect(), &ComparisonSort, &mut stats)
            })
            .collect();
        let limit = if m == n { usize::MAX } else { m };
        if let Some(hull) = wrap(&unique, &groups, ends, limit, &mut stats) {
            return Ok(HullResult {
                vertices: hull.iter().map(|&i| unique[i].clone()).collect(),
                vertex_indices: hull.iter().map(|&i| origin[i]).collect(),
                stats,
            });
        }
        t += 1;
    }
}

/// Wraps around the groups; `None` once more than `limit` vertices appear.
fn wrap<T: Scalar>(
    pts: &[AffinePoint2<T>],
    groups: &[PolygonIndex<T>],
    [lr, rh, hl, lh]: [usize; 4],
    limit: usize,
    stats: &mut HullStats,
) -> Option<Vec<usize>> {
    let mut hull = vec![lr];
    let mut v = lr;
    let mut phase = 0;
    let lh_skew = pts[lh].s();
    loop {
        let end = [rh, hl, lh][phase];
        if v == end {
            if phase == 2 {
                break;
            }
            phase += 1;
            continue;
        }
        let cur = &pts[v];
        let mut candidates = vec![end];
        for g in groups {
            let proposal = match phase {
                0 => g.first_below(&cur.s(), stats).filter(|&i| g.points()[i].y < pts[rh].y),
                1 => g.first_above(&cur.y, stats).filter(|&i| g.points()[i].x > pts[hl].x),
                _ => g.first_left(&cur.x, stats).filter(|&i| g.points()[i].s() > lh_skew),
            };
            if let Some(i) = proposal {
                stats.comparisons += 1;
                candidates.push(g.origin()[i]);
            }
        }
        v = jarvis_step(pts, cur, candidates, stats).expect("the end marker is a candidate");
        push_vertex(&mut hull, v);
        if v != lr && hull.len() > limit {
            return None;
        }
    }
    close_cycle(&mut hull);
    Some(hull)
}
