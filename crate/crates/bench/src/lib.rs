//! Seeded workloads for the hull and determinant benchmarks.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropconv::{AffinePoint2, Fast, HullStats, PolygonIndex, Rat, TropMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn fast(x: f64, y: f64) -> AffinePoint2<Fast> {
    AffinePoint2::new(Fast::from(x), Fast::from(y))
}

/// `n` points drawn uniformly from the square `[0, 1)²`.
pub fn uniform_square(n: usize, seed: u64) -> Vec<AffinePoint2<Fast>> {
    let mut rng = rng(seed);
    (0..n).map(|_| fast(rng.gen(), rng.gen())).collect()
}

/// `h` points on the unit circle that are all vertices of their tropical hull.
///
/// A point of the circle is a vertex when one of its three closed sectors
/// misses the rest of the circle, which holds for outward normals in the arcs
/// `(0, π/2)`, `(3π/4, π)` and `(3π/2, 7π/4)`. The points are spread over
/// those arcs, away from their ends.
pub fn circle_vertices(h: usize) -> Vec<AffinePoint2<Fast>> {
    let arcs = [(0.0, PI / 2.0), (3.0 * PI / 4.0, PI), (3.0 * PI / 2.0, 7.0 * PI / 4.0)];
    let total: f64 = arcs.iter().map(|(a, b)| b - a).sum();
    (0..h)
        .map(|i| {
            // position along the concatenated arcs, centred in its slot
            let mut t = (i as f64 + 0.5) / h as f64 * total;
            let mut angle = 0.0;
            for (a, b) in arcs {
                if t <= b - a {
                    angle = a + t;
                    break;
                }
                t -= b - a;
            }
            fast(angle.cos(), angle.sin())
        })
        .collect()
}

/// `n` points: the `h` vertices of [`circle_vertices`] followed by a uniform
/// cloud inside their tropical hull, shuffled.
pub fn hull_with_cloud(n: usize, h: usize, seed: u64) -> Vec<AffinePoint2<Fast>> {
    let vertices = circle_vertices(h);
    let polygon = PolygonIndex::new(&vertices).expect("non-empty");
    let mut rng = rng(seed);
    let mut out = vertices;
    let mut stats = HullStats::default();
    while out.len() < n {
        let p = fast(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if polygon.contains(&p, &mut stats) {
            out.push(p);
        }
    }
    for i in (1..out.len()).rev() {
        out.swap(i, rng.gen_range(0..=i));
    }
    out
}

/// Exact copies of double-precision points.
pub fn to_exact(points: &[AffinePoint2<Fast>]) -> Vec<AffinePoint2<Rat>> {
    points
        .iter()
        .map(|p| {
            AffinePoint2::new(
                Rat::from_float(p.x.0).expect("finite"),
                Rat::from_float(p.y.0).expect("finite"),
            )
        })
        .collect()
}

/// Square matrix with integer entries in `[lo, hi]`.
pub fn int_matrix(n: usize, lo: i64, hi: i64, seed: u64) -> TropMatrix {
    let mut rng = rng(seed);
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect()).collect();
    TropMatrix::from_ints(&rows).expect("square")
}
