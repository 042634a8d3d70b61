#![allow(dead_code)]

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropconv::{rat, ratio, AffinePoint2, Rat, TropMatrix, TropPoint};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int_matrix(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> TropMatrix {
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect()).collect();
    TropMatrix::from_ints(&rows).unwrap()
}

pub fn perm_sign(p: &[usize]) -> i8 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exhaustive enumeration: (minimum, number of optimal permutations, parities seen).
pub struct Brute {
    pub value: Rat,
    pub optimal: usize,
    pub even: bool,
    pub odd: bool,
}

impl Brute {
    pub fn tsgn(&self) -> i8 {
        if self.optimal > 1 {
            0
        } else if self.even {
            1
        } else {
            -1
        }
    }

    pub fn tau_closure(&self) -> i8 {
        match (self.even, self.odd) {
            (true, false) => 1,
            (false, true) => -1,
            _ => 0,
        }
    }
}

pub fn brute(m: &TropMatrix) -> Brute {
    let n = m.size();
    let mut best: Option<Rat> = None;
    let mut out = Brute { value: rat(0), optimal: 0, even: false, odd: false };
    for p in (0..n).permutations(n) {
        let v = m.permutation_value(&p);
        let even = perm_sign(&p) == 1;
        match &best {
            Some(b) if v > *b => continue,
            Some(b) if v == *b => out.optimal += 1,
            _ => {
                best = Some(v.clone());
                out.optimal = 1;
                out.even = false;
                out.odd = false;
            }
        }
        if even {
            out.even = true;
        } else {
            out.odd = true;
        }
    }
    out.value = best.unwrap();
    out
}

pub fn random_rat(rng: &mut impl Rng, range: i64, den: i64) -> Rat {
    ratio(rng.gen_range(-range * den..=range * den), den)
}

pub fn random_point(rng: &mut impl Rng, d: usize, range: i64, den: i64) -> TropPoint {
    TropPoint::canonicalize((0..=d).map(|_| random_rat(rng, range, den)).collect()).unwrap()
}

pub fn random_chart_point(rng: &mut impl Rng, range: i64, den: i64) -> AffinePoint2 {
    AffinePoint2::new(random_rat(rng, range, den), random_rat(rng, range, den))
}

/// A point of `S_k` at the origin: coordinate `k` is the unique minimum.
pub fn open_sector_sample(rng: &mut impl Rng, d: usize, k: usize) -> TropPoint {
    let raw = (0..=d)
        .map(|i| if i == k { rat(0) } else { ratio(rng.gen_range(1..=1000), rng.gen_range(1..=50)) })
        .collect();
    TropPoint::canonicalize(raw).unwrap()
}

/// Brute-force vertex test: `p` is a vertex of `tconv(set)` iff some closed
/// sector at `p` contains no other point of the set.
pub fn is_vertex(p: &AffinePoint2, set: &[AffinePoint2]) -> bool {
    let (mut quad, mut left, mut bottom) = (false, false, false);
    for z in set.iter().filter(|z| *z != p) {
        let dx = &z.x - &p.x;
        let dy = &z.y - &p.y;
        let zero = rat(0);
        quad |= dx >= zero && dy >= zero;
        left |= dx <= zero && dy >= dx;
        bottom |= dy <= zero && dy <= dx;
    }
    !(quad && left && bottom)
}
