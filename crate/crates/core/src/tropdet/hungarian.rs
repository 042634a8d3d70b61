//! Assignment solver for matrices above the enumeration threshold.
//!
//! The shortest-augmenting-path Hungarian method yields an optimal permutation
//! together with dual potentials `u`, `v` satisfying `m_ij − u_i − v_j ≥ 0`,
//! with equality on the matching. Singularity is decided by forbidding each
//! matched edge in turn and re-solving: the optimum is attained twice iff one
//! of these restricted problems reaches it again. For τ̄ the optimal
//! permutations are exactly the perfect matchings of the tight edges
//! (reduced cost zero), which are enumerated until both parities have shown up.

use super::{permutation_sign, Optima, Parities, TdetResult, TropMatrix};
use crate::scalar::Rat;

struct Assignment {
    perm: Vec<usize>,
    value: Rat,
    u: Vec<Rat>,
    v: Vec<Rat>,
}

/// Minimum-cost perfect matching avoiding the `forbidden` edge, if any exists.
fn assign(m: &TropMatrix, forbidden: Option<(usize, usize)>) -> Option<Assignment> {
    let n = m.size();
    let zero = Rat::from_integer(0.into());
    let cost = |i: usize, j: usize| -> Option<&Rat> {
        (forbidden != Some((i - 1, j - 1))).then(|| m.get(i - 1, j - 1))
    };
    // 1-based rows and columns; column 0 is the virtual root of each search.
    let mut u = vec![zero.clone(); n + 1];
    let mut v = vec![zero.clone(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<Rat>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rat> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if let Some(c) = cost(i0, j) {
                    let cur = c - &u[i0] - &v[j];
                    if minv[j].as_ref().is_none_or(|mv| cur < *mv) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(mv) = &minv[j] {
                    if delta.as_ref().is_none_or(|d| mv < d) {
                        delta = Some(mv.clone());
                        j1 = j;
                    }
                }
            }
            let delta = delta?;
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(mv) = &mut minv[j] {
                    *mv -= &delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut perm = vec![0; n];
    for j in 1..=n {
        perm[p[j] - 1] = j - 1;
    }
    let value = m.permutation_value(&perm);
    Some(Assignment {
        perm,
        value,
        u: u[1..].to_vec(),
        v: v[1..].to_vec(),
    })
}

pub(super) fn solve(m: &TropMatrix, with_parities: bool) -> TdetResult {
    let best = assign(m, None).expect("a complete bipartite graph has a perfect matching");
    let multiple = best.perm.iter().enumerate().any(|(i, &j)| {
        assign(m, Some((i, j))).is_some_and(|alt| alt.value == best.value)
    });
    let optimal_parities = if with_parities && multiple {
        tight_parities(m, &best)
    } else {
        Parities::of(permutation_sign(&best.perm))
    };
    TdetResult {
        value: best.value,
        optimal_parities,
        optima: if multiple {
            Optima::Multiple
        } else {
            Optima::Unique
        },
        witness: best.perm,
    }
}

fn tight_parities(m: &TropMatrix, best: &Assignment) -> Parities {
    let n = m.size();
    let tight: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m.get(i, j) - &best.u[i] - &best.v[j] == Rat::from_integer(0.into()))
                .collect()
        })
        .collect();
    let mut search = MatchingSearch {
        tight: &tight,
        used: vec![false; n],
        found: Parities::default(),
    };
    search.descend(0, false);
    search.found
}

struct MatchingSearch<'a> {
    tight: &'a [Vec<bool>],
    used: Vec<bool>,
    found: Parities,
}

impl MatchingSearch<'_> {
    fn done(&self) -> bool {
        self.found.even && self.found.odd
    }

    /// Assigns rows `row..n`; `odd` is the inversion parity so far.
    fn descend(&mut self, row: usize, odd: bool) {
        let n = self.tight.len();
        if row == n {
            if odd {
                self.found.odd = true;
            } else {
                self.found.even = true;
            }
            return;
        }
        for col in 0..n {
            if self.done() {
                return;
            }
            if self.used[col] || !self.tight[row][col] {
                continue;
            }
            self.used[col] = true;
            if self.completable(row + 1) {
                let above = self.used[col + 1..].iter().filter(|&&u| u).count() % 2 == 1;
                self.descend(row + 1, odd ^ above);
            }
            self.used[col] = false;
        }
    }

    /// Whether rows `row..n` can still be matched into the unused columns.
    fn completable(&self, row: usize) -> bool {
        let n = self.tight.len();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        (row..n).all(|r| {
            let mut visited = vec![false; n];
            self.augment(r, &mut owner, &mut visited)
        })
    }

    fn augment(&self, r: usize, owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
        for c in 0..self.tight.len() {
            if self.used[c] || visited[c] || !self.tight[r][c] {
                continue;
            }
            visited[c] = true;
            if owner[c].is_none_or(|o| self.augment(o, owner, visited)) {
                owner[c] = Some(r);
                return true;
            }
        }
        false
    }
}
