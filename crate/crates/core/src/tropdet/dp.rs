//! Exact assignment by dynamic programming over subsets of used columns.
//!
//! Row `i` is assigned when exactly `i` columns are used, so a state is just
//! the column mask. Every optimal permutation restricts to an optimal partial
//! assignment of its first rows, which lets each state keep only its optimum,
//! the number of optimal partial assignments (capped at two) and their
//! parities. Giving row `i` column `j` adds one inversion for every already
//! used column greater than `j`.

use super::{Optima, Parities, TdetResult, TropMatrix};
use crate::scalar::Rat;

#[derive(Clone)]
struct State {
    value: Rat,
    count: u8,
    parities: Parities,
    /// Column taken by the last row on the first optimal path found.
    last: usize,
}

pub(super) fn solve(m: &TropMatrix) -> TdetResult {
    let n = m.size();
    let full = (1usize << n) - 1;
    let mut table: Vec<Option<State>> = vec![None; 1 << n];
    table[0] = Some(State {
        value: Rat::from_integer(0.into()),
        count: 1,
        parities: Parities {
            even: true,
            odd: false,
        },
        last: usize::MAX,
    });
    for mask in 0..full {
        let Some(state) = table[mask].clone() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        for col in (0..n).filter(|c| mask & (1 << c) == 0) {
            let above = (mask >> (col + 1)).count_ones() % 2 == 1;
            let value = &state.value + m.get(row, col);
            let parities = state.parities.flipped(above);
            let next = &mut table[mask | (1 << col)];
            match next {
                Some(cur) if value > cur.value => {}
                Some(cur) if value == cur.value => {
                    cur.count = (cur.count + state.count).min(2);
                    cur.parities = cur.parities.union(parities);
                }
                _ => {
                    *next = Some(State {
                        value,
                        count: state.count,
                        parities,
                        last: col,
                    })
                }
            }
        }
    }
    let end = table[full].clone().expect("every mask is reachable");
    let mut witness = vec![0; n];
    let mut mask = full;
    for row in (0..n).rev() {
        let col = table[mask].as_ref().expect("on an optimal path").last;
        witness[row] = col;
        mask &= !(1 << col);
    }
    TdetResult {
        value: end.value,
        optimal_parities: end.parities,
        optima: if end.count >= 2 {
            Optima::Multiple
        } else {
            Optima::Unique
        },
        witness,
    }
}
