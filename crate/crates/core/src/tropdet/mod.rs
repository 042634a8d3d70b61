//! Tropical determinant, tropical sign, and the orientation predicates τ and τ̄.
//!
//! Matrices of size up to [`TdetConfig::enum_limit`] are solved exactly by a
//! dynamic program over subsets of used columns, which tracks the optimum, the
//! number of optimal permutations and their parities. Larger matrices go
//! through a Hungarian assignment solver.

mod dp;
mod hungarian;
mod indicator;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Result, TropError};
use crate::point::TropPoint;
use crate::scalar::{Rat, Scalar};

pub use indicator::sector_indicator_points;

/// Environment variable overriding the default enumeration threshold.
pub const ENUM_LIMIT_VAR: &str = "TROPCONV_ENUM_LIMIT";

/// Default matrix size up to which the exact subset program is used.
pub const DEFAULT_ENUM_LIMIT: usize = 8;

/// Largest size the subset program accepts; its table has `2^n` entries.
const MAX_ENUM_LIMIT: usize = 20;

/// A sign in `{−1, 0, +1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Negative => write!(f, "-1"),
            Sign::Zero => write!(f, "0"),
            Sign::Positive => write!(f, "1"),
        }
    }
}

/// Which parities occur among a set of permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Parities {
    pub even: bool,
    pub odd: bool,
}

impl Parities {
    fn of(sign: Sign) -> Self {
        Parities {
            even: sign == Sign::Positive,
            odd: sign == Sign::Negative,
        }
    }

    fn union(self, other: Parities) -> Self {
        Parities {
            even: self.even || other.even,
            odd: self.odd || other.odd,
        }
    }

    fn flipped(self, flip: bool) -> Self {
        if flip {
            Parities {
                even: self.odd,
                odd: self.even,
            }
        } else {
            self
        }
    }

    /// `+1` if only even, `−1` if only odd, `0` if both (or none).
    pub fn sign(self) -> Sign {
        match (self.even, self.odd) {
            (true, false) => Sign::Positive,
            (false, true) => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

/// Solver settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TdetConfig {
    /// Matrices with at most this many rows use the exact subset program.
    pub enum_limit: usize,
}

impl Default for TdetConfig {
    fn default() -> Self {
        TdetConfig {
            enum_limit: DEFAULT_ENUM_LIMIT,
        }
    }
}

impl TdetConfig {
    /// Reads [`ENUM_LIMIT_VAR`]; unparsable values fall back to the default.
    pub fn from_env() -> Self {
        let enum_limit = match std::env::var(ENUM_LIMIT_VAR) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(n) => n.min(MAX_ENUM_LIMIT),
                Err(_) => {
                    log::warn!("ignoring {ENUM_LIMIT_VAR}={v:?}: not a non-negative integer");
                    DEFAULT_ENUM_LIMIT
                }
            },
            Err(_) => DEFAULT_ENUM_LIMIT,
        };
        TdetConfig { enum_limit }
    }

    /// The process-wide configuration, read from the environment once.
    pub fn global() -> TdetConfig {
        static CONFIG: OnceLock<TdetConfig> = OnceLock::new();
        *CONFIG.get_or_init(TdetConfig::from_env)
    }
}

/// A square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    n: usize,
    entries: Vec<Rat>,
}

impl TropMatrix {
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(TropError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(TropError::NotSquare {
                    rows: n,
                    row: i,
                    len: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(TropMatrix { n, entries })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::scalar::rat(v)).collect())
                .collect(),
        )
    }

    /// The matrix whose rows are the canonical coordinates of `points`.
    pub fn from_points<'a>(points: impl IntoIterator<Item = &'a TropPoint>) -> Result<Self> {
        Self::new(points.into_iter().map(|p| p.coords().to_vec()).collect())
    }

    /// The matrix whose rows are the representatives `(0, ξ_1 − ξ_0, …)` of
    /// `points`. The sign is the same as for [`TropMatrix::from_points`]; the
    /// value differs by `Σ ξ_0`.
    pub fn from_chart_points<'a>(points: impl IntoIterator<Item = &'a TropPoint>) -> Result<Self> {
        Self::new(
            points
                .into_iter()
                .map(|p| std::iter::once(Rat::from_integer(0.into())).chain(p.affine_chart()).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rat]> {
        self.entries.chunks(self.n)
    }

    pub fn transpose(&self) -> TropMatrix {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        TropMatrix { n, entries }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.entries.swap(i * self.n + a, i * self.n + b);
        }
    }

    /// Adds `c` to every entry of row `i`.
    pub fn shift_row(&mut self, i: usize, c: &Rat) {
        for j in 0..self.n {
            self.entries[i * self.n + j] += c;
        }
    }

    /// `Σ_i m_{i,σ(i)}`.
    pub fn permutation_value(&self, perm: &[usize]) -> Rat {
        perm.iter().enumerate().map(|(i, &j)| self.get(i, j)).sum()
    }
}

/// Whether the optimum is attained once or several times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Optima {
    Unique,
    Multiple,
}

/// Everything the solvers know about the optimal assignments of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdetResult {
    /// `min_σ Σ_i m_{i,σ(i)}`.
    pub value: Rat,
    /// Parities of all optimal permutations. Only computed when requested;
    /// otherwise it holds the parity of the witness alone.
    pub optimal_parities: Parities,
    pub optima: Optima,
    /// One optimal permutation, `witness[i] = σ(i)`.
    pub witness: Vec<usize>,
}

impl TdetResult {
    pub fn is_singular(&self) -> bool {
        self.optima == Optima::Multiple
    }

    pub fn tsgn(&self) -> Sign {
        match self.optima {
            Optima::Multiple => Sign::Zero,
            Optima::Unique => permutation_sign(&self.witness),
        }
    }
}

/// Sign of a permutation from the parity of its cycle decomposition.
pub fn permutation_sign(perm: &[usize]) -> Sign {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    if odd {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// Solves the assignment problem; `with_parities` also collects the parity
/// set of all optimal permutations.
pub fn solve(m: &TropMatrix, config: TdetConfig, with_parities: bool) -> TdetResult {
    if m.size() <= config.enum_limit.min(MAX_ENUM_LIMIT) {
        dp::solve(m)
    } else {
        hungarian::solve(m, with_parities)
    }
}

pub fn tdet(m: &TropMatrix) -> Rat {
    solve(m, TdetConfig::global(), false).value
}

pub fn is_singular(m: &TropMatrix) -> bool {
    solve(m, TdetConfig::global(), false).is_singular()
}

pub fn tsgn(m: &TropMatrix) -> Sign {
    solve(m, TdetConfig::global(), false).tsgn()
}

fn orientation_matrix(points: &[TropPoint], x: &TropPoint) -> Result<TropMatrix> {
    let d = x.dim();
    if points.len() != d {
        return Err(TropError::Precondition(format!(
            "orientation in TP^{d} needs {d} points, got {}",
            points.len()
        )));
    }
    for p in points {
        x.check_dim(p)?;
    }
    TropMatrix::from_points(std::iter::once(x).chain(points))
}

/// `τ(x) = tsgn(x, p_1, …, p_d)`.
pub fn tau(points: &[TropPoint], x: &TropPoint) -> Result<Sign> {
    Ok(tsgn(&orientation_matrix(points, x)?))
}

/// `τ̄(x)`: `+1` if every optimal permutation of `(x, p_1, …, p_d)` is even,
/// `−1` if every one is odd, `0` otherwise.
pub fn tau_closure(points: &[TropPoint], x: &TropPoint) -> Result<Sign> {
    let m = orientation_matrix(points, x)?;
    Ok(solve(&m, TdetConfig::global(), true).optimal_parities.sign())
}

/// `τ̄` of a 3×3 matrix by direct enumeration of the six permutations.
/// Generic so the planar hull code can run on exact or floating coordinates.
pub fn tau_closure3<T: Scalar>(m: &[[T; 3]; 3]) -> Sign {
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], true),
        ([1, 2, 0], true),
        ([2, 0, 1], true),
        ([0, 2, 1], false),
        ([2, 1, 0], false),
        ([1, 0, 2], false),
    ];
    let mut best: Option<T> = None;
    let mut parities = Parities::default();
    for (p, even) in PERMS {
        let v = m[0][p[0]].clone() + m[1][p[1]].clone() + m[2][p[2]].clone();
        let here = Parities {
            even,
            odd: !even,
        };
        match &best {
            Some(b) if v > *b => {}
            Some(b) if v == *b => parities = parities.union(here),
            _ => {
                best = Some(v);
                parities = here;
            }
        }
    }
    parities.sign()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn m(rows: &[&[i64]]) -> TropMatrix {
        TropMatrix::from_ints(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn neg_unit_rows(n: usize) -> TropMatrix {
        TropMatrix::from_ints(
            &(0..n)
                .map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(tdet(&m(&[&[0, 1], &[1, 0]])), rat(0));
        assert!(is_singular(&m(&[&[0, 0], &[0, 0]])));
        assert!(!is_singular(&m(&[&[0, 1], &[1, 0]])));
        assert_eq!(tsgn(&m(&[&[0, 1], &[1, 0]])), Sign::Positive);
        assert_eq!(tsgn(&m(&[&[1, 0], &[0, 1]])), Sign::Negative);
        assert!(is_singular(&m(&[&[1, 2, 3], &[1, 2, 3], &[0, 5, 1]])));
    }

    #[test]
    fn negative_unit_vectors() {
        for n in 2..=11 {
            let r = neg_unit_rows(n);
            assert_eq!(tdet(&r), rat(-(n as i64)));
            assert_eq!(tsgn(&r), Sign::Positive);
        }
    }

    #[test]
    fn both_solvers_agree() {
        let a = m(&[&[3, -1, 4, 1], &[5, 9, -2, 6], &[5, 3, 5, -8], &[9, 7, 9, 3]]);
        let exact = solve(&a, TdetConfig { enum_limit: 8 }, true);
        let assign = solve(&a, TdetConfig { enum_limit: 0 }, true);
        assert_eq!(exact.value, assign.value);
        assert_eq!(exact.optima, assign.optima);
        assert_eq!(exact.optimal_parities, assign.optimal_parities);
        assert_eq!(a.permutation_value(&assign.witness), assign.value);
    }

    #[test]
    fn rejects_non_square() {
        let err = TropMatrix::from_ints(&[vec![0, 1], vec![1]]).unwrap_err();
        assert_eq!(err, TropError::NotSquare { rows: 2, row: 1, len: 1 });
        assert_eq!(TropMatrix::new(vec![]), Err(TropError::Empty));
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), Sign::Positive);
        assert_eq!(permutation_sign(&[1, 0, 2]), Sign::Negative);
        assert_eq!(permutation_sign(&[1, 2, 0]), Sign::Positive);
        assert_eq!(permutation_sign(&[1, 2, 3, 0]), Sign::Negative);
    }

    fn tp(v: &[i64]) -> TropPoint {
        TropPoint::from_ints(v).unwrap()
    }

    #[test]
    fn orientation_in_the_plane() {
        let pq = [tp(&[1, 0, 0]), tp(&[0, 1, 0])];
        assert_eq!(tau(&pq, &tp(&[0, 2, 3])).unwrap(), Sign::Positive);
        assert_eq!(tau(&pq, &tp(&[1, 1, 0])).unwrap(), Sign::Negative);
        assert_eq!(tau(&pq, &tp(&[0, 0, 0])).unwrap(), Sign::Zero);
        assert_eq!(tau_closure(&pq, &tp(&[0, 0, 0])).unwrap(), Sign::Zero);
        assert_eq!(tau(&pq, &tp(&[0, 0, 1])).unwrap(), Sign::Zero);
        assert_eq!(tau_closure(&pq, &tp(&[0, 0, 1])).unwrap(), Sign::Positive);
    }

    #[test]
    fn orientation_rejects_wrong_arity() {
        assert!(tau(&[tp(&[0, 1, 0])], &tp(&[0, 0, 0])).is_err());
        assert!(matches!(
            tau(&[tp(&[0, 1, 0]), tp(&[0, 1])], &tp(&[0, 0, 0])),
            Err(TropError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn closure3_matches_general_solver() {
        let a = m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let rows: [[Rat; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| a.get(i, j).clone()));
        assert_eq!(
            tau_closure3(&rows),
            solve(&a, TdetConfig::default(), true).optimal_parities.sign()
        );
    }
}
