//! Membership certificates, vertex sets and separating halfspaces in any
//! dimension.
//!
//! A point `x` lies in `tconv(G)` iff every closed sector `x + S̄_k` contains a
//! generator. Members come with coefficients `λ_i = max_k (x_k − g_ik)`, for
//! which `⊕ λ_i ⊙ g_i = x`; non-members come with an empty sector.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Result, TropError};
use crate::halfspace::{argmin_set, Halfspace};
use crate::point::TropPoint;
use crate::scalar::Rat;

/// Evidence for or against membership in a tropical polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipCertificate {
    Member {
        /// `λ_i` with `⊕ λ_i ⊙ g_i = x`, one per generator.
        coefficients: Vec<Rat>,
        /// For each sector `k`, the first generator lying in `x + S̄_k`.
        witnesses: Vec<usize>,
    },
    NonMember {
        /// The smallest `k` with `x + S̄_k` free of generators.
        missing_sector: usize,
    },
}

impl MembershipCertificate {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipCertificate::Member { .. })
    }
}

/// The tropical convex hull of a non-empty list of generators.
#[derive(Debug)]
pub struct Polytope {
    generators: Vec<TropPoint>,
    vertices: OnceLock<Vec<TropPoint>>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        Polytope {
            generators: self.generators.clone(),
            vertices: self.vertices.clone(),
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for Polytope {}

impl Polytope {
    pub fn new(generators: Vec<TropPoint>) -> Result<Self> {
        let first = generators.first().ok_or(TropError::Empty)?;
        for g in &generators[1..] {
            first.check_dim(g)?;
        }
        Ok(Polytope {
            generators,
            vertices: OnceLock::new(),
        })
    }

    pub fn generators(&self) -> &[TropPoint] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    /// Decides `x ∈ tconv(generators)` in `O(n·d)` comparisons.
    pub fn contains(&self, x: &TropPoint) -> Result<MembershipCertificate> {
        certificate(&self.generators, x)
    }

    /// Certificates for many query points, evaluated in parallel.
    pub fn contains_many(&self, xs: &[TropPoint]) -> Result<Vec<MembershipCertificate>> {
        xs.par_iter().map(|x| self.contains(x)).collect()
    }

    /// The unique minimal generating set, in first-occurrence order.
    pub fn vertices(&self) -> &[TropPoint] {
        self.vertices.get_or_init(|| minimal_generators(&self.generators))
    }

    /// A closed halfspace containing every generator but not `x`.
    pub fn separate(&self, x: &TropPoint) -> Result<Halfspace> {
        let k = match self.contains(x)? {
            MembershipCertificate::NonMember { missing_sector } => missing_sector,
            MembershipCertificate::Member { .. } => {
                return Err(TropError::Precondition(format!(
                    "{x} lies in the polytope and cannot be separated"
                )))
            }
        };
        // Shifting the apex by ε along e_k keeps x + εe_k + S̄_k clear of a
        // generator g as long as ε < (g − x)_k − min_{j≠k} (g − x)_j.
        let slack = self
            .generators
            .iter()
            .map(|g| {
                let y = g.diff(x).expect("dimensions checked by contains");
                let others = y
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, v)| v)
                    .min()
                    .expect("d >= 1");
                &y[k] - others
            })
            .min()
            .expect("non-empty polytope");
        let mut raw = x.coords().to_vec();
        raw[k] += slack / Rat::from_integer(2.into());
        let apex = TropPoint::canonicalize(raw)?;
        Halfspace::closed(apex, (0..=self.dim()).filter(|&j| j != k))
    }
}

pub fn contains(p: &Polytope, x: &TropPoint) -> Result<MembershipCertificate> {
    p.contains(x)
}

pub fn vertex_set(p: &Polytope) -> Vec<TropPoint> {
    p.vertices().to_vec()
}

pub fn separate(p: &Polytope, x: &TropPoint) -> Result<Halfspace> {
    p.separate(x)
}

/// Certificate for `x` against a generator slice.
pub fn certificate(generators: &[TropPoint], x: &TropPoint) -> Result<MembershipCertificate> {
    let n = x.dim() + 1;
    let mut witnesses: Vec<Option<usize>> = vec![None; n];
    for (i, g) in generators.iter().enumerate() {
        for k in argmin_set(g, x)? {
            witnesses[k].get_or_insert(i);
        }
    }
    if let Some(missing_sector) = witnesses.iter().position(Option::is_none) {
        return Ok(MembershipCertificate::NonMember { missing_sector });
    }
    let coefficients: Vec<Rat> = generators
        .iter()
        .map(|g| {
            x.coords()
                .iter()
                .zip(g.coords())
                .map(|(a, b)| a - b)
                .max()
                .expect("d >= 1")
        })
        .collect();
    debug_assert_eq!(
        combine(generators, &coefficients).as_ref(),
        Some(x),
        "membership coefficients must reproduce the point"
    );
    Ok(MembershipCertificate::Member {
        coefficients,
        witnesses: witnesses.into_iter().map(|w| w.expect("all sectors covered")).collect(),
    })
}

/// `⊕ λ_i ⊙ g_i`, canonicalized; `None` for empty input.
pub fn combine(generators: &[TropPoint], coefficients: &[Rat]) -> Option<TropPoint> {
    let n = generators.first()?.dim() + 1;
    let raw: Vec<Rat> = (0..n)
        .map(|j| {
            generators
                .iter()
                .zip(coefficients)
                .map(|(g, l)| l + &g.coords()[j])
                .min()
                .expect("non-empty")
        })
        .collect();
    TropPoint::canonicalize(raw).ok()
}

fn minimal_generators(generators: &[TropPoint]) -> Vec<TropPoint> {
    let mut unique: Vec<TropPoint> = Vec::with_capacity(generators.len());
    for g in generators {
        if !unique.contains(g) {
            unique.push(g.clone());
        }
    }
    (0..unique.len())
        .filter(|&i| {
            let others: Vec<TropPoint> = unique
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            others.is_empty()
                || !certificate(&others, &unique[i])
                    .expect("equal dimensions")
                    .is_member()
        })
        .map(|i| unique[i].clone())
        .collect()
}
