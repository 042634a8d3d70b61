//! Command results, printable as plain text or JSON.
//!
//! Every report is a struct so that JSON field order is fixed by declaration.
//! Rationals are written as strings (`"-3/2"`), points as arrays of them.

use std::fmt::Write;

use serde::Serialize;
use tropconv::{Halfspace, Rat, TropPoint};

use crate::error::exit;
use crate::input::Mode;

pub type Coords = Vec<String>;

pub fn rat(r: &Rat) -> String {
    r.to_string()
}

/// A point in the coordinates selected by `mode`.
pub fn coords(p: &TropPoint, mode: Mode) -> Coords {
    match mode {
        Mode::Projective => p.coords().iter().map(rat).collect(),
        Mode::Affine => p.affine_chart().iter().map(rat).collect(),
    }
}

fn line(c: &[String]) -> String {
    c.join(" ")
}

pub trait Report: Serialize {
    fn plain(&self) -> String;

    fn exit_code(&self) -> i32 {
        exit::OK
    }
}

#[derive(Debug, Serialize)]
pub struct HullStatsReport {
    pub comparisons: u64,
    pub tau_evals: u64,
    pub rounds: u32,
}

#[derive(Debug, Serialize)]
pub struct HullReport {
    pub command: &'static str,
    pub algorithm: &'static str,
    pub vertices: Vec<Coords>,
    pub vertex_indices: Vec<usize>,
    pub stats: HullStatsReport,
}

impl Report for HullReport {
    fn plain(&self) -> String {
        self.vertices.iter().map(|v| line(v) + "\n").collect()
    }
}

#[derive(Debug, Serialize)]
pub struct VerticesReport {
    pub command: &'static str,
    pub dimension: usize,
    pub vertices: Vec<Coords>,
    pub indices: Vec<usize>,
}

impl Report for VerticesReport {
    fn plain(&self) -> String {
        self.vertices.iter().map(|v| line(v) + "\n").collect()
    }
}

#[derive(Debug, Serialize)]
pub struct ContainsReport {
    pub command: &'static str,
    pub point: Coords,
    pub member: bool,
    pub coefficients: Option<Vec<String>>,
    pub witnesses: Option<Vec<usize>>,
    pub missing_sector: Option<usize>,
}

impl Report for ContainsReport {
    fn plain(&self) -> String {
        let mut out = String::new();
        if self.member {
            writeln!(out, "member").unwrap();
            if let Some(c) = &self.coefficients {
                writeln!(out, "coefficients: {}", line(c)).unwrap();
            }
            if let Some(w) = &self.witnesses {
                let w: Vec<String> = w.iter().map(ToString::to_string).collect();
                writeln!(out, "witnesses: {}", line(&w)).unwrap();
            }
        } else {
            writeln!(out, "not a member").unwrap();
            if let Some(k) = self.missing_sector {
                writeln!(out, "missing sector: {k}").unwrap();
            }
        }
        out
    }

    fn exit_code(&self) -> i32 {
        if self.member {
            exit::OK
        } else {
            exit::NEGATIVE
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HalfspaceReport {
    pub apex: Coords,
    pub sectors: Vec<usize>,
}

impl HalfspaceReport {
    pub fn new(h: &Halfspace, mode: Mode) -> Self {
        HalfspaceReport {
            apex: coords(&h.apex, mode),
            sectors: h.indices().iter().copied().collect(),
        }
    }

    fn plain(&self) -> String {
        let k: Vec<String> = self.sectors.iter().map(ToString::to_string).collect();
        format!("apex: {}  sectors: {}", line(&self.apex), line(&k))
    }
}

#[derive(Debug, Serialize)]
pub struct SeparateReport {
    pub command: &'static str,
    pub point: Coords,
    pub halfspace: HalfspaceReport,
}

impl Report for SeparateReport {
    fn plain(&self) -> String {
        self.halfspace.plain() + "\n"
    }
}

#[derive(Debug, Serialize)]
pub struct TdetReport {
    pub command: &'static str,
    pub size: usize,
    pub value: String,
    pub singular: bool,
    /// Sign of the determinant (0 when singular).
    pub sign: i8,
}

impl Report for TdetReport {
    fn plain(&self) -> String {
        if self.command == "tsgn" {
            format!("value: {}\nsign: {:+}\n", self.value, self.sign)
        } else {
            format!("value: {}\nsingular: {}\n", self.value, self.singular)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TauReport {
    pub command: &'static str,
    pub point: Coords,
    pub tau: i8,
    pub tau_closure: i8,
}

impl Report for TauReport {
    fn plain(&self) -> String {
        format!("tau: {:+}\ntau_closure: {:+}\n", self.tau, self.tau_closure)
    }
}

#[derive(Debug, Serialize)]
pub struct HalfspacesReport {
    pub command: &'static str,
    pub halfspaces: Vec<HalfspaceReport>,
    /// Set when the polygon is not full-dimensional.
    pub warning: Option<WarningReport>,
}

#[derive(Debug, Serialize)]
pub struct WarningReport {
    pub message: String,
    pub witness: HalfspaceReport,
}

impl Report for HalfspacesReport {
    fn plain(&self) -> String {
        self.halfspaces.iter().map(|h| h.plain() + "\n").collect()
    }
}

#[derive(Debug, Serialize)]
pub struct PointsReport {
    pub command: &'static str,
    pub points: Vec<Coords>,
}

impl Report for PointsReport {
    fn plain(&self) -> String {
        self.points.iter().map(|v| line(v) + "\n").collect()
    }
}

#[derive(Debug, Serialize)]
pub struct FacetReport {
    pub from: Coords,
    pub to: Coords,
    /// The segment as a polyline, endpoints included.
    pub breakpoints: Vec<Coords>,
}

#[derive(Debug, Serialize)]
pub struct FacetsReport {
    pub command: &'static str,
    pub facets: Vec<FacetReport>,
    pub f_vector: Vec<usize>,
}

impl Report for FacetsReport {
    fn plain(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            writeln!(out, "{} -> {}", line(&f.from), line(&f.to)).unwrap();
        }
        let fv: Vec<String> = self.f_vector.iter().map(ToString::to_string).collect();
        writeln!(out, "f-vector: {}", line(&fv)).unwrap();
        out
    }
}

#[derive(Debug, Serialize)]
pub struct GenReport {
    pub command: &'static str,
    pub family: &'static str,
    pub dimension: usize,
    pub k: Option<usize>,
    pub points: Vec<Coords>,
    /// Plain output is a point file that the other commands read back.
    #[serde(skip)]
    pub file: String,
}

impl Report for GenReport {
    fn plain(&self) -> String {
        self.file.clone()
    }
}

#[derive(Debug, Serialize)]
pub struct RenderReport {
    pub command: &'static str,
    pub out: String,
    pub bytes: usize,
    pub vertices: usize,
    pub facets: usize,
}

impl Report for RenderReport {
    fn plain(&self) -> String {
        format!("wrote {} ({} bytes)\n", self.out, self.bytes)
    }
}

#[derive(Debug, Serialize)]
pub struct TrialReport {
    pub trial: usize,
    pub seed: u64,
    pub algorithm: &'static str,
    pub n: usize,
    pub vertices: usize,
    pub comparisons: u64,
    pub tau_evals: u64,
    pub rounds: u32,
    /// Wall-clock time; omitted with `--no-timing`.
    pub millis: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct BenchReport {
    pub command: &'static str,
    pub workload: &'static str,
    pub trials: Vec<TrialReport>,
}

impl Report for BenchReport {
    fn plain(&self) -> String {
        let mut out = String::new();
        writeln!(out, "trial seed algorithm n vertices comparisons tau_evals rounds millis").unwrap();
        for t in &self.trials {
            let ms = t.millis.map_or("-".to_string(), |m| format!("{m:.3}"));
            writeln!(
                out,
                "{} {} {} {} {} {} {} {} {}",
                t.trial, t.seed, t.algorithm, t.n, t.vertices, t.comparisons, t.tau_evals, t.rounds, ms
            )
            .unwrap();
        }
        out
    }
}
