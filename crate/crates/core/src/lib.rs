//! Tropical (min-plus) convexity with exact rational arithmetic.
//!
//! * [`point`], [`halfspace`], [`shapes`]: points of `TP^d`, segments,
//!   hyperplanes, sectors, halfspaces and named polytopes.
//! * [`tropdet`]: tropical determinant, sign, and the orientation
//!   predicates `τ` and `τ̄`.
//! * [`membership`]: membership certificates, vertex sets and separation in
//!   any dimension.
//! * [`hull2d`]: planar hull algorithms, pseudovertices, facets and minimal
//!   halfspaces.

pub mod error;
pub mod halfspace;
pub mod hull2d;
pub mod membership;
pub mod point;
pub mod scalar;
pub mod shapes;
pub mod tropdet;

pub use error::{Result, TropError};
pub use halfspace::{Halfspace, Hyperplane, Sector};
pub use hull2d::{
    extreme_markers, facets2d, hull, hull_chan, hull_jarvis, hull_triple_sort, hull_triple_sort_bucketed,
    minimal_halfspaces2d,
    pseudovertices, tangent_binary_search, AffinePoint2, HullAlgorithm, HullResult, HullStats, Markers,
    MinimalHalfspaceSet, PolygonIndex,
};
pub use membership::{MembershipCertificate, Polytope};
pub use point::{segment_breakpoints, segment_eval, trop_dist, trop_norm, TropPoint};
pub use scalar::{rat, ratio, trop_add, trop_mul, Fast, Rat, Scalar};
pub use shapes::{cube, hypersimplex, standard_simplex};
pub use tropdet::{
    is_singular, sector_indicator_points, tau, tau_closure, tdet, tsgn, Sign, TdetConfig, TdetResult, TropMatrix,
};
