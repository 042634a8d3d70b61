//! Scalar types.
//!
//! Everything user-facing runs on [`Rat`], an arbitrary-precision rational.
//! The 2D hull algorithms are generic over [`Scalar`] so the benchmark path can
//! instantiate them with [`Fast`] (an inexact, totally ordered `f64`).

use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use ordered_float::OrderedFloat;

/// Exact rational number; always normalized, compared without tolerance.
pub type Rat = BigRational;

/// Double-precision coordinate for benchmarks. Not exact.
pub type Fast = OrderedFloat<f64>;

/// Totally ordered additive group; the only structure min-plus arithmetic needs.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Zero + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + Ord + Hash + Debug + Zero + Add<Output = T> + Sub<Output = T> + Neg<Output = T>
{
}

/// Tropical addition: `λ ⊕ μ = min(λ, μ)`.
pub fn trop_add<T: Scalar>(a: T, b: T) -> T {
    std::cmp::min(a, b)
}

/// Tropical multiplication: `λ ⊙ μ = λ + μ`.
pub fn trop_mul<T: Scalar>(a: T, b: T) -> T {
    a + b
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}
