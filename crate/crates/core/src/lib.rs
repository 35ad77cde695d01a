//! Hyperbolic numbers and fuzzy sets with hyperbolic-valued membership grades.
//!
//! A hyperbolic number is `x + y*k` with `k*k = 1`. In the idempotent basis
//! `e1 = (1+k)/2`, `e2 = (1-k)/2` every such number is `u*e1 + v*e2` and
//! addition, multiplication, modulus and the componentwise partial order are
//! all one-line operations on the pair `(u, v)`.
//!
//! On top of [`Hyp`] this crate builds fuzzy sets over finite universes whose
//! membership function takes values in the hyperbolic unit interval
//! (both components in `[0, 1]`): the full pointwise set calculus
//! ([`set`]), alpha-cuts, convexity analysis, cores, shadows and hyperplane
//! separation ([`convex`]), seeded generators and brute-force oracles for
//! every algebraic law ([`testkit`], [`suites`]), and a JSON document format
//! ([`document`]) shared by the CLI and the browser demo.

pub mod convex;
pub mod document;
mod error;
mod fmt;
pub mod hyp;
pub mod interval;
pub mod set;
pub mod suites;
pub mod testkit;

pub use error::{Error, Result};
pub use fmt::format_sig;
pub use hyp::{d_metric, point_norm, Hyp, HypClass, OrderMode};
pub use interval::{Degeneracy, DInterval, IntervalKind};
pub use set::{DFuzzySet, OrdinaryFuzzySet, SubsetVerdict, Universe};
