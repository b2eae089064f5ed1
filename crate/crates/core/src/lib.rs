#![forbid(unsafe_code)]

//! Exact tools for integer-distance plane configurations.
//!
//! The crate enumerates, classifies and verifies labeled quadrilaterals (and
//! small n-point sets) whose pairwise distances are all natural numbers,
//! with a focus on configurations containing a prescribed distance k.
//! Everything is computed in exact arithmetic: arbitrary-precision rationals,
//! quadratic surds `a + b*sqrt(s)`, Cayley-Menger planarity predicates and
//! exact orientation tests. Floating point is never consulted.
//!
//! Modules:
//! - [`exact`]: scalar types ([`exact::Rat`], [`exact::Surd`]) and the
//!   geometric predicates (`cm3`, `cm4`, `embed`, exact signs).
//! - [`model`]: labeled six-distance records, canonical forms, shape
//!   classification and shape-flag predicates.
//! - [`triangles`]: third-side windows and triangle enumeration.
//! - [`pell`]: Pell equation machinery (`x^2 - D*y^2 = 1`).
//! - [`search`]: bounded exhaustive searches and the claim registry.

pub mod exact;
pub mod model;
pub mod pell;
pub mod search;
pub mod triangles;
