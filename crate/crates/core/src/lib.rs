//! Exact A_α characteristic polynomials of graphs and graph operations.
//!
//! For a simple graph `G` with degree matrix `D` and adjacency matrix `A`,
//! `A_α(G) = αD + (1−α)A`. This crate computes `det(λI − A_α(G))` as an
//! exact element of ℚ[α][λ], both by brute force ([`charpoly`]) and through
//! closed forms for graph operations ([`closed_forms`]), and cross-checks
//! them numerically ([`verify`]).

pub mod charpoly;
pub mod closed_forms;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod ops;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{family_generate, FamilySpec, Graph};
pub use poly::{AlphaPoly, BiPoly, FactoredSpectrum, Rational};
