//! Exact arithmetic in ℚ, ℚ[α] and ℚ[α][λ].

pub mod bi;
pub mod factored;
pub mod rational;
pub mod text;
pub mod uni;

pub use bi::{alpha, konst, lam, BiPoly};
pub use factored::FactoredSpectrum;
pub use rational::{int, parse_rational, rat, to_f64, Rational};
pub use text::{parse_alpha_poly, parse_bipoly};
pub use uni::{AlphaPoly, UniPoly};
