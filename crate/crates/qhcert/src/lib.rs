//! Exact reconstruction of the small quantum cohomology ring of IG(2,6),
//! bootstrap of its one-parameter deformation, and machine-checkable
//! certification that the deformed algebra is generically semisimple.
//!
//! Everything is exact: big rationals, polynomials in the quantum parameter
//! `q`, and truncated power series in the deformation parameter `t` with
//! explicit precision tracking. No floating point anywhere.

pub mod algebra;
pub mod deform;
pub mod ig26;
pub mod matrix;
pub mod qpoly;
pub mod rational;
pub mod ring;
pub mod series;
pub mod xpoly;

pub use algebra::{AlgebraSpec, BasisLabel, VerifyReport, Violation};
pub use matrix::Mat;
pub use qpoly::QPoly;
pub use rational::Rat;
pub use series::{TSeries, Valuation, ORDER_INF};
pub use xpoly::XPoly;
