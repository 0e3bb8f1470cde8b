//! Exact dual-connection geometry on frame-presented manifolds.
//!
//! A manifold is presented by a finite frame with a constant metric,
//! polynomial structure constants, and polynomial connection coefficients
//! over a declared parameter ring. On such presentations the engine
//! computes curvature, Ricci and scalar curvature, statistical curvature,
//! Lie derivatives, solitons, and adapted-submanifold invariants — all in
//! exact arithmetic — and adjudicates a built-in catalog of claims, with a
//! numerical coordinate-chart oracle as an independent cross-check.

pub mod audit;
pub mod cli;
pub mod dsl;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod soliton;
pub mod submanifold;
pub mod structures;

pub use error::{Error, Result};
