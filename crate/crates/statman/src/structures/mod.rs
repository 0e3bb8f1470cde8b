//! Almost contact metric and Kenmotsu statistical structures, the
//! warped-product constructor, and the curvature-identity audits.

mod audits;
mod contact;
mod kenmotsu;
mod warp;

pub use audits::*;
pub use contact::{check_almost_contact, AlmostContactReport, ContactTriple};
pub use kenmotsu::{
    apply_k, check_kenmotsu_statistical, decompose_k, xi_difference_coefficient, KDecomposition,
    KDecompositionReport, KenmotsuReport,
};
pub use warp::{warp_kenmotsu, HolomorphicBase, WarpOutcome};
