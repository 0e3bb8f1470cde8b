//! Warped-product construction of Kenmotsu statistical presentations from
//! holomorphic statistical base data.
//!
//! The base must be abelian (all brackets zero) so the warped structure
//! constants stay ring-constant; the line factor contributes the frame
//! vector ξ with `[e_i, ξ] = e_i` and a metric extended by 1. The
//! difference tensor is assembled blockwise and the statistical
//! connection is the warped Levi-Civita connection plus that tensor.

use super::contact::ContactTriple;
use super::kenmotsu::{check_kenmotsu_statistical, KenmotsuReport};
use crate::error::{Error, Result};
use crate::frame::{dual_connection, levi_civita, Connection, ConnectionRole, FramePresentation, Tensor3, VectorField};
use crate::ring::{Poly, Rational};

/// Even-dimensional abelian base with a complex structure and a base
/// difference tensor.
#[derive(Clone, Debug)]
pub struct HolomorphicBase {
    pub presentation: FramePresentation,
    /// `j_images[i]` is `J(e_i)`.
    pub j_images: Vec<VectorField>,
    pub k_base: Tensor3,
}

impl HolomorphicBase {
    pub fn new(
        presentation: FramePresentation,
        j_images: Vec<VectorField>,
        k_base: Tensor3,
    ) -> Result<Self> {
        let n = presentation.dim();
        if n % 2 != 0 {
            return Err(Error::Dimension(format!(
                "holomorphic base must be even-dimensional, got {n}"
            )));
        }
        if !presentation.brackets().is_zero() {
            return Err(Error::Unsupported(
                "warped construction requires an abelian base frame".into(),
            ));
        }
        if j_images.len() != n || k_base.dim() != n {
            return Err(Error::Dimension("J and K must match the base dimension".into()));
        }
        let ring = presentation.ring().clone();
        // J^2 = -I
        let apply_j = |v: &VectorField| -> VectorField {
            let mut out = VectorField::zero(&ring, n);
            for j in 0..n {
                if v.coeffs[j].is_zero() {
                    continue;
                }
                out = out.add(&j_images[j].scale_poly(&v.coeffs[j]));
            }
            out
        };
        for i in 0..n {
            let jji = apply_j(&j_images[i]);
            if !jji.add(&VectorField::basis(&ring, n, i)).is_zero() {
                return Err(Error::Presentation("J^2 != -I on the base".into()));
            }
        }
        // g(JX, JY) = g(X, Y)
        for i in 0..n {
            for j in 0..n {
                let lhs = presentation.pair(&j_images[i], &j_images[j]);
                let rhs = Poly::constant(&ring, presentation.metric_entry(i, j).clone());
                if !lhs.sub(&rhs).is_zero() {
                    return Err(Error::Presentation("J is not a metric isometry".into()));
                }
            }
        }
        Ok(HolomorphicBase { presentation, j_images, k_base })
    }

    /// Residual of the holomorphic condition `K(E, JF) + J K(E, F) = 0`;
    /// `None` when it holds.
    pub fn holomorphic_violation(&self) -> Option<String> {
        let n = self.presentation.dim();
        let ring = self.presentation.ring();
        let apply_j = |v: &VectorField| -> VectorField {
            let mut out = VectorField::zero(ring, n);
            for j in 0..n {
                if v.coeffs[j].is_zero() {
                    continue;
                }
                out = out.add(&self.j_images[j].scale_poly(&v.coeffs[j]));
            }
            out
        };
        for i in 0..n {
            for j in 0..n {
                let ei = VectorField::basis(ring, n, i);
                let lhs = super::kenmotsu::apply_k(&self.k_base, &ei, &self.j_images[j]);
                let rhs = apply_j(&super::kenmotsu::apply_k(
                    &self.k_base,
                    &ei,
                    &VectorField::basis(ring, n, j),
                ));
                let r = lhs.add(&rhs);
                if !r.is_zero() {
                    return Some(format!(
                        "K(E, JF) + J K(E, F) != 0 at ({}, {}): {}",
                        self.presentation.frame_names()[i],
                        self.presentation.frame_names()[j],
                        r.display(self.presentation.frame_names())
                    ));
                }
            }
        }
        None
    }
}

/// Output of the warped construction, with the Kenmotsu verification run
/// on the result.
#[derive(Clone, Debug)]
pub struct WarpOutcome {
    pub presentation: FramePresentation,
    pub contact: ContactTriple,
    pub kenmotsu: KenmotsuReport,
    /// The violated holomorphic condition, when the base fails it.
    pub holomorphic_violation: Option<String>,
}

/// Builds the `(2s+1)`-dimensional Kenmotsu statistical presentation over
/// an abelian holomorphic base, with `K(ξ,ξ) = β ξ`.
pub fn warp_kenmotsu(base: &HolomorphicBase, beta: &Poly) -> Result<WarpOutcome> {
    let s2 = base.presentation.dim();
    let n = s2 + 1;
    let ring = base.presentation.ring().clone();

    let mut names: Vec<String> = base.presentation.frame_names().to_vec();
    if names.iter().any(|x| x == "xi") {
        return Err(Error::Presentation("base frame already uses the name `xi`".into()));
    }
    names.push("xi".to_string());

    let mut metric: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i < s2 && j < s2 {
                        base.presentation.metric_entry(i, j).clone()
                    } else if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    metric[s2][s2] = Rational::one();

    let mut brackets = Tensor3::zeros(&ring, n);
    for i in 0..s2 {
        brackets.set(i, s2, i, Poly::one(&ring));
        brackets.set(s2, i, i, Poly::int(&ring, -1));
    }

    let mut pres = FramePresentation::new(
        format!("warp({})", base.presentation.name),
        names,
        ring.clone(),
        metric,
        brackets,
    )?;

    let lc = levi_civita(&pres)?;
    let mut gamma = lc.gamma.clone();
    for i in 0..s2 {
        for j in 0..s2 {
            for l in 0..s2 {
                if base.k_base.get(i, j, l).is_zero() {
                    continue;
                }
                let cur = gamma.get(i, j, l).add(base.k_base.get(i, j, l));
                gamma.set(i, j, l, cur);
            }
        }
    }
    let cur = gamma.get(s2, s2, s2).add(beta);
    gamma.set(s2, s2, s2, cur);
    let nabla = Connection::new(gamma, ConnectionRole::Given);
    let star = dual_connection(&pres, &nabla)?;
    pres.add_connection("nabla", nabla.clone())?;
    pres.add_connection("nabla_star", star)?;

    let mut phi_images: Vec<VectorField> = Vec::with_capacity(n);
    for i in 0..s2 {
        let mut v = VectorField::zero(&ring, n);
        for l in 0..s2 {
            v.coeffs[l] = base.j_images[i].coeffs[l].clone();
        }
        phi_images.push(v);
    }
    phi_images.push(VectorField::zero(&ring, n));
    let contact = ContactTriple::new(&pres, phi_images, VectorField::basis(&ring, n, s2))?;

    let kenmotsu = check_kenmotsu_statistical(&pres, &nabla, &contact)?;
    let holomorphic_violation = base.holomorphic_violation();

    Ok(WarpOutcome { presentation: pres, contact, kenmotsu, holomorphic_violation })
}
