//! Almost contact metric triples `(φ, ξ, η)` with `η` always derived from
//! the metric, never stored independently.

use crate::error::{Error, Result};
use crate::frame::{FramePresentation, VectorField};
use crate::ring::{Poly, Rational};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Debug)]
pub struct ContactTriple {
    /// `phi_images[j]` is `φ(e_j)`.
    phi_images: Vec<VectorField>,
    xi: VectorField,
}

impl ContactTriple {
    pub fn new(m: &FramePresentation, phi_images: Vec<VectorField>, xi: VectorField) -> Result<Self> {
        let n = m.dim();
        if phi_images.len() != n || phi_images.iter().any(|v| v.dim() != n) || xi.dim() != n {
            return Err(Error::Dimension(format!(
                "contact data must match the frame dimension {n}"
            )));
        }
        Ok(ContactTriple { phi_images, xi })
    }

    pub fn xi(&self) -> &VectorField {
        &self.xi
    }

    pub fn phi_image(&self, j: usize) -> &VectorField {
        &self.phi_images[j]
    }

    /// `φ(v)` for a frame-constant field.
    pub fn apply_phi(&self, v: &VectorField) -> VectorField {
        let n = v.dim();
        let ring = v.coeffs[0].ring();
        let mut out = VectorField::zero(ring, n);
        for j in 0..n {
            if v.coeffs[j].is_zero() {
                continue;
            }
            out = out.add(&self.phi_images[j].scale_poly(&v.coeffs[j]));
        }
        out
    }

    /// `η(v) = g(v, ξ)`.
    pub fn eta(&self, m: &FramePresentation, v: &VectorField) -> Poly {
        m.pair(v, &self.xi)
    }

    /// `η(e_i)` for every frame vector.
    pub fn eta_components(&self, m: &FramePresentation) -> Vec<Poly> {
        (0..m.dim())
            .map(|i| self.eta(m, &VectorField::basis(m.ring(), m.dim(), i)))
            .collect()
    }

    /// `η ⊗ η` as a bilinear form.
    pub fn eta_form(&self, m: &FramePresentation) -> crate::frame::BilinearForm {
        let n = m.dim();
        let etas = self.eta_components(m);
        let mut out = crate::frame::BilinearForm::zero(m.ring(), n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, etas[i].mul(&etas[j]));
            }
        }
        out
    }

    /// The matrix `φ^i_j` (entry `(i, j)` is the `e_i` component of `φ e_j`).
    pub fn phi_matrix(&self) -> Vec<Vec<Poly>> {
        let n = self.phi_images.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.phi_images[j].coeffs[i].clone()).collect())
            .collect()
    }

    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> ContactTriple {
        ContactTriple {
            phi_images: self.phi_images.iter().map(|v| v.specialize(assignment)).collect(),
            xi: self.xi.specialize(assignment),
        }
    }
}

/// Per-condition outcome of the almost-contact verification.
#[derive(Clone, Debug)]
pub struct AlmostContactReport {
    pub phi_xi_zero: bool,
    pub eta_phi_zero: bool,
    pub phi_squared: bool,
    pub metric_compatible: bool,
    pub residuals: Vec<(String, String)>,
}

impl AlmostContactReport {
    pub fn verdict(&self) -> bool {
        self.phi_xi_zero && self.eta_phi_zero && self.phi_squared && self.metric_compatible
    }
}

/// Verifies `φξ = 0`, `η∘φ = 0`, `φ² = −I + η⊗ξ`, and
/// `g(φX, φY) = g(X,Y) − η(X)η(Y)` over all frame pairs.
pub fn check_almost_contact(m: &FramePresentation, ct: &ContactTriple) -> AlmostContactReport {
    let n = m.dim();
    let ring = m.ring();
    let mut residuals = Vec::new();

    let phi_xi = ct.apply_phi(ct.xi());
    let phi_xi_zero = phi_xi.is_zero();
    if !phi_xi_zero {
        residuals.push(("phi(xi)".to_string(), phi_xi.display(m.frame_names())));
    }

    let etas = ct.eta_components(m);
    let mut eta_phi_zero = true;
    for j in 0..n {
        let r = ct.eta(m, ct.phi_image(j));
        if !r.is_zero() {
            eta_phi_zero = false;
            residuals.push((format!("eta(phi {})", m.frame_names()[j]), r.to_string()));
        }
    }

    let mut phi_squared = true;
    for j in 0..n {
        let lhs = ct.apply_phi(ct.phi_image(j));
        let expect = VectorField::basis(ring, n, j)
            .neg()
            .add(&ct.xi().scale_poly(&etas[j]));
        let r = lhs.sub(&expect);
        if !r.is_zero() {
            phi_squared = false;
            residuals.push((
                format!("phi^2 {}", m.frame_names()[j]),
                r.display(m.frame_names()),
            ));
        }
    }

    let mut metric_compatible = true;
    for i in 0..n {
        for j in 0..n {
            let lhs = m.pair(ct.phi_image(i), ct.phi_image(j));
            let expect = Poly::constant(ring, m.metric_entry(i, j).clone()).sub(&etas[i].mul(&etas[j]));
            let r = lhs.sub(&expect);
            if !r.is_zero() {
                metric_compatible = false;
                residuals.push((
                    format!(
                        "g(phi {}, phi {})",
                        m.frame_names()[i],
                        m.frame_names()[j]
                    ),
                    r.to_string(),
                ));
            }
        }
    }

    AlmostContactReport {
        phi_xi_zero,
        eta_phi_zero,
        phi_squared,
        metric_compatible,
        residuals,
    }
}
