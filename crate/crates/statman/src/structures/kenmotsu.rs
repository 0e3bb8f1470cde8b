//! Kenmotsu statistical structure verification and the tangential /
//! ξ-component decomposition of the difference tensor.

use super::contact::ContactTriple;
use crate::error::{Error, Result};
use crate::frame::{
    check_statistical, difference_tensor, dual_connection, levi_civita, BilinearForm, Connection,
    FramePresentation, StatisticalReport, Tensor3, VectorField,
};
use crate::ring::Poly;

/// `K(v, w)` for a difference tensor given as a rank-3 array.
pub fn apply_k(k: &Tensor3, v: &VectorField, w: &VectorField) -> VectorField {
    let n = k.dim();
    let ring = v.coeffs[0].ring();
    let mut out = VectorField::zero(ring, n);
    for i in 0..n {
        if v.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if w.coeffs[j].is_zero() {
                continue;
            }
            let c = v.coeffs[i].mul(&w.coeffs[j]);
            for l in 0..n {
                if k.get(i, j, l).is_zero() {
                    continue;
                }
                out.coeffs[l] = out.coeffs[l].add(&c.mul(k.get(i, j, l)));
            }
        }
    }
    out
}

/// `η(K(ξ,ξ))`, the coefficient the structure equations call β.
pub fn xi_difference_coefficient(
    m: &FramePresentation,
    nabla: &Connection,
    ct: &ContactTriple,
) -> Result<Poly> {
    let lc = levi_civita(m)?;
    let k = difference_tensor(nabla, &lc)?;
    let kxixi = apply_k(&k, ct.xi(), ct.xi());
    Ok(ct.eta(m, &kxixi))
}

/// Outcome of the Kenmotsu statistical verification: the structure
/// equation on `φ`, the ξ-derivative equation, and the K–φ
/// anticommutation, conditional on the statistical check.
#[derive(Clone, Debug)]
pub struct KenmotsuReport {
    pub statistical: StatisticalReport,
    pub structure_equation: bool,
    pub xi_equation: bool,
    pub k_phi_anticommute: bool,
    pub mu_xi: Poly,
    pub residuals: Vec<(String, String)>,
}

impl KenmotsuReport {
    pub fn verdict(&self) -> bool {
        self.statistical.verdict()
            && self.structure_equation
            && self.xi_equation
            && self.k_phi_anticommute
    }
}

/// Evaluates, over all frame pairs:
/// `∇_E(φF) − φ∇*_E F = −η(F) φE + g(φE, F) ξ`,
/// `∇_E ξ = E − [η(E) − μ(E)] ξ` with `μ(E) = η(K(ξ,ξ)) η(E)`, and
/// `K(E, φF) + φ K(E, F) = 0`.
pub fn check_kenmotsu_statistical(
    m: &FramePresentation,
    nabla: &Connection,
    ct: &ContactTriple,
) -> Result<KenmotsuReport> {
    let n = m.dim();
    let ring = m.ring();
    let names = m.frame_names();
    let statistical = check_statistical(m, nabla)?;
    let star = dual_connection(m, nabla)?;
    let lc = levi_civita(m)?;
    let k = difference_tensor(nabla, &lc)?;
    let etas = ct.eta_components(m);
    let beta = {
        let kxixi = apply_k(&k, ct.xi(), ct.xi());
        ct.eta(m, &kxixi)
    };
    let mut residuals = Vec::new();

    let mut structure_equation = true;
    for i in 0..n {
        for j in 0..n {
            let lhs = nabla
                .apply_basis(i, ct.phi_image(j))
                .sub(&ct.apply_phi(&star.entry(i, j)));
            let g_phii_j = m.pair(ct.phi_image(i), &VectorField::basis(ring, n, j));
            let rhs = ct
                .phi_image(i)
                .scale_poly(&etas[j])
                .neg()
                .add(&ct.xi().scale_poly(&g_phii_j));
            let r = lhs.sub(&rhs);
            if !r.is_zero() {
                structure_equation = false;
                residuals.push((
                    format!("phi-structure ({}, {})", names[i], names[j]),
                    r.display(names),
                ));
            }
        }
    }

    let mut xi_equation = true;
    for i in 0..n {
        let lhs = nabla.apply_basis(i, ct.xi());
        let bracket_coeff = etas[i].sub(&beta.mul(&etas[i]));
        let rhs = VectorField::basis(ring, n, i).sub(&ct.xi().scale_poly(&bracket_coeff));
        let r = lhs.sub(&rhs);
        if !r.is_zero() {
            xi_equation = false;
            residuals.push((format!("xi-equation ({})", names[i]), r.display(names)));
        }
    }

    let mut k_phi_anticommute = true;
    for i in 0..n {
        for j in 0..n {
            let ei = VectorField::basis(ring, n, i);
            let lhs = apply_k(&k, &ei, ct.phi_image(j));
            let rhs = ct.apply_phi(&apply_k(&k, &ei, &VectorField::basis(ring, n, j)));
            let r = lhs.add(&rhs);
            if !r.is_zero() {
                k_phi_anticommute = false;
                residuals.push((
                    format!("K-phi ({}, {})", names[i], names[j]),
                    r.display(names),
                ));
            }
        }
    }

    Ok(KenmotsuReport {
        statistical,
        structure_equation,
        xi_equation,
        k_phi_anticommute,
        mu_xi: beta,
        residuals,
    })
}

/// Split of the difference tensor into a ξ-orthogonal part and a
/// ξ-component: `K(E,F) = A(E,F) + Θ(E,F) ξ`.
#[derive(Clone, Debug)]
pub struct KDecomposition {
    pub a_part: Tensor3,
    pub theta: BilinearForm,
}

#[derive(Clone, Debug)]
pub struct KDecompositionReport {
    pub a_xi_vanishes: bool,
    pub theta_base_vanishes: bool,
    pub residuals: Vec<(String, String)>,
}

impl KDecompositionReport {
    pub fn verdict(&self) -> bool {
        self.a_xi_vanishes && self.theta_base_vanishes
    }
}

/// Decomposes `K = ∇ − ∇^g` and checks the warped-structure conditions
/// `A(·, ξ) = 0` and `Θ(·, F) = 0` for ξ-orthogonal `F`.
pub fn decompose_k(
    m: &FramePresentation,
    nabla: &Connection,
    ct: &ContactTriple,
) -> Result<(KDecomposition, KDecompositionReport)> {
    let n = m.dim();
    let ring = m.ring();
    let names = m.frame_names();
    let lc = levi_civita(m)?;
    let k = difference_tensor(nabla, &lc)?;
    let g_xixi = m.pair(ct.xi(), ct.xi());
    let scale = match g_xixi.constant_value() {
        Some(c) if !c.is_zero() => c.recip().expect("nonzero"),
        _ => {
            return Err(Error::Unsupported(
                "decomposition needs g(xi, xi) to be a nonzero constant".into(),
            ))
        }
    };

    let mut theta = BilinearForm::zero(ring, n);
    let mut a_part = Tensor3::zeros(ring, n);
    for i in 0..n {
        for j in 0..n {
            let kij = k.row(i, j);
            let th = m.pair(&kij, ct.xi()).scale(&scale);
            let tangential = kij.sub(&ct.xi().scale_poly(&th));
            for l in 0..n {
                a_part.set(i, j, l, tangential.coeffs[l].clone());
            }
            theta.set(i, j, th);
        }
    }

    let mut residuals = Vec::new();
    let mut a_xi_vanishes = true;
    for i in 0..n {
        let ei = VectorField::basis(ring, n, i);
        let mut out = VectorField::zero(ring, n);
        for j in 0..n {
            if ct.xi().coeffs[j].is_zero() {
                continue;
            }
            let slice = a_part.row(i, j).scale_poly(&ct.xi().coeffs[j]);
            out = out.add(&slice);
        }
        let _ = ei;
        if !out.is_zero() {
            a_xi_vanishes = false;
            residuals.push((format!("A({}, xi)", names[i]), out.display(names)));
        }
    }

    let etas = ct.eta_components(m);
    let mut theta_base_vanishes = true;
    for i in 0..n {
        for j in 0..n {
            // Theta(e_i, e_j - eta(e_j) xi) must vanish
            let mut xi_theta = Poly::zero(ring);
            for l in 0..n {
                if ct.xi().coeffs[l].is_zero() {
                    continue;
                }
                xi_theta = xi_theta.add(&theta.get(i, l).mul(&ct.xi().coeffs[l]));
            }
            let r = theta.get(i, j).sub(&etas[j].mul(&xi_theta));
            if !r.is_zero() {
                theta_base_vanishes = false;
                residuals.push((format!("Theta({}, {}_base)", names[i], names[j]), r.to_string()));
            }
        }
    }

    Ok((
        KDecomposition { a_part, theta },
        KDecompositionReport { a_xi_vanishes, theta_base_vanishes, residuals },
    ))
}
