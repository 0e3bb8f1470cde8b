//! Adapted-frame submanifold geometry: induced statistical structures,
//! second fundamental forms and shape operators, Gauss-equation checks,
//! φ-decomposition, concircular fields, and the tangential/normal split
//! audits.
//!
//! A submanifold is an adapted subframe: a subset of the ambient frame
//! fields spanning the tangent space, with the complement spanning the
//! normal space. The subframe must be closed under brackets.

use crate::error::{Error, Result};
use crate::frame::{
    curvature, dual_connection, Connection, ConnectionRole, CurvatureTensor, FramePresentation,
    SignConvention, Tensor3, VectorField,
};
use crate::ring::{Poly, Rational, RingQuotient};
use crate::structures::ContactTriple;
use std::fmt;

/// Normal-valued symmetric (0,2) array: `h[(i,j)][u]` is the coefficient
/// of the `u`-th normal frame vector in `h(e_i, e_j)` (local indices).
#[derive(Clone, PartialEq, Debug)]
pub struct NormalValuedForm {
    pub tangent_dim: usize,
    pub normal_dim: usize,
    data: Vec<Poly>,
}

impl NormalValuedForm {
    fn zeros(ring: &crate::ring::ParamRing, t: usize, nn: usize) -> Self {
        NormalValuedForm { tangent_dim: t, normal_dim: nn, data: vec![Poly::zero(ring); t * t * nn] }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, u: usize) -> usize {
        (i * self.tangent_dim + j) * self.normal_dim + u
    }

    pub fn get(&self, i: usize, j: usize, u: usize) -> &Poly {
        &self.data[self.idx(i, j, u)]
    }

    fn set(&mut self, i: usize, j: usize, u: usize, p: Poly) {
        let ix = self.idx(i, j, u);
        self.data[ix] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    /// `h(e_i, e_j)` in normal-local coordinates.
    pub fn value(&self, i: usize, j: usize) -> Vec<Poly> {
        (0..self.normal_dim).map(|u| self.get(i, j, u).clone()).collect()
    }
}

/// Shape operators and mean curvature fields.
#[derive(Clone, Debug)]
pub struct ShapeData {
    /// `a[u]` is the endomorphism `A_{n_u}` of the tangent space:
    /// `a[u][i][j]` = coefficient of `e_j` in `A_{n_u} e_i` (local).
    pub a: Vec<Vec<Vec<Poly>>>,
    pub a_star: Vec<Vec<Vec<Poly>>>,
    /// Mean curvatures in normal-local coordinates.
    pub h_mean: Vec<Poly>,
    pub h_star_mean: Vec<Poly>,
}

/// A submanifold adapted to the ambient frame.
#[derive(Clone, Debug)]
pub struct AdaptedSubmanifold {
    pub ambient: FramePresentation,
    pub tangent_idx: Vec<usize>,
    pub normal_idx: Vec<usize>,
    pub induced: FramePresentation,
    pub h: NormalValuedForm,
    pub h_star: NormalValuedForm,
    /// Normal connections `D^⊥`, `D^⊥*`: `[i][u][v]` with tangent-local `i`
    /// and normal-local `u, v`.
    pub dperp: Vec<Vec<Vec<Poly>>>,
    pub dperp_star: Vec<Vec<Vec<Poly>>>,
    pub shape: ShapeData,
    pub closure_ok: bool,
}

impl AdaptedSubmanifold {
    pub fn tangent_local(&self, ambient_index: usize) -> Option<usize> {
        self.tangent_idx.iter().position(|&i| i == ambient_index)
    }

    /// Restriction of an ambient frame-constant field to tangent-local
    /// coordinates; `None` when it has a normal component.
    pub fn restrict(&self, v: &VectorField) -> Option<VectorField> {
        for &u in &self.normal_idx {
            if !v.coeffs[u].is_zero() {
                return None;
            }
        }
        Some(VectorField::new(
            self.tangent_idx.iter().map(|&i| v.coeffs[i].clone()).collect(),
        ))
    }

    /// Tangent/normal split of an ambient field, in local coordinates.
    pub fn split(&self, v: &VectorField) -> (VectorField, Vec<Poly>) {
        let t = VectorField::new(self.tangent_idx.iter().map(|&i| v.coeffs[i].clone()).collect());
        let n = self.normal_idx.iter().map(|&u| v.coeffs[u].clone()).collect();
        (t, n)
    }

    /// Embed a tangent-local field back into the ambient frame.
    pub fn embed(&self, v: &VectorField) -> VectorField {
        let mut out = VectorField::zero(self.ambient.ring(), self.ambient.dim());
        for (loc, &amb) in self.tangent_idx.iter().enumerate() {
            out.coeffs[amb] = v.coeffs[loc].clone();
        }
        out
    }
}

/// Splits the named ambient connection and its dual along a tangent
/// subframe. The subframe must be closed under brackets; the duality
/// relations between `h`, `h*` and the shape operators are re-verified.
pub fn induce(
    ambient: &FramePresentation,
    connection_name: &str,
    tangent_idx: &[usize],
) -> Result<AdaptedSubmanifold> {
    let n = ambient.dim();
    let ring = ambient.ring();
    let mut tangent_idx = tangent_idx.to_vec();
    tangent_idx.sort_unstable();
    tangent_idx.dedup();
    if tangent_idx.is_empty() || tangent_idx.iter().any(|&i| i >= n) {
        return Err(Error::Dimension("tangent subframe out of range".into()));
    }
    let normal_idx: Vec<usize> = (0..n).filter(|i| !tangent_idx.contains(i)).collect();
    let t = tangent_idx.len();
    let nn = normal_idx.len();

    // closure under brackets
    for (li, &i) in tangent_idx.iter().enumerate() {
        for &j in tangent_idx.iter().skip(li + 1) {
            for &u in &normal_idx {
                if !ambient.brackets().get(i, j, u).is_zero() {
                    return Err(Error::NotClosed(
                        ambient.frame_names()[i].clone(),
                        ambient.frame_names()[j].clone(),
                    ));
                }
            }
        }
    }

    let nabla = ambient.connection(connection_name)?;
    let star = dual_connection(ambient, nabla)?;

    let metric: Vec<Vec<Rational>> = tangent_idx
        .iter()
        .map(|&i| tangent_idx.iter().map(|&j| ambient.metric_entry(i, j).clone()).collect())
        .collect();
    let mut brackets = Tensor3::zeros(ring, t);
    for (li, &i) in tangent_idx.iter().enumerate() {
        for (lj, &j) in tangent_idx.iter().enumerate() {
            for (lk, &k) in tangent_idx.iter().enumerate() {
                brackets.set(li, lj, lk, ambient.brackets().get(i, j, k).clone());
            }
        }
    }
    let names: Vec<String> = tangent_idx
        .iter()
        .map(|&i| ambient.frame_names()[i].clone())
        .collect();
    let mut induced = FramePresentation::new(
        format!("{}|{}", ambient.name, names.join(",")),
        names,
        ring.clone(),
        metric,
        brackets,
    )?;

    let split_connection = |conn: &Connection| -> (Tensor3, NormalValuedForm) {
        let mut gamma = Tensor3::zeros(ring, t);
        let mut second = NormalValuedForm::zeros(ring, t, nn);
        for (li, &i) in tangent_idx.iter().enumerate() {
            for (lj, &j) in tangent_idx.iter().enumerate() {
                for (lk, &k) in tangent_idx.iter().enumerate() {
                    gamma.set(li, lj, lk, conn.gamma.get(i, j, k).clone());
                }
                for (lu, &u) in normal_idx.iter().enumerate() {
                    second.set(li, lj, lu, conn.gamma.get(i, j, u).clone());
                }
            }
        }
        (gamma, second)
    };

    let (g_ind, h) = split_connection(nabla);
    let (g_ind_star, h_star) = split_connection(&star);
    induced.add_connection("nabla", Connection::new(g_ind, ConnectionRole::Induced))?;
    induced.add_connection("nabla_star", Connection::new(g_ind_star, ConnectionRole::Induced))?;

    // Weingarten split: ∇_{e_i} n_u = −A_{n_u} e_i + D^⊥_{e_i} n_u,
    // with A from ∇ paired to h* and A* from ∇* paired to h.
    let weingarten = |conn: &Connection| -> (Vec<Vec<Vec<Poly>>>, Vec<Vec<Vec<Poly>>>) {
        let mut a = vec![vec![vec![Poly::zero(ring); t]; t]; nn];
        let mut dp = vec![vec![vec![Poly::zero(ring); nn]; nn]; t];
        for (li, &i) in tangent_idx.iter().enumerate() {
            for (lu, &u) in normal_idx.iter().enumerate() {
                for (lj, &j) in tangent_idx.iter().enumerate() {
                    a[lu][li][lj] = conn.gamma.get(i, u, j).neg();
                }
                for (lv, &v) in normal_idx.iter().enumerate() {
                    dp[li][lu][lv] = conn.gamma.get(i, u, v).clone();
                }
            }
        }
        (a, dp)
    };
    let (a, dperp) = weingarten(nabla);
    let (a_star, dperp_star) = weingarten(&star);

    // mean curvatures: H = (1/t) Σ g^{ij} h(e_i, e_j) (induced inverse metric)
    let gi = induced.metric_inv();
    let inv_t = Rational::int(t as i64).recip().expect("t >= 1");
    let mean = |f: &NormalValuedForm| -> Vec<Poly> {
        (0..nn)
            .map(|u| {
                let mut acc = Poly::zero(ring);
                for i in 0..t {
                    for j in 0..t {
                        if gi[i][j].is_zero() || f.get(i, j, u).is_zero() {
                            continue;
                        }
                        acc = acc.add(&f.get(i, j, u).scale(&gi[i][j]));
                    }
                }
                acc.scale(&inv_t)
            })
            .collect()
    };
    let h_mean = mean(&h);
    let h_star_mean = mean(&h_star);

    let sub = AdaptedSubmanifold {
        ambient: ambient.clone(),
        tangent_idx,
        normal_idx,
        induced,
        h,
        h_star,
        dperp,
        dperp_star,
        shape: ShapeData { a, a_star, h_mean, h_star_mean },
        closure_ok: true,
    };

    // duality certificates: g(h(E,F), n_u) = g(A*_{n_u} E, F) and the
    // starred counterpart, on all tangent pairs and normal directions
    let amb_metric = |x: usize, y: usize| sub.ambient.metric_entry(x, y).clone();
    for li in 0..t {
        for lj in 0..t {
            for lu in 0..nn {
                let mut lhs = Poly::zero(ring);
                for lv in 0..nn {
                    lhs = lhs.add(
                        &sub.h
                            .get(li, lj, lv)
                            .scale(&amb_metric(sub.normal_idx[lv], sub.normal_idx[lu])),
                    );
                }
                let mut rhs = Poly::zero(ring);
                for lk in 0..t {
                    rhs = rhs.add(
                        &sub.shape.a_star[lu][li][lk]
                            .scale(&amb_metric(sub.tangent_idx[lk], sub.tangent_idx[lj])),
                    );
                }
                if !lhs.sub(&rhs).is_zero() {
                    return Err(Error::Presentation(
                        "shape-operator duality failed for the primal split".into(),
                    ));
                }
                let mut lhs = Poly::zero(ring);
                for lv in 0..nn {
                    lhs = lhs.add(
                        &sub.h_star
                            .get(li, lj, lv)
                            .scale(&amb_metric(sub.normal_idx[lv], sub.normal_idx[lu])),
                    );
                }
                let mut rhs = Poly::zero(ring);
                for lk in 0..t {
                    rhs = rhs.add(
                        &sub.shape.a[lu][li][lk]
                            .scale(&amb_metric(sub.tangent_idx[lk], sub.tangent_idx[lj])),
                    );
                }
                if !lhs.sub(&rhs).is_zero() {
                    return Err(Error::Presentation(
                        "shape-operator duality failed for the dual split".into(),
                    ));
                }
            }
        }
    }

    Ok(sub)
}

/// Umbilicity classification with certificates. Categories may combine:
/// totally geodesic submanifolds are umbilical and minimal.
#[derive(Clone, Debug)]
pub struct UmbilicityReport {
    pub totally_geodesic: bool,
    pub totally_umbilical: bool,
    pub minimal: bool,
    /// Mean curvatures in normal-local coordinates.
    pub h_mean: Vec<Poly>,
    pub h_star_mean: Vec<Poly>,
}

impl UmbilicityReport {
    pub fn label(&self) -> &'static str {
        if self.totally_geodesic {
            "totally_geodesic"
        } else if self.totally_umbilical {
            "totally_umbilical"
        } else if self.minimal {
            "minimal"
        } else {
            "generic"
        }
    }
}

impl fmt::Display for UmbilicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tags = Vec::new();
        if self.totally_geodesic {
            tags.push("totally_geodesic");
        }
        if self.totally_umbilical {
            tags.push("totally_umbilical");
        }
        if self.minimal {
            tags.push("minimal");
        }
        if tags.is_empty() {
            tags.push("generic");
        }
        write!(f, "{}", tags.join("+"))
    }
}

/// Exact umbilicity classification: `h = g ⊗ H` and the starred
/// counterpart, minimality `H = H* = 0`, geodesy `h = h* = 0`.
pub fn umbilicity(sub: &AdaptedSubmanifold) -> UmbilicityReport {
    let t = sub.tangent_idx.len();
    let nn = sub.normal_idx.len();
    let geodesic = sub.h.is_zero() && sub.h_star.is_zero();
    let mut umbilical = true;
    for i in 0..t {
        for j in 0..t {
            let gij = sub.induced.metric_entry(i, j);
            for u in 0..nn {
                let r = sub.h.get(i, j, u).sub(&sub.shape.h_mean[u].scale(gij));
                let rs = sub
                    .h_star
                    .get(i, j, u)
                    .sub(&sub.shape.h_star_mean[u].scale(gij));
                if !r.is_zero() || !rs.is_zero() {
                    umbilical = false;
                }
            }
        }
    }
    let minimal = sub.shape.h_mean.iter().all(Poly::is_zero)
        && sub.shape.h_star_mean.iter().all(Poly::is_zero);
    UmbilicityReport {
        totally_geodesic: geodesic,
        totally_umbilical: umbilical,
        minimal,
        h_mean: sub.shape.h_mean.clone(),
        h_star_mean: sub.shape.h_star_mean.clone(),
    }
}

#[derive(Clone, Debug)]
pub struct GaussReport {
    pub primal_residual_zero: bool,
    pub dual_residual_zero: bool,
    /// Whether some correction term `g(h, h*)` is nonzero.
    pub has_nonzero_correction: bool,
}

/// Evaluates both Gauss equations on all tangent 4-tuples:
/// `ḡ(R̄(E,F)G,H) = g(R(E,F)G,H) + ḡ(h(E,G),h*(F,H)) − ḡ(h*(E,H),h(F,G))`
/// and the starred counterpart.
pub fn gauss_check(
    sub: &AdaptedSubmanifold,
    ambient_r: &CurvatureTensor,
    ambient_r_star: &CurvatureTensor,
) -> Result<GaussReport> {
    let t = sub.tangent_idx.len();
    let nn = sub.normal_idx.len();
    let ring = sub.ambient.ring();

    let induced_r = curvature(
        &sub.induced,
        sub.induced.connection("nabla")?,
        SignConvention::Standard,
    );
    let induced_r_star = curvature(
        &sub.induced,
        sub.induced.connection("nabla_star")?,
        SignConvention::Standard,
    );

    // normal-space pairing of normal-local coefficient vectors
    let normal_pair = |x: &NormalValuedForm, (i1, j1): (usize, usize),
                       y: &NormalValuedForm, (i2, j2): (usize, usize)|
     -> Poly {
        let mut acc = Poly::zero(ring);
        for u in 0..nn {
            for v in 0..nn {
                let guv = sub
                    .ambient
                    .metric_entry(sub.normal_idx[u], sub.normal_idx[v]);
                if guv.is_zero() {
                    continue;
                }
                acc = acc.add(&x.get(i1, j1, u).mul(y.get(i2, j2, v)).scale(guv));
            }
        }
        acc
    };

    let lowered = |r: &CurvatureTensor, amb: bool, i: usize, j: usize, k: usize, l: usize| -> Poly {
        // g(R(e_i,e_j)e_k, e_l) in the relevant metric
        let mut acc = Poly::zero(ring);
        let dimc = if amb { sub.ambient.dim() } else { t };
        for x in 0..dimc {
            let gxl = if amb {
                sub.ambient.metric_entry(x, sub.tangent_idx[l]).clone()
            } else {
                sub.induced.metric_entry(x, l).clone()
            };
            if gxl.is_zero() {
                continue;
            }
            let entry = if amb {
                r.get(sub.tangent_idx[i], sub.tangent_idx[j], sub.tangent_idx[k], x)
            } else {
                r.get(i, j, k, x)
            };
            acc = acc.add(&entry.scale(&gxl));
        }
        acc
    };

    let mut primal = true;
    let mut dual = true;
    let mut has_correction = false;
    for i in 0..t {
        for j in 0..t {
            for k in 0..t {
                for l in 0..t {
                    let corr1 = normal_pair(&sub.h, (i, k), &sub.h_star, (j, l));
                    let corr2 = normal_pair(&sub.h_star, (i, l), &sub.h, (j, k));
                    if !corr1.is_zero() || !corr2.is_zero() {
                        has_correction = true;
                    }
                    let lhs = lowered(ambient_r, true, i, j, k, l);
                    let rhs = lowered(&induced_r, false, i, j, k, l)
                        .add(&corr1)
                        .sub(&corr2);
                    if !lhs.sub(&rhs).is_zero() {
                        primal = false;
                    }

                    let corr1s = normal_pair(&sub.h_star, (i, k), &sub.h, (j, l));
                    let corr2s = normal_pair(&sub.h, (i, l), &sub.h_star, (j, k));
                    let lhs = lowered(ambient_r_star, true, i, j, k, l);
                    let rhs = lowered(&induced_r_star, false, i, j, k, l)
                        .add(&corr1s)
                        .sub(&corr2s);
                    if !lhs.sub(&rhs).is_zero() {
                        dual = false;
                    }
                }
            }
        }
    }
    Ok(GaussReport {
        primal_residual_zero: primal,
        dual_residual_zero: dual,
        has_nonzero_correction: has_correction,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PhiClass {
    Invariant,
    AntiInvariant,
    Generic,
}

impl fmt::Display for PhiClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiClass::Invariant => write!(f, "invariant"),
            PhiClass::AntiInvariant => write!(f, "anti-invariant"),
            PhiClass::Generic => write!(f, "generic"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PhiDecomposition {
    /// Tangential part: `p[i][j]` = coefficient of tangent-local `e_j` in
    /// `P e_i`.
    pub p: Vec<Vec<Poly>>,
    /// Normal part: `c[i][u]` over normal-local directions.
    pub c: Vec<Vec<Poly>>,
    pub class: PhiClass,
}

/// Exact tangent/normal split `φE = PE + CE` of φ restricted to the
/// tangent frame. The split is re-summed and must reproduce `φE` exactly.
pub fn phi_decompose(sub: &AdaptedSubmanifold, ct: &ContactTriple) -> PhiDecomposition {
    let t = sub.tangent_idx.len();
    let nn = sub.normal_idx.len();
    let mut p = vec![vec![Poly::zero(sub.ambient.ring()); t]; t];
    let mut c = vec![vec![Poly::zero(sub.ambient.ring()); nn]; t];
    for (li, &i) in sub.tangent_idx.iter().enumerate() {
        let img = ct.phi_image(i);
        for (lj, &j) in sub.tangent_idx.iter().enumerate() {
            p[li][lj] = img.coeffs[j].clone();
        }
        for (lu, &u) in sub.normal_idx.iter().enumerate() {
            c[li][lu] = img.coeffs[u].clone();
        }
        // round-trip: the two parts re-sum to φE on the ambient frame
        let mut rebuilt = VectorField::zero(sub.ambient.ring(), sub.ambient.dim());
        for (lj, &j) in sub.tangent_idx.iter().enumerate() {
            rebuilt.coeffs[j] = p[li][lj].clone();
        }
        for (lu, &u) in sub.normal_idx.iter().enumerate() {
            rebuilt.coeffs[u] = c[li][lu].clone();
        }
        debug_assert!(rebuilt.sub(img).is_zero());
    }
    let p_zero = p.iter().flatten().all(Poly::is_zero);
    let c_zero = c.iter().flatten().all(Poly::is_zero);
    let class = if c_zero {
        PhiClass::Invariant
    } else if p_zero {
        PhiClass::AntiInvariant
    } else {
        PhiClass::Generic
    };
    PhiDecomposition { p, c, class }
}

/// Concircularity probe: returns μ with `∇_{e_i} v = μ e_i` for all frame
/// directions when a single such μ exists. `μ = 1` is the concurrent case.
#[derive(Clone, Debug)]
pub struct Concircular {
    pub mu: RingQuotient,
    pub concurrent: bool,
}

pub fn concircular_check(
    m: &FramePresentation,
    nabla: &Connection,
    v: &VectorField,
) -> Option<Concircular> {
    let n = m.dim();
    let ring = m.ring();
    let mut mu: Option<Poly> = None;
    for i in 0..n {
        let dv = nabla.apply_basis(i, v);
        for l in 0..n {
            if l == i {
                continue;
            }
            if !dv.coeffs[l].is_zero() {
                return None;
            }
        }
        match &mu {
            None => mu = Some(dv.coeffs[i].clone()),
            Some(prev) => {
                if !prev.sub(&dv.coeffs[i]).is_zero() {
                    return None;
                }
            }
        }
    }
    let mu = mu.unwrap_or_else(|| Poly::zero(ring));
    let concurrent = mu.sub(&Poly::one(ring)).is_zero();
    Some(Concircular { mu: RingQuotient::from_poly(mu), concurrent })
}

/// Where ξ (or a distinguished field) sits relative to the subframe.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldPosition {
    Tangent,
    Normal,
}

/// Position of a field with respect to the split; mixed fields are
/// rejected with a diagnostic.
pub fn field_position(sub: &AdaptedSubmanifold, v: &VectorField) -> Result<FieldPosition> {
    let tangent_part_zero = sub.tangent_idx.iter().all(|&i| v.coeffs[i].is_zero());
    let normal_part_zero = sub.normal_idx.iter().all(|&u| v.coeffs[u].is_zero());
    match (tangent_part_zero, normal_part_zero) {
        (false, true) => Ok(FieldPosition::Tangent),
        (true, false) => Ok(FieldPosition::Normal),
        (true, true) => Err(Error::Unsupported("field is zero".into())),
        (false, false) => Err(Error::Unsupported(
            "field is neither tangent nor normal to the subframe".into(),
        )),
    }
}

/// One named equation verdict of the tangential/normal split audit.
#[derive(Clone, Debug)]
pub struct SplitCheck {
    pub label: String,
    pub holds: bool,
    pub note: Option<String>,
}

/// Verifies the claimed tangential/normal decomposition equations on an
/// adapted subframe, for ξ tangent or normal.
pub fn tangential_split_audit(
    sub: &AdaptedSubmanifold,
    ct: &ContactTriple,
    nabla_name: &str,
) -> Result<Vec<SplitCheck>> {
    let ring = sub.ambient.ring();
    let t = sub.tangent_idx.len();
    let nn = sub.normal_idx.len();
    let nabla = sub.ambient.connection(nabla_name)?;
    let star = dual_connection(&sub.ambient, nabla)?;
    let beta = crate::structures::xi_difference_coefficient(&sub.ambient, nabla, ct)?;
    let mut checks = Vec::new();

    match field_position(sub, ct.xi())? {
        FieldPosition::Tangent => {
            let xi_local = sub.restrict(ct.xi()).expect("tangent field restricts");
            let ind = sub.induced.connection("nabla")?;
            // ∇_E ξ = E − [η(E) − μ(E)] ξ on the induced connection
            let mut ok = true;
            for i in 0..t {
                let etas = ct.eta_components(&sub.ambient);
                let eta_i = etas[sub.tangent_idx[i]].clone();
                let coeff = eta_i.sub(&beta.mul(&eta_i));
                let rhs = VectorField::basis(ring, t, i).sub(&xi_local.scale_poly(&coeff));
                let lhs = ind.apply_basis(i, &xi_local);
                if !lhs.sub(&rhs).is_zero() {
                    ok = false;
                }
            }
            checks.push(SplitCheck {
                label: "tangential: induced ∇_E ξ = E − [η(E) − μ(E)] ξ".into(),
                holds: ok,
                note: None,
            });
            // h(E, ξ) = 0 for all tangent E
            let mut ok = true;
            for i in 0..t {
                for u in 0..nn {
                    let mut acc = Poly::zero(ring);
                    for j in 0..t {
                        acc = acc.add(&sub.h.get(i, j, u).mul(&xi_local.coeffs[j]));
                    }
                    if !acc.is_zero() {
                        ok = false;
                    }
                }
            }
            checks.push(SplitCheck { label: "normal: h(E, ξ) = 0".into(), holds: ok, note: None });
            // dual split: h*(E, ξ) = 0
            let mut ok = true;
            for i in 0..t {
                for u in 0..nn {
                    let mut acc = Poly::zero(ring);
                    for j in 0..t {
                        acc = acc.add(&sub.h_star.get(i, j, u).mul(&xi_local.coeffs[j]));
                    }
                    if !acc.is_zero() {
                        ok = false;
                    }
                }
            }
            checks.push(SplitCheck { label: "dual normal: h*(E, ξ) = 0".into(), holds: ok, note: None });
        }
        FieldPosition::Normal => {
            // A_ξ = −Id: tangential part of ∇̄_E ξ equals E
            let mut ok = true;
            for (li, &i) in sub.tangent_idx.iter().enumerate() {
                let de = nabla.apply_basis(i, ct.xi());
                let (tang, norm) = sub.split(&de);
                let expect = VectorField::basis(ring, t, li);
                if !tang.sub(&expect).is_zero() {
                    ok = false;
                }
                if norm.iter().any(|p| !p.is_zero()) {
                    ok = false;
                }
            }
            checks.push(SplitCheck {
                label: "tangential: ∇̄_E ξ = E (so A_ξ = −Id, D⊥ξ = 0)".into(),
                holds: ok,
                note: None,
            });
            // claimed vanishing of the ξ-Lie-derivative on tangent pairs
            let mut ok = true;
            let mut sample = None;
            for &i in &sub.tangent_idx {
                for &j in &sub.tangent_idx {
                    let ei = VectorField::basis(ring, sub.ambient.dim(), i);
                    let ej = VectorField::basis(ring, sub.ambient.dim(), j);
                    let val = sub
                        .ambient
                        .pair(&nabla.apply_basis(i, ct.xi()), &ej)
                        .add(&sub.ambient.pair(&ei, &star.apply_basis(j, ct.xi())));
                    if !val.is_zero() {
                        ok = false;
                        if sample.is_none() {
                            sample = Some(val.to_string());
                        }
                    }
                }
            }
            checks.push(SplitCheck {
                label: "claimed: g(∇̄_E ξ, F) + g(E, ∇̄*_F ξ) = 0 on tangent pairs".into(),
                holds: ok,
                note: sample.map(|s| format!("engine value {s}")),
            });
        }
    }
    Ok(checks)
}

/// Concircular-field split audit: tangential part, the shape-operator
/// relation, and the flat-or-umbilical dichotomy data.
#[derive(Clone, Debug)]
pub struct ConcircularSplitAudit {
    /// μ of the ambient field.
    pub ambient_mu: RingQuotient,
    /// ν with induced `∇_E v^T = ν E`, when v^T is concircular on N.
    pub induced_nu: Option<RingQuotient>,
    pub v_t_is_zero: bool,
    pub checks: Vec<SplitCheck>,
    pub induced_flat: bool,
    pub totally_umbilical: bool,
}

pub fn concircular_split_audit(
    sub: &AdaptedSubmanifold,
    v: &VectorField,
    nabla_name: &str,
) -> Result<ConcircularSplitAudit> {
    let ring = sub.ambient.ring();
    let t = sub.tangent_idx.len();
    let nn = sub.normal_idx.len();
    let nabla = sub.ambient.connection(nabla_name)?;
    let conc = concircular_check(&sub.ambient, nabla, v).ok_or_else(|| {
        Error::Unsupported("the supplied field is not concircular on the ambient".into())
    })?;
    let (v_t, v_n) = sub.split(v);
    let v_t_is_zero = v_t.is_zero();
    let mut checks = Vec::new();

    let ind = sub.induced.connection("nabla")?;
    let induced_nu = if v_t_is_zero {
        checks.push(SplitCheck {
            label: "v^T = 0: concircularity of v^T on N is degenerate".into(),
            holds: true,
            note: Some("any coefficient satisfies ∇ 0 = ν·0".into()),
        });
        None
    } else {
        concircular_check(&sub.induced, ind, &v_t).map(|c| c.mu)
    };

    // A_{v^N} E (tangent-local endomorphism applied from the normal part)
    let a_vn = |li: usize| -> VectorField {
        let mut out = VectorField::zero(ring, t);
        for u in 0..nn {
            if v_n[u].is_zero() {
                continue;
            }
            for lj in 0..t {
                out.coeffs[lj] = out.coeffs[lj].add(&sub.shape.a[u][li][lj].mul(&v_n[u]));
            }
        }
        out
    };

    // ∇_E v^T = A_{v^N} E + μ E on all tangent directions
    let mu_poly = conc.mu.as_poly().ok_or_else(|| {
        Error::Unsupported("ambient concircular coefficient is not polynomial".into())
    })?;
    let mut ok = true;
    for li in 0..t {
        let lhs = ind.apply_basis(li, &v_t);
        let rhs = a_vn(li).add(&VectorField::basis(ring, t, li).scale_poly(&mu_poly));
        if !lhs.sub(&rhs).is_zero() {
            ok = false;
        }
    }
    checks.push(SplitCheck {
        label: "tangential: ∇_E v^T = A_{v^N} E + μ E".into(),
        holds: ok,
        note: None,
    });

    // A_{v^N} E = (ν − μ) E when v^T is concircular with coefficient ν
    if let Some(nu) = &induced_nu {
        let diff = nu.sub(&conc.mu);
        let diff_poly = diff.as_poly().ok_or_else(|| {
            Error::Unsupported("ν − μ is not polynomial".into())
        })?;
        let mut ok = true;
        for li in 0..t {
            let lhs = a_vn(li);
            let rhs = VectorField::basis(ring, t, li).scale_poly(&diff_poly);
            if !lhs.sub(&rhs).is_zero() {
                ok = false;
            }
        }
        checks.push(SplitCheck {
            label: "shape relation: A_{v^N} E = (ν − μ) E".into(),
            holds: ok,
            note: None,
        });
    }

    let induced_r = curvature(&sub.induced, ind, SignConvention::Standard);
    let induced_flat = induced_r.is_zero();
    let umb = umbilicity(sub);

    Ok(ConcircularSplitAudit {
        ambient_mu: conc.mu,
        induced_nu,
        v_t_is_zero,
        checks,
        induced_flat,
        totally_umbilical: umb.totally_umbilical,
    })
}

/// One algebraic relation between solved quantities, with both sides
/// rendered for the report.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub matches: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SubSolitonAudit {
    pub solution: crate::soliton::SolitonSolution,
    pub einstein: crate::soliton::EinsteinResult,
    pub relations: Vec<RelationCheck>,
}

/// Contact data restricted to the subframe: tangential φ-part and the
/// restricted ξ (zero when ξ is normal, which collapses the η-slot).
pub fn restrict_contact(sub: &AdaptedSubmanifold, ct: &ContactTriple) -> Result<ContactTriple> {
    let t = sub.tangent_idx.len();
    let ring = sub.ambient.ring();
    let phi = phi_decompose(sub, ct);
    let images: Vec<VectorField> = (0..t)
        .map(|i| VectorField::new(phi.p[i].clone()))
        .collect();
    let xi_local = match field_position(sub, ct.xi())? {
        FieldPosition::Tangent => sub.restrict(ct.xi()).expect("tangent restricts"),
        FieldPosition::Normal => VectorField::zero(ring, t),
    };
    ContactTriple::new(&sub.induced, images, xi_local)
}

/// Audits the soliton identities between solved quantities on an adapted
/// subframe: the η-Einstein conclusions, the λ-relations for ξ tangent
/// and normal, the concircular-potential Ricci form, and the
/// quasi-Yamabe relations.
pub fn audit_submanifold_soliton_theorems(
    sub: &AdaptedSubmanifold,
    ct: &ContactTriple,
    kind: crate::soliton::SolitonKind,
    ambient_potential: &VectorField,
    source: crate::soliton::RicciSource,
) -> Result<SubSolitonAudit> {
    use crate::soliton::{
        einstein_check, ricci_of_source, scalar_of_source, solve_soliton, SolitonKind,
        SolitonProblem,
    };
    if !kind.uses_eta() {
        return Err(Error::Unsupported(
            "the submanifold theorem audit covers the eta-carrying kinds".into(),
        ));
    }
    let ring = sub.ambient.ring();
    let t = sub.tangent_idx.len();
    let n = sub.ambient.dim();
    let ambient_nabla = sub.ambient.connection("nabla")?;
    let beta = crate::structures::xi_difference_coefficient(&sub.ambient, ambient_nabla, ct)?;
    let ct_local = restrict_contact(sub, ct)?;
    let (v_t, v_n) = sub.split(ambient_potential);
    let xi_position = field_position(sub, ct.xi())?;

    let prob = SolitonProblem { kind, potential: v_t.clone(), source };
    let solution = solve_soliton(&sub.induced, &prob, Some(&ct_local))?;
    let lambda = solution.lambda.clone();
    let omega = solution
        .omega
        .clone()
        .unwrap_or_else(|| RingQuotient::zero(ring));
    let one = RingQuotient::from_poly(Poly::one(ring));

    let ind_nabla = sub.induced.connection("nabla")?;
    let ric = ricci_of_source(&sub.induced, ind_nabla, source, SignConvention::Standard)?;
    let einstein = einstein_check(&sub.induced, &ric, Some(&ct_local));

    let mut relations = Vec::new();

    match kind {
        SolitonKind::EtaRicci => match xi_position {
            FieldPosition::Tangent => {
                let lam_om = lambda.add(&omega);
                // threshold relation λ + ω = s(1 − β), both s-readings
                for (reading, dim) in [("submanifold", t), ("ambient", n)] {
                    if dim % 2 == 1 {
                        let s = ((dim - 1) / 2) as i64;
                        let rhs_poly = Poly::int(ring, 1).sub(&beta).scale(&Rational::int(s));
                        let rhs = RingQuotient::from_poly(rhs_poly);
                        relations.push(RelationCheck {
                            label: format!("λ + ω = s(1 − β), {reading} reading (s = {})", (dim - 1) / 2),
                            lhs: lam_om.to_string(),
                            rhs: rhs.to_string(),
                            matches: lam_om.equals(&rhs),
                            note: None,
                        });
                    }
                }
                // re-derivation at F = ξ: λ + ω = −Ric(ξ, ξ)
                let ric_xixi = {
                    let xi_local = sub.restrict(ct.xi()).expect("tangent");
                    ric.pair(&xi_local, &xi_local)
                };
                let rhs = RingQuotient::from_poly(ric_xixi.neg());
                relations.push(RelationCheck {
                    label: "re-derived at F = ξ: λ + ω = −Ric(ξ, ξ)".into(),
                    lhs: lam_om.to_string(),
                    rhs: rhs.to_string(),
                    matches: lam_om.equals(&rhs),
                    note: None,
                });
            }
            FieldPosition::Normal => {
                let rhs = RingQuotient::from_poly(beta.neg());
                relations.push(RelationCheck {
                    label: "ξ normal: λ = −β".into(),
                    lhs: lambda.to_string(),
                    rhs: rhs.to_string(),
                    matches: lambda.equals(&rhs),
                    note: solution.omega.is_none().then(|| "η vanishes on N; ω unconstrained".into()),
                });
            }
        },
        SolitonKind::QuasiYamabe => {
            let conc = concircular_check(&sub.ambient, ambient_nabla, ambient_potential)
                .ok_or_else(|| {
                    Error::Unsupported("quasi-Yamabe audit needs a concircular potential".into())
                })?;
            let mu = conc.mu.clone();
            let r_scal =
                RingQuotient::from_poly(scalar_of_source(&sub.induced, ind_nabla, source, SignConvention::Standard)?);
            // (R − λ − μ) g(E,F) = g(A_{v^N} E, F) − ω η(E) η(F)
            let coeff = r_scal.sub(&lambda).sub(&mu);
            let etas = ct_local.eta_components(&sub.induced);
            let nn = sub.normal_idx.len();
            let mut holds = true;
            for i in 0..t {
                for j in 0..t {
                    let mut a_ij = Poly::zero(ring);
                    for u in 0..nn {
                        if v_n[u].is_zero() {
                            continue;
                        }
                        for k in 0..t {
                            a_ij = a_ij.add(
                                &sub.shape.a[u][i][k]
                                    .mul(&v_n[u])
                                    .scale(sub.induced.metric_entry(k, j)),
                            );
                        }
                    }
                    // cleared: coeff·g_ij − a_ij + ω η_i η_j = 0
                    let lhs = Poly::constant(ring, sub.induced.metric_entry(i, j).clone())
                        .mul(coeff.num())
                        .mul(omega.den())
                        .sub(&a_ij.mul(coeff.den()).mul(omega.den()))
                        .add(&etas[i].mul(&etas[j]).mul(omega.num()).mul(coeff.den()));
                    if !lhs.is_zero() {
                        holds = false;
                    }
                }
            }
            relations.push(RelationCheck {
                label: "(R − λ − μ) g = g(A_{v^N}·, ·) − ω η⊗η on tangent pairs".into(),
                lhs: format!("R − λ − μ = {}", coeff),
                rhs: "shape/η side".into(),
                matches: holds,
                note: None,
            });
            let umb = umbilicity(sub);
            if umb.minimal {
                let rhs = lambda.sub(&omega).add(&mu);
                relations.push(RelationCheck {
                    label: "minimal: R = λ − ω + μ".into(),
                    lhs: r_scal.to_string(),
                    rhs: rhs.to_string(),
                    matches: r_scal.equals(&rhs),
                    note: None,
                });
                if conc.concurrent {
                    let rhs = lambda.sub(&omega).add(&one);
                    relations.push(RelationCheck {
                        label: "concurrent (μ = 1): R = λ − ω + 1".into(),
                        lhs: r_scal.to_string(),
                        rhs: rhs.to_string(),
                        matches: r_scal.equals(&rhs),
                        note: None,
                    });
                }
            }
        }
        _ => unreachable!("eta-carrying kinds only"),
    }

    // concircular-potential Ricci form (the h-pairing term vanishes
    // identically for adapted subframes, where h is normal-valued and v^T
    // tangent)
    if kind == SolitonKind::EtaRicci {
        if let Some(conc) = concircular_check(&sub.ambient, ambient_nabla, ambient_potential) {
            let mu = conc.mu;
            let g = sub.induced.metric_form();
            let eta2 = ct_local.eta_form(&sub.induced);
            let coeff = lambda.sub(&mu).neg();
            let resid = crate::soliton::combine_forms(
                &sub.induced,
                &[(one.clone(), &ric), (coeff.clone(), &g), (omega.clone(), &eta2)],
            );
            relations.push(RelationCheck {
                label: "concircular potential: Ric = (λ − μ) g − ḡ(h(·,·), v^T) − ω η⊗η".into(),
                lhs: "Ric".into(),
                rhs: format!("(λ − μ) g − ω η⊗η with λ − μ = {}", lambda.sub(&mu)),
                matches: resid.is_zero(),
                note: Some("ḡ(h(·,·), v^T) ≡ 0 on adapted subframes".into()),
            });
        }
    }

    Ok(SubSolitonAudit { solution, einstein, relations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ring::ParamRing;
    use std::collections::BTreeMap;

    fn a_is(v: i64) -> BTreeMap<String, Rational> {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), Rational::int(v));
        m
    }

    #[test]
    fn invariant_slice_is_totally_geodesic() {
        let f = fixtures::kenmotsu5d();
        let sub = induce(&f.presentation, "nabla", &[0, 2, 4]).unwrap();
        assert!(sub.closure_ok);
        assert!(sub.h.is_zero());
        assert!(sub.h_star.is_zero());
        let umb = umbilicity(&sub);
        assert!(umb.totally_geodesic);
        assert!(umb.totally_umbilical);
        assert!(umb.minimal);
        // the induced presentation is the 3D Kenmotsu statistical fixture
        let k3 = fixtures::kenmotsu5d_sub_invariant();
        assert_eq!(
            sub.induced.connection("nabla").unwrap().gamma,
            k3.presentation.connection("nabla").unwrap().gamma
        );
        assert_eq!(sub.induced.brackets(), k3.presentation.brackets());
    }

    #[test]
    fn base_slice_is_totally_umbilical_with_h_minus_xi() {
        let f = fixtures::kenmotsu5d();
        let sub = induce(&f.presentation, "nabla", &[0, 1, 2, 3]).unwrap();
        // h(e_i, e_j) = −δ_ij ξ: normal-local coefficient −1 on the diagonal
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { Poly::int(f.presentation.ring(), -1) } else { Poly::zero(f.presentation.ring()) };
                assert_eq!(*sub.h.get(i, j, 0), expect);
            }
        }
        let umb = umbilicity(&sub);
        assert!(!umb.totally_geodesic);
        assert!(umb.totally_umbilical);
        assert!(!umb.minimal);
        assert_eq!(umb.h_mean, vec![Poly::int(f.presentation.ring(), -1)]);
        // A_ξ = −Id
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { Poly::int(f.presentation.ring(), -1) } else { Poly::zero(f.presentation.ring()) };
                assert_eq!(sub.shape.a[0][i][j], expect);
            }
        }
    }

    #[test]
    fn closure_error_on_heisenberg_pair() {
        // [e1, e2] = e3 with T = {e1, e2}: not closed
        let ring = ParamRing::empty();
        let mut br = crate::frame::Tensor3::zeros(&ring, 3);
        br.set(0, 1, 2, Poly::one(&ring));
        br.set(1, 0, 2, Poly::int(&ring, -1));
        let metric: Vec<Vec<Rational>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        let mut m = FramePresentation::new(
            "heisenberg",
            vec!["e1".into(), "e2".into(), "e3".into()],
            ring.clone(),
            metric,
            br,
        )
        .unwrap();
        m.add_connection(
            "nabla",
            Connection::new(crate::frame::Tensor3::zeros(&ring, 3), ConnectionRole::Given),
        )
        .unwrap();
        assert!(matches!(
            induce(&m, "nabla", &[0, 1]),
            Err(Error::NotClosed(_, _))
        ));
    }

    #[test]
    fn gauss_equations_hold_on_all_closed_subframes() {
        // consistency theorem: the Gauss residual vanishes for every
        // subframe whose induce succeeds, enumerated exhaustively
        let f = fixtures::kenmotsu5d();
        let m = &f.presentation;
        let nabla = m.connection("nabla").unwrap();
        let star = dual_connection(m, nabla).unwrap();
        let r = curvature(m, nabla, SignConvention::Standard);
        let rs = curvature(m, &star, SignConvention::Standard);
        let mut checked = 0;
        for mask in 1u32..(1 << 5) {
            let idx: Vec<usize> = (0..5).filter(|i| mask & (1 << i) != 0).collect();
            let Ok(sub) = induce(m, "nabla", &idx) else {
                continue;
            };
            let rep = gauss_check(&sub, &r, &rs).unwrap();
            assert!(rep.primal_residual_zero, "T = {idx:?}");
            assert!(rep.dual_residual_zero, "T = {idx:?}");
            checked += 1;
        }
        assert!(checked > 10);
    }

    #[test]
    fn geodesic_induced_curvature_equals_restriction() {
        let f = fixtures::kenmotsu5d();
        let m = &f.presentation;
        let sub = induce(m, "nabla", &[0, 2, 4]).unwrap();
        let ambient_r = curvature(m, m.connection("nabla").unwrap(), SignConvention::Standard);
        let induced_r = curvature(
            &sub.induced,
            sub.induced.connection("nabla").unwrap(),
            SignConvention::Standard,
        );
        for (li, &i) in sub.tangent_idx.iter().enumerate() {
            for (lj, &j) in sub.tangent_idx.iter().enumerate() {
                for (lk, &k) in sub.tangent_idx.iter().enumerate() {
                    for (ll, &l) in sub.tangent_idx.iter().enumerate() {
                        assert_eq!(induced_r.get(li, lj, lk, ll), ambient_r.get(i, j, k, l));
                    }
                }
            }
        }
    }

    #[test]
    fn gauss_corrections_nonzero_on_umbilical_slice() {
        let f = fixtures::kenmotsu5d();
        let m = &f.presentation;
        let nabla = m.connection("nabla").unwrap();
        let star = dual_connection(m, nabla).unwrap();
        let r = curvature(m, nabla, SignConvention::Standard);
        let rs = curvature(m, &star, SignConvention::Standard);

        let geo = induce(m, "nabla", &[0, 2, 4]).unwrap();
        let rep = gauss_check(&geo, &r, &rs).unwrap();
        assert!(rep.primal_residual_zero && !rep.has_nonzero_correction);

        let umb = induce(m, "nabla", &[0, 1, 2, 3]).unwrap();
        let rep = gauss_check(&umb, &r, &rs).unwrap();
        assert!(rep.primal_residual_zero && rep.has_nonzero_correction);
    }

    #[test]
    fn gauss_negative_control() {
        // perturbing h(e1, e1) by +ξ must break the residual
        let f = fixtures::kenmotsu5d();
        let m = &f.presentation;
        let nabla = m.connection("nabla").unwrap();
        let star = dual_connection(m, nabla).unwrap();
        let r = curvature(m, nabla, SignConvention::Standard);
        let rs = curvature(m, &star, SignConvention::Standard);
        let mut sub = induce(m, "nabla", &[0, 1, 2, 3]).unwrap();
        let bumped = sub.h.get(0, 0, 0).add(&Poly::one(m.ring()));
        sub.h.set(0, 0, 0, bumped);
        let rep = gauss_check(&sub, &r, &rs).unwrap();
        assert!(!rep.primal_residual_zero);
    }

    #[test]
    fn phi_classification() {
        let f = fixtures::kenmotsu5d();
        let m = &f.presentation;
        let ct = f.contact.as_ref().unwrap();
        let inv = induce(m, "nabla", &[0, 2, 4]).unwrap();
        assert_eq!(phi_decompose(&inv, ct).class, PhiClass::Invariant);
        let anti = induce(m, "nabla", &[0, 1, 4]).unwrap();
        assert_eq!(phi_decompose(&anti, ct).class, PhiClass::AntiInvariant);
        let gen = induce(m, "nabla", &[0, 1, 2, 4]).unwrap();
        assert_eq!(phi_decompose(&gen, ct).class, PhiClass::Generic);
    }

    #[test]
    fn concircular_probe() {
        let f = fixtures::kenmotsu5d();
        let m = &f.presentation;
        let nabla = m.connection("nabla").unwrap();
        let xi = VectorField::basis(m.ring(), 5, 4);
        // symbolic a: ∇_ξ ξ = a ξ vs ∇_{e_1} ξ = e_1 forces a = 1
        assert!(concircular_check(m, nabla, &xi).is_none());
        // a = 1: μ = 1, concurrent
        let m1 = m.specialize(&a_is(1));
        let c = concircular_check(&m1, m1.connection("nabla").unwrap(), &xi).unwrap();
        assert!(c.concurrent);
        // zero field: μ = 0
        let z = VectorField::zero(m.ring(), 5);
        let c0 = concircular_check(m, nabla, &z).unwrap();
        assert!(c0.mu.is_zero());
        assert!(!c0.concurrent);
    }

    #[test]
    fn split_audit_xi_tangent() {
        let f = fixtures::kenmotsu5d();
        let sub = induce(&f.presentation, "nabla", &[0, 2, 4]).unwrap();
        let checks = tangential_split_audit(&sub, f.contact.as_ref().unwrap(), "nabla").unwrap();
        assert!(checks.iter().all(|c| c.holds), "{checks:?}");
    }

    #[test]
    fn split_audit_xi_normal() {
        let f = fixtures::kenmotsu5d();
        let sub = induce(&f.presentation, "nabla", &[0, 1, 2, 3]).unwrap();
        let checks = tangential_split_audit(&sub, f.contact.as_ref().unwrap(), "nabla").unwrap();
        // Weingarten split holds; the claimed Lie-vanishing does not
        assert!(checks[0].holds);
        assert!(!checks[1].holds);
    }

    #[test]
    fn split_audit_negative_control() {
        // perturb the ambient connection entry ∇_{e1} ξ: the tangential
        // decomposition verdict must flip
        let f = fixtures::kenmotsu5d();
        let mut m = f.presentation.clone();
        let mut gamma = m.connection("nabla").unwrap().gamma.clone();
        gamma.set(0, 4, 0, gamma.get(0, 4, 0).add(&Poly::one(m.ring())));
        m.add_connection("nabla", Connection::new(gamma, ConnectionRole::Given))
            .unwrap();
        let sub = induce(&m, "nabla", &[0, 2, 4]).unwrap();
        let checks = tangential_split_audit(&sub, f.contact.as_ref().unwrap(), "nabla").unwrap();
        assert!(!checks[0].holds);
    }

    #[test]
    fn mixed_xi_is_rejected() {
        let f = fixtures::kenmotsu5d();
        let sub = induce(&f.presentation, "nabla", &[0, 2, 4]).unwrap();
        let ring = f.presentation.ring();
        let mixed = VectorField::basis(ring, 5, 0).add(&VectorField::basis(ring, 5, 1));
        assert!(matches!(
            field_position(&sub, &mixed),
            Err(Error::Unsupported(_))
        ));
        assert_eq!(
            field_position(&sub, &VectorField::basis(ring, 5, 4)).unwrap(),
            FieldPosition::Tangent
        );
        assert_eq!(
            field_position(&sub, &VectorField::basis(ring, 5, 1)).unwrap(),
            FieldPosition::Normal
        );
    }

    #[test]
    fn concircular_split_on_geodesic_slice() {
        // a = 1, v = ξ tangent: v^T = ξ is concircular on N with ν = 1
        let f = fixtures::kenmotsu5d();
        let m = f.presentation.specialize(&a_is(1));
        let sub = induce(&m, "nabla", &[0, 2, 4]).unwrap();
        let xi = VectorField::basis(m.ring(), 5, 4);
        let audit = concircular_split_audit(&sub, &xi, "nabla").unwrap();
        assert!(!audit.v_t_is_zero);
        assert!(audit.ambient_mu.equals(&RingQuotient::from_poly(Poly::one(m.ring()))));
        assert!(audit
            .induced_nu
            .as_ref()
            .unwrap()
            .equals(&RingQuotient::from_poly(Poly::one(m.ring()))));
        assert!(audit.checks.iter().all(|c| c.holds), "{:?}", audit.checks);
        assert!(!audit.induced_flat);
        assert!(audit.totally_umbilical);
    }

    #[test]
    fn concircular_split_degenerate_vt() {
        // a = 1, v = ξ normal to the umbilical slice: v^T = 0 degenerates
        let f = fixtures::kenmotsu5d();
        let m = f.presentation.specialize(&a_is(1));
        let sub = induce(&m, "nabla", &[0, 1, 2, 3]).unwrap();
        let xi = VectorField::basis(m.ring(), 5, 4);
        let audit = concircular_split_audit(&sub, &xi, "nabla").unwrap();
        assert!(audit.v_t_is_zero);
        assert!(audit.induced_nu.is_none());
        assert!(audit.checks.iter().all(|c| c.holds), "{:?}", audit.checks);
    }

    #[test]
    fn soliton_theorems_xi_tangent() {
        use crate::soliton::{EinsteinResult, RicciSource, SolitonKind};
        let f = fixtures::kenmotsu5d();
        let sub = induce(&f.presentation, "nabla", &[0, 2, 4]).unwrap();
        let ct = f.contact.as_ref().unwrap();
        let xi = VectorField::basis(f.presentation.ring(), 5, 4);
        let audit = audit_submanifold_soliton_theorems(
            &sub,
            ct,
            SolitonKind::EtaRicci,
            &xi,
            RicciSource::Nabla,
        )
        .unwrap();
        assert!(audit.solution.consistent);
        // solved pair (λ, ω) = (a + 1, 1 − 3a)
        let ring = f.presentation.ring();
        let a = Poly::var(ring, "a").unwrap();
        assert!(audit
            .solution
            .lambda
            .equals(&RingQuotient::from_poly(a.add(&Poly::one(ring)))));
        assert!(audit.solution.omega.as_ref().unwrap().equals(&RingQuotient::from_poly(
            Poly::one(ring).sub(&a.scale(&Rational::int(3)))
        )));
        // η-Einstein conclusion
        assert!(matches!(audit.einstein, EinsteinResult::EtaEinstein(_, _)));
        // λ + ω = 2 − 2a: the ambient s-reading (s = 2) matches
        // symbolically, the submanifold reading (s = 1) does not
        let sub_reading = audit
            .relations
            .iter()
            .find(|r| r.label.contains("submanifold reading"))
            .unwrap();
        assert!(!sub_reading.matches);
        let amb_reading = audit
            .relations
            .iter()
            .find(|r| r.label.contains("ambient reading"))
            .unwrap();
        assert!(amb_reading.matches);
        // the re-derivation from Ric(ξ,ξ) always agrees with the solver
        let re = audit
            .relations
            .iter()
            .find(|r| r.label.contains("re-derived"))
            .unwrap();
        assert!(re.matches);
    }

    #[test]
    fn soliton_theorems_xi_normal() {
        use crate::soliton::{EinsteinResult, RicciSource, SolitonKind};
        let f = fixtures::kenmotsu5d();
        let sub = induce(&f.presentation, "nabla", &[0, 1, 2, 3]).unwrap();
        let ct = f.contact.as_ref().unwrap();
        let xi = VectorField::basis(f.presentation.ring(), 5, 4);
        let audit = audit_submanifold_soliton_theorems(
            &sub,
            ct,
            SolitonKind::EtaRicci,
            &xi,
            RicciSource::Nabla,
        )
        .unwrap();
        // induced connection vanishes: Ric = 0, λ = 0, ω absent
        assert!(audit.solution.consistent);
        assert!(audit.solution.lambda.is_zero());
        assert!(audit.solution.omega.is_none());
        match &audit.einstein {
            EinsteinResult::Einstein(c) => assert!(c.is_zero()),
            other => panic!("expected einstein(0), got {}", other.describe()),
        }
        // λ = −β matches only at a = 0; symbolically it is a mismatch
        let rel = audit.relations.iter().find(|r| r.label.contains("λ = −β")).unwrap();
        assert!(!rel.matches);
    }

    #[test]
    fn soliton_theorems_quasi_yamabe_minimal() {
        use crate::soliton::{RicciSource, SolitonKind};
        // a = 1 so that ξ is concircular (μ = 1); the geodesic slice is
        // minimal; the printed relation R = λ − ω + μ does not hold on it
        let f = fixtures::kenmotsu5d();
        let m = f.presentation.specialize(&a_is(1));
        let ct = f.contact.as_ref().unwrap().specialize(&a_is(1));
        let sub = induce(&m, "nabla", &[0, 2, 4]).unwrap();
        let xi = VectorField::basis(m.ring(), 5, 4);
        let audit = audit_submanifold_soliton_theorems(
            &sub,
            &ct,
            SolitonKind::QuasiYamabe,
            &xi,
            RicciSource::Nabla,
        )
        .unwrap();
        assert!(audit.solution.consistent);
        // λ = R − 1 = −7, ω = 1 (R = −6 for either source on this slice)
        assert!(audit
            .solution
            .lambda
            .equals(&RingQuotient::from_rational(m.ring(), Rational::int(-7))));
        assert!(audit
            .solution
            .omega
            .as_ref()
            .unwrap()
            .equals(&RingQuotient::from_rational(m.ring(), Rational::int(1))));
        let minimal_rel = audit
            .relations
            .iter()
            .find(|r| r.label.contains("minimal"))
            .unwrap();
        assert!(!minimal_rel.matches); // −6 vs −7 − 1 + 1 = −7
        let concurrent_rel = audit
            .relations
            .iter()
            .find(|r| r.label.contains("concurrent"))
            .unwrap();
        assert!(!concurrent_rel.matches);
    }
}
