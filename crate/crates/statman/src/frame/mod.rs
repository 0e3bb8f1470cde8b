//! Frame presentations and the tensor objects living on them.
//!
//! A presentation fixes a frame `e_1 … e_n`, a constant symmetric
//! invertible metric with rational entries, polynomial structure constants
//! `[e_i, e_j] = Σ_k c^k_ij e_k`, and named connections
//! `∇_{e_i} e_j = Σ_k Γ^k_ij e_k`. Coefficients are constants of the
//! parameter ring, so directional derivatives of coefficients vanish and
//! all of differential geometry below becomes exact algebra.

pub mod linalg;
mod ops;

pub use ops::*;

use crate::error::{Error, Result};
use crate::ring::{ParamRing, Poly, Rational};
use std::collections::BTreeMap;
use std::fmt;

/// Dense rank-3 array of polynomials, indexed `(i, j, k)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Poly>,
}

impl Tensor3 {
    pub fn zeros(ring: &ParamRing, dim: usize) -> Self {
        Tensor3 { dim, data: vec![Poly::zero(ring); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Poly {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, p: Poly) {
        let idx = self.idx(i, j, k);
        self.data[idx] = p;
    }

    /// Slice `(i, j, ·)` as a vector field.
    pub fn row(&self, i: usize, j: usize) -> VectorField {
        VectorField {
            coeffs: (0..self.dim).map(|k| self.get(i, j, k).clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn sub(&self, other: &Tensor3) -> Result<Tensor3> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("{} vs {}", self.dim, other.dim)));
        }
        Ok(Tensor3 {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(|p| p.substitute(assignment)).collect(),
        }
    }
}

/// Role tag for a connection.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConnectionRole {
    Given,
    Dual,
    LeviCivita,
    Induced,
}

impl fmt::Display for ConnectionRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectionRole::Given => write!(f, "given"),
            ConnectionRole::Dual => write!(f, "dual"),
            ConnectionRole::LeviCivita => write!(f, "levi_civita"),
            ConnectionRole::Induced => write!(f, "induced"),
        }
    }
}

/// Affine connection on a frame presentation. Torsion-freeness is a
/// checkable property, never an assumption.
#[derive(Clone, PartialEq, Debug)]
pub struct Connection {
    pub gamma: Tensor3,
    pub role: ConnectionRole,
}

impl Connection {
    pub fn new(gamma: Tensor3, role: ConnectionRole) -> Self {
        Connection { gamma, role }
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    /// `∇_{e_i} e_j`.
    pub fn entry(&self, i: usize, j: usize) -> VectorField {
        self.gamma.row(i, j)
    }

    /// `∇_{e_i} v` for a frame-constant field `v`.
    pub fn apply_basis(&self, i: usize, v: &VectorField) -> VectorField {
        let n = self.dim();
        let ring = v.coeffs[0].ring();
        let mut out = VectorField::zero(ring, n);
        for j in 0..n {
            if v.coeffs[j].is_zero() {
                continue;
            }
            for k in 0..n {
                out.coeffs[k] = out.coeffs[k].add(&v.coeffs[j].mul(self.gamma.get(i, j, k)));
            }
        }
        out
    }

    /// `∇_w v` for frame-constant fields, `w` given by coefficients.
    pub fn apply(&self, w: &VectorField, v: &VectorField) -> VectorField {
        let n = self.dim();
        let ring = v.coeffs[0].ring();
        let mut out = VectorField::zero(ring, n);
        for i in 0..n {
            if w.coeffs[i].is_zero() {
                continue;
            }
            let part = self.apply_basis(i, v);
            out = out.add(&part.scale_poly(&w.coeffs[i]));
        }
        out
    }

    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> Connection {
        Connection { gamma: self.gamma.specialize(assignment), role: self.role }
    }
}

/// Frame-constant vector field.
#[derive(Clone, PartialEq, Debug)]
pub struct VectorField {
    pub coeffs: Vec<Poly>,
}

impl VectorField {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        VectorField { coeffs }
    }

    pub fn zero(ring: &ParamRing, dim: usize) -> Self {
        VectorField { coeffs: vec![Poly::zero(ring); dim] }
    }

    pub fn basis(ring: &ParamRing, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, dim);
        v.coeffs[i] = Poly::one(ring);
        v
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        VectorField {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> VectorField {
        VectorField { coeffs: self.coeffs.iter().map(Poly::neg).collect() }
    }

    pub fn scale_poly(&self, p: &Poly) -> VectorField {
        VectorField { coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect() }
    }

    pub fn scale(&self, r: &Rational) -> VectorField {
        VectorField { coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> VectorField {
        VectorField { coeffs: self.coeffs.iter().map(|p| p.substitute(assignment)).collect() }
    }

    /// Canonical display against frame names, e.g. `-xi`, `e1 + a*e2`, `0`.
    pub fn display(&self, frame_names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &frame_names[i];
            let piece = match c.constant_value() {
                Some(v) if v.is_one() => name.clone(),
                Some(v) if (-&v).is_one() => format!("-{name}"),
                Some(v) => format!("{v}*{name}"),
                None => {
                    if c.to_string().contains([' ', '+', '-']) && !c.to_string().starts_with('-') {
                        format!("({c})*{name}")
                    } else if c.to_string().contains(' ') {
                        format!("({c})*{name}")
                    } else {
                        format!("{c}*{name}")
                    }
                }
            };
            parts.push(piece);
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

/// Bilinear form on the frame: `B(e_i, e_j)` entries.
#[derive(Clone, PartialEq, Debug)]
pub struct BilinearForm {
    pub entries: Vec<Vec<Poly>>,
}

impl BilinearForm {
    pub fn zero(ring: &ParamRing, dim: usize) -> Self {
        BilinearForm { entries: vec![vec![Poly::zero(ring); dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i][j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn add(&self, other: &BilinearForm) -> BilinearForm {
        BilinearForm {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a.add(b)).collect())
                .collect(),
        }
    }

    pub fn sub(&self, other: &BilinearForm) -> BilinearForm {
        BilinearForm {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a.sub(b)).collect())
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> BilinearForm {
        BilinearForm {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| p.scale(r)).collect())
                .collect(),
        }
    }

    pub fn scale_poly(&self, p: &Poly) -> BilinearForm {
        BilinearForm {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|q| q.mul(p)).collect())
                .collect(),
        }
    }

    /// `B(v, w)` for frame-constant fields.
    pub fn pair(&self, v: &VectorField, w: &VectorField) -> Poly {
        let ring = v.coeffs[0].ring();
        let mut acc = Poly::zero(ring);
        for i in 0..self.dim() {
            if v.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if w.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&v.coeffs[i].mul(&w.coeffs[j]).mul(&self.entries[i][j]));
            }
        }
        acc
    }

    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> BilinearForm {
        BilinearForm {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| p.substitute(assignment)).collect())
                .collect(),
        }
    }
}

/// (1,3) curvature tensor: `R(e_i, e_j) e_k = Σ_l R^l_ijk e_l`,
/// stored as `(i, j, k, l)`.
#[derive(Clone, PartialEq, Debug)]
pub struct CurvatureTensor {
    dim: usize,
    data: Vec<Poly>,
}

impl CurvatureTensor {
    pub fn zeros(ring: &ParamRing, dim: usize) -> Self {
        CurvatureTensor { dim, data: vec![Poly::zero(ring); dim.pow(4)] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim + l
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Poly {
        &self.data[self.idx(i, j, k, l)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, p: Poly) {
        let idx = self.idx(i, j, k, l);
        self.data[idx] = p;
    }

    /// `R(e_i, e_j) e_k` as a vector field.
    pub fn section(&self, i: usize, j: usize, k: usize) -> VectorField {
        VectorField {
            coeffs: (0..self.dim).map(|l| self.get(i, j, k, l).clone()).collect(),
        }
    }

    /// Multilinear extension `R(x, y) z` for frame-constant fields.
    pub fn apply(&self, x: &VectorField, y: &VectorField, z: &VectorField) -> VectorField {
        let ring = x.coeffs[0].ring();
        let mut out = VectorField::zero(ring, self.dim);
        for i in 0..self.dim {
            if x.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.coeffs[j].is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    if z.coeffs[k].is_zero() {
                        continue;
                    }
                    let w = x.coeffs[i].mul(&y.coeffs[j]).mul(&z.coeffs[k]);
                    for l in 0..self.dim {
                        if self.get(i, j, k, l).is_zero() {
                            continue;
                        }
                        out.coeffs[l] = out.coeffs[l].add(&w.mul(self.get(i, j, k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn neg(&self) -> CurvatureTensor {
        CurvatureTensor { dim: self.dim, data: self.data.iter().map(Poly::neg).collect() }
    }

    pub fn add(&self, other: &CurvatureTensor) -> CurvatureTensor {
        CurvatureTensor {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> CurvatureTensor {
        CurvatureTensor { dim: self.dim, data: self.data.iter().map(|p| p.scale(r)).collect() }
    }

    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> CurvatureTensor {
        CurvatureTensor {
            dim: self.dim,
            data: self.data.iter().map(|p| p.substitute(assignment)).collect(),
        }
    }
}

/// A manifold presented by a frame with constant metric and polynomial
/// structure constants.
#[derive(Clone, PartialEq, Debug)]
pub struct FramePresentation {
    pub name: String,
    frame_names: Vec<String>,
    ring: ParamRing,
    metric: Vec<Vec<Rational>>,
    metric_inv: Vec<Vec<Rational>>,
    brackets: Tensor3,
    pub connections: BTreeMap<String, Connection>,
}

impl FramePresentation {
    pub fn new(
        name: impl Into<String>,
        frame_names: Vec<String>,
        ring: ParamRing,
        metric: Vec<Vec<Rational>>,
        brackets: Tensor3,
    ) -> Result<Self> {
        let n = frame_names.len();
        if n == 0 {
            return Err(Error::Presentation("empty frame".into()));
        }
        for (i, fname) in frame_names.iter().enumerate() {
            if frame_names[..i].contains(fname) {
                return Err(Error::Presentation(format!("duplicate frame name `{fname}`")));
            }
        }
        if metric.len() != n || metric.iter().any(|row| row.len() != n) {
            return Err(Error::Presentation("metric must be n x n".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if metric[i][j] != metric[j][i] {
                    return Err(Error::Presentation("metric must be symmetric".into()));
                }
            }
        }
        let metric_inv = linalg::invert(&metric)?;
        if brackets.dim() != n {
            return Err(Error::Presentation("bracket tensor has wrong dimension".into()));
        }
        // antisymmetry c^k_ij = -c^k_ji
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !brackets.get(i, j, k).add(brackets.get(j, i, k)).is_zero() {
                        return Err(Error::Presentation(format!(
                            "brackets not antisymmetric at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // Jacobi identity: cyclic sum of [[e_i,e_j],e_l] vanishes
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for k in 0..n {
                        let mut acc = Poly::zero(&ring);
                        for (x, y, z) in [(i, j, l), (j, l, i), (l, i, j)] {
                            for m in 0..n {
                                acc = acc.add(&brackets.get(x, y, m).mul(brackets.get(m, z, k)));
                            }
                        }
                        if !acc.is_zero() {
                            return Err(Error::Presentation(format!(
                                "Jacobi identity fails on ({i},{j},{l})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(FramePresentation {
            name: name.into(),
            frame_names,
            ring,
            metric,
            metric_inv,
            brackets,
            connections: BTreeMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.frame_names.len()
    }

    pub fn ring(&self) -> &ParamRing {
        &self.ring
    }

    pub fn frame_names(&self) -> &[String] {
        &self.frame_names
    }

    pub fn frame_index(&self, name: &str) -> Result<usize> {
        self.frame_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownFrameVector(name.to_string()))
    }

    pub fn metric(&self) -> &[Vec<Rational>] {
        &self.metric
    }

    pub fn metric_inv(&self) -> &[Vec<Rational>] {
        &self.metric_inv
    }

    pub fn metric_entry(&self, i: usize, j: usize) -> &Rational {
        &self.metric[i][j]
    }

    pub fn brackets(&self) -> &Tensor3 {
        &self.brackets
    }

    /// `[e_i, e_j]` as a vector field.
    pub fn bracket(&self, i: usize, j: usize) -> VectorField {
        self.brackets.row(i, j)
    }

    /// `[v, w]` for frame-constant fields.
    pub fn bracket_fields(&self, v: &VectorField, w: &VectorField) -> VectorField {
        let n = self.dim();
        let mut out = VectorField::zero(&self.ring, n);
        for i in 0..n {
            if v.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if w.coeffs[j].is_zero() {
                    continue;
                }
                let c = v.coeffs[i].mul(&w.coeffs[j]);
                for k in 0..n {
                    if self.brackets.get(i, j, k).is_zero() {
                        continue;
                    }
                    out.coeffs[k] = out.coeffs[k].add(&c.mul(self.brackets.get(i, j, k)));
                }
            }
        }
        out
    }

    /// `g(v, w)` as a polynomial.
    pub fn pair(&self, v: &VectorField, w: &VectorField) -> Poly {
        let mut acc = Poly::zero(&self.ring);
        for i in 0..self.dim() {
            if v.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if w.coeffs[j].is_zero() || self.metric[i][j].is_zero() {
                    continue;
                }
                acc = acc.add(&v.coeffs[i].mul(&w.coeffs[j]).scale(&self.metric[i][j]));
            }
        }
        acc
    }

    /// The metric as a bilinear form of constant polynomials.
    pub fn metric_form(&self) -> BilinearForm {
        let n = self.dim();
        let mut b = BilinearForm::zero(&self.ring, n);
        for i in 0..n {
            for j in 0..n {
                b.set(i, j, Poly::constant(&self.ring, self.metric[i][j].clone()));
            }
        }
        b
    }

    pub fn add_connection(&mut self, cname: impl Into<String>, conn: Connection) -> Result<()> {
        if conn.dim() != self.dim() {
            return Err(Error::Dimension(format!(
                "connection dim {} vs frame dim {}",
                conn.dim(),
                self.dim()
            )));
        }
        self.connections.insert(cname.into(), conn);
        Ok(())
    }

    pub fn connection(&self, cname: &str) -> Result<&Connection> {
        self.connections
            .get(cname)
            .ok_or_else(|| Error::UnknownConnection(cname.to_string()))
    }

    /// Specialize every polynomial coefficient at a (partial) assignment.
    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> FramePresentation {
        FramePresentation {
            name: self.name.clone(),
            frame_names: self.frame_names.clone(),
            ring: self.ring.clone(),
            metric: self.metric.clone(),
            metric_inv: self.metric_inv.clone(),
            brackets: self.brackets.specialize(assignment),
            connections: self
                .connections
                .iter()
                .map(|(k, v)| (k.clone(), v.specialize(assignment)))
                .collect(),
        }
    }
}
