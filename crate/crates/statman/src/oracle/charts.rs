//! Compiled-in coordinate charts for the five fixtures. Each chart
//! evaluates frame fields and connection coefficients in closed form at
//! double precision; the exact engine is evaluated at the chart's
//! parameter assignment for comparison.

use crate::ring::Rational;
use std::collections::BTreeMap;

pub trait Chart: Sync + Send {
    fn name(&self) -> &'static str;
    fn dim(&self) -> usize;
    /// Coordinate domain box.
    fn domain(&self) -> Vec<(f64, f64)>;
    /// Coordinate components of the `i`-th frame field at `p`.
    fn frame(&self, p: &[f64], i: usize) -> Vec<f64>;
    /// Coordinate components of `∇_{∂a} ∂b` at `p` for a named connection.
    fn gamma(&self, p: &[f64], conn: &str, a: usize, b: usize) -> Option<Vec<f64>>;
    /// Connections the chart can evaluate.
    fn connections(&self) -> Vec<&'static str> {
        vec!["nabla", "nabla_star"]
    }
    /// Parameter values baked into the chart.
    fn assignment(&self) -> BTreeMap<String, Rational> {
        BTreeMap::new()
    }
}

pub fn chart_for(name: &str) -> Option<Box<dyn Chart>> {
    match name {
        "hyperbolic2" => Some(Box::new(Hyperbolic2)),
        "flat2-einstein" => Some(Box::new(Flat2)),
        "flat3-einstein" => Some(Box::new(Flat3 { b: 2.0 })),
        "kenmotsu5d" => Some(Box::new(WarpedChart { base_dim: 4, a: 0.0 })),
        "kenmotsu5d-sub-invariant" => Some(Box::new(WarpedChart { base_dim: 2, a: 0.0 })),
        _ => None,
    }
}

fn basis(n: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[i] = 1.0;
    v
}

/// Upper half-plane, coordinates (x, y) with y > 0; frame E1 = y ∂x,
/// E2 = y ∂y; metric y^{-2}(dx² + dy²).
pub struct Hyperbolic2;

impl Chart for Hyperbolic2 {
    fn name(&self) -> &'static str {
        "hyperbolic2"
    }

    fn dim(&self) -> usize {
        2
    }

    fn domain(&self) -> Vec<(f64, f64)> {
        vec![(-1.0, 1.0), (0.5, 2.0)]
    }

    fn frame(&self, p: &[f64], i: usize) -> Vec<f64> {
        match i {
            0 => vec![p[1], 0.0],
            _ => vec![0.0, p[1]],
        }
    }

    fn gamma(&self, p: &[f64], conn: &str, a: usize, b: usize) -> Option<Vec<f64>> {
        let y = p[1];
        let mut out = vec![0.0; 2];
        match conn {
            "nabla" => {
                // ∇_∂x ∂x = 2/y ∂y, ∇_∂y ∂y = 1/y ∂y
                if a == 0 && b == 0 {
                    out[1] = 2.0 / y;
                }
                if a == 1 && b == 1 {
                    out[1] = 1.0 / y;
                }
            }
            "nabla_star" => {
                // 2 ∇^g − ∇ with Γ^g: ^x_xy = ^x_yx = −1/y, ^y_xx = 1/y, ^y_yy = −1/y
                if (a, b) == (0, 1) || (a, b) == (1, 0) {
                    out[0] = -2.0 / y;
                }
                if a == 1 && b == 1 {
                    out[1] = -3.0 / y;
                }
            }
            _ => return None,
        }
        Some(out)
    }
}

/// Euclidean plane, coordinate frame, constant connection coefficients.
pub struct Flat2;

impl Chart for Flat2 {
    fn name(&self) -> &'static str {
        "flat2-einstein"
    }

    fn dim(&self) -> usize {
        2
    }

    fn domain(&self) -> Vec<(f64, f64)> {
        vec![(-1.0, 1.0), (-1.0, 1.0)]
    }

    fn frame(&self, _p: &[f64], i: usize) -> Vec<f64> {
        basis(2, i)
    }

    fn gamma(&self, _p: &[f64], conn: &str, a: usize, b: usize) -> Option<Vec<f64>> {
        let sign = match conn {
            "nabla" => 1.0,
            "nabla_star" => -1.0,
            _ => return None,
        };
        let mut out = vec![0.0; 2];
        if a == 0 && b == 0 {
            out[1] = -sign;
        }
        if (a, b) == (0, 1) || (a, b) == (1, 0) {
            out[0] = -sign;
        }
        Some(out)
    }
}

/// Euclidean 3-space, coordinate frame, the b-family connection at a fixed
/// numeric b.
pub struct Flat3 {
    pub b: f64,
}

impl Chart for Flat3 {
    fn name(&self) -> &'static str {
        "flat3-einstein"
    }

    fn dim(&self) -> usize {
        3
    }

    fn domain(&self) -> Vec<(f64, f64)> {
        vec![(-1.0, 1.0); 3]
    }

    fn frame(&self, _p: &[f64], i: usize) -> Vec<f64> {
        basis(3, i)
    }

    fn gamma(&self, _p: &[f64], conn: &str, a: usize, b: usize) -> Option<Vec<f64>> {
        let sign = match conn {
            "nabla" => 1.0,
            "nabla_star" => -1.0,
            _ => return None,
        };
        let bb = self.b * sign;
        let hb = bb / 2.0;
        let mut out = vec![0.0; 3];
        match (a, b) {
            (0, 0) => out[0] = bb,
            (1, 1) | (2, 2) => out[0] = hb,
            (0, 1) | (1, 0) => out[1] = hb,
            (0, 2) | (2, 0) => out[2] = hb,
            _ => {}
        }
        Some(out)
    }

    fn assignment(&self) -> BTreeMap<String, Rational> {
        let mut m = BTreeMap::new();
        m.insert("b".to_string(), Rational::int(self.b as i64));
        m
    }
}

/// Warped product over a flat base: coordinates (x_1..x_{2s}, v), frame
/// e_i = e^{-v} ∂_i and ξ = ∂_v; metric e^{2v} δ on the base block plus
/// dv²; statistical pair ∇ = ∇^g ± a (dv³-coefficient).
pub struct WarpedChart {
    pub base_dim: usize,
    pub a: f64,
}

impl Chart for WarpedChart {
    fn name(&self) -> &'static str {
        if self.base_dim == 4 {
            "kenmotsu5d"
        } else {
            "kenmotsu5d-sub-invariant"
        }
    }

    fn dim(&self) -> usize {
        self.base_dim + 1
    }

    fn domain(&self) -> Vec<(f64, f64)> {
        let mut d = vec![(-1.0, 1.0); self.base_dim];
        d.push((0.25, 1.25));
        d
    }

    fn frame(&self, p: &[f64], i: usize) -> Vec<f64> {
        let n = self.dim();
        let v = p[n - 1];
        let mut out = vec![0.0; n];
        if i < self.base_dim {
            out[i] = (-v).exp();
        } else {
            out[n - 1] = 1.0;
        }
        out
    }

    fn gamma(&self, p: &[f64], conn: &str, a: usize, b: usize) -> Option<Vec<f64>> {
        let aa = match conn {
            "nabla" => self.a,
            "nabla_star" => -self.a,
            "levi_civita" => 0.0,
            _ => return None,
        };
        let n = self.dim();
        let v = p[n - 1];
        let last = n - 1;
        let mut out = vec![0.0; n];
        if a < last && b < last {
            if a == b {
                out[last] = -(2.0 * v).exp();
            }
        } else if a < last && b == last {
            out[a] = 1.0;
        } else if a == last && b < last {
            out[b] = 1.0;
        } else {
            out[last] = aa;
        }
        Some(out)
    }

    fn connections(&self) -> Vec<&'static str> {
        vec!["nabla", "nabla_star", "levi_civita"]
    }

    fn assignment(&self) -> BTreeMap<String, Rational> {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), Rational::int(self.a as i64));
        m
    }
}

/// Test wrapper that perturbs one connection coefficient, used as the
/// negative control for the cross-validation.
pub struct Corrupted<C: Chart> {
    pub inner: C,
    pub conn: &'static str,
    pub at: (usize, usize, usize),
    pub bump: f64,
}

impl<C: Chart> Chart for Corrupted<C> {
    fn name(&self) -> &'static str {
        self.inner.name()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn domain(&self) -> Vec<(f64, f64)> {
        self.inner.domain()
    }

    fn frame(&self, p: &[f64], i: usize) -> Vec<f64> {
        self.inner.frame(p, i)
    }

    fn gamma(&self, p: &[f64], conn: &str, a: usize, b: usize) -> Option<Vec<f64>> {
        let mut out = self.inner.gamma(p, conn, a, b)?;
        if conn == self.conn && (a, b) == (self.at.0, self.at.1) {
            out[self.at.2] += self.bump;
        }
        Some(out)
    }

    fn connections(&self) -> Vec<&'static str> {
        self.inner.connections()
    }

    fn assignment(&self) -> BTreeMap<String, Rational> {
        self.inner.assignment()
    }
}
