//! Independent numerical validation. Brackets and connection actions are
//! checked by central differences of the frame-field evaluators; curvature
//! is checked through the coordinate curvature assembled from central
//! differences of the connection-coefficient evaluators, contracted with
//! the frame (curvature is tensorial, so the contraction is exact). Both
//! paths are O(step²) accurate and share no code with the exact engine.

mod charts;

pub use charts::{chart_for, Chart, Corrupted, Flat2, Flat3, Hyperbolic2, WarpedChart};

use crate::error::{Error, Result};
use crate::frame::{curvature, FramePresentation, SignConvention};
use crate::fixtures::Fixture;
use std::fmt::Write as _;

/// Default step, tolerance, and absolute floor. Truncation at the default
/// step is around 1e-8, two orders below the tolerance.
pub const DEFAULT_STEP: f64 = 1e-4;
pub const DEFAULT_TOL: f64 = 1e-5;
pub const DEFAULT_POINTS: usize = 10;
pub const ABS_FLOOR: f64 = 1e-8;

fn halton(mut index: usize, base: usize) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while index > 0 {
        f /= base as f64;
        r += f * (index % base) as f64;
        index /= base;
    }
    r
}

const HALTON_BASES: [usize; 6] = [2, 3, 5, 7, 11, 13];

/// Deterministic low-discrepancy interior points; the seed offsets the
/// sequence start.
pub fn sample_points(chart: &dyn Chart, count: usize, step: f64, seed: usize) -> Vec<Vec<f64>> {
    let domain = chart.domain();
    let margin = 2.0 * step;
    (0..count)
        .map(|i| {
            let idx = seed * count + i + 1;
            domain
                .iter()
                .enumerate()
                .map(|(d, (lo, hi))| {
                    let u = halton(idx, HALTON_BASES[d % HALTON_BASES.len()]);
                    let lo = lo + margin + 0.05 * (hi - lo);
                    let hi = hi - margin - 0.05 * (hi - lo);
                    lo + u * (hi - lo)
                })
                .collect()
        })
        .collect()
}

fn check_interior(chart: &dyn Chart, p: &[f64], step: f64) -> Result<()> {
    for (x, (lo, hi)) in p.iter().zip(chart.domain()) {
        if *x < lo + 2.0 * step || *x > hi - 2.0 * step {
            return Err(Error::OutsideChartDomain);
        }
    }
    Ok(())
}

fn displaced(p: &[f64], dir: &[f64], t: f64) -> Vec<f64> {
    p.iter().zip(dir).map(|(x, d)| x + t * d).collect()
}

fn axis(n: usize, a: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[a] = 1.0;
    v
}

/// Central difference of a vector-valued function along a direction.
fn dir_diff(f: &dyn Fn(&[f64]) -> Vec<f64>, p: &[f64], dir: &[f64], h: f64) -> Vec<f64> {
    let plus = f(&displaced(p, dir, h));
    let minus = f(&displaced(p, dir, -h));
    plus.iter().zip(&minus).map(|(a, b)| (a - b) / (2.0 * h)).collect()
}

/// `[e_i, e_j]` at `p` by central differences of the frame evaluators.
pub fn fd_bracket(chart: &dyn Chart, i: usize, j: usize, p: &[f64], step: f64) -> Result<Vec<f64>> {
    check_interior(chart, p, step)?;
    let fi = |q: &[f64]| chart.frame(q, i);
    let fj = |q: &[f64]| chart.frame(q, j);
    let xi = chart.frame(p, i);
    let xj = chart.frame(p, j);
    let d1 = dir_diff(&fj, p, &xi, step);
    let d2 = dir_diff(&fi, p, &xj, step);
    Ok(d1.iter().zip(&d2).map(|(a, b)| a - b).collect())
}

/// `(∇_{e_i} e_j)(p)` for a named connection, by central differences of
/// the frame evaluators plus the coefficient action at `p`.
pub fn fd_connection_action(
    chart: &dyn Chart,
    conn: &str,
    i: usize,
    j: usize,
    p: &[f64],
    step: f64,
) -> Result<Vec<f64>> {
    check_interior(chart, p, step)?;
    let n = chart.dim();
    let fj = |q: &[f64]| chart.frame(q, j);
    let xi = chart.frame(p, i);
    let xj = chart.frame(p, j);
    let mut out = dir_diff(&fj, p, &xi, step);
    for a in 0..n {
        if xi[a] == 0.0 {
            continue;
        }
        for b in 0..n {
            if xj[b] == 0.0 {
                continue;
            }
            let g = chart
                .gamma(p, conn, a, b)
                .ok_or_else(|| Error::UnknownConnection(conn.to_string()))?;
            for (o, gv) in out.iter_mut().zip(&g) {
                *o += xi[a] * xj[b] * gv;
            }
        }
    }
    Ok(out)
}

/// Coordinate curvature `R(∂a, ∂b)∂c` at `p` with `∂Γ` by central
/// differences of the coefficient evaluators.
fn coord_curvature(
    chart: &dyn Chart,
    conn: &str,
    a: usize,
    b: usize,
    c: usize,
    p: &[f64],
    step: f64,
) -> Result<Vec<f64>> {
    let n = chart.dim();
    let gac = |q: &[f64], x: usize, y: usize| -> Result<Vec<f64>> {
        chart
            .gamma(q, conn, x, y)
            .ok_or_else(|| Error::UnknownConnection(conn.to_string()))
    };
    let da = {
        let pp = displaced(p, &axis(n, a), step);
        let pm = displaced(p, &axis(n, a), -step);
        let plus = gac(&pp, b, c)?;
        let minus = gac(&pm, b, c)?;
        plus.iter()
            .zip(&minus)
            .map(|(x, y)| (x - y) / (2.0 * step))
            .collect::<Vec<f64>>()
    };
    let db = {
        let pp = displaced(p, &axis(n, b), step);
        let pm = displaced(p, &axis(n, b), -step);
        let plus = gac(&pp, a, c)?;
        let minus = gac(&pm, a, c)?;
        plus.iter()
            .zip(&minus)
            .map(|(x, y)| (x - y) / (2.0 * step))
            .collect::<Vec<f64>>()
    };
    let gbc = gac(p, b, c)?;
    let gacv = gac(p, a, c)?;
    let mut out: Vec<f64> = da.iter().zip(&db).map(|(x, y)| x - y).collect();
    for d in 0..n {
        if gbc[d] != 0.0 {
            let gad = gac(p, a, d)?;
            for (o, v) in out.iter_mut().zip(&gad) {
                *o += gbc[d] * v;
            }
        }
        if gacv[d] != 0.0 {
            let gbd = gac(p, b, d)?;
            for (o, v) in out.iter_mut().zip(&gbd) {
                *o -= gacv[d] * v;
            }
        }
    }
    Ok(out)
}

/// `R(e_i, e_j) e_k` at `p` in coordinate components.
pub fn fd_curvature(
    chart: &dyn Chart,
    conn: &str,
    i: usize,
    j: usize,
    k: usize,
    p: &[f64],
    step: f64,
) -> Result<Vec<f64>> {
    check_interior(chart, p, step)?;
    let n = chart.dim();
    let ei = chart.frame(p, i);
    let ej = chart.frame(p, j);
    let ek = chart.frame(p, k);
    let mut out = vec![0.0; n];
    for a in 0..n {
        if ei[a] == 0.0 {
            continue;
        }
        for b in 0..n {
            if ej[b] == 0.0 {
                continue;
            }
            for c in 0..n {
                if ek[c] == 0.0 {
                    continue;
                }
                let r = coord_curvature(chart, conn, a, b, c, p, step)?;
                let w = ei[a] * ej[b] * ek[c];
                for (o, v) in out.iter_mut().zip(&r) {
                    *o += w * v;
                }
            }
        }
    }
    Ok(out)
}

fn frame_to_coord(chart: &dyn Chart, p: &[f64], coeffs: &[f64]) -> Vec<f64> {
    let n = chart.dim();
    let mut out = vec![0.0; n];
    for (l, &c) in coeffs.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let e = chart.frame(p, l);
        for (o, v) in out.iter_mut().zip(&e) {
            *o += c * v;
        }
    }
    out
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Deviation passes when `|fd − exact|` is within the relative tolerance
/// above unit scale (absolute below it), with an absolute floor guarding
/// exact-zero comparisons.
fn within(dev: f64, exact_scale: f64, tol: f64) -> bool {
    dev <= (tol * exact_scale.max(1.0)).max(ABS_FLOOR)
}

#[derive(Clone, Debug)]
pub struct QuantityReport {
    pub label: String,
    pub max_deviation: f64,
    pub pass: bool,
    /// Identifies the worst offender when failing.
    pub worst: String,
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub fixture: String,
    pub points: usize,
    pub step: f64,
    pub tol: f64,
    pub quantities: Vec<QuantityReport>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.quantities.iter().all(|q| q.pass)
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for q in &self.quantities {
            let _ = writeln!(
                s,
                "{}: max deviation {:.3e} {}{}",
                q.label,
                q.max_deviation,
                if q.pass { "PASS" } else { "FAIL" },
                if q.pass { String::new() } else { format!(" (worst at {})", q.worst) }
            );
        }
        s
    }
}

/// Compares finite-difference brackets, connection actions, and curvature
/// against the exact engine at quasi-random interior points.
pub fn cross_validate(
    fixture: &Fixture,
    chart: &dyn Chart,
    points: usize,
    step: f64,
    tol: f64,
    seed: usize,
) -> Result<OracleReport> {
    let n = chart.dim();
    if fixture.presentation.dim() != n {
        return Err(Error::Dimension(format!(
            "chart dim {n} vs presentation dim {}",
            fixture.presentation.dim()
        )));
    }
    let assignment = chart.assignment();
    let pres: FramePresentation = fixture.presentation.specialize(&assignment);
    let pts = sample_points(chart, points, step, seed);

    let exact_vec = |coeffs: &[crate::ring::Poly]| -> Result<Vec<f64>> {
        coeffs
            .iter()
            .map(|p| p.eval(&assignment).map(|r| r.to_f64()))
            .collect()
    };

    let mut quantities = Vec::new();

    // brackets vs structure constants
    {
        let mut max_dev = 0.0f64;
        let mut pass = true;
        let mut worst = String::new();
        for p in &pts {
            for i in 0..n {
                for j in (i + 1)..n {
                    let fd = fd_bracket(chart, i, j, p, step)?;
                    let exact_frame = exact_vec(&pres.bracket(i, j).coeffs)?;
                    let exact = frame_to_coord(chart, p, &exact_frame);
                    let dev = max_abs(
                        &fd.iter().zip(&exact).map(|(a, b)| a - b).collect::<Vec<f64>>(),
                    );
                    let ok = within(dev, max_abs(&exact), tol);
                    if dev > max_dev {
                        max_dev = dev;
                        worst = format!("[{},{}]", i + 1, j + 1);
                    }
                    pass &= ok;
                }
            }
        }
        quantities.push(QuantityReport {
            label: "brackets".into(),
            max_deviation: max_dev,
            pass,
            worst,
        });
    }

    // connection action and curvature per named connection
    for conn in chart.connections() {
        let Ok(connection) = pres.connection(conn) else {
            continue;
        };
        let mut max_dev = 0.0f64;
        let mut pass = true;
        let mut worst = String::new();
        for p in &pts {
            for i in 0..n {
                for j in 0..n {
                    let fd = fd_connection_action(chart, conn, i, j, p, step)?;
                    let exact_frame = exact_vec(&connection.entry(i, j).coeffs)?;
                    let exact = frame_to_coord(chart, p, &exact_frame);
                    let dev = max_abs(
                        &fd.iter().zip(&exact).map(|(a, b)| a - b).collect::<Vec<f64>>(),
                    );
                    if dev > max_dev {
                        max_dev = dev;
                        worst = format!("({},{})", i + 1, j + 1);
                    }
                    pass &= within(dev, max_abs(&exact), tol);
                }
            }
        }
        quantities.push(QuantityReport {
            label: format!("connection action [{conn}]"),
            max_deviation: max_dev,
            pass,
            worst,
        });

        let exact_r = curvature(&pres, connection, SignConvention::Standard);
        let mut max_dev = 0.0f64;
        let mut pass = true;
        let mut worst = String::new();
        for p in &pts {
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in 0..n {
                        let fd = fd_curvature(chart, conn, i, j, k, p, step)?;
                        let exact_frame = exact_vec(&exact_r.section(i, j, k).coeffs)?;
                        let exact = frame_to_coord(chart, p, &exact_frame);
                        let dev = max_abs(
                            &fd.iter().zip(&exact).map(|(a, b)| a - b).collect::<Vec<f64>>(),
                        );
                        if dev > max_dev {
                            max_dev = dev;
                            worst = format!("({},{},{})", i + 1, j + 1, k + 1);
                        }
                        pass &= within(dev, max_abs(&exact), tol);
                    }
                }
            }
        }
        quantities.push(QuantityReport {
            label: format!("curvature [{conn}]"),
            max_deviation: max_dev,
            pass,
            worst,
        });
    }

    Ok(OracleReport {
        fixture: fixture.presentation.name.clone(),
        points,
        step,
        tol,
        quantities,
    })
}

/// Max deviation of the fd curvature from the exact value over the given
/// components at one point; used for the step-halving convergence check.
pub fn curvature_deviation_at(
    fixture: &Fixture,
    chart: &dyn Chart,
    conn: &str,
    point: &[f64],
    components: &[(usize, usize, usize)],
    step: f64,
) -> Result<f64> {
    let assignment = chart.assignment();
    let pres = fixture.presentation.specialize(&assignment);
    let connection = pres.connection(conn)?;
    let exact_r = curvature(&pres, connection, SignConvention::Standard);
    let mut dev = 0.0f64;
    for &(i, j, k) in components {
        let fd = fd_curvature(chart, conn, i, j, k, point, step)?;
        let exact_frame: Vec<f64> = exact_r
            .section(i, j, k)
            .coeffs
            .iter()
            .map(|p| p.eval(&assignment).map(|r| r.to_f64()))
            .collect::<Result<_>>()?;
        let exact = frame_to_coord(chart, point, &exact_frame);
        dev = dev.max(max_abs(
            &fd.iter().zip(&exact).map(|(a, b)| a - b).collect::<Vec<f64>>(),
        ));
    }
    Ok(dev)
}
