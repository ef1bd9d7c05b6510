//! Auxeticity feasibility, global minimization of the laminate Poisson's
//! ratio, maximization of the auxetic zone, and a lattice oracle that
//! cross-checks both optimizations by exhaustive evaluation.
//!
//! All searches run on the canonical half of the lamination domain,
//! `ξ3 ≥ 0`. A point `(−ξ3, ξ1)` describes the same laminate turned by 90°,
//! with `θ` replaced by `π/2 − θ`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contour::{zero_contours, Lattice};
use crate::error::{Error, Result};
use crate::laminate::{delta_from_point, in_domain, zone_from_lambda, AuxeticZone, LaminationPoint, Nu12Coefficients};
use crate::material::DimensionlessMaterial;
use crate::search::{golden_section, PatternSearch};

/// Relative tolerance under which two optima are considered tied.
const TIE_TOL: f64 = 1e-12;
/// Distance from the parabola under which a refined optimum is projected on it.
const PROJECT_TOL: f64 = 1e-6;

/// Point of the canonical half-domain from box coordinates `(s, u) ∈ [0, 1]²`:
/// `ξ3 = s`, and `u` runs from the parabola (`u = 0`) up to `ξ1 = 1`.
fn half_domain_point(s: f64, u: f64) -> LaminationPoint {
    let lower = 2.0 * s * s - 1.0;
    LaminationPoint::new(s, lower + u * (1.0 - lower))
}

fn boundary_point(s: f64) -> LaminationPoint {
    LaminationPoint::new(s, 2.0 * s * s - 1.0)
}

fn is_better(candidate: f64, incumbent: f64) -> bool {
    candidate < incumbent - TIE_TOL * (1.0 + incumbent.abs())
}

/// Auxeticity criterion: `η(p) = min over θ of ψ(θ)`.
pub fn eta(m: &DimensionlessMaterial, p: &LaminationPoint) -> f64 {
    let (x3, x1) = (p.xi3, p.xi1);
    2.0 * (m.tau0 * m.tau1 - x3 * x3) - m.tau0 * m.tau0 + m.rho * m.rho * x1 * x1
        - 2.0 * (x3 * x3 - m.signed_rho() * m.tau1 * x1).abs()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityResult {
    /// Some direction of some laminate is auxetic, i.e. `eta_min < 0`.
    pub feasible: bool,
    pub eta_min: f64,
    pub argmin: LaminationPoint,
    /// Polylines of `η = 0` inside Ω, bounding the auxetic region Ξ.
    pub xi_boundary: Vec<Vec<LaminationPoint>>,
}

pub const DEFAULT_CONTOUR_RESOLUTION: usize = 201;

pub fn feasibility(m: &DimensionlessMaterial) -> FeasibilityResult {
    feasibility_with(m, DEFAULT_CONTOUR_RESOLUTION)
}

/// Minimizes `η` over Ω and traces the `η = 0` contour on an
/// `resolution × resolution` lattice over `[−1, 1]²`.
pub fn feasibility_with(m: &DimensionlessMaterial, resolution: usize) -> FeasibilityResult {
    let resolution = resolution.max(3);
    let f = |s: f64, u: f64| eta(m, &half_domain_point(s, u));

    // dense boundary scan plus interior grid, then refine from the best node
    let mut best = (f64::INFINITY, 0.0, 0.0);
    let nb = 20 * resolution;
    for i in 0..=nb {
        let s = i as f64 / nb as f64;
        let v = f(s, 0.0);
        if is_better(v, best.0) {
            best = (v, s, 0.0);
        }
    }
    for i in 0..resolution {
        for j in 1..resolution {
            let (s, u) = (i as f64 / (resolution - 1) as f64, j as f64 / (resolution - 1) as f64);
            let v = f(s, u);
            if is_better(v, best.0) {
                best = (v, s, u);
            }
        }
    }
    let refined = PatternSearch {
        initial_step: 1.0 / resolution as f64,
        ..PatternSearch::default()
    }
    .minimize(|x| f(x[0], x[1]), [best.1, best.2], [0.0, 0.0], [1.0, 1.0]);
    let (eta_min, s, u) = if refined.f <= best.0 {
        (refined.f, refined.x[0], refined.x[1])
    } else {
        best
    };
    let argmin = half_domain_point(s, u);

    let lattice = Lattice {
        x_min: -1.0,
        x_max: 1.0,
        nx: resolution,
        y_min: -1.0,
        y_max: 1.0,
        ny: resolution,
    };
    let raw = if eta_min < 0.0 {
        zero_contours(|x3, x1| eta(m, &LaminationPoint::new(x3, x1)), &lattice, 1e-12)
    } else {
        Vec::new()
    };
    let xi_boundary = clip_to_domain(raw);

    FeasibilityResult {
        feasible: eta_min < 0.0,
        eta_min,
        argmin,
        xi_boundary,
    }
}

/// Splits polylines wherever a vertex leaves Ω.
fn clip_to_domain(lines: Vec<Vec<(f64, f64)>>) -> Vec<Vec<LaminationPoint>> {
    let mut out = Vec::new();
    for line in lines {
        let mut current: Vec<LaminationPoint> = Vec::new();
        for (x3, x1) in line {
            let p = LaminationPoint::new(x3, x1);
            if in_domain(&p) {
                current.push(p);
            } else if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        }
        if !current.is_empty() {
            out.push(current);
        }
    }
    out.retain(|l| l.len() > 1);
    out
}

/// Most negative Poisson's ratio over directions, at a fixed point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DirectionalMinimum {
    pub nu: f64,
    pub theta: f64,
}

/// Coefficients `(A, B, C)` of the stationarity condition
/// `4C·x² + 2B·x + (A − C) = 0` in `x = cos2θ`.
///
/// `A` carries a `−τ0²` term inside the bracket; without it the roots are not
/// stationary points of `ν12(θ)`.
pub fn stationarity_coefficients(m: &DimensionlessMaterial, p: &LaminationPoint) -> (f64, f64, f64) {
    let (x3, x1) = (p.xi3, p.xi1);
    let sr = m.signed_rho();
    let a = x3
        * (m.rho * m.rho * x1 * x1 - 5.0 * x3 * x3 + 3.0 * sr * m.tau1 * x1 + 2.0 * m.tau0 * m.tau1 - m.tau0 * m.tau0);
    let b = -2.0 * (sr * x1 + m.tau0) * (sr * m.tau1 * x1 - x3 * x3);
    let c = x3 * (sr * m.tau1 * x1 - x3 * x3);
    (a, b, c)
}

pub fn min_nu12_at_point(m: &DimensionlessMaterial, p: &LaminationPoint) -> Result<DirectionalMinimum> {
    if !in_domain(p) {
        return Err(Error::OutOfDomain { xi3: p.xi3, xi1: p.xi1 });
    }
    let coef = Nu12Coefficients::new(m, p);
    let (a, b, c) = stationarity_coefficients(m, p);

    if c.abs() <= 1e-12 {
        return min_nu12_by_scan(&coef);
    }

    let mut thetas = vec![0.0, FRAC_PI_4, FRAC_PI_2];
    let disc = b * b - 4.0 * c * (a - c);
    if disc >= 0.0 {
        let sq = disc.sqrt();
        for x in [-(b + sq) / (4.0 * c), -(b - sq) / (4.0 * c)] {
            if x.abs() <= 1.0 {
                thetas.push(0.5 * x.acos());
            }
        }
    }
    thetas.sort_by(f64::total_cmp);

    let mut best: Option<DirectionalMinimum> = None;
    for theta in thetas {
        let nu = coef.eval(theta)?;
        if best.map_or(true, |b| is_better(nu, b.nu)) {
            best = Some(DirectionalMinimum { nu, theta });
        }
    }
    Ok(best.expect("endpoints are always candidates"))
}

/// Fallback for a vanishing leading coefficient: dense scan plus golden section.
fn min_nu12_by_scan(coef: &Nu12Coefficients) -> Result<DirectionalMinimum> {
    const N: usize = 3600;
    let h = FRAC_PI_2 / N as f64;
    let mut best = DirectionalMinimum {
        nu: f64::INFINITY,
        theta: 0.0,
    };
    for k in 0..=N {
        let theta = k as f64 * h;
        let nu = coef.eval(theta)?;
        if is_better(nu, best.nu) {
            best = DirectionalMinimum { nu, theta };
        }
    }
    let lo = (best.theta - h).max(0.0);
    let hi = (best.theta + h).min(FRAC_PI_2);
    let g = golden_section(|t| coef.eval(t).unwrap_or(f64::INFINITY), lo, hi, 1e-10);
    if is_better(g.f, best.nu) {
        best = DirectionalMinimum { nu: g.f, theta: g.x };
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MinNuResult {
    pub nu_min: f64,
    pub theta_star: f64,
    pub point: LaminationPoint,
    /// Angle-ply orientation, when `point` lies on the parabolic boundary.
    pub delta: Option<f64>,
}

/// Multi-start settings for [`min_nu12_global_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalSearch {
    /// Nodes per axis of the coarse grid over the half-domain.
    pub grid: usize,
    /// Number of best grid nodes refined by pattern search.
    pub starts: usize,
}

impl Default for GlobalSearch {
    fn default() -> Self {
        Self { grid: 101, starts: 8 }
    }
}

pub fn min_nu12_global(m: &DimensionlessMaterial) -> Result<MinNuResult> {
    min_nu12_global_with(m, GlobalSearch::default())
}

pub fn min_nu12_global_with(m: &DimensionlessMaterial, opts: GlobalSearch) -> Result<MinNuResult> {
    let n = opts.grid.max(3);
    let objective = |s: f64, u: f64| {
        min_nu12_at_point(m, &half_domain_point(s, u))
            .map(|d| d.nu)
            .unwrap_or(f64::INFINITY)
    };

    let mut nodes: Vec<(f64, f64, f64)> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (s, u) = (i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64);
            nodes.push((objective(s, u), s, u));
        }
    }
    // larger s first on ties: smaller δ
    nodes.sort_by(|x, y| x.0.total_cmp(&y.0).then(y.1.total_cmp(&x.1)).then(x.2.total_cmp(&y.2)));

    let search = PatternSearch {
        initial_step: 1.0 / (n - 1) as f64,
        min_step: 1e-9,
        max_evals: 20_000,
    };
    let mut best: Option<(f64, f64, f64)> = None;
    for &(_, s0, u0) in nodes.iter().take(opts.starts.max(1)) {
        let r = search.minimize(|x| objective(x[0], x[1]), [s0, u0], [0.0, 0.0], [1.0, 1.0]);
        let better = match best {
            None => true,
            Some((f, s, _)) => is_better(r.f, f) || (!is_better(f, r.f) && r.x[0] > s),
        };
        if better {
            best = Some((r.f, r.x[0], r.x[1]));
        }
    }
    let (_, mut s, u) = best.expect("at least one start");
    let mut point = half_domain_point(s, u);

    if point.boundary_gap() <= PROJECT_TOL {
        let h = 2.0 / (n - 1) as f64;
        let g = golden_section(|s| objective(s, 0.0), (s - h).max(0.0), (s + h).min(1.0), 1e-11);
        if g.f <= objective(s, 0.0) {
            s = g.x;
        }
        point = boundary_point(s);
    }
    let dir = min_nu12_at_point(m, &point)?;
    check_axes_positive(m, &point);
    Ok(MinNuResult {
        nu_min: dir.nu,
        theta_star: dir.theta,
        point,
        delta: delta_from_point(&point).ok(),
    })
}

/// Laminates of non-auxetic plies are never auxetic along the axes.
fn check_axes_positive(m: &DimensionlessMaterial, p: &LaminationPoint) {
    let coef = Nu12Coefficients::new(m, p);
    for theta in [0.0, FRAC_PI_2] {
        if let Ok(v) = coef.eval(theta) {
            if v <= 0.0 {
                log::warn!(
                    "nu12({theta}) = {v} <= 0 at ({}, {}): axes expected non-auxetic",
                    p.xi3,
                    p.xi1
                );
            }
        }
    }
}

/// `λ` restricted to the parabolic boundary, as a function of `ξ1`.
/// `None` where its denominator is not positive.
pub fn lambda_hat(m: &DimensionlessMaterial, xi1: f64) -> Option<f64> {
    let q = 2.0 * m.signed_rho() * m.tau1 - 1.0;
    let c0 = m.tau0 * m.tau0 - 2.0 * m.tau0 * m.tau1 + 1.0;
    let den = 1.0 - q * xi1;
    (den > 1e-12).then(|| (c0 + xi1 - m.rho * m.rho * xi1 * xi1) / den)
}

/// Closed-form stationary point of `λ̂(ξ1)`, `None` when the discriminant is
/// negative or the leading factor vanishes.
pub fn xi1_opt_closed_form(m: &DimensionlessMaterial) -> Option<f64> {
    let r2 = m.rho * m.rho;
    let q = 2.0 * m.signed_rho() * m.tau1 - 1.0;
    let disc = r2 * r2 + r2 * q * (q * (2.0 * m.tau1 - m.tau0) * m.tau0 - 2.0 * m.signed_rho() * m.tau1);
    if disc < 0.0 || (r2 * q).abs() < 1e-300 {
        return None;
    }
    Some((r2 - disc.sqrt()) / (r2 * q))
}

/// Every stationary point of `λ̂` (both roots of `qρ²ξ² − 2ρ²ξ + 1 + q·c0 = 0`).
fn lambda_hat_stationary_points(m: &DimensionlessMaterial) -> Vec<f64> {
    let r2 = m.rho * m.rho;
    let q = 2.0 * m.signed_rho() * m.tau1 - 1.0;
    let c0 = m.tau0 * m.tau0 - 2.0 * m.tau0 * m.tau1 + 1.0;
    let konst = 1.0 + q * c0;
    if (q * r2).abs() <= 1e-12 * r2.max(1e-300) {
        return if r2 > 0.0 { vec![konst / (2.0 * r2)] } else { Vec::new() };
    }
    let disc = r2 * r2 - q * r2 * konst;
    if disc < 0.0 {
        return Vec::new();
    }
    let sq = disc.sqrt();
    vec![(r2 - sq) / (q * r2), (r2 + sq) / (q * r2)]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaxZoneResult {
    pub point_opt: LaminationPoint,
    pub lambda_max: f64,
    pub zone: AuxeticZone,
    pub delta: f64,
    pub nu_min_at_opt: f64,
    pub theta_min_at_opt: f64,
    /// The optimum sits at an end of `ξ1 ∈ [−1, 1]` rather than a stationary point.
    pub clamped: bool,
}

/// Widest auxetic zone, found on the parabolic boundary.
pub fn max_zone(m: &DimensionlessMaterial) -> Result<MaxZoneResult> {
    let mut candidates: Vec<(f64, bool)> = lambda_hat_stationary_points(m)
        .into_iter()
        .filter(|x| (-1.0..=1.0).contains(x))
        .map(|x| (x, false))
        .collect();
    candidates.push((-1.0, true));
    candidates.push((1.0, true));

    let mut best: Option<(f64, f64, bool)> = None;
    for (xi1, at_end) in candidates {
        let Some(l) = lambda_hat(m, xi1) else { continue };
        let better = match best {
            None => true,
            Some((bl, bx, _)) => {
                l > bl + TIE_TOL * (1.0 + bl.abs()) || (l >= bl - TIE_TOL * (1.0 + bl.abs()) && xi1 > bx)
            }
        };
        if better {
            best = Some((l, xi1, at_end));
        }
    }
    let Some((lambda_max, xi1, clamped)) = best else {
        return Err(Error::DegenerateLambda { xi3: 1.0, xi1: 1.0 });
    };

    let point_opt = LaminationPoint::new(((xi1 + 1.0) / 2.0).sqrt(), xi1);
    let delta = delta_from_point(&point_opt)?;
    let dir = min_nu12_at_point(m, &point_opt)?;
    check_axes_positive(m, &point_opt);
    let zone = zone_from_lambda(lambda_max);
    if zone.full {
        log::warn!("lambda_max = {lambda_max} >= 1: every direction auxetic, which non-auxetic plies cannot produce");
    }
    Ok(MaxZoneResult {
        point_opt,
        lambda_max,
        zone,
        delta,
        nu_min_at_opt: dir.nu,
        theta_min_at_opt: dir.theta,
        clamped,
    })
}

/// Resolution of the exhaustive `(ξ3, ξ1, θ)` lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleGrid {
    pub n_xi3: usize,
    pub n_xi1: usize,
    pub n_theta: usize,
}

impl OracleGrid {
    pub const MIN_NODES: usize = 201;

    pub fn new(n_xi3: usize, n_xi1: usize, n_theta: usize) -> Result<Self> {
        if n_xi3.min(n_xi1).min(n_theta) < Self::MIN_NODES {
            return Err(Error::InvalidGrid(format!(
                "oracle needs at least {} nodes per axis, got {n_xi3}×{n_xi1}×{n_theta}",
                Self::MIN_NODES
            )));
        }
        Ok(Self { n_xi3, n_xi1, n_theta })
    }
}

#[derive(Debug, Clone, Copy)]
struct PointScan {
    nu_min: f64,
    k_min: usize,
    /// Interpolated sign changes of `ν12` and the zone width between them.
    zone: Option<(f64, f64)>,
}

fn scan_point(coef: &Nu12Coefficients, cos2: &[f64], cos4: &[f64], h: f64) -> PointScan {
    let mut nu_min = f64::INFINITY;
    let mut k_min = 0;
    let mut first_neg = None;
    let mut last_neg = 0;
    let mut prev = 0.0;
    let mut before_first = 0.0;
    let mut after_last = 0.0;
    for (k, (&c2, &c4)) in cos2.iter().zip(cos4).enumerate() {
        let v = coef.eval_cos(c2, c4);
        if v < nu_min {
            nu_min = v;
            k_min = k;
        }
        if v < 0.0 {
            if first_neg.is_none() {
                first_neg = Some(k);
                before_first = prev;
            }
            last_neg = k;
        } else if first_neg.is_some() && last_neg + 1 == k {
            after_last = v;
        }
        prev = v;
    }
    let zone = first_neg.and_then(|k1| {
        if k1 == 0 || last_neg + 1 >= cos2.len() {
            return None;
        }
        let v1 = coef.eval_cos(cos2[k1], cos4[k1]);
        let v2 = coef.eval_cos(cos2[last_neg], cos4[last_neg]);
        let t1 = (k1 as f64 - v1 / (v1 - before_first)) * h;
        let t2 = (last_neg as f64 + v2 / (v2 - after_last)) * h;
        Some((t1, t2))
    });
    PointScan { nu_min, k_min, zone }
}

/// Exhaustive evaluation of `ν12` on a lattice over the canonical half of Ω.
///
/// Each `ξ3` column holds the lattice `ξ1` values inside Ω plus the exact
/// parabola point. The zone bounds come from linear interpolation of the
/// sign change of `ν12` between neighbouring `θ` nodes, so this path never
/// uses `λ` or the stationarity roots.
pub fn brute_force_oracle(m: &DimensionlessMaterial, grid: OracleGrid) -> Result<(MinNuResult, MaxZoneResult)> {
    let grid = OracleGrid::new(grid.n_xi3, grid.n_xi1, grid.n_theta)?;
    let h = FRAC_PI_2 / (grid.n_theta - 1) as f64;
    let (cos2, cos4): (Vec<f64>, Vec<f64>) = (0..grid.n_theta)
        .map(|k| {
            let t = k as f64 * h;
            ((2.0 * t).cos(), (4.0 * t).cos())
        })
        .unzip();

    #[derive(Clone, Copy)]
    struct ColumnBest {
        nu: (f64, f64, LaminationPoint),
        zone: Option<(f64, f64, f64, LaminationPoint)>,
    }

    let columns: Vec<ColumnBest> = (0..grid.n_xi3)
        .into_par_iter()
        .map(|i| {
            let xi3 = i as f64 / (grid.n_xi3 - 1) as f64;
            let lower = 2.0 * xi3 * xi3 - 1.0;
            let mut points = vec![LaminationPoint::new(xi3, lower)];
            points.extend(
                (0..grid.n_xi1)
                    .map(|j| -1.0 + 2.0 * j as f64 / (grid.n_xi1 - 1) as f64)
                    .filter(|&xi1| xi1 > lower)
                    .map(|xi1| LaminationPoint::new(xi3, xi1)),
            );
            let mut best = ColumnBest {
                nu: (f64::INFINITY, 0.0, points[0]),
                zone: None,
            };
            for p in points {
                let scan = scan_point(&Nu12Coefficients::new(m, &p), &cos2, &cos4, h);
                let theta = scan.k_min as f64 * h;
                if scan.nu_min < best.nu.0 {
                    best.nu = (scan.nu_min, theta, p);
                }
                if let Some((t1, t2)) = scan.zone {
                    let w = t2 - t1;
                    if best.zone.map_or(true, |z| w > z.0 || (w == z.0 && p.xi1 > z.3.xi1)) {
                        best.zone = Some((w, t1, t2, p));
                    }
                }
            }
            best
        })
        .collect();

    // sequential reduction in column order keeps the result independent of scheduling
    let mut nu_best = columns[0].nu;
    let mut zone_best: Option<(f64, f64, f64, LaminationPoint)> = None;
    for c in &columns {
        if c.nu.0 < nu_best.0 || (c.nu.0 == nu_best.0 && c.nu.2.xi3 > nu_best.2.xi3) {
            nu_best = c.nu;
        }
        if let Some(z) = c.zone {
            if zone_best.map_or(true, |b| z.0 > b.0 || (z.0 == b.0 && z.3.xi1 > b.3.xi1)) {
                zone_best = Some(z);
            }
        }
    }

    let (nu_min, theta_star, point) = nu_best;
    let min_nu = MinNuResult {
        nu_min,
        theta_star,
        point,
        delta: delta_from_point(&point).ok(),
    };

    let max_zone = match zone_best {
        Some((width, theta1, theta2, p)) => {
            let scan = scan_point(&Nu12Coefficients::new(m, &p), &cos2, &cos4, h);
            MaxZoneResult {
                point_opt: p,
                lambda_max: -(2.0 * width).cos(),
                zone: AuxeticZone {
                    theta1,
                    theta2,
                    width,
                    empty: false,
                    full: false,
                },
                delta: delta_from_point(&p).unwrap_or(f64::NAN),
                nu_min_at_opt: scan.nu_min,
                theta_min_at_opt: scan.k_min as f64 * h,
                clamped: p.xi3 == 1.0,
            }
        }
        None => MaxZoneResult {
            point_opt: point,
            lambda_max: -1.0,
            zone: AuxeticZone::EMPTY,
            delta: f64::NAN,
            nu_min_at_opt: nu_min,
            theta_min_at_opt: theta_star,
            clamped: false,
        },
    };
    Ok((min_nu, max_zone))
}

/// Widest auxetic zone over `n_boundary` angle-ply points, by the same
/// sign-change interpolation as [`brute_force_oracle`].
pub fn boundary_zone_oracle(
    m: &DimensionlessMaterial,
    n_boundary: usize,
    n_theta: usize,
) -> Option<(LaminationPoint, AuxeticZone)> {
    let h = FRAC_PI_2 / (n_theta - 1) as f64;
    let (cos2, cos4): (Vec<f64>, Vec<f64>) = (0..n_theta)
        .map(|k| {
            let t = k as f64 * h;
            ((2.0 * t).cos(), (4.0 * t).cos())
        })
        .unzip();
    let mut best: Option<(LaminationPoint, AuxeticZone)> = None;
    for i in 0..n_boundary {
        let p = boundary_point(i as f64 / (n_boundary - 1) as f64);
        if let Some((t1, t2)) = scan_point(&Nu12Coefficients::new(m, &p), &cos2, &cos4, h).zone {
            let w = t2 - t1;
            if best.map_or(true, |(bp, bz)| w > bz.width || (w == bz.width && p.xi1 > bp.xi1)) {
                best = Some((
                    p,
                    AuxeticZone {
                        theta1: t1,
                        theta2: t2,
                        width: w,
                        empty: false,
                        full: false,
                    },
                ));
            }
        }
    }
    best
}
