//! Laminate geometry (lamination parameters, the domain Ω) and the laminate
//! Poisson's ratio with its sign kernels ψ and λ.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::material::{ratio, DimensionlessMaterial};

/// Tolerance for membership in Ω.
pub const DOMAIN_TOL: f64 = 1e-12;
/// Tolerance for lying on the parabolic boundary `ξ1 = 2ξ3² − 1`.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// A point `(ξ3, ξ1)` of the lamination plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaminationPoint {
    pub xi3: f64,
    pub xi1: f64,
}

impl LaminationPoint {
    pub const fn new(xi3: f64, xi1: f64) -> Self {
        Self { xi3, xi1 }
    }

    /// Like [`LaminationPoint::new`] but rejects points outside Ω.
    pub fn checked(xi3: f64, xi1: f64) -> Result<Self> {
        let p = Self { xi3, xi1 };
        if in_domain(&p) {
            Ok(p)
        } else {
            Err(Error::OutOfDomain { xi3, xi1 })
        }
    }

    /// Signed distance above the parabola, `ξ1 − (2ξ3² − 1)`.
    pub fn boundary_gap(&self) -> f64 {
        self.xi1 - (2.0 * self.xi3 * self.xi3 - 1.0)
    }

    pub fn on_parabola(&self, tol: f64) -> bool {
        self.boundary_gap().abs() <= tol
    }

    /// Representative with `ξ3 ≥ 0`; the mirror image is the same laminate
    /// turned by 90°.
    pub fn canonical(&self) -> Self {
        Self {
            xi3: self.xi3.abs(),
            xi1: self.xi1,
        }
    }

    /// All plies at 0.
    pub const P1: Self = Self::new(1.0, 1.0);
    /// All plies at 90°.
    pub const P2: Self = Self::new(-1.0, 1.0);
    /// Balanced ±45° angle-ply.
    pub const P3: Self = Self::new(0.0, -1.0);
    /// Isotropic laminate.
    pub const P4: Self = Self::new(0.0, 0.0);
}

pub fn in_domain(p: &LaminationPoint) -> bool {
    p.xi1.is_finite()
        && p.xi3.is_finite()
        && p.xi1 <= 1.0 + DOMAIN_TOL
        && p.xi1 >= -1.0 - DOMAIN_TOL
        && p.boundary_gap() >= -DOMAIN_TOL
}

/// Ply orientations (radians) of a laminate of identical, equally thick plies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StackingSequence {
    plies: Vec<f64>,
}

impl StackingSequence {
    pub fn new(plies: impl IntoIterator<Item = f64>) -> Result<Self> {
        let plies: Vec<f64> = plies.into_iter().map(reduce_orientation).collect();
        if plies.is_empty() {
            return Err(Error::EmptyStack);
        }
        Ok(Self { plies })
    }

    /// Balanced angle-ply `[+δ, −δ]`.
    pub fn angle_ply(delta: f64) -> Self {
        Self {
            plies: vec![reduce_orientation(delta), reduce_orientation(-delta)],
        }
    }

    pub fn plies(&self) -> &[f64] {
        &self.plies
    }
}

/// Maps an orientation into `(−π/2, π/2]`.
fn reduce_orientation(a: f64) -> f64 {
    let r = (a + FRAC_PI_2).rem_euclid(PI) - FRAC_PI_2;
    if r <= -FRAC_PI_2 {
        r + PI
    } else {
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaminationParameters {
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
    pub xi4: f64,
}

impl LaminationParameters {
    pub fn point(&self) -> LaminationPoint {
        LaminationPoint::new(self.xi3, self.xi1)
    }
}

pub fn lamination_parameters(s: &StackingSequence) -> LaminationParameters {
    let n = s.plies.len() as f64;
    let (mut xi1, mut xi2, mut xi3, mut xi4) = (0.0, 0.0, 0.0, 0.0);
    for &d in &s.plies {
        let (s4, c4) = (4.0 * d).sin_cos();
        let (s2, c2) = (2.0 * d).sin_cos();
        xi1 += c4;
        xi2 += s4;
        xi3 += c2;
        xi4 += s2;
    }
    LaminationParameters {
        xi1: xi1 / n,
        xi2: xi2 / n,
        xi3: xi3 / n,
        xi4: xi4 / n,
    }
}

/// Lamination point of the angle-ply `±δ`, `δ ∈ [0, π/2]`.
pub fn angle_ply_point(delta: f64) -> Result<LaminationPoint> {
    if !(0.0..=FRAC_PI_2).contains(&delta) {
        return Err(Error::AngleOutOfRange(delta));
    }
    let xi3 = (2.0 * delta).cos();
    // ξ1 from ξ3 keeps the point exactly on the parabola
    Ok(LaminationPoint::new(xi3, 2.0 * xi3 * xi3 - 1.0))
}

/// Angle-ply orientation realizing a point of the parabolic boundary.
pub fn delta_from_point(p: &LaminationPoint) -> Result<f64> {
    let gap = p.boundary_gap();
    if gap.abs() > BOUNDARY_TOL || !in_domain(p) {
        return Err(Error::NotOnBoundary {
            xi3: p.xi3,
            xi1: p.xi1,
            gap,
        });
    }
    // for ξ3 ≥ 0 this also equals ¼·arccos ξ1
    Ok(0.5 * p.xi3.clamp(-1.0, 1.0).acos())
}

/// Coefficients of `ν12(θ) = (a + b·cos4θ) / (a' + b·cos4θ + e·cos2θ)` for a
/// fixed material and lamination point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nu12Coefficients {
    pub num0: f64,
    pub den0: f64,
    pub wave4: f64,
    pub wave2: f64,
    scale: f64,
}

impl Nu12Coefficients {
    pub fn new(m: &DimensionlessMaterial, p: &LaminationPoint) -> Self {
        let (x3, x1) = (p.xi3, p.xi1);
        let sr = m.signed_rho();
        let base = 2.0 * (m.tau0 * m.tau1 - x3 * x3);
        let aniso = m.tau0 * m.tau0 - m.rho * m.rho * x1 * x1;
        Self {
            num0: base - aniso,
            den0: base + aniso,
            wave4: 2.0 * (x3 * x3 - m.tau1 * sr * x1),
            wave2: 4.0 * x3 * (sr * x1 - m.tau0),
            scale: (m.tau0 + m.tau1 + m.rho + 1.0).powi(2),
        }
    }

    #[inline]
    pub fn numerator(&self, cos4: f64) -> f64 {
        self.num0 + self.wave4 * cos4
    }

    #[inline]
    pub fn denominator(&self, cos2: f64, cos4: f64) -> f64 {
        self.den0 + self.wave4 * cos4 + self.wave2 * cos2
    }

    /// Unchecked evaluation from precomputed `cos2θ`, `cos4θ`.
    #[inline]
    pub fn eval_cos(&self, cos2: f64, cos4: f64) -> f64 {
        self.numerator(cos4) / self.denominator(cos2, cos4)
    }

    pub fn eval(&self, theta: f64) -> Result<f64> {
        let (c2, c4) = ((2.0 * theta).cos(), (4.0 * theta).cos());
        ratio(self.numerator(c4), self.denominator(c2, c4), self.scale, theta)
    }
}

/// Laminate Poisson's ratio `ν12^A(θ)` at lamination point `p`.
pub fn nu12_laminate(m: &DimensionlessMaterial, p: &LaminationPoint, theta: f64) -> Result<f64> {
    if !in_domain(p) {
        return Err(Error::OutOfDomain { xi3: p.xi3, xi1: p.xi1 });
    }
    Nu12Coefficients::new(m, p).eval(theta)
}

/// Numerator of the laminate Poisson's ratio; same sign as `ν12^A(θ)`.
pub fn psi(m: &DimensionlessMaterial, p: &LaminationPoint, theta: f64) -> f64 {
    Nu12Coefficients::new(m, p).numerator((4.0 * theta).cos())
}

/// Threshold `λ` with `ψ(θ) < 0 ⟺ cos4θ < λ` (for a positive denominator).
pub fn lambda_fn(m: &DimensionlessMaterial, p: &LaminationPoint) -> Result<f64> {
    let (x3, x1) = (p.xi3, p.xi1);
    let den = 2.0 * (x3 * x3 - m.signed_rho() * m.tau1 * x1);
    let num = m.tau0 * m.tau0 - m.rho * m.rho * x1 * x1 - 2.0 * (m.tau0 * m.tau1 - x3 * x3);
    if den.abs() <= 1e-14 * (1.0 + num.abs()) {
        return Err(Error::DegenerateLambda { xi3: x3, xi1: x1 });
    }
    Ok(num / den)
}

/// The set of directions in `[0, π/2]` where `ν12 < 0`, symmetric about π/4.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuxeticZone {
    pub theta1: f64,
    pub theta2: f64,
    pub width: f64,
    pub empty: bool,
    /// Every direction auxetic; unreachable for laminates of non-auxetic plies.
    pub full: bool,
}

impl AuxeticZone {
    pub const EMPTY: Self = Self {
        theta1: FRAC_PI_4,
        theta2: FRAC_PI_4,
        width: 0.0,
        empty: true,
        full: false,
    };
}

pub fn zone_from_lambda(lambda: f64) -> AuxeticZone {
    if lambda <= -1.0 || lambda.is_nan() {
        AuxeticZone::EMPTY
    } else if lambda >= 1.0 {
        AuxeticZone {
            theta1: 0.0,
            theta2: FRAC_PI_2,
            width: FRAC_PI_2,
            empty: false,
            full: true,
        }
    } else {
        let theta1 = 0.25 * lambda.acos();
        AuxeticZone {
            theta1,
            theta2: FRAC_PI_2 - theta1,
            width: FRAC_PI_2 - 2.0 * theta1,
            empty: false,
            full: false,
        }
    }
}
