//! Ply-level elasticity: engineering constants, reduced stiffness, polar
//! invariants and the dimensionless material description.
//!
//! Polar moduli follow Verchery's decomposition in tensor components, so
//! `q66` is the in-plane shear modulus G12 itself.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative size below which a denominator is treated as a pole.
const POLE_EPS: f64 = 1e-12;

/// The ordinary-orthotropy class `K`, with `Φ0 − Φ1 = K·π/4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Orthotropy {
    #[default]
    K0,
    K1,
}

impl Orthotropy {
    pub fn from_index(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Orthotropy::K0
        } else {
            Orthotropy::K1
        }
    }

    /// Classify from the polar angle difference `Φ0 − Φ1`, taken modulo π/2.
    pub fn from_angle_difference(phi: f64) -> Self {
        Self::from_index((phi / FRAC_PI_4).round() as i64)
    }

    pub fn index(self) -> u8 {
        match self {
            Orthotropy::K0 => 0,
            Orthotropy::K1 => 1,
        }
    }

    /// `(−1)^K`
    pub fn sign(self) -> f64 {
        match self {
            Orthotropy::K0 => 1.0,
            Orthotropy::K1 => -1.0,
        }
    }
}

/// Ply moduli in GPa.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EngineeringConstants {
    pub name: String,
    pub e1: f64,
    pub e2: f64,
    pub g12: f64,
    pub nu12: f64,
}

impl EngineeringConstants {
    pub fn new(name: impl Into<String>, e1: f64, e2: f64, g12: f64, nu12: f64) -> Result<Self> {
        let ec = Self {
            name: name.into(),
            e1,
            e2,
            g12,
            nu12,
        };
        ec.check()?;
        Ok(ec)
    }

    /// Checks positivity of the moduli and the bound `ν12² < E1/E2`.
    pub fn check(&self) -> Result<()> {
        let finite = [self.e1, self.e2, self.g12, self.nu12].iter().all(|v| v.is_finite());
        if !finite {
            return Err(Error::NonPhysical("constants must be finite".into()));
        }
        if self.e1 <= 0.0 || self.e2 <= 0.0 || self.g12 <= 0.0 {
            return Err(Error::NonPhysical(format!(
                "moduli must be positive (E1={}, E2={}, G12={})",
                self.e1, self.e2, self.g12
            )));
        }
        if self.nu12 * self.nu12 >= self.e1 / self.e2 {
            return Err(Error::NonPhysical(format!(
                "nu12^2 = {} must be below E1/E2 = {}",
                self.nu12 * self.nu12,
                self.e1 / self.e2
            )));
        }
        Ok(())
    }

    pub fn nu21(&self) -> f64 {
        self.nu12 * self.e2 / self.e1
    }
}

/// Plane-stress reduced stiffness in the material frame (GPa); `q16 = q26 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedStiffness {
    pub q11: f64,
    pub q12: f64,
    pub q22: f64,
    pub q66: f64,
}

impl ReducedStiffness {
    pub fn is_positive_definite(&self) -> bool {
        self.q11 > 0.0 && self.q22 > 0.0 && self.q66 > 0.0 && self.q11 * self.q22 - self.q12 * self.q12 > 0.0
    }
}

pub fn reduce_stiffness(ec: &EngineeringConstants) -> Result<ReducedStiffness> {
    ec.check()?;
    let d = 1.0 - ec.nu12 * ec.nu21();
    Ok(ReducedStiffness {
        q11: ec.e1 / d,
        q12: ec.nu12 * ec.e2 / d,
        q22: ec.e2 / d,
        q66: ec.g12,
    })
}

/// Polar invariants of a planar elasticity tensor.
///
/// `t0, t1, r0, r1` are non-negative moduli; `phi0, phi1` the polar angles
/// in radians. For a ply in its material frame `k` encodes `Φ0 − Φ1 = Kπ/4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarParameters {
    pub t0: f64,
    pub t1: f64,
    pub r0: f64,
    pub r1: f64,
    pub phi0: f64,
    pub phi1: f64,
    pub k: Orthotropy,
}

impl PolarParameters {
    /// Orthotropic parameters in the frame `Φ1 = 0`, with `Φ0 = Kπ/4`.
    pub fn orthotropic(t0: f64, t1: f64, r0: f64, r1: f64, k: Orthotropy) -> Self {
        Self {
            t0,
            t1,
            r0,
            r1,
            phi0: f64::from(k.index()) * FRAC_PI_4,
            phi1: 0.0,
            k,
        }
    }

    /// `Φ = Φ0 − Φ1`
    pub fn phi(&self) -> f64 {
        self.phi0 - self.phi1
    }
}

pub fn polar_from_stiffness(q: &ReducedStiffness) -> PolarParameters {
    let t0 = (q.q11 - 2.0 * q.q12 + 4.0 * q.q66 + q.q22) / 8.0;
    let t1 = (q.q11 + 2.0 * q.q12 + q.q22) / 8.0;
    let b0 = (q.q11 - 2.0 * q.q12 - 4.0 * q.q66 + q.q22) / 8.0;
    let b1 = (q.q11 - q.q22) / 8.0;
    // sign of each bracket picks the polar angle, avoiding atan2 wrapping
    let phi0 = if b0 >= 0.0 { 0.0 } else { FRAC_PI_4 };
    let phi1 = if b1 >= 0.0 { 0.0 } else { FRAC_PI_2 };
    PolarParameters {
        t0,
        t1,
        r0: b0.abs(),
        r1: b1.abs(),
        phi0,
        phi1,
        k: Orthotropy::from_angle_difference(phi0 - phi1),
    }
}

/// Determinant invariant `Δ = 4T1(T0² − R0²) − 8R1²(T0 − R0 cos4Φ)`.
///
/// Numerically this is one quarter of the determinant of the Kelvin
/// (Mandel) 3×3 matrix of the tensor.
pub fn determinant_delta(p: &PolarParameters) -> f64 {
    4.0 * p.t1 * (p.t0 * p.t0 - p.r0 * p.r0) - 8.0 * p.r1 * p.r1 * (p.t0 - p.r0 * (4.0 * p.phi()).cos())
}

/// Polar parameters of the compliance `S = Q⁻¹` expressed through those of `Q`.
///
/// The normalization is that of [`determinant_delta`]: every compliance
/// modulus is twice the corresponding modulus of the inverse Kelvin matrix.
/// Ratios such as the Poisson's ratio are unaffected.
pub fn compliance_polar(p: &PolarParameters) -> Result<PolarParameters> {
    let delta = determinant_delta(p);
    if !(delta > 0.0) {
        return Err(Error::NonPositiveDeterminant(delta));
    }
    let t0 = 2.0 * (p.t0 * p.t1 - p.r1 * p.r1) / delta;
    let t1 = (p.t0 * p.t0 - p.r0 * p.r0) / (2.0 * delta);
    let z0 = (Complex64::from_polar(p.r1 * p.r1, 4.0 * p.phi1) - Complex64::from_polar(p.t1 * p.r0, 4.0 * p.phi0))
        * (2.0 / delta);
    let z1 = Complex64::from_polar(p.r1 / delta, 2.0 * p.phi1) * (Complex64::from_polar(p.r0, 4.0 * p.phi()) - p.t0);
    let (r0, phi0) = polar_of(z0, 4.0);
    let (r1, phi1) = polar_of(z1, 2.0);
    Ok(PolarParameters {
        t0,
        t1,
        r0,
        r1,
        phi0,
        phi1,
        k: Orthotropy::from_angle_difference(phi0 - phi1),
    })
}

fn polar_of(z: Complex64, order: f64) -> (f64, f64) {
    let r = z.norm();
    if r == 0.0 {
        (0.0, 0.0)
    } else {
        (r, z.arg() / order)
    }
}

/// Poisson's ratio from the polar parameters of a compliance tensor.
pub fn nu12_from_compliance(s: &PolarParameters, theta: f64) -> Result<f64> {
    let c0 = s.r0 * (4.0 * (s.phi0 - theta)).cos();
    let num = s.t0 - 2.0 * s.t1 + c0;
    let den = s.t0 + 2.0 * s.t1 + c0 + 4.0 * s.r1 * (2.0 * (s.phi1 - theta)).cos();
    ratio(num, den, s.t0 + s.t1 + s.r0 + s.r1, theta)
}

/// Poisson's ratio of a single ply from its stiffness polar parameters,
/// in the frame where `Φ1 = 0` (x1 along the fibres).
pub fn nu12_ply(p: &PolarParameters, theta: f64) -> Result<f64> {
    let s = p.k.sign();
    let (c2, c4) = ((2.0 * theta).cos(), (4.0 * theta).cos());
    let base = 2.0 * (p.t0 * p.t1 - p.r1 * p.r1);
    let aniso = p.t0 * p.t0 - p.r0 * p.r0;
    let wave = 2.0 * (p.r1 * p.r1 - s * p.t1 * p.r0) * c4;
    let num = base - aniso + wave;
    let den = base + aniso + wave + 4.0 * p.r1 * (s * p.r0 - p.t0) * c2;
    let scale = (p.t0 + p.t1 + p.r0 + p.r1).powi(2);
    ratio(num, den, scale, theta)
}

pub(crate) fn ratio(num: f64, den: f64, scale: f64, theta: f64) -> Result<f64> {
    if den.abs() <= POLE_EPS * scale.max(f64::MIN_POSITIVE) || !den.is_finite() {
        return Err(Error::Pole { theta });
    }
    Ok(num / den)
}

/// Material part of the laminate Poisson's ratio: `τ0 = T0/R1`,
/// `τ1 = T1/R1`, `ρ = R0/R1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessMaterial {
    pub tau0: f64,
    pub tau1: f64,
    pub rho: f64,
    pub k: Orthotropy,
}

impl DimensionlessMaterial {
    pub fn new(tau0: f64, tau1: f64, rho: f64, k: Orthotropy) -> Self {
        Self { tau0, tau1, rho, k }
    }

    /// `(−1)^K ρ`, the signed anisotropy ratio that enters every formula.
    pub fn signed_rho(&self) -> f64 {
        self.k.sign() * self.rho
    }

    pub fn from_constants(ec: &EngineeringConstants) -> Result<Self> {
        dimensionless(&polar_from_stiffness(&reduce_stiffness(ec)?))
    }
}

pub fn dimensionless(p: &PolarParameters) -> Result<DimensionlessMaterial> {
    if !(p.r1 > 0.0) || p.r1 <= 1e-12 * (p.t0 + p.t1) {
        return Err(Error::SquareSymmetric);
    }
    Ok(DimensionlessMaterial {
        tau0: p.t0 / p.r1,
        tau1: p.t1 / p.r1,
        rho: p.r0 / p.r1,
        k: p.k,
    })
}
