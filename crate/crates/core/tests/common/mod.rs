//! Independent reference computations: plain 3×3 matrix algebra on Kelvin
//! (Mandel) matrices, with no polar quantities involved.
#![allow(dead_code)]

pub mod tables;

use std::f64::consts::SQRT_2;

use lamina_core::{DimensionlessMaterial, EngineeringConstants, LaminationPoint, Orthotropy};
use proptest::prelude::*;

pub type Mat3 = [[f64; 3]; 3];

pub fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn inv3(m: &Mat3) -> Mat3 {
    let d = det3(m);
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    [
        [c(1, 2, 1, 2) / d, -c(0, 2, 1, 2) / d, c(0, 1, 1, 2) / d],
        [-c(1, 2, 0, 2) / d, c(0, 2, 0, 2) / d, -c(0, 1, 0, 2) / d],
        [c(1, 2, 0, 1) / d, -c(0, 2, 0, 1) / d, c(0, 1, 0, 1) / d],
    ]
}

pub fn mul3(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut r = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            r[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    r
}

pub fn transpose(a: &Mat3) -> Mat3 {
    let mut r = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            r[i][j] = a[j][i];
        }
    }
    r
}

/// Plane-stress stiffness of a ply in Kelvin form, from the compliance.
pub fn ply_stiffness(ec: &EngineeringConstants) -> Mat3 {
    let s = [
        [1.0 / ec.e1, -ec.nu12 / ec.e1, 0.0],
        [-ec.nu12 / ec.e1, 1.0 / ec.e2, 0.0],
        [0.0, 0.0, 1.0 / (2.0 * ec.g12)],
    ];
    inv3(&s)
}

/// Rotation of a Kelvin matrix by `a` (tensor rotation in the plane).
pub fn rotate(k: &Mat3, a: f64) -> Mat3 {
    let (c, s) = (a.cos(), a.sin());
    let r = [
        [c * c, s * s, -SQRT_2 * c * s],
        [s * s, c * c, SQRT_2 * c * s],
        [SQRT_2 * c * s, -SQRT_2 * c * s, c * c - s * s],
    ];
    mul3(&mul3(&r, k), &transpose(&r))
}

/// Mean of the rotated ply stiffness over the stack: the membrane stiffness
/// per unit thickness.
pub fn homogenize(q: &Mat3, plies: &[f64]) -> Mat3 {
    let mut a = [[0.0; 3]; 3];
    for &d in plies {
        let r = rotate(q, d);
        for i in 0..3 {
            for j in 0..3 {
                a[i][j] += r[i][j] / plies.len() as f64;
            }
        }
    }
    a
}

/// Poisson's ratio for uniaxial stress along `theta`, from a Kelvin stiffness.
pub fn poisson_ratio(stiffness: &Mat3, theta: f64) -> f64 {
    let s = inv3(stiffness);
    let (c, n) = (theta.cos(), theta.sin());
    let sigma = [c * c, n * n, SQRT_2 * c * n];
    let e: Vec<f64> = (0..3).map(|i| (0..3).map(|j| s[i][j] * sigma[j]).sum()).collect();
    let longitudinal = e[0] * c * c + e[1] * n * n + SQRT_2 * e[2] * c * n;
    let transverse = e[0] * n * n + e[1] * c * c - SQRT_2 * e[2] * c * n;
    -transverse / longitudinal
}

/// Tensor components (S1111, S1122, S2222, S1212) of a Kelvin matrix.
pub fn tensor_components(k: &Mat3) -> [f64; 4] {
    [k[0][0], k[0][1], k[1][1], k[2][2] / 2.0]
}

/// Signed Cartesian combinations `[T0, T1, R0 cos4Φ0, R1 cos2Φ1]` of an
/// orthotropic tensor in its symmetry frame.
pub fn polar_brackets(c: [f64; 4]) -> [f64; 4] {
    let [a11, a12, a22, a66] = c;
    [
        (a11 - 2.0 * a12 + 4.0 * a66 + a22) / 8.0,
        (a11 + 2.0 * a12 + a22) / 8.0,
        (a11 - 2.0 * a12 - 4.0 * a66 + a22) / 8.0,
        (a11 - a22) / 8.0,
    ]
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}

/// Physically admissible plies spanning wood, glass, carbon and boron.
pub fn arb_constants() -> impl Strategy<Value = EngineeringConstants> {
    (1.0..400.0f64, 0.01..1.0f64, 0.05..0.9f64, -0.9..0.9f64).prop_map(|(e1, ratio, g, f)| {
        let e2 = e1 * ratio;
        let nu = f * (e1 / e2).sqrt().min(1.0 / 0.9);
        EngineeringConstants::new("random", e1, e2, g * e2, nu.clamp(-0.9, 0.9)).expect("admissible")
    })
}

/// Dimensionless materials from plies with fibres along x1 that are not
/// auxetic in any direction.
pub fn arb_material() -> impl Strategy<Value = DimensionlessMaterial> {
    arb_constants()
        .prop_map(|mut ec| {
            ec.nu12 = ec.nu12.abs();
            ec
        })
        .prop_filter("fibre direction stiffer", |ec| ec.e1 > 1.01 * ec.e2)
        .prop_filter("non-auxetic ply", |ec| {
            let k = ply_stiffness(ec);
            (0..=90).all(|i| poisson_ratio(&k, (i as f64).to_radians()) >= 0.0)
        })
        .prop_map(|ec| DimensionlessMaterial::from_constants(&ec).expect("R1 > 0"))
}

/// Points of the lamination domain, boundary included.
pub fn arb_point() -> impl Strategy<Value = LaminationPoint> {
    (-1.0..=1.0f64, prop_oneof![Just(0.0), 0.0..=1.0f64]).prop_map(|(x3, u)| {
        let lo = 2.0 * x3 * x3 - 1.0;
        LaminationPoint::new(x3, if u == 0.0 { lo } else { lo + u * (1.0 - lo) })
    })
}

pub fn k0(tau0: f64, tau1: f64, rho: f64) -> DimensionlessMaterial {
    DimensionlessMaterial::new(tau0, tau1, rho, Orthotropy::K0)
}
