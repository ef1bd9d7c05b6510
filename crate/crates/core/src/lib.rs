//! Analysis and optimization of the in-plane Poisson's ratio of orthotropic,
//! uncoupled laminates made of identical plies, in the polar formalism.
//!
//! The pipeline is: ply engineering constants → reduced stiffness → polar
//! invariants → dimensionless material `(τ0, τ1, ρ, K)`; a laminate is then a
//! point `(ξ3, ξ1)` of the lamination domain Ω.

pub mod auxetic;
pub mod catalog;
pub mod contour;
pub mod error;
pub mod laminate;
pub mod material;
pub mod search;

pub use auxetic::{
    boundary_zone_oracle, brute_force_oracle, eta, feasibility, feasibility_with, max_zone, min_nu12_at_point,
    min_nu12_global, min_nu12_global_with, DirectionalMinimum, FeasibilityResult, GlobalSearch, MaxZoneResult,
    MinNuResult, OracleGrid,
};
pub use catalog::{MaterialDatabase, MaterialRecord};
pub use error::{Error, Result};
pub use laminate::{
    angle_ply_point, delta_from_point, in_domain, lambda_fn, lamination_parameters, nu12_laminate, psi,
    zone_from_lambda, AuxeticZone, LaminationParameters, LaminationPoint, StackingSequence,
};
pub use material::{
    compliance_polar, determinant_delta, dimensionless, nu12_ply, polar_from_stiffness, reduce_stiffness,
    DimensionlessMaterial, EngineeringConstants, Orthotropy, PolarParameters, ReducedStiffness,
};
