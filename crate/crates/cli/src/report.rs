use std::time::{SystemTime, UNIX_EPOCH};

use lamina_core::{FeasibilityResult, LaminationPoint, MaxZoneResult, MinNuResult};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    /// The command line that produced the report.
    pub command: Vec<String>,
    pub material: Option<usize>,
    pub material_name: Option<String>,
    pub results: RunResults,
    pub version: String,
    /// Unix seconds; `SOURCE_DATE_EPOCH` when set.
    pub timestamp: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum RunResults {
    Feasibility(XiDomain),
    MinNu(MinNuResult),
    MaxZone(MaxZoneResult),
    Nu12(Nu12Series),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct XiDomain {
    pub feasibility: FeasibilityResult,
    pub nu_min_point: Option<LaminationPoint>,
    pub zone_max_point: Option<LaminationPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Nu12Series {
    pub point: LaminationPoint,
    /// Angle-ply orientation in radians, when the point was given that way.
    pub delta: Option<f64>,
    /// Directions in radians.
    pub theta: Vec<f64>,
    pub nu12: Vec<f64>,
}

impl RunReport {
    pub fn new(command: Vec<String>, material: Option<(usize, String)>, results: RunResults) -> Self {
        let (material, material_name) = match material {
            Some((id, name)) => (Some(id), Some(name)),
            None => (None, None),
        };
        Self {
            command,
            material,
            material_name,
            results,
            version: env!("CARGO_PKG_VERSION").to_owned(),
            timestamp: timestamp(),
        }
    }
}

fn timestamp() -> u64 {
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or_else(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()))
}

/// Fixed-point formatting without a negative zero.
pub fn fixed(v: f64, decimals: usize) -> String {
    let s = format!("{v:.decimals$}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_owned()
    } else {
        s
    }
}

/// Lamination parameters and Poisson's ratios.
pub fn value(v: f64) -> String {
    fixed(v, 4)
}

/// Angles, given in radians, printed in degrees.
pub fn degrees(rad: f64) -> String {
    fixed(rad.to_degrees(), 1)
}
