use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-physical material: {0}")]
    NonPhysical(String),

    /// R1 vanishes, so the dimensionless ratios do not exist.
    #[error("anisotropic modulus R1 is zero; dimensionless parameters are undefined")]
    SquareSymmetric,

    #[error("stiffness determinant is not positive (delta = {0})")]
    NonPositiveDeterminant(f64),

    /// The denominator of the Poisson's ratio vanished, i.e. S11(theta) = 0.
    #[error("Poisson's ratio has a pole at theta = {theta} rad (material is not positive definite)")]
    Pole { theta: f64 },

    #[error("lamination point ({xi3}, {xi1}) lies outside the lamination domain")]
    OutOfDomain { xi3: f64, xi1: f64 },

    #[error(
        "lamination point ({xi3}, {xi1}) is not on the parabolic boundary (gap {gap:e}); no angle-ply realizes it"
    )]
    NotOnBoundary { xi3: f64, xi1: f64, gap: f64 },

    #[error("lambda is undefined at ({xi3}, {xi1}): xi3^2 equals (-1)^K tau1 rho xi1")]
    DegenerateLambda { xi3: f64, xi1: f64 },

    #[error("angle {0} rad is outside the admissible range")]
    AngleOutOfRange(f64),

    #[error("stacking sequence is empty")]
    EmptyStack,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("no materials")]
    NoMaterials,

    #[error("unknown material `{0}`")]
    UnknownMaterial(String),

    #[error("{0}")]
    Io(String),
}
