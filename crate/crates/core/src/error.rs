//! Error type shared by all physics modules.

use core::fmt;

/// Everything that can go wrong in the physics layer.
///
/// Variants mirror the failure modes of the individual operations; the CLI
/// maps them onto exit codes.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// A position lies outside a billiard boundary.
    PointOutsideBilliard,
    /// Requested energy lies below the potential at the given point.
    ClassicallyForbidden,
    /// Energy below the potential minimum; no classical turning point.
    NoTurningPoint,
    /// Adaptive quadrature failed to reach the requested tolerance.
    QuadratureFailure,
    /// Enlarging the basis still moves the requested level.
    BasisNotConverged,
    /// Model has no main-shell structure.
    NoShellStructure,
    /// Requested N would split a degenerate level.
    OpenShell { n: u64 },
    /// Grid point outside the model domain.
    GridOutsideDomain,
    /// Root bracketing failed in a bisection solve.
    RootNotBracketed,
    /// Density argument was negative.
    NegativeDensity,
    /// Two profiles live on different grids.
    GridMismatch,
    /// Classical momentum below the safe threshold; regularization required.
    TurningPointSingularity,
    /// Radial caustic at/near r = 0; the center formula must be used instead.
    CausticSingularity,
    /// An image point coincides with the source point (zero-length orbit).
    DegenerateImage,
    /// V'(turning point) must be positive for the linearization.
    SlopeNonpositive,
    /// 1 - d/R_curv <= 0 in the curved-wall Friedel formula.
    CurvatureDomain,
    /// The radial Airy form is written out only for D = 3.
    UnsupportedDimension { d: u32 },
    /// Bisection on the chemical potential could not bracket a root.
    ChemicalPotentialNotBracketed,
    /// Thermal occupations do not decay below tolerance within the spectrum.
    SpectrumTruncationTooSmall,
    /// Argument outside a special function's supported domain.
    DomainError,
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PointOutsideBilliard => write!(f, "point lies outside the billiard boundary"),
            Self::ClassicallyForbidden => {
                write!(f, "energy below the potential: classically forbidden point")
            }
            Self::NoTurningPoint => write!(f, "energy below the potential minimum"),
            Self::QuadratureFailure => write!(f, "adaptive quadrature did not reach tolerance"),
            Self::BasisNotConverged => {
                write!(f, "basis enlargement still moves the requested level")
            }
            Self::NoShellStructure => write!(f, "model has no main-shell structure"),
            Self::OpenShell { n } => {
                write!(f, "N = {n} would split a degenerate level (closed shells only)")
            }
            Self::GridOutsideDomain => write!(f, "grid point outside the model domain"),
            Self::RootNotBracketed => write!(f, "root not bracketed"),
            Self::NegativeDensity => write!(f, "negative density"),
            Self::GridMismatch => write!(f, "profiles live on different grids"),
            Self::TurningPointSingularity => {
                write!(f, "momentum too small: turning-point singularity")
            }
            Self::CausticSingularity => write!(f, "radial caustic: use the center regularization"),
            Self::DegenerateImage => write!(f, "image point coincides with the source point"),
            Self::SlopeNonpositive => write!(f, "potential slope at the turning point not positive"),
            Self::CurvatureDomain => write!(f, "distance exceeds the wall curvature radius"),
            Self::UnsupportedDimension { d } => write!(f, "dimension D = {d} not supported here"),
            Self::ChemicalPotentialNotBracketed => {
                write!(f, "chemical potential not bracketed")
            }
            Self::SpectrumTruncationTooSmall => {
                write!(f, "spectrum too short for the requested temperature")
            }
            Self::DomainError => write!(f, "argument outside the supported domain"),
        }
    }
}

pub type Result<T> = core::result::Result<T, CoreError>;
