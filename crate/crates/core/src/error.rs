use std::fmt;

/// Error type shared by every module of the crate.
///
/// Variants are deliberately fine-grained: the CLI maps each one to a stable
/// machine-readable kind string via [`Error::kind`], so shell-level callers
/// can branch on failures without parsing prose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An SL(2) slot action was requested with a matrix of determinant ≠ 1.
    NonUnimodular,
    /// A cubic curve operation received a curve with leading coefficient 0.
    DegenerateCubic,
    /// The curve (or quartic) has vanishing discriminant where a nonsingular
    /// one is required.
    SingularCurve,
    /// A point failed the curve-membership check.
    PointNotOnCurve,
    /// The point at infinity was supplied where an affine point is required.
    NotAffine,
    /// Bridge parameters with k·m·p = 0 or r·s·t = 0.
    DegenerateParams,
    /// The uv-curve has f = 0, so completing the square does not yield a cubic.
    NotCubic,
    /// A rational square root was required but the value is not a square.
    NotASquare,
    /// Inversion of the uv-transformation requires g = √d ≠ 0.
    ZeroG,
    /// The uv point map is singular on the line v = x = 0.
    VZero,
    /// The exhaustive cube-corner search found no assignment reproducing the
    /// eight-variable curve equation. This would indicate a broken corner
    /// convention and must abort dependent features.
    NoAssignmentFound,
    /// The identically-zero quartic has no root structure to classify.
    ZeroQuartic,
    /// A division by a structurally-zero quantity in parameter recovery.
    ZeroDivisor,
    /// The supplied point does not satisfy w² = Q(x, 1).
    PointNotOnQuartic,
    /// quartic-to-cubic reduction requires Δ ≠ 0.
    SingularQuartic,
    /// A trilinear system was built from a hypermatrix with non-integer entries.
    NonIntegerEntries,
    /// Malformed scalar/vector text input (usage error).
    Parse(String),
    /// Malformed or wrong-shape JSON input (usage error).
    Json(String),
}

impl Error {
    /// Stable machine-readable kind string (the variant name).
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonUnimodular => "NonUnimodular",
            Error::DegenerateCubic => "DegenerateCubic",
            Error::SingularCurve => "SingularCurve",
            Error::PointNotOnCurve => "PointNotOnCurve",
            Error::NotAffine => "NotAffine",
            Error::DegenerateParams => "DegenerateParams",
            Error::NotCubic => "NotCubic",
            Error::NotASquare => "NotASquare",
            Error::ZeroG => "ZeroG",
            Error::VZero => "VZero",
            Error::NoAssignmentFound => "NoAssignmentFound",
            Error::ZeroQuartic => "ZeroQuartic",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::PointNotOnQuartic => "PointNotOnQuartic",
            Error::SingularQuartic => "SingularQuartic",
            Error::NonIntegerEntries => "NonIntegerEntries",
            Error::Parse(_) => "Parse",
            Error::Json(_) => "Json",
        }
    }

    /// True for errors caused by malformed input rather than domain geometry;
    /// the CLI exits 2 for these and 1 for domain errors.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Json(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnimodular => write!(f, "matrix determinant is not 1"),
            Error::DegenerateCubic => write!(f, "cubic leading coefficient is zero"),
            Error::SingularCurve => write!(f, "curve is singular (discriminant is zero)"),
            Error::PointNotOnCurve => write!(f, "point does not lie on the curve"),
            Error::NotAffine => write!(f, "expected an affine point, got the point at infinity"),
            Error::DegenerateParams => write!(f, "bridge parameters require k·m·p ≠ 0 and r·s·t ≠ 0"),
            Error::NotCubic => write!(f, "uv-curve with f = 0 does not reduce to a cubic"),
            Error::NotASquare => write!(f, "value is not the square of a rational"),
            Error::ZeroG => write!(f, "inversion requires g = √d ≠ 0"),
            Error::VZero => write!(f, "uv point map is singular at x = 0"),
            Error::NoAssignmentFound => write!(f, "no cube-corner assignment reproduces the curve equation"),
            Error::ZeroQuartic => write!(f, "the zero quartic has no root structure"),
            Error::ZeroDivisor => write!(f, "division by zero in parameter recovery"),
            Error::PointNotOnQuartic => write!(f, "point does not satisfy w² = Q(x, 1)"),
            Error::SingularQuartic => write!(f, "quartic reduction requires a nonzero discriminant"),
            Error::NonIntegerEntries => write!(f, "trilinear systems require integer hypermatrix entries"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Json(msg) => write!(f, "json error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
