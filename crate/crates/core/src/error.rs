use core::fmt;

/// Membership component named in diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Component {
    Truth,
    Indeterminacy,
    Falsity,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Truth => "t",
            Component::Indeterminacy => "i",
            Component::Falsity => "f",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FnnError {
    /// Spread ξ must be strictly positive (and finite).
    SpreadNonPositive { xi: f64 },
    /// Location η must be a finite real.
    LocationNotFinite { eta: f64 },
    MembershipOutOfRange { component: Component, value: f64 },
    /// t³ + i³ + f³ exceeds 2.
    CubicSumExceeded { sum: f64 },
    LambdaOutOfRange { lambda: f64 },
    WeightNonPositive { index: usize, weight: f64 },
    /// Weights do not sum to 1 within tolerance.
    WeightInvalid { sum: f64 },
    LengthMismatch { expected: usize, found: usize },
    EmptyInput,
    /// Fractional power of a negative (or zero) location or spread.
    NormalDomainError { base: f64, exponent: f64 },
    /// Normalization divides by η, which must be positive.
    ZeroLocation { row: usize, col: usize },
    NegativeDistance { index: usize, value: f64 },
    ColumnMaxNonPositive { col: usize },
    NotNormalized,
    DegenerateCloseness { index: usize },
    SweepNotIncreasing { index: usize },
    /// Result of an operation overflowed or underflowed the `f64` range.
    NonFinite,
}

impl FnnError {
    /// Computation produced something undefined rather than the input being bad.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, FnnError::DegenerateCloseness { .. } | FnnError::NonFinite)
    }
}

impl fmt::Display for FnnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FnnError::SpreadNonPositive { xi } => write!(f, "spread must be positive, got xi = {xi}"),
            FnnError::LocationNotFinite { eta } => write!(f, "location must be finite, got eta = {eta}"),
            FnnError::MembershipOutOfRange { component, value } => {
                write!(f, "membership {component} = {value} outside [0, 1]")
            }
            FnnError::CubicSumExceeded { sum } => write!(f, "t^3 + i^3 + f^3 = {sum} exceeds 2"),
            FnnError::LambdaOutOfRange { lambda } => write!(f, "lambda must be >= 1, got {lambda}"),
            FnnError::WeightNonPositive { index, weight } => {
                write!(f, "weight #{} must be positive, got {weight}", index + 1)
            }
            FnnError::WeightInvalid { sum } => write!(f, "weights sum to {sum}, expected 1"),
            FnnError::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            FnnError::EmptyInput => f.write_str("empty input"),
            FnnError::NormalDomainError { base, exponent } => {
                write!(f, "cannot raise {base} to the fractional power {exponent}")
            }
            FnnError::ZeroLocation { row, col } => {
                write!(f, "location must be positive at row {}, column {}", row + 1, col + 1)
            }
            FnnError::NegativeDistance { index, value } => {
                write!(f, "distance #{} is negative or undefined ({value})", index + 1)
            }
            FnnError::ColumnMaxNonPositive { col } => {
                write!(f, "column {} has no positive maximum", col + 1)
            }
            FnnError::NotNormalized => f.write_str("decision matrix has not been normalized"),
            FnnError::DegenerateCloseness { index } => {
                write!(f, "alternative #{} is at zero distance from both ideals", index + 1)
            }
            FnnError::SweepNotIncreasing { index } => {
                write!(f, "lambda values must be strictly increasing (entry #{})", index + 1)
            }
            FnnError::NonFinite => f.write_str("computation left the representable floating-point range"),
        }
    }
}

impl core::error::Error for FnnError {}
