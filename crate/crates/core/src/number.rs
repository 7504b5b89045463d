//! FNNN value types.

use crate::error::{Component, FnnError};
use crate::math::{cube, is_integral};
use crate::Result;

/// Upper bound on `t³ + i³ + f³` for a valid input FNNN.
pub const CUBIC_SUM_BOUND: f64 = 2.0;

/// Truth, indeterminacy and falsity degrees, each in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MembershipTriple {
    t: f64,
    i: f64,
    f: f64,
}

impl MembershipTriple {
    pub fn new(t: f64, i: f64, f: f64) -> Result<Self> {
        for (component, value) in [
            (Component::Truth, t),
            (Component::Indeterminacy, i),
            (Component::Falsity, f),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(FnnError::MembershipOutOfRange { component, value });
            }
        }
        Ok(Self { t, i, f })
    }

    /// Build from values already known to lie in [0, 1].
    pub(crate) const fn from_unit(t: f64, i: f64, f: f64) -> Self {
        Self { t, i, f }
    }

    /// ⟨1, 1, 0⟩, the membership of the positive ideal.
    pub const POSITIVE: Self = Self::from_unit(1.0, 1.0, 0.0);
    /// ⟨0, 0, 1⟩, the membership of the negative ideal.
    pub const NEGATIVE: Self = Self::from_unit(0.0, 0.0, 1.0);

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn i(&self) -> f64 {
        self.i
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn cubic_sum(&self) -> f64 {
        cube(self.t) + cube(self.i) + cube(self.f)
    }
}

/// Location η and strictly positive spread ξ of a normal fuzzy number.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NormalParams {
    eta: f64,
    xi: f64,
}

impl NormalParams {
    pub fn new(eta: f64, xi: f64) -> Result<Self> {
        if !eta.is_finite() {
            return Err(FnnError::LocationNotFinite { eta });
        }
        if !(xi > 0.0) || !xi.is_finite() {
            return Err(FnnError::SpreadNonPositive { xi });
        }
        Ok(Self { eta, xi })
    }

    /// No validation; used for results of arithmetic on valid values.
    pub(crate) const fn from_raw(eta: f64, xi: f64) -> Self {
        Self { eta, xi }
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }
}

/// A Fermatean neutrosophic normal number `⟨(η, ξ); t, i, f⟩`.
///
/// Values built with [`Fnnn::new`] satisfy `t³ + i³ + f³ ≤ 2`. Results of
/// arithmetic and aggregation only guarantee each degree lies in [0, 1]; the
/// cubic sum can drift above 2 and is exposed through
/// [`Fnnn::satisfies_cubic_bound`] as a diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(into = "RawFnnn", try_from = "RawFnnn"))]
pub struct Fnnn {
    normal: NormalParams,
    mu: MembershipTriple,
}

impl Fnnn {
    /// Validated constructor for user-supplied values.
    pub fn new(eta: f64, xi: f64, t: f64, i: f64, f: f64) -> Result<Self> {
        let normal = NormalParams::new(eta, xi)?;
        let mu = MembershipTriple::new(t, i, f)?;
        let sum = mu.cubic_sum();
        if sum > CUBIC_SUM_BOUND {
            return Err(FnnError::CubicSumExceeded { sum });
        }
        Ok(Self { normal, mu })
    }

    /// Combine parts without the cubic-sum check.
    pub fn from_parts(normal: NormalParams, mu: MembershipTriple) -> Self {
        Self { normal, mu }
    }

    pub fn normal(&self) -> NormalParams {
        self.normal
    }

    pub fn mu(&self) -> MembershipTriple {
        self.mu
    }

    pub fn eta(&self) -> f64 {
        self.normal.eta
    }

    pub fn xi(&self) -> f64 {
        self.normal.xi
    }

    pub fn t(&self) -> f64 {
        self.mu.t
    }

    pub fn i(&self) -> f64 {
        self.mu.i
    }

    pub fn f(&self) -> f64 {
        self.mu.f
    }

    /// `[η, ξ, t, i, f]`.
    pub fn components(&self) -> [f64; 5] {
        [self.eta(), self.xi(), self.t(), self.i(), self.f()]
    }

    pub fn cubic_sum(&self) -> f64 {
        self.mu.cubic_sum()
    }

    pub fn satisfies_cubic_bound(&self) -> bool {
        self.cubic_sum() <= CUBIC_SUM_BOUND
    }

    /// Membership degrees at the point `x`, scaled by the normal curve
    /// `g = exp(-(|x - η| / ξ)³)`:
    /// `(t·g, i·g, 1 - (1 - f)·g)`.
    pub fn membership_at(&self, x: f64) -> MembershipTriple {
        let z = libm::fabs(x - self.eta()) / self.xi();
        let g = if z.is_finite() { libm::exp(-cube(z)) } else { 0.0 };
        if g == 1.0 {
            return self.mu;
        }
        MembershipTriple::from_unit(self.t() * g, self.i() * g, 1.0 - (1.0 - self.f()) * g)
    }
}

/// Same as [`Fnnn::new`].
pub fn make_fnnn(eta: f64, xi: f64, t: f64, i: f64, f: f64) -> Result<Fnnn> {
    Fnnn::new(eta, xi, t, i, f)
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct RawFnnn {
    eta: f64,
    xi: f64,
    t: f64,
    i: f64,
    f: f64,
}

#[cfg(feature = "serde")]
impl From<Fnnn> for RawFnnn {
    fn from(v: Fnnn) -> Self {
        RawFnnn { eta: v.eta(), xi: v.xi(), t: v.t(), i: v.i(), f: v.f() }
    }
}

#[cfg(feature = "serde")]
impl TryFrom<RawFnnn> for Fnnn {
    type Error = FnnError;

    // Deserialized values may be aggregates, so only the componentwise checks apply.
    fn try_from(raw: RawFnnn) -> Result<Self> {
        Ok(Fnnn::from_parts(
            NormalParams::new(raw.eta, raw.xi)?,
            MembershipTriple::new(raw.t, raw.i, raw.f)?,
        ))
    }
}

/// Operation parameter Λ ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Lambda(f64);

impl Lambda {
    pub const ONE: Lambda = Lambda(1.0);

    pub fn new(lambda: f64) -> Result<Self> {
        if lambda >= 1.0 && lambda.is_finite() {
            Ok(Lambda(lambda))
        } else {
            Err(FnnError::LambdaOutOfRange { lambda })
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Integer Λ; fractional values work but are outside the usual domain.
    pub fn is_integral(self) -> bool {
        is_integral(self.0)
    }
}

impl TryFrom<f64> for Lambda {
    type Error = FnnError;

    fn try_from(value: f64) -> Result<Self> {
        Lambda::new(value)
    }
}

fn check_ffn(t: f64, f: f64) -> Result<()> {
    MembershipTriple::new(t, 0.0, f)?;
    let sum = cube(t) + cube(f);
    // FFN constraint t³ + f³ ≤ 1; report against the larger membership.
    if sum > 1.0 + 1e-12 {
        let (component, value) = if t >= f { (Component::Truth, t) } else { (Component::Falsity, f) };
        return Err(FnnError::MembershipOutOfRange { component, value });
    }
    Ok(())
}

/// Score `t³ − f³` of a Fermatean fuzzy number.
pub fn score_ffn(t: f64, f: f64) -> Result<f64> {
    check_ffn(t, f)?;
    Ok(cube(t) - cube(f))
}

/// Accuracy `t³ + f³` of a Fermatean fuzzy number.
pub fn accuracy_ffn(t: f64, f: f64) -> Result<f64> {
    check_ffn(t, f)?;
    Ok(cube(t) + cube(f))
}
