//! Φ-weighted distances between FNNNs.
//!
//! Both distances see the membership degrees only through
//! `Φ = (1 + t³ + i³ − f³) / 3`, which scales the normal parameters before
//! they are compared. Differences are taken in absolute value before cubing,
//! so the Euclidean radicand is never negative.

use crate::math::cube;
use crate::number::{Fnnn, MembershipTriple, NormalParams};

/// `(1 + t³ + i³ − f³) / 3`, always in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Phi(f64);

impl Phi {
    pub fn value(self) -> f64 {
        self.0
    }
}

pub fn phi(mu: &MembershipTriple) -> Phi {
    Phi(((1.0 + cube(mu.t()) + cube(mu.i()) - cube(mu.f())) / 3.0).clamp(0.0, 1.0))
}

/// Absolute differences of the Φ-weighted (η, ξ).
fn weighted_gaps(a: &Fnnn, b: &Fnnn) -> (f64, f64) {
    let pa = phi(&a.mu()).value();
    let pb = phi(&b.mu()).value();
    (
        libm::fabs(pa * a.eta() - pb * b.eta()),
        libm::fabs(pa * a.xi() - pb * b.xi()),
    )
}

/// `(1/3)·(|Φa·ηa − Φb·ηb| + (1/3)·|Φa·ξa − Φb·ξb|)`.
pub fn hamming(a: &Fnnn, b: &Fnnn) -> f64 {
    let (de, dx) = weighted_gaps(a, b);
    (de + dx / 3.0) / 3.0
}

/// `(1/3)·(|Φa·ηa − Φb·ηb|³ + (1/3)·|Φa·ξa − Φb·ξb|³)^(1/3)`.
pub fn euclidean(a: &Fnnn, b: &Fnnn) -> f64 {
    let (de, dx) = weighted_gaps(a, b);
    libm::cbrt(cube(de) + cube(dx) / 3.0) / 3.0
}

/// `(|η₁ − η₂|³ + (1/3)·|ξ₁ − ξ₂|³)^(1/3)` between bare normal parameters.
pub fn normal_distance(p: &NormalParams, q: &NormalParams) -> f64 {
    let de = libm::fabs(p.eta() - q.eta());
    let dx = libm::fabs(p.xi() - q.xi());
    libm::cbrt(cube(de) + cube(dx) / 3.0)
}

/// Distance used by the ranking pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Metric {
    #[default]
    Hamming,
    Euclidean,
}

impl Metric {
    pub fn distance(self, a: &Fnnn, b: &Fnnn) -> f64 {
        match self {
            Metric::Hamming => hamming(a, b),
            Metric::Euclidean => euclidean(a, b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Euclidean => "euclidean",
        }
    }
}

impl core::str::FromStr for Metric {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "hamming" => Ok(Metric::Hamming),
            "euclidean" => Ok(Metric::Euclidean),
            _ => Err(()),
        }
    }
}
