//! Weighted aggregation operators in closed form.
//!
//! | operator | normal part                     | t            | i            | f            |
//! |----------|---------------------------------|--------------|--------------|--------------|
//! | FNNWA    | `Σωη`, `Σωξ`                    | prob. mean 3Λ | prob. mean Λ | `Πf^ω`       |
//! | FNNWG    | `Πη^ω`, `Πξ^ω`                  | `Πt^ω`       | prob. mean Λ | prob. mean 3Λ |
//! | GFNNWA   | `(Σωη^Λ)^(1/Λ)`                 | prob. mean 3Λ² | prob. mean Λ | nested     |
//! | GFNNWG   | `(1/Λ)·Π(Λη)^ω`                 | nested       | prob. mean Λ | prob. mean 3Λ² |
//!
//! "prob. mean k" is `(1 − Π(1 − x^k)^ω)^(1/k)`. Each closed form equals the
//! corresponding composition of [`scale`](crate::scale), [`power`](crate::power),
//! [`boxplus`](crate::boxplus) and [`boxtimes`](crate::boxtimes).

use alloc::vec::Vec;

use crate::error::FnnError;
use crate::math::{one_minus_pow1m, pow, pow1m, root, unit, TINY};
use crate::number::{Fnnn, Lambda, MembershipTriple, NormalParams};
use crate::ops::real_pow;
use crate::Result;

/// Tolerance on `Σω = 1`.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

/// Strictly positive weights summing to 1.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        let sum = Self::check_entries(&weights)?;
        if libm::fabs(sum - 1.0) > WEIGHT_SUM_TOLERANCE {
            return Err(FnnError::WeightInvalid { sum });
        }
        Ok(Self(weights))
    }

    /// Divides by the sum instead of rejecting an unnormalized vector.
    pub fn renormalized(mut weights: Vec<f64>) -> Result<Self> {
        let sum = Self::check_entries(&weights)?;
        if !sum.is_finite() {
            return Err(FnnError::WeightInvalid { sum });
        }
        weights.iter_mut().for_each(|w| *w /= sum);
        Ok(Self(weights))
    }

    /// Equal weights `1/n`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(FnnError::EmptyInput);
        }
        Ok(Self(alloc::vec![1.0 / n as f64; n]))
    }

    fn check_entries(weights: &[f64]) -> Result<f64> {
        if weights.is_empty() {
            return Err(FnnError::EmptyInput);
        }
        for (index, &weight) in weights.iter().enumerate() {
            if !(weight > 0.0) || !weight.is_finite() {
                return Err(FnnError::WeightNonPositive { index, weight });
            }
        }
        Ok(weights.iter().sum())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.0.iter().copied()
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = FnnError;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        WeightVector::new(value)
    }
}

/// Which aggregation operator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Operator {
    #[default]
    Fnnwa,
    Fnnwg,
    Gfnnwa,
    Gfnnwg,
}

impl Operator {
    pub const ALL: [Operator; 4] = [Operator::Fnnwa, Operator::Fnnwg, Operator::Gfnnwa, Operator::Gfnnwg];

    pub fn apply(self, items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
        match self {
            Operator::Fnnwa => fnnwa(items, w, lam),
            Operator::Fnnwg => fnnwg(items, w, lam),
            Operator::Gfnnwa => gfnnwa(items, w, lam),
            Operator::Gfnnwg => gfnnwg(items, w, lam),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Operator::Fnnwa => "fnnwa",
            Operator::Fnnwg => "fnnwg",
            Operator::Gfnnwa => "gfnnwa",
            Operator::Gfnnwg => "gfnnwg",
        }
    }
}

impl core::str::FromStr for Operator {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        Operator::ALL
            .into_iter()
            .find(|op| op.name().eq_ignore_ascii_case(s))
            .ok_or(())
    }
}

fn check_lengths(items: &[Fnnn], w: &WeightVector) -> Result<()> {
    if items.is_empty() {
        return Err(FnnError::EmptyInput);
    }
    if items.len() != w.len() {
        return Err(FnnError::LengthMismatch { expected: w.len(), found: items.len() });
    }
    Ok(())
}

/// `(1 − Π(1 − x_i^k)^ω_i)^(1/k)`, summed in log space.
fn prob_mean(xs: impl Iterator<Item = f64> + Clone, w: &WeightVector, k: f64) -> f64 {
    let top = xs.clone().fold(0.0, f64::max);
    if top == 0.0 {
        return 0.0;
    }
    if pow(top, k) < TINY {
        // Every x^k is negligible next to 1; the mean reduces to a power mean.
        let s: f64 = xs.zip(w.iter()).map(|(x, wi)| wi * pow(x / top, k)).sum();
        return unit(top * root(s, k));
    }
    let s: f64 = xs.zip(w.iter()).map(|(x, wi)| wi * libm::log1p(-pow(x, k))).sum();
    unit(root(-libm::expm1(s), k))
}

/// `ln(1 − (1 − x^k)^Λ)`.
fn ln_one_minus_pow1m(x: f64, k: f64, l: f64) -> f64 {
    let y = pow(x, k);
    if y == 0.0 && x > 0.0 {
        return libm::log(l) + k * libm::log(x);
    }
    if y < TINY {
        return libm::log(l * y);
    }
    let rest = pow1m(y, l);
    if rest < 0.5 {
        libm::log1p(-rest)
    } else {
        libm::log(one_minus_pow1m(y, l))
    }
}

/// `(1 − (1 − Π(1 − (1 − x_i^{3Λ})^Λ)^ω_i)^(1/Λ))^(1/(3Λ))`.
fn nested_mean(xs: impl Iterator<Item = f64>, w: &WeightVector, l: f64) -> f64 {
    let k = 3.0 * l;
    // s = ln F^{3Λ} = Σ ω ln(1 − (1 − x^{3Λ})^Λ)
    let s: f64 = xs.zip(w.iter()).map(|(x, wi)| wi * ln_one_minus_pow1m(x, k, l)).sum();
    if s == f64::NEG_INFINITY {
        return 0.0;
    }
    if libm::exp(s) < TINY {
        // 1 − (1 − F)^{1/Λ} = F/Λ to within a relative O(F).
        return unit(libm::exp((s - libm::log(l)) / k));
    }
    // ln(1 − F^{3Λ}), split to stay accurate on both ends.
    let ln_one_minus_f3 = if s < -core::f64::consts::LN_2 {
        libm::log1p(-libm::exp(s))
    } else {
        libm::log(-libm::expm1(s))
    };
    let inner = -libm::expm1(ln_one_minus_f3 / l);
    unit(root(inner, k))
}

/// `Π x_i^ω_i`.
fn weighted_product(xs: impl Iterator<Item = f64>, w: &WeightVector) -> f64 {
    xs.zip(w.iter()).map(|(x, wi)| pow(x, wi)).product()
}

/// `Π x_i^ω_i` for locations, which may be negative.
fn location_product(xs: impl Iterator<Item = f64>, w: &WeightVector) -> Result<f64> {
    xs.zip(w.iter()).try_fold(1.0, |acc, (x, wi)| Ok(acc * real_pow(x, wi)?))
}

fn finish(eta: f64, xi: f64, t: f64, i: f64, f: f64) -> Result<Fnnn> {
    if !eta.is_finite() || !xi.is_finite() || !(xi > 0.0) {
        return Err(FnnError::NonFinite);
    }
    Ok(Fnnn::from_parts(NormalParams::from_raw(eta, xi), MembershipTriple::from_unit(t, i, f)))
}

/// Weighted averaging operator.
pub fn fnnwa(items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
    check_lengths(items, w)?;
    let l = lam.get();
    let eta = items.iter().zip(w.iter()).map(|(a, wi)| wi * a.eta()).sum();
    let xi = items.iter().zip(w.iter()).map(|(a, wi)| wi * a.xi()).sum();
    finish(
        eta,
        xi,
        prob_mean(items.iter().map(Fnnn::t), w, 3.0 * l),
        prob_mean(items.iter().map(Fnnn::i), w, l),
        weighted_product(items.iter().map(Fnnn::f), w),
    )
}

/// Weighted geometric operator.
pub fn fnnwg(items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
    check_lengths(items, w)?;
    let l = lam.get();
    finish(
        location_product(items.iter().map(Fnnn::eta), w)?,
        weighted_product(items.iter().map(Fnnn::xi), w),
        weighted_product(items.iter().map(Fnnn::t), w),
        prob_mean(items.iter().map(Fnnn::i), w, l),
        prob_mean(items.iter().map(Fnnn::f), w, 3.0 * l),
    )
}

/// Generalized weighted averaging operator `(Σ ω_i L_i^Λ)^(1/Λ)`.
pub fn gfnnwa(items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
    check_lengths(items, w)?;
    let l = lam.get();
    let power_mean = |xs: &mut dyn Iterator<Item = f64>| -> Result<f64> {
        let mut sum = 0.0;
        for (x, wi) in xs.zip(w.iter()) {
            sum += wi * real_pow(x, l)?;
        }
        real_pow(sum, 1.0 / l)
    };
    finish(
        power_mean(&mut items.iter().map(Fnnn::eta))?,
        power_mean(&mut items.iter().map(Fnnn::xi))?,
        prob_mean(items.iter().map(Fnnn::t), w, 3.0 * l * l),
        prob_mean(items.iter().map(Fnnn::i), w, l),
        nested_mean(items.iter().map(Fnnn::f), w, l),
    )
}

/// Generalized weighted geometric operator `(1/Λ)·Π (Λ·L_i)^ω_i`.
pub fn gfnnwg(items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
    check_lengths(items, w)?;
    let l = lam.get();
    finish(
        location_product(items.iter().map(|a| l * a.eta()), w)? / l,
        weighted_product(items.iter().map(|a| l * a.xi()), w) / l,
        nested_mean(items.iter().map(Fnnn::t), w, l),
        prob_mean(items.iter().map(Fnnn::i), w, l),
        prob_mean(items.iter().map(Fnnn::f), w, 3.0 * l * l),
    )
}
