//! Λ-parameterized primitive operations on FNNNs.
//!
//! `scale` and `power` take a free real weight `w` in addition to Λ; the
//! classical `Λ·L` and `L^Λ` are the special case `w = Λ`.

use crate::error::FnnError;
use crate::math::{is_integral, one_minus_pow1m, pow, root, unit, TINY};
use crate::number::{Fnnn, Lambda, MembershipTriple, NormalParams};
use crate::Result;

/// `a + b − a·b`.
#[inline]
fn prob_sum(a: f64, b: f64) -> f64 {
    a + b - a * b
}

/// `(x^k + y^k − x^k·y^k)^(1/k)`.
fn root_prob_sum(x: f64, y: f64, k: f64) -> f64 {
    let m = x.max(y);
    if m == 0.0 {
        return 0.0;
    }
    if pow(m, k) < TINY {
        // Both powers are negligible: rescale by the larger base.
        return unit(m * root(pow(x / m, k) + pow(y / m, k), k));
    }
    unit(root(prob_sum(pow(x, k), pow(y, k)), k))
}

/// `(1 − (1 − x^k)^w)^(1/k)`.
fn root_weighted(x: f64, w: f64, k: f64) -> f64 {
    let y = pow(x, k);
    if y < TINY {
        // 1 − (1 − y)^w = w·y to within a relative O(y).
        return unit(x * pow(w, 1.0 / k));
    }
    unit(root(one_minus_pow1m(y, w), k))
}

fn check_weight(w: f64) -> Result<()> {
    if w > 0.0 && w.is_finite() {
        Ok(())
    } else {
        Err(FnnError::WeightNonPositive { index: 0, weight: w })
    }
}

/// `a ⊞ b`.
pub fn boxplus(a: &Fnnn, b: &Fnnn, lam: Lambda) -> Fnnn {
    let l = lam.get();
    Fnnn::from_parts(
        NormalParams::from_raw(a.eta() + b.eta(), a.xi() + b.xi()),
        MembershipTriple::from_unit(
            root_prob_sum(a.t(), b.t(), 3.0 * l),
            root_prob_sum(a.i(), b.i(), l),
            a.f() * b.f(),
        ),
    )
}

/// `a ⊠ b`.
pub fn boxtimes(a: &Fnnn, b: &Fnnn, lam: Lambda) -> Fnnn {
    let l = lam.get();
    Fnnn::from_parts(
        NormalParams::from_raw(a.eta() * b.eta(), a.xi() * b.xi()),
        MembershipTriple::from_unit(
            a.t() * b.t(),
            root_prob_sum(a.i(), b.i(), l),
            root_prob_sum(a.f(), b.f(), 3.0 * l),
        ),
    )
}

/// Weighted scaling `w·a`.
pub fn scale(w: f64, a: &Fnnn, lam: Lambda) -> Result<Fnnn> {
    check_weight(w)?;
    let l = lam.get();
    Ok(Fnnn::from_parts(
        NormalParams::from_raw(w * a.eta(), w * a.xi()),
        MembershipTriple::from_unit(
            root_weighted(a.t(), w, 3.0 * l),
            root_weighted(a.i(), w, l),
            unit(pow(a.f(), w)),
        ),
    ))
}

/// Real power of a location or spread; fractional powers need a nonnegative base.
pub(crate) fn real_pow(base: f64, exp: f64) -> Result<f64> {
    if base < 0.0 && !is_integral(exp) {
        return Err(FnnError::NormalDomainError { base, exponent: exp });
    }
    Ok(if base < 0.0 { libm::pow(base, exp) } else { pow(base, exp) })
}

/// Weighted power `a^w`.
pub fn power(w: f64, a: &Fnnn, lam: Lambda) -> Result<Fnnn> {
    check_weight(w)?;
    let l = lam.get();
    Ok(Fnnn::from_parts(
        NormalParams::from_raw(real_pow(a.eta(), w)?, pow(a.xi(), w)),
        MembershipTriple::from_unit(
            unit(pow(a.t(), w)),
            root_weighted(a.i(), w, l),
            root_weighted(a.f(), w, 3.0 * l),
        ),
    ))
}
