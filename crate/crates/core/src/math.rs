//! Real powers on [0, 1] with exact endpoints.

/// `base^exp` for `base >= 0`, `exp > 0`. `0^e = 0` and `1^e = 1` exactly.
#[inline]
pub(crate) fn pow(base: f64, exp: f64) -> f64 {
    if base == 0.0 {
        0.0
    } else if base == 1.0 || exp == 1.0 {
        base
    } else {
        libm::pow(base, exp)
    }
}

/// `base^(1/degree)`.
#[inline]
pub(crate) fn root(base: f64, degree: f64) -> f64 {
    pow(base, 1.0 / degree)
}

/// `1 − (1 − x)^w` for `x` in [0, 1], accurate when `x` is tiny.
#[inline]
pub(crate) fn one_minus_pow1m(x: f64, w: f64) -> f64 {
    -libm::expm1(w * libm::log1p(-x))
}

/// `(1 − x)^w` for `x` in [0, 1].
#[inline]
pub(crate) fn pow1m(x: f64, w: f64) -> f64 {
    libm::exp(w * libm::log1p(-x))
}

/// Below this, `x^k` is treated as negligible next to 1 and handled in
/// rescaled form so it cannot underflow.
pub(crate) const TINY: f64 = 1e-200;

/// Clamp tiny floating-point excursions back into [0, 1].
#[inline]
pub(crate) fn unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

#[inline]
pub(crate) fn cube(x: f64) -> f64 {
    x * x * x
}

#[inline]
pub(crate) fn is_integral(x: f64) -> bool {
    libm::floor(x) == x
}
