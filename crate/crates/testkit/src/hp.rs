//! Extended-precision FNNN arithmetic for the reference folds.
//!
//! Every primitive is written straight from its definition, with no rescaling
//! or log-space tricks. The working precision is wide enough that terms such as
//! `1 - (1 - x^k)^w` keep their significant digits even when `x` is close to 1.

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use fnnn_core::{FnnError, Fnnn, MembershipTriple, NormalParams};

/// Working precision in bits.
pub const PRECISION: usize = 192;
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

/// A real number carried at [`PRECISION`] bits.
#[derive(Debug, Clone)]
pub struct Hp(BigFloat);

impl Hp {
    pub fn from_f64(x: f64) -> Self {
        Hp(BigFloat::from_f64(x, PRECISION))
    }

    pub fn zero() -> Self {
        Self::from_f64(0.0)
    }

    pub fn one() -> Self {
        Self::from_f64(1.0)
    }

    pub fn add(&self, o: &Hp) -> Hp {
        Hp(self.0.add(&o.0, PRECISION, RM))
    }

    pub fn sub(&self, o: &Hp) -> Hp {
        Hp(self.0.sub(&o.0, PRECISION, RM))
    }

    pub fn mul(&self, o: &Hp) -> Hp {
        Hp(self.0.mul(&o.0, PRECISION, RM))
    }

    pub fn div(&self, o: &Hp) -> Hp {
        Hp(self.0.div(&o.0, PRECISION, RM))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    /// `self^e`. A negative base is only accepted for integral `e`.
    pub fn pow(&self, e: f64) -> Hp {
        self.pow_at(e, PRECISION)
    }

    fn pow_at(&self, e: f64, p: usize) -> Hp {
        if e == 0.0 {
            return Hp::one();
        }
        if e == 1.0 {
            return self.clone();
        }
        if self.is_zero() {
            return Hp::zero();
        }
        if self.is_negative() {
            assert!(e.fract() == 0.0, "negative base with fractional exponent");
            let mag = Hp(self.0.neg()).pow_at(e, p);
            let odd = (e.abs() % 2.0) == 1.0;
            return if odd { Hp(mag.0.neg()) } else { mag };
        }
        if e.fract() == 0.0 && e > 0.0 && e < 1e6 {
            return Hp(self.0.powi(e as usize, p, RM));
        }
        if self.0 == BigFloat::from_f64(1.0, p) {
            return Hp::one();
        }
        // exp(e·ln x): the library's own pow does not terminate on exact results
        let n = BigFloat::from_f64(e, p);
        CONSTS.with(|cc| {
            let cc = &mut cc.borrow_mut();
            let ln = self.0.ln(p + 64, RM, cc);
            Hp(ln.mul(&n, p + 64, RM).exp(p, RM, cc))
        })
    }

    /// Binary exponent, so that `self = 0.m × 2^exponent` with `m ∈ [1/2, 1)`.
    fn exponent(&self) -> i64 {
        self.0.exponent().map_or(0, i64::from)
    }

    /// Nearest `f64`, to within one unit in the last place.
    pub fn to_f64(&self) -> f64 {
        let Some((words, _, sign, exp, _)) = self.0.as_raw_parts() else {
            return f64::NAN;
        };
        let Some(&top) = words.last() else {
            return 0.0;
        };
        if top == 0 {
            return 0.0;
        }
        // value = 0.m × 2^exp, top word holds the leading 64 bits of m
        let mut v = top as f64;
        let mut shift = exp as i64 - 64;
        if shift < -1200 {
            return 0.0;
        }
        while shift < -1000 {
            v *= 2f64.powi(-1000);
            shift += 1000;
        }
        while shift > 1000 {
            v *= 2f64.powi(1000);
            shift -= 1000;
        }
        v *= 2f64.powi(shift as i32);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }
}

/// An FNNN whose five components are carried at extended precision.
#[derive(Debug, Clone)]
pub struct HpFnnn {
    pub eta: Hp,
    pub xi: Hp,
    pub t: Hp,
    pub i: Hp,
    pub f: Hp,
}

impl From<&Fnnn> for HpFnnn {
    fn from(a: &Fnnn) -> Self {
        HpFnnn {
            eta: Hp::from_f64(a.eta()),
            xi: Hp::from_f64(a.xi()),
            t: Hp::from_f64(a.t()),
            i: Hp::from_f64(a.i()),
            f: Hp::from_f64(a.f()),
        }
    }
}

impl HpFnnn {
    /// Rounds back to `f64`. Memberships are clamped into `[0, 1]` to absorb
    /// the final rounding; the cubic bound is not re-checked.
    pub fn to_fnnn(&self) -> Result<Fnnn, FnnError> {
        let u = |x: &Hp| x.to_f64().clamp(0.0, 1.0);
        let eta = self.eta.to_f64();
        let xi = self.xi.to_f64();
        if !eta.is_finite() || !xi.is_finite() {
            return Err(FnnError::NonFinite);
        }
        Ok(Fnnn::from_parts(
            NormalParams::new(eta, xi)?,
            MembershipTriple::new(u(&self.t), u(&self.i), u(&self.f))?,
        ))
    }
}

// (x^k + y^k - x^k y^k)^(1/k)
fn rps(x: &Hp, y: &Hp, k: f64) -> Hp {
    let (a, b) = (x.pow(k), y.pow(k));
    a.add(&b).sub(&a.mul(&b)).pow(1.0 / k)
}

// (1 - (1 - x^k)^w)^(1/k). When x^k is tiny the inner subtraction would
// round to 1, so it runs with enough extra bits to keep x^k.
fn rw(x: &Hp, w: f64, k: f64) -> Hp {
    let y = x.pow(k);
    let p = PRECISION + (-y.exponent()).max(0) as usize;
    let one = Hp(BigFloat::from_f64(1.0, p));
    let inner = Hp(one.0.sub(&y.0, p, RM)).pow_at(w, p);
    Hp(one.0.sub(&inner.0, p, RM)).pow(1.0 / k)
}

pub fn boxplus(a: &HpFnnn, b: &HpFnnn, l: f64) -> HpFnnn {
    HpFnnn {
        eta: a.eta.add(&b.eta),
        xi: a.xi.add(&b.xi),
        t: rps(&a.t, &b.t, 3.0 * l),
        i: rps(&a.i, &b.i, l),
        f: a.f.mul(&b.f),
    }
}

pub fn boxtimes(a: &HpFnnn, b: &HpFnnn, l: f64) -> HpFnnn {
    HpFnnn {
        eta: a.eta.mul(&b.eta),
        xi: a.xi.mul(&b.xi),
        t: a.t.mul(&b.t),
        i: rps(&a.i, &b.i, l),
        f: rps(&a.f, &b.f, 3.0 * l),
    }
}

pub fn scale(w: f64, a: &HpFnnn, l: f64) -> HpFnnn {
    let hw = Hp::from_f64(w);
    HpFnnn {
        eta: hw.mul(&a.eta),
        xi: hw.mul(&a.xi),
        t: rw(&a.t, w, 3.0 * l),
        i: rw(&a.i, w, l),
        f: a.f.pow(w),
    }
}

pub fn power(w: f64, a: &HpFnnn, l: f64) -> HpFnnn {
    HpFnnn {
        eta: a.eta.pow(w),
        xi: a.xi.pow(w),
        t: a.t.pow(w),
        i: rw(&a.i, w, l),
        f: rw(&a.f, w, 3.0 * l),
    }
}
