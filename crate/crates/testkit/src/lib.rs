//! Reference implementations and random instances for checking `fnnn-core`.
//!
//! The `fold_*` functions evaluate each aggregation operator straight from its
//! definition, as a left fold of `⊞` / `⊠` over weighted `scale` / `power`
//! terms. The fold runs in the extended-precision arithmetic of [`hp`], which
//! shares no code with `fnnn_core`, and only the final result is rounded.

pub mod fixtures;
pub mod hp;

use fnnn_core::{FnnError, Fnnn, Lambda, WeightVector};
use hp::HpFnnn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Result<T> = std::result::Result<T, FnnError>;

fn check(items: &[Fnnn], w: &WeightVector) -> Result<()> {
    if items.is_empty() {
        return Err(FnnError::EmptyInput);
    }
    if items.len() != w.len() {
        return Err(FnnError::LengthMismatch { expected: w.len(), found: items.len() });
    }
    Ok(())
}

fn fold_with(
    terms: impl Iterator<Item = HpFnnn>,
    combine: impl Fn(&HpFnnn, &HpFnnn, f64) -> HpFnnn,
    l: f64,
) -> HpFnnn {
    terms.reduce(|prev, term| combine(&prev, &term, l)).expect("non-empty input")
}

fn lifted<'a>(
    items: &'a [Fnnn],
    w: &'a WeightVector,
) -> impl Iterator<Item = (HpFnnn, f64)> + 'a {
    items.iter().map(HpFnnn::from).zip(w.iter())
}

/// `ω₁L₁ ⊞ ω₂L₂ ⊞ … ⊞ ωₙLₙ`.
pub fn fold_fnnwa(items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
    check(items, w)?;
    let l = lam.get();
    fold_with(lifted(items, w).map(|(a, wi)| hp::scale(wi, &a, l)), hp::boxplus, l).to_fnnn()
}

/// `L₁^ω₁ ⊠ L₂^ω₂ ⊠ … ⊠ Lₙ^ωₙ`.
pub fn fold_fnnwg(items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
    check(items, w)?;
    let l = lam.get();
    fold_with(lifted(items, w).map(|(a, wi)| hp::power(wi, &a, l)), hp::boxtimes, l).to_fnnn()
}

/// `(ω₁L₁^Λ ⊞ … ⊞ ωₙLₙ^Λ)^(1/Λ)`.
pub fn fold_gfnnwa(items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
    check(items, w)?;
    let l = lam.get();
    let sum = fold_with(
        lifted(items, w).map(|(a, wi)| hp::scale(wi, &hp::power(l, &a, l), l)),
        hp::boxplus,
        l,
    );
    if sum.eta.is_negative() && l != 1.0 {
        return Err(FnnError::NormalDomainError { base: sum.eta.to_f64(), exponent: 1.0 / l });
    }
    hp::power(1.0 / l, &sum, l).to_fnnn()
}

/// `(1/Λ)·((ΛL₁)^ω₁ ⊠ … ⊠ (ΛLₙ)^ωₙ)`.
pub fn fold_gfnnwg(items: &[Fnnn], w: &WeightVector, lam: Lambda) -> Result<Fnnn> {
    check(items, w)?;
    let l = lam.get();
    let product = fold_with(
        lifted(items, w).map(|(a, wi)| hp::power(wi, &hp::scale(l, &a, l), l)),
        hp::boxtimes,
        l,
    );
    hp::scale(1.0 / l, &product, l).to_fnnn()
}

/// Applies one extended-precision primitive to `f64` inputs and rounds back.
pub fn hp_scale(w: f64, a: &Fnnn, lam: Lambda) -> Result<Fnnn> {
    hp::scale(w, &HpFnnn::from(a), lam.get()).to_fnnn()
}

/// See [`hp_scale`].
pub fn hp_power(w: f64, a: &Fnnn, lam: Lambda) -> Result<Fnnn> {
    hp::power(w, &HpFnnn::from(a), lam.get()).to_fnnn()
}

/// See [`hp_scale`].
pub fn hp_boxplus(a: &Fnnn, b: &Fnnn, lam: Lambda) -> Result<Fnnn> {
    hp::boxplus(&HpFnnn::from(a), &HpFnnn::from(b), lam.get()).to_fnnn()
}

/// See [`hp_scale`].
pub fn hp_boxtimes(a: &Fnnn, b: &Fnnn, lam: Lambda) -> Result<Fnnn> {
    hp::boxtimes(&HpFnnn::from(a), &HpFnnn::from(b), lam.get()).to_fnnn()
}

/// Sampling ranges for [`gen_fnnn`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FnnnGenConfig {
    /// η is drawn uniformly from `(lo, hi]`.
    pub eta_range: (f64, f64),
    /// ξ is drawn uniformly from `(lo, hi]`; `lo` must be ≥ 0.
    pub xi_range: (f64, f64),
    pub seed: u64,
}

impl Default for FnnnGenConfig {
    fn default() -> Self {
        Self { eta_range: (0.0, 1.0), xi_range: (0.0, 1.0), seed: 0x5EED }
    }
}

impl FnnnGenConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }
}

/// Seeded stream of valid FNNNs, weight vectors and Λ values.
#[derive(Debug, Clone)]
pub struct FnnnGen {
    cfg: FnnnGenConfig,
    rng: ChaCha8Rng,
}

impl FnnnGen {
    pub fn new(cfg: FnnnGenConfig) -> Self {
        Self { cfg, rng: ChaCha8Rng::seed_from_u64(cfg.seed) }
    }

    // (lo, hi]
    fn half_open(&mut self, (lo, hi): (f64, f64)) -> f64 {
        let u: f64 = self.rng.random();
        lo + (hi - lo) * (1.0 - u)
    }

    /// Rejection sampling of (t, i, f) under `t³ + i³ + f³ ≤ 2`.
    pub fn fnnn(&mut self) -> Fnnn {
        let eta = self.half_open(self.cfg.eta_range);
        let xi = self.half_open(self.cfg.xi_range);
        loop {
            let [t, i, f]: [f64; 3] = self.rng.random();
            if let Ok(v) = Fnnn::new(eta, xi, t, i, f) {
                return v;
            }
        }
    }

    pub fn fnnns(&mut self, count: usize) -> Vec<Fnnn> {
        (0..count).map(|_| self.fnnn()).collect()
    }

    /// Positive weights summing to 1, each at least `0.01 / n`.
    pub fn weights(&mut self, n: usize) -> WeightVector {
        let raw = (0..n).map(|_| 0.01 + self.rng.random::<f64>()).collect();
        WeightVector::renormalized(raw).expect("positive raw weights")
    }

    pub fn pick<T: Copy>(&mut self, options: &[T]) -> T {
        options[self.rng.random_range(0..options.len())]
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.random_range(lo..=hi_inclusive)
    }
}

/// `count` seeded FNNNs; identical seeds give identical lists.
pub fn gen_fnnn(cfg: FnnnGenConfig, count: usize) -> Vec<Fnnn> {
    FnnnGen::new(cfg).fnnns(count)
}

/// Largest componentwise absolute difference.
pub fn max_abs_diff(a: &Fnnn, b: &Fnnn) -> f64 {
    a.components()
        .iter()
        .zip(b.components())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// One random aggregation instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub items: Vec<Fnnn>,
    pub weights: WeightVector,
    pub lambda: Lambda,
}

/// The Λ values the oracle suites cover.
pub const ORACLE_LAMBDAS: [f64; 5] = [1.0, 2.0, 3.0, 5.0, 10.0];

/// `count` instances with `n ∈ 1..=6` and Λ drawn from [`ORACLE_LAMBDAS`].
pub fn instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut g = FnnnGen::new(FnnnGenConfig::with_seed(seed));
    (0..count)
        .map(|_| {
            let n = g.range(1, 6);
            let lambda = Lambda::new(g.pick(&ORACLE_LAMBDAS)).expect("Λ ≥ 1");
            Instance { items: g.fnnns(n), weights: g.weights(n), lambda }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_item_folds_return_item() {
        let a = Fnnn::new(0.6, 0.4, 0.7, 0.5, 0.3).unwrap();
        let w = WeightVector::new(vec![1.0]).unwrap();
        for lam in [1.0, 2.0, 5.0] {
            let lam = Lambda::new(lam).unwrap();
            for fold in [fold_fnnwa, fold_fnnwg, fold_gfnnwa, fold_gfnnwg] {
                assert!(max_abs_diff(&fold(&[a], &w, lam).unwrap(), &a) < 1e-12);
            }
        }
    }

    #[test]
    fn folds_check_lengths() {
        let a = Fnnn::new(0.6, 0.4, 0.7, 0.5, 0.3).unwrap();
        let w = WeightVector::uniform(2).unwrap();
        assert!(matches!(fold_fnnwa(&[], &w, Lambda::ONE), Err(FnnError::EmptyInput)));
        assert!(matches!(fold_gfnnwg(&[a], &w, Lambda::ONE), Err(FnnError::LengthMismatch { .. })));
    }

    #[test]
    fn generator_is_deterministic() {
        let cfg = FnnnGenConfig::with_seed(42);
        assert_eq!(gen_fnnn(cfg, 50), gen_fnnn(cfg, 50));
        assert_ne!(gen_fnnn(cfg, 50), gen_fnnn(FnnnGenConfig::with_seed(43), 50));
    }

    #[test]
    fn generated_values_stay_in_range() {
        let cfg = FnnnGenConfig { eta_range: (0.5, 2.0), xi_range: (0.1, 0.2), seed: 7 };
        for v in gen_fnnn(cfg, 500) {
            assert!(v.eta() > 0.5 && v.eta() <= 2.0);
            assert!(v.xi() > 0.1 && v.xi() <= 0.2);
        }
    }
}
