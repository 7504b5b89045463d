use fnnn_core::{fnnwa, fnnwg, gfnnwa, gfnnwg, Fnnn, Lambda, WeightVector};
use fnnn_testkit::{
    fold_fnnwa, fold_fnnwg, fold_gfnnwa, fold_gfnnwg, gen_fnnn, instances, max_abs_diff, FnnnGen, FnnnGenConfig,
};

type Op = fn(&[Fnnn], &WeightVector, Lambda) -> fnnn_core::Result<Fnnn>;

const PAIRS: [(&str, Op, Op); 4] = [
    ("fnnwa", fnnwa, fold_fnnwa),
    ("fnnwg", fnnwg, fold_fnnwg),
    ("gfnnwa", gfnnwa, fold_gfnnwa),
    ("gfnnwg", gfnnwg, fold_gfnnwg),
];

#[test]
fn closed_forms_match_folds() {
    for (name, closed, fold) in PAIRS {
        let mut worst = 0.0f64;
        for inst in instances(0xA11CE, 2000) {
            let a = closed(&inst.items, &inst.weights, inst.lambda).unwrap();
            let b = fold(&inst.items, &inst.weights, inst.lambda).unwrap();
            let d = max_abs_diff(&a, &b);
            assert!(d <= 1e-10, "{name}: {d:e} for {inst:?}\n closed {a:?}\n fold {b:?}");
            worst = worst.max(d);
        }
        println!("{name}: worst |closed - fold| = {worst:e}");
    }
}

#[test]
fn fnnwg_two_item_cross_check() {
    let items = [
        Fnnn::new(1.0, 1.0, 0.8, 0.5, 0.5).unwrap(),
        Fnnn::new(4.0, 1.0, 0.5, 0.5, 0.8).unwrap(),
    ];
    let w = WeightVector::uniform(2).unwrap();
    let fold = fold_fnnwg(&items, &w, Lambda::ONE).unwrap();
    let f = (1.0 - (0.875f64 * 0.488).sqrt()).cbrt();
    let expected = [2.0, 1.0, 0.4f64.sqrt(), 0.5, f];
    for (x, y) in fold.components().iter().zip(expected) {
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn generalized_folds_degenerate_at_lambda_one() {
    for inst in instances(99, 300) {
        let a = fold_gfnnwa(&inst.items, &inst.weights, Lambda::ONE).unwrap();
        let b = fold_fnnwa(&inst.items, &inst.weights, Lambda::ONE).unwrap();
        assert!(max_abs_diff(&a, &b) < 1e-12);
        let a = fold_gfnnwg(&inst.items, &inst.weights, Lambda::ONE).unwrap();
        let b = fold_fnnwg(&inst.items, &inst.weights, Lambda::ONE).unwrap();
        assert!(max_abs_diff(&a, &b) < 1e-12);
    }
}

#[test]
fn folds_are_idempotent() {
    let mut g = FnnnGen::new(FnnnGenConfig::with_seed(5));
    for _ in 0..300 {
        let l = g.fnnn();
        let n = g.range(1, 6);
        let w = g.weights(n);
        let lam = Lambda::new(g.pick(&[1.0, 2.0, 3.0, 5.0, 10.0])).unwrap();
        let items = vec![l; n];
        for (name, _, fold) in PAIRS {
            let out = fold(&items, &w, lam).unwrap();
            assert!(max_abs_diff(&out, &l) < 1e-10, "{name}: {out:?} vs {l:?}");
        }
    }
}

#[test]
fn generated_sample_respects_cubic_bound() {
    let sample = gen_fnnn(FnnnGenConfig::with_seed(2024), 10_000);
    let max = sample.iter().map(Fnnn::cubic_sum).fold(0.0, f64::max);
    assert!(max <= 2.0, "max cubic sum {max}");
    assert!(max > 1.9, "rejection sampler should reach near the bound, got {max}");
    for v in &sample {
        assert!(Fnnn::new(v.eta(), v.xi(), v.t(), v.i(), v.f()).is_ok());
    }
}

#[test]
fn core_primitives_match_extended_precision() {
    use fnnn_core::{boxplus, boxtimes, power, scale};
    use fnnn_testkit::{hp_boxplus, hp_boxtimes, hp_power, hp_scale};
    let mut g = FnnnGen::new(FnnnGenConfig::with_seed(31));
    for _ in 0..500 {
        let (a, b) = (g.fnnn(), g.fnnn());
        let lam = Lambda::new(g.pick(&[1.0, 2.0, 3.0, 5.0, 10.0])).unwrap();
        let w = 0.01 + 3.0 * g.fnnn().t();
        for (x, y) in [
            (boxplus(&a, &b, lam), hp_boxplus(&a, &b, lam).unwrap()),
            (boxtimes(&a, &b, lam), hp_boxtimes(&a, &b, lam).unwrap()),
            (scale(w, &a, lam).unwrap(), hp_scale(w, &a, lam).unwrap()),
            (power(w, &a, lam).unwrap(), hp_power(w, &a, lam).unwrap()),
        ] {
            assert!(max_abs_diff(&x, &y) < 1e-12, "{x:?} vs {y:?} (w = {w}, {lam:?})");
        }
    }
}
