//! Cross-module properties checked against independent oracles.

use lfspp_core::format::{parse_instance, write_instance};
use lfspp_core::generate::{generate, min_denominator, GenCondition, GenConfig};
use lfspp_core::instance::widen;
use lfspp_core::pack::{
    classify, complete_to_prime, enumerate_packs, max_cardinality_pack, redundant_columns,
    CompletionRule, PackKind,
};
use lfspp_core::solvers::{solve_lspp, solve_oracle};
use lfspp_core::theory::{check_thm2a_condition, lemma1_check, verify_thm3};
use lfspp_core::{Instance, Pack, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent enumeration oracle: filter all 2^n subsets by row sums.
fn brute_force_packs(inst: &Instance) -> Vec<Pack> {
    (0u64..(1 << inst.n()))
        .filter(|&mask| {
            (0..inst.m()).all(|i| {
                let sum: i64 = (0..inst.n())
                    .map(|j| inst.entry(i, j) * ((mask >> j) & 1) as i64)
                    .sum();
                sum <= 1
            })
        })
        .map(|mask| Pack::from_bits(inst.n(), mask))
        .collect()
}

fn config(n: usize, m: usize, coeff: (i64, i64), beta: i64) -> GenConfig {
    GenConfig {
        n,
        m,
        density: 0.4,
        c_range: coeff,
        d_range: coeff,
        alpha: 0,
        beta,
        condition: GenCondition::None,
        require_admissible: true,
        max_retries: 1000,
    }
}

#[test]
fn enumeration_matches_brute_force_up_to_15_columns() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for seed in 0..120u64 {
        let n = rng.random_range(1..=15);
        let m = rng.random_range(1..=8);
        let inst = generate(&config(n, m, (0, 3), 1), seed).unwrap();
        let enumerated: Vec<Pack> = enumerate_packs(&inst).unwrap().collect();
        assert_eq!(enumerated, brute_force_packs(&inst), "seed {seed}");
    }
}

#[test]
fn completion_yields_prime_supersets() {
    for seed in 0..150u64 {
        let inst = generate(&config(9, 5, (-6, 6), 8), seed).unwrap();
        for (k, pack) in enumerate_packs(&inst).unwrap().enumerate() {
            let rule = match k % 3 {
                0 => CompletionRule::LowestIndex,
                1 => CompletionRule::BestRatio,
                _ => CompletionRule::SeededRandom(seed ^ k as u64),
            };
            let completed = complete_to_prime(&inst, &pack, rule).unwrap();
            assert!(completed.is_superset_of(&pack));
            assert_eq!(
                classify(&inst, &completed).unwrap().kind,
                PackKind::Prime,
                "seed {seed} pack {pack} rule {rule:?}"
            );
        }
    }
}

#[test]
fn maximum_cardinality_pack_is_prime() {
    for seed in 0..200u64 {
        let inst = generate(&config(10, 6, (1, 4), 2), seed).unwrap();
        let best = max_cardinality_pack(&inst).unwrap();
        assert_eq!(classify(&inst, &best).unwrap().kind, PackKind::Prime, "seed {seed}");
    }
}

#[test]
fn prime_means_maximal_under_inclusion() {
    for seed in 0..80u64 {
        let inst = generate(&config(8, 5, (1, 3), 1), seed).unwrap();
        let packs = brute_force_packs(&inst);
        for pack in &packs {
            let prime = classify(&inst, pack).unwrap().kind == PackKind::Prime;
            let maximal = packs
                .iter()
                .all(|other| !(other.is_superset_of(pack) && other.len() == pack.len() + 1));
            assert_eq!(prime, maximal, "seed {seed} pack {pack}");
        }
    }
}

#[test]
fn exact_and_float_objectives_never_disagree_strictly() {
    for seed in 0..120u64 {
        let inst = generate(&config(9, 5, (-9, 9), 6), seed).unwrap();
        let values: Vec<Rational> = enumerate_packs(&inst)
            .unwrap()
            .map(|p| inst.objective(&p).unwrap())
            .collect();
        for a in &values {
            for b in &values {
                let (fa, fb) = (a.to_f64(), b.to_f64());
                if fa < fb {
                    assert!(a < b);
                } else if fa > fb {
                    assert!(a > b);
                }
            }
        }
    }
}

#[test]
fn uniform_objective_is_monotone_in_cardinality() {
    // positive uniform costs with admissible denominators: any larger pack
    // beats any smaller pack, exactly as the monotonicity inequality says
    for seed in 0..100u64 {
        let mut cfg = config(9, 5, (1, 5), 30);
        cfg.d_range = (-3, 5);
        cfg.condition = GenCondition::Uniform;
        let inst = generate(&cfg, seed).unwrap();
        if inst.c()[0] <= 0 {
            continue;
        }
        let mut by_len: Vec<(usize, Rational)> = enumerate_packs(&inst)
            .unwrap()
            .map(|p| (p.len(), inst.objective(&p).unwrap()))
            .collect();
        by_len.sort_by_key(|&(len, _)| len);
        for pair in by_len.windows(2) {
            let ((la, va), (lb, vb)) = (pair[0], pair[1]);
            if la < lb {
                assert!(va < vb, "seed {seed}: |H|={la} value {va} vs |H|={lb} value {vb}");
            }
        }
    }
}

#[test]
fn redundant_columns_strictly_improve_under_sign_condition() {
    // c > 0, d < 0: appending any addable column raises the objective
    for seed in 0..150u64 {
        let mut cfg = config(8, 5, (1, 9), 50);
        cfg.d_range = (-5, -1);
        cfg.condition = GenCondition::Thm2a;
        let inst = generate(&cfg, seed).unwrap();
        assert!(check_thm2a_condition(&inst).holds);
        for pack in enumerate_packs(&inst).unwrap() {
            let before = inst.objective(&pack).unwrap();
            for j in redundant_columns(&inst, &pack).unwrap() {
                let after = inst.objective(&pack.with(j)).unwrap();
                assert!(after > before, "seed {seed} pack {pack} column {}", j + 1);
            }
        }
    }
}

#[test]
fn lemma1_holds_over_random_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0u32;
    while checked < 10_000 {
        let c = rng.random_range(-1000..=1000);
        let d = rng.random_range(-1000..=1000);
        let beta = rng.random_range(1..=1000);
        let n = rng.random_range(2..=40);
        let k = rng.random_range(1..n);
        let l = rng.random_range(1..=(n - k));
        match lemma1_check(c, d, k, l, beta, n) {
            Ok(outcome) => {
                checked += 1;
                assert!(outcome.holds, "c={c} d={d} k={k} l={l} beta={beta}");
            }
            Err(_) => continue,
        }
    }
}

#[test]
fn uniform_instances_satisfy_the_cardinality_results() {
    let mut verified = 0;
    for seed in 0..300u64 {
        let mut cfg = config(10, 6, (-4, 4), 20);
        cfg.d_range = (-2, 4);
        cfg.condition = GenCondition::Uniform;
        let inst = generate(&cfg, seed).unwrap();
        let report = verify_thm3(&inst).unwrap();
        assert!(report.holds, "seed {seed}");
        if !report.degenerate {
            verified += 1;
        }
    }
    assert!(verified >= 200);
}

#[test]
fn oracle_all_optima_share_the_optimal_value() {
    for seed in 0..100u64 {
        let inst = generate(&config(9, 5, (-7, 7), 9), seed).unwrap();
        let report = solve_oracle(&inst, true).unwrap();
        let optima = report.all_optima.unwrap();
        assert!(!optima.is_empty());
        for pack in &optima {
            assert_eq!(inst.objective(pack).unwrap(), report.optimal_value);
        }
        // and no other feasible pack attains it
        let count = brute_force_packs(&inst)
            .iter()
            .filter(|p| inst.objective(p).unwrap() == report.optimal_value)
            .count();
        assert_eq!(count, optima.len(), "seed {seed}");
    }
}

#[test]
fn generated_instances_have_positive_denominators_everywhere() {
    for seed in 0..100u64 {
        let inst = generate(&config(10, 6, (-20, 20), 10), seed).unwrap();
        assert!(min_denominator(&inst) > 0);
        for pack in enumerate_packs(&inst).unwrap() {
            assert!(inst.objective(&pack).is_ok(), "seed {seed} pack {pack}");
        }
    }
}

#[test]
fn lspp_agrees_with_enumeration_on_mixed_weights() {
    for seed in 0..100u64 {
        let inst = generate(&config(10, 6, (-9, 9), 9), seed).unwrap();
        let weights = widen(inst.d());
        let report = solve_lspp(&inst, &weights).unwrap();
        let brute = brute_force_packs(&inst)
            .into_iter()
            .map(|p| inst.linear_objective(&p, &weights).unwrap())
            .max()
            .unwrap();
        assert_eq!(report.optimal_value, brute, "seed {seed}");
    }
}

proptest! {
    #[test]
    fn text_format_round_trips(seed in 0u64..500, n in 1usize..=12, m in 1usize..=8) {
        let inst = generate(&config(n, m, (-9, 9), 7), seed).unwrap();
        let text = write_instance(&inst);
        let parsed = parse_instance(&text).unwrap();
        prop_assert_eq!(parsed, inst);
    }
}
