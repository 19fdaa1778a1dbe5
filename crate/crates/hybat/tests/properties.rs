//! Property tests for the benchmark suite, the random source, and the DE
//! operators.

use hybat::de::{self, ScoredVector};
use hybat::functions::{Function, ObjectiveSpec};
use hybat::rng::Rng;
use proptest::prelude::*;

#[test]
fn benchmarks_are_non_negative_on_random_points() {
    let mut rng = Rng::from_seed(60221023);
    for function in Function::ALL {
        let spec = ObjectiveSpec::new(function, 6).unwrap();
        for _ in 0..10_000 {
            let x: Vec<f64> = (0..6)
                .map(|_| rng.uniform_range(spec.lower_bound, spec.upper_bound))
                .collect();
            let value = spec.evaluate(&x).unwrap();
            assert!(
                value >= 0.0,
                "{} evaluated to {value} at {x:?}",
                function.long_name()
            );
        }
    }
}

proptest! {
    #[test]
    fn evaluation_is_pure(seed in any::<u64>(), dimension in 2usize..8) {
        let mut rng = Rng::from_seed(seed);
        for function in Function::ALL {
            let spec = ObjectiveSpec::new(function, dimension).unwrap();
            let x: Vec<f64> = (0..dimension)
                .map(|_| rng.uniform_range(spec.lower_bound, spec.upper_bound))
                .collect();
            let first = spec.evaluate(&x).unwrap();
            let second = spec.evaluate(&x).unwrap();
            prop_assert_eq!(first.to_bits(), second.to_bits());
        }
    }

    #[test]
    fn even_functions_are_symmetric(seed in any::<u64>(), dimension in 1usize..8) {
        let mut rng = Rng::from_seed(seed);
        for function in [Function::Griewank, Function::Sphere, Function::Rastrigin] {
            let spec = ObjectiveSpec::new(function, dimension).unwrap();
            let x: Vec<f64> = (0..dimension)
                .map(|_| rng.uniform_range(spec.lower_bound, spec.upper_bound))
                .collect();
            let mirrored: Vec<f64> = x.iter().map(|v| -v).collect();
            let direct = spec.evaluate(&x).unwrap();
            let reflected = spec.evaluate(&mirrored).unwrap();
            prop_assert!(
                (direct - reflected).abs() <= 1e-9 * (1.0 + direct.abs()),
                "{}: f(x) = {direct}, f(-x) = {reflected}",
                function.long_name()
            );
        }
    }

    #[test]
    fn uniform_range_respects_half_open_interval(
        seed in any::<u64>(),
        lo in -1e6f64..1e6,
        width in 1e-6f64..1e6,
    ) {
        let mut rng = Rng::from_seed(seed);
        let hi = lo + width;
        for _ in 0..100 {
            let v = rng.uniform_range(lo, hi);
            prop_assert!(v >= lo && v < hi, "{v} outside [{lo}, {hi})");
        }
    }

    #[test]
    fn replay_from_equal_seeds_is_identical(seed in any::<u64>(), draws in 1usize..500) {
        let mut a = Rng::from_seed(seed);
        let mut b = Rng::from_seed(seed);
        for _ in 0..draws {
            prop_assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn mutation_is_linear_in_the_scale_factor(
        seed in any::<u64>(),
        scale in 0.1f64..1.0,
        np in 4usize..10,
        dimension in 1usize..6,
    ) {
        let mut setup = Rng::from_seed(seed);
        let population: Vec<Vec<f64>> = (0..np)
            .map(|_| (0..dimension).map(|_| setup.uniform_range(-10.0, 10.0)).collect())
            .collect();
        let target = setup.index_below(np);

        // Identical donor draws for +scale and -scale.
        let mut rng_plus = Rng::from_seed(seed ^ 0xD1FF);
        let mut rng_minus = rng_plus.clone();
        let mut rng_zero = rng_plus.clone();
        let plus = de::mutate(&population, target, scale, &mut rng_plus).unwrap();
        let minus = de::mutate(&population, target, -scale, &mut rng_minus).unwrap();
        let base = de::mutate(&population, target, 0.0, &mut rng_zero).unwrap();
        for j in 0..dimension {
            // plus and minus are reflections of each other through the base donor.
            let midpoint = 0.5 * (plus[j] + minus[j]);
            prop_assert!(
                (midpoint - base[j]).abs() <= 1e-9 * (1.0 + base[j].abs()),
                "midpoint {midpoint} vs base {}",
                base[j]
            );
        }
    }

    #[test]
    fn crossover_provenance_holds(
        seed in any::<u64>(),
        cr in 0.0f64..=1.0,
        dimension in 1usize..8,
    ) {
        let mut rng = Rng::from_seed(seed);
        let target: Vec<f64> = (0..dimension).map(|_| rng.uniform_range(-5.0, 5.0)).collect();
        let mutant: Vec<f64> = (0..dimension).map(|_| rng.uniform_range(5.0, 15.0)).collect();
        let trial = de::crossover_bin(&target, &mutant, cr, &mut rng).unwrap();
        let mut from_mutant = 0usize;
        for j in 0..dimension {
            if trial[j] == mutant[j] {
                from_mutant += 1;
            } else {
                prop_assert_eq!(trial[j], target[j]);
            }
        }
        prop_assert!(from_mutant >= 1);
    }

    #[test]
    fn selection_never_worsens_fitness(target_fitness in -1e9f64..1e9, trial_fitness in -1e9f64..1e9) {
        let target = ScoredVector { position: vec![0.0], fitness: target_fitness };
        let trial = ScoredVector { position: vec![1.0], fitness: trial_fitness };
        let winner = de::select(&target, &trial);
        prop_assert!(winner.fitness <= target.fitness);
    }

    #[test]
    fn strategy_display_parse_round_trip(
        base in prop::sample::select(vec!["rand", "best"]),
        k in 1usize..9,
        xover in prop::sample::select(vec!["bin", "exp"]),
    ) {
        let text = format!("DE/{base}/{k}/{xover}");
        let parsed = de::Strategy::parse(&text).unwrap();
        prop_assert_eq!(parsed.to_string(), text);
    }
}
