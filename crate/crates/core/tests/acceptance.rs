//! Acceptance suite: the headline numbers the crate must reproduce, one test
//! per criterion. Run with `--nocapture` to see one line per criterion.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use headplace_core::constituents::{
    delta_sov, delta_sov_left, delta_sov_right, delta_svo, delta_svo_left, delta_svo_right,
    expected_delta_svo, regression_comparison, InternalCosts, LengthDistribution, Side,
    SidePreference,
};
use headplace_core::cost::{
    check_quasiconvex, optimal_placements, star_extremes_identity, total_cost_identity,
    worst_placements, Landscape,
};
use headplace_core::oracle::{
    crossing_count, enumerate_extremes, star_hub_extremes, Arrangement, TreeInstance,
};
use headplace_core::word_order::WordOrder;
use headplace_core::{ConstituentLengths, CostFunction, FrequencyTable, PairedSample};

use common::Role;

const VALUE_TOLERANCE: f64 = 1e-9;

/// The five closed families plus 100 seeded random strict tables.
fn criterion_cost_functions() -> Vec<CostFunction> {
    let mut functions = common::builtin_cost_functions();
    functions.extend(common::random_strict_tables(100, 8, 0xacce97));
    functions
}

#[test]
fn criterion_01_worked_example_n3() {
    let identity = CostFunction::identity();
    let started = Instant::now();
    let landscape = Landscape::new(3, &identity).unwrap();
    let elapsed = started.elapsed();

    assert_eq!(landscape.costs(), &[6.0, 4.0, 4.0, 6.0]);
    assert_eq!(landscape.minima(), &BTreeSet::from([2, 3]));
    assert_eq!(landscape.maxima(), &BTreeSet::from([1, 4]));
    assert!(elapsed < Duration::from_millis(1), "landscape took {elapsed:?}");
    println!("criterion 01 (n=3 worked example, < 1 ms): PASS ({elapsed:?})");
}

#[test]
fn criterion_02_ten_dependent_landscape() {
    let landscape = Landscape::new(10, &CostFunction::identity()).unwrap();
    for (l, cost) in landscape.iter() {
        assert_eq!(cost, total_cost_identity(10, l).unwrap() as f64, "l={l}");
    }
    assert_eq!(landscape.minima(), &BTreeSet::from([6]));
    assert_eq!(landscape.cost_at(6), Some(30.0));
    assert_eq!(landscape.maxima(), &BTreeSet::from([1, 11]));
    assert_eq!(landscape.cost_at(1), Some(55.0));
    assert_eq!(landscape.cost_at(11), Some(55.0));
    println!("criterion 02 (n=10 landscape, exact closed form): PASS");
}

#[test]
fn criterion_03_placement_oracle_suite() {
    let started = Instant::now();
    let cost_functions = criterion_cost_functions();
    let mut pairs_checked = 0u32;
    for n in 2..=8usize {
        for g in &cost_functions {
            let landscape = Landscape::new(n, g).unwrap();
            let expected_minima = optimal_placements(n, g).unwrap();
            let expected_maxima = worst_placements(n, g).unwrap();
            // Full (n+1)! enumeration up to n = 7, hub positions for n = 8.
            let (min_cost, minima, max_cost, maxima) = if n <= 7 {
                let report = enumerate_extremes(&TreeInstance::star(n), g).unwrap();
                (
                    report.min_cost,
                    report.min_positions_of(0).clone(),
                    report.max_cost,
                    report.max_positions_of(0).clone(),
                )
            } else {
                let hub = star_hub_extremes(n, g).unwrap();
                (hub.min_cost, hub.min_positions, hub.max_cost, hub.max_positions)
            };
            assert_eq!(minima, expected_minima, "n={n} g={g:?}");
            assert_eq!(maxima, expected_maxima, "n={n} g={g:?}");
            assert!((min_cost - landscape.min_cost()).abs() <= VALUE_TOLERANCE, "n={n}");
            assert!((max_cost - landscape.max_cost()).abs() <= VALUE_TOLERANCE, "n={n}");
            pairs_checked += 1;
        }
    }
    let elapsed = started.elapsed();
    assert_eq!(pairs_checked, 7 * 105);
    assert!(elapsed < Duration::from_secs(60), "suite took {elapsed:?}");
    println!(
        "criterion 03 (analytic placements vs enumeration, {pairs_checked} (n, g) pairs, < 60 s): \
         PASS ({elapsed:?})"
    );
}

#[test]
fn criterion_04_closed_form_extremes() {
    let identity = CostFunction::identity();
    for n_total in 3..=8usize {
        let closed = star_extremes_identity(n_total).unwrap();
        let expected_max = (n_total * (n_total - 1) / 2) as u64;
        let expected_min = if n_total % 2 == 1 {
            ((n_total - 1) * (n_total + 1) / 4) as u64
        } else {
            (n_total * n_total / 4) as u64
        };
        assert_eq!(closed.max, expected_max);
        assert_eq!(closed.min, expected_min);

        let report = enumerate_extremes(&TreeInstance::star(n_total - 1), &identity).unwrap();
        assert_eq!(report.min_cost, closed.min as f64, "N={n_total}");
        assert_eq!(report.max_cost, closed.max as f64, "N={n_total}");
    }
    println!("criterion 04 (closed-form star extremes vs enumeration, N in [3, 8]): PASS");
}

#[test]
fn criterion_05_quasiconvexity() {
    for n in 2..=8usize {
        for g in &criterion_cost_functions() {
            let landscape = Landscape::new(n, g).unwrap();
            assert!(check_quasiconvex(landscape.costs()), "n={n} g={g:?}");
        }
    }
    assert!(!check_quasiconvex(&[4.0, 6.0, 4.0]));
    println!("criterion 05 (quasi-convex landscapes, counterexample rejected): PASS");
}

#[test]
fn criterion_06_stars_are_crossing_free() {
    for n in 1..=6usize {
        let star = TreeInstance::star(n);
        for positions in (1..=n + 1).permutations(n + 1) {
            let arrangement = Arrangement::new(positions).unwrap();
            assert_eq!(crossing_count(&star, &arrangement).unwrap(), 0, "n={n}");
        }
    }
    println!("criterion 06 (no crossings in any star arrangement, n <= 6): PASS");
}

#[test]
fn criterion_07_verb_placement_table() {
    let summary = FrequencyTable::bundled().verb_placement_summary().unwrap();
    assert_eq!(summary.total, 1188);
    let [initial, central, fin] = summary.rows;
    assert_eq!((initial.count, initial.percent_text().as_str()), (120, "10.1"));
    assert_eq!((central.count, central.percent_text().as_str()), (499, "42.0"));
    assert_eq!((fin.count, fin.percent_text().as_str()), (569, "47.9"));
    println!("criterion 07 (verb placement rows 120/10.1, 499/42.0, 569/47.9 of 1188): PASS");
}

#[test]
fn criterion_08_correlation_statistics() {
    let rows = FrequencyTable::bundled().clockwise_rows();
    let sample = PairedSample::new(
        rows.iter().map(|&(_, distance, _)| distance as f64).collect(),
        rows.iter().map(|&(_, _, count)| count as f64).collect(),
    )
    .unwrap();

    let rho = sample.spearman_rho().unwrap();
    assert_eq!(rho, -1.0);

    let exact = sample.spearman_exact_pvalue().unwrap();
    assert!((exact.p_value - 2.0 / 720.0).abs() < 1e-12);
    assert_eq!((exact.exceedances, exact.permutations), (2, 720));

    let r = sample.pearson_r().unwrap();
    assert!((r - (-0.89)).abs() <= 0.01, "r = {r}");

    let t_test = sample.pearson_pvalue().unwrap();
    assert!((t_test.p_value - 0.016).abs() <= 0.003, "p = {}", t_test.p_value);

    let ratio = t_test.p_value / exact.p_value;
    assert!((5.0..=7.0).contains(&ratio), "ratio = {ratio}");

    // Independent tail check: quadrature of the t density.
    let quadrature = common::t_two_sided_p_by_quadrature(t_test.t, t_test.df as u32);
    assert!((t_test.p_value - quadrature).abs() < 1e-10);

    println!(
        "criterion 08 (rho = {rho}, exact p = {:.6}, r = {r:.4}, t p = {:.4}, ratio = {ratio:.2}): PASS",
        exact.p_value, t_test.p_value
    );
}

#[test]
fn criterion_09_ring_metrics() {
    assert_eq!(WordOrder::Sov.ring_distance(WordOrder::Svo), 1);
    assert_eq!(WordOrder::Sov.ring_distance(WordOrder::Ovs), 2);
    assert_eq!(WordOrder::Svo.ring_distance(WordOrder::Ovs), 3);
    assert_eq!(
        WordOrder::ALL,
        [
            WordOrder::Sov,
            WordOrder::Svo,
            WordOrder::Vso,
            WordOrder::Vos,
            WordOrder::Ovs,
            WordOrder::Osv,
        ]
    );
    for (expected, order) in WordOrder::ALL.iter().enumerate() {
        assert_eq!(order.clockwise_distance_from_sov(), expected);
    }
    println!("criterion 09 (ring distances 1/2/3, clockwise chain SOV..OSV): PASS");
}

#[test]
fn criterion_10_constituent_property_sweep() {
    let started = Instant::now();
    let zero = InternalCosts::zero();
    let mut combinations = 0u64;
    for s in 1..=10u64 {
        for o in 1..=10u64 {
            for v in 1..=10u64 {
                for l_v in 0..=5u64 {
                    combinations += 1;

                    // (a) SOV: left placement never loses, ties only for bare nominals.
                    let sov_left = delta_sov_left(l_v, o).unwrap();
                    let sov_right = delta_sov_right(l_v, o, s).unwrap();
                    assert!(sov_left <= sov_right);
                    assert_eq!(sov_left == sov_right, s == 1 && o == 1);

                    // (b) SVO: the comparison reduces to |O| vs |S|.
                    let svo_left = delta_svo_left(v, o).unwrap();
                    let svo_right = delta_svo_right(v, s).unwrap();
                    assert_eq!(svo_left <= svo_right, o <= s);

                    // (c) Layout oracle, where the verb split is realizable.
                    if l_v < v {
                        assert_eq!(
                            common::layout_delta([
                                (Role::S, s, s - 1),
                                (Role::O, o, o - 1),
                                (Role::V, v, l_v),
                            ]),
                            sov_left,
                        );
                        assert_eq!(
                            common::layout_delta([
                                (Role::S, s, 0),
                                (Role::O, o, 0),
                                (Role::V, v, l_v),
                            ]),
                            sov_right,
                        );
                        assert_eq!(
                            common::layout_delta([
                                (Role::S, s, s - 1),
                                (Role::V, v, l_v),
                                (Role::O, o, o - 1),
                            ]),
                            svo_left,
                        );
                        assert_eq!(
                            common::layout_delta([
                                (Role::S, s, 0),
                                (Role::V, v, l_v),
                                (Role::O, o, 0),
                            ]),
                            svo_right,
                        );
                        // Full formulas at the same splits.
                        assert_eq!(delta_sov(l_v, 0, o - 1, 0), sov_left);
                        assert_eq!(delta_sov(l_v, o - 1, 0, s - 1), sov_right);
                        assert_eq!(delta_svo(0, v, o - 1).unwrap(), svo_left);
                        assert_eq!(delta_svo(s - 1, v, 0).unwrap(), svo_right);
                    }

                    // (d) Regression gap is |S| + |O| - 2 under conservation.
                    let lengths = ConstituentLengths::new(s, v, o).unwrap();
                    let regression = regression_comparison(&zero, &zero, &lengths, l_v);
                    assert!(regression.conservation_holds);
                    assert_eq!(
                        regression.omega_from_right - regression.omega_from_left,
                        (s + o - 2) as f64
                    );
                    let expected = if s == 1 && o == 1 {
                        SidePreference::Tie
                    } else {
                        SidePreference::Right
                    };
                    assert_eq!(regression.harder_from, expected);
                }
            }
        }
    }
    let elapsed = started.elapsed();
    assert_eq!(combinations, 10 * 10 * 10 * 6);
    assert!(elapsed < Duration::from_secs(10), "sweep took {elapsed:?}");
    println!(
        "criterion 10 (constituent sweep, {combinations} combinations, < 10 s): \
         PASS ({elapsed:?})"
    );
}

#[test]
fn criterion_11_expectation_ties_on_equal_means() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ea);
    for case in 0..50 {
        let dist_o = random_distribution(&mut rng);
        let dist_s = distribution_with_mean(dist_o.mean(), &mut rng);
        let dist_v = random_distribution(&mut rng);

        let left = expected_delta_svo(&dist_s, &dist_o, &dist_v, Side::Left);
        let right = expected_delta_svo(&dist_s, &dist_o, &dist_v, Side::Right);
        assert!(
            (left - right).abs() < 1e-12,
            "case {case}: left = {left}, right = {right}, means {} vs {}",
            dist_o.mean(),
            dist_s.mean()
        );
    }
    println!("criterion 11 (expectation tie for 50 equal-mean distribution pairs): PASS");
}

fn random_distribution(rng: &mut ChaCha8Rng) -> LengthDistribution {
    let size = rng.gen_range(1..=5usize);
    let weights: Vec<u32> = (0..size).map(|_| rng.gen_range(1..=100u32)).collect();
    let total: u32 = weights.iter().sum();
    let support = weights
        .iter()
        .map(|&w| (rng.gen_range(1..=12u64), w as f64 / total as f64))
        .collect::<Vec<_>>();
    // Merging duplicates is unnecessary; the support allows repeats.
    LengthDistribution::new(support).expect("weights are positive and normalized")
}

/// A distribution over `{1, hi}` whose mean equals `mean` exactly up to
/// floating rounding.
fn distribution_with_mean(mean: f64, rng: &mut ChaCha8Rng) -> LengthDistribution {
    if mean == 1.0 {
        return LengthDistribution::point(1).unwrap();
    }
    // floor + 1 keeps hi strictly above the mean even for integer means.
    let hi = mean.floor() as u64 + 1 + rng.gen_range(0..=8u64);
    let p_hi = (mean - 1.0) / (hi - 1) as f64;
    LengthDistribution::new(vec![(1, 1.0 - p_hi), (hi, p_hi)])
        .expect("1 < mean <= hi keeps both probabilities in (0, 1)")
}
