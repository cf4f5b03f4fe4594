//! Independent oracles shared by the integration suites. Nothing here calls
//! back into the code paths it is used to verify: deltas come from laying
//! words out explicitly, t tails from quadrature, and cost tables from a
//! seeded generator.

// Each suite uses its own subset of these helpers.
#![allow(dead_code)]

use headplace_core::CostFunction;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    S,
    V,
    O,
}

/// Lays three contiguous constituents on a line in the given surface order.
/// Each entry is `(role, word count, words left of the head)`. Returns the
/// sum of the distances from the verb's head to the subject's and the
/// object's heads.
pub fn layout_delta(sequence: [(Role, u64, u64); 3]) -> u64 {
    let mut heads = [(Role::S, 0u64); 3];
    let mut cursor = 1u64;
    for (slot, &(role, len, left)) in sequence.iter().enumerate() {
        assert!(len >= 1, "constituents are non-empty");
        assert!(left < len, "the head needs a slot inside its constituent");
        heads[slot] = (role, cursor + left);
        cursor += len;
    }
    let head_of = |wanted: Role| {
        heads
            .iter()
            .find(|(role, _)| *role == wanted)
            .map(|&(_, position)| position)
            .expect("each role occurs once")
    };
    let verb = head_of(Role::V);
    verb.abs_diff(head_of(Role::S)) + verb.abs_diff(head_of(Role::O))
}

/// Two-sided t-test p-value by Simpson quadrature of the density over
/// `[0, |t|]`: `p = 1 - 2 * body`. Normalizing constant from exact
/// half-integer gamma recurrences, so nothing is shared with the
/// incomplete-beta implementation under test.
pub fn t_two_sided_p_by_quadrature(t: f64, df: u32) -> f64 {
    use std::f64::consts::PI;
    let nu = df as f64;
    let constant = gamma_of_half(df + 1) / ((nu * PI).sqrt() * gamma_of_half(df));
    let density = |u: f64| constant * (1.0 + u * u / nu).powf(-(nu + 1.0) / 2.0);
    let body = simpson(&density, 0.0, t.abs(), 100_000);
    (1.0 - 2.0 * body).clamp(0.0, 1.0)
}

/// `Gamma(k / 2)` for integer `k >= 1` via `Gamma(x + 1) = x Gamma(x)`.
fn gamma_of_half(k: u32) -> f64 {
    let (mut value, mut x) = if k % 2 == 1 {
        (std::f64::consts::PI.sqrt(), 0.5)
    } else {
        (1.0, 1.0)
    };
    let target = k as f64 / 2.0;
    while x < target - 0.25 {
        value *= x;
        x += 1.0;
    }
    value
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, intervals: usize) -> f64 {
    if a == b {
        return 0.0;
    }
    let n = intervals + intervals % 2;
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += weight * f(a + i as f64 * h);
    }
    sum * h / 3.0
}

/// Strictly increasing integer-valued cost tables from a seeded generator;
/// integer values keep every comparison downstream exact.
pub fn random_strict_tables(count: usize, d_max: usize, seed: u64) -> Vec<CostFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut value = rng.gen_range(1..=5u32) as f64;
            let mut values = Vec::with_capacity(d_max);
            for _ in 0..d_max {
                values.push(value);
                value += rng.gen_range(1..=9u32) as f64;
            }
            CostFunction::table(values).expect("generated tables are strictly increasing")
        })
        .collect()
}

/// The closed cost families the suites sweep alongside the random tables.
pub fn builtin_cost_functions() -> Vec<CostFunction> {
    vec![
        CostFunction::identity(),
        CostFunction::power(2.0).unwrap(),
        CostFunction::power(0.5).unwrap(),
        CostFunction::exponential(2.0).unwrap(),
        CostFunction::affine(3.0, 1.0).unwrap(),
    ]
}
