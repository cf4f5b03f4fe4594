//! Rank and product-moment correlation with significance tests.
//!
//! Two routes to the same question, with very different power on small
//! non-linear samples: [`PairedSample::spearman_rho`] with an exact
//! permutation test ([`PairedSample::spearman_exact_pvalue`], feasible up to
//! `n = 8`), and [`PairedSample::pearson_r`] with the usual two-sided t-test
//! ([`PairedSample::pearson_pvalue`]). The t tail is computed from the
//! regularized incomplete beta function implemented at the bottom of the
//! module.

use thiserror::Error;

use crate::perm::for_each_permutation;

/// Exact permutation tests enumerate `n!` pairings; 8! = 40,320 is the cap.
pub const MAX_EXACT_TEST_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("paired sample needs equally long vectors, got {xs} and {ys}")]
    LengthMismatch { xs: usize, ys: usize },
    #[error("need at least {min} points, got {n}")]
    TooFewPoints { n: usize, min: usize },
    #[error("exact permutation test is capped at {max} points, got {n}")]
    TooManyPoints { n: usize, max: usize },
    #[error("sample values must be finite")]
    NonFiniteValue,
    #[error("a coordinate has zero variance; the correlation is undefined")]
    ZeroVariance,
    #[error("tied values present; the exact permutation test requires distinct values")]
    TiesPresent,
}

/// Two equal-length observation vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSample {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl PairedSample {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self, StatsError> {
        if xs.len() != ys.len() {
            return Err(StatsError::LengthMismatch { xs: xs.len(), ys: ys.len() });
        }
        if xs.len() < 2 {
            return Err(StatsError::TooFewPoints { n: xs.len(), min: 2 });
        }
        if xs.iter().chain(ys.iter()).any(|v| !v.is_finite()) {
            return Err(StatsError::NonFiniteValue);
        }
        Ok(Self { xs, ys })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    /// Product-moment correlation of the two coordinates.
    pub fn pearson_r(&self) -> Result<f64, StatsError> {
        pearson_of(&self.xs, &self.ys)
    }

    /// Rank correlation: the product-moment correlation of the two rank
    /// vectors, with tied values receiving their average rank.
    pub fn spearman_rho(&self) -> Result<f64, StatsError> {
        pearson_of(&average_ranks(&self.xs), &average_ranks(&self.ys))
    }

    /// Exact two-sided permutation test for the rank correlation: all `n!`
    /// pairings of `ys` against `xs` are enumerated and those with
    /// `|rho| >= |observed rho|` are counted.
    ///
    /// Requires distinct values in both coordinates. Without ties both rank
    /// vectors are integer permutations, so rho comparisons reduce to exact
    /// integer arithmetic on the sum of squared rank differences — no
    /// floating-point boundary cases in the null distribution.
    pub fn spearman_exact_pvalue(&self) -> Result<ExactPermutationTest, StatsError> {
        let n = self.len();
        if n > MAX_EXACT_TEST_POINTS {
            return Err(StatsError::TooManyPoints { n, max: MAX_EXACT_TEST_POINTS });
        }
        if has_ties(&self.xs) || has_ties(&self.ys) {
            return Err(StatsError::TiesPresent);
        }
        let rank_x: Vec<i64> = average_ranks(&self.xs).iter().map(|&r| r as i64).collect();
        let rank_y: Vec<i64> = average_ranks(&self.ys).iter().map(|&r| r as i64).collect();

        // rho = 1 - 6*S/M with S the sum of squared rank differences and
        // M = n(n^2 - 1); |rho| comparisons become |M - 6S| comparisons.
        let m = (n * (n * n - 1)) as i64;
        let s_observed: i64 =
            rank_x.iter().zip(&rank_y).map(|(&a, &b)| (a - b) * (a - b)).sum();
        let e_observed = (m - 6 * s_observed).abs();

        let mut exceedances = 0u64;
        let mut permutations = 0u64;
        for_each_permutation(n, |perm| {
            permutations += 1;
            let s: i64 = perm
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    let d = rank_x[i] - rank_y[j];
                    d * d
                })
                .sum();
            if (m - 6 * s).abs() >= e_observed {
                exceedances += 1;
            }
        });
        Ok(ExactPermutationTest {
            rho: 1.0 - 6.0 * s_observed as f64 / m as f64,
            exceedances,
            permutations,
            p_value: exceedances as f64 / permutations as f64,
        })
    }

    /// Two-sided t-test of the product-moment correlation:
    /// `t = r sqrt((n-2)/(1-r^2))` against the t distribution with `n - 2`
    /// degrees of freedom.
    pub fn pearson_pvalue(&self) -> Result<PearsonTest, StatsError> {
        let n = self.len();
        if n < 3 {
            return Err(StatsError::TooFewPoints { n, min: 3 });
        }
        let r = self.pearson_r()?;
        let df = (n - 2) as u64;
        if r.abs() == 1.0 {
            // The t statistic diverges; report the limiting p-value.
            return Ok(PearsonTest {
                r,
                t: if r > 0.0 { f64::INFINITY } else { f64::NEG_INFINITY },
                df,
                p_value: 0.0,
                limiting: true,
            });
        }
        let t = r * (df as f64 / (1.0 - r * r)).sqrt();
        Ok(PearsonTest { r, t, df, p_value: student_t_two_sided(t, df as f64), limiting: false })
    }
}

/// Result of [`PairedSample::spearman_exact_pvalue`]. The p-value is the
/// exact rational `exceedances / permutations`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactPermutationTest {
    pub rho: f64,
    pub exceedances: u64,
    pub permutations: u64,
    pub p_value: f64,
}

/// Result of [`PairedSample::pearson_pvalue`]. `limiting` marks the
/// degenerate `|r| = 1` case where the p-value is the limit 0 rather than a
/// computed tail.
#[derive(Debug, Clone, PartialEq)]
pub struct PearsonTest {
    pub r: f64,
    pub t: f64,
    pub df: u64,
    pub p_value: f64,
    pub limiting: bool,
}

fn pearson_of(xs: &[f64], ys: &[f64]) -> Result<f64, StatsError> {
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x - mean_x;
        let dy = y - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if var_x == 0.0 || var_y == 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    Ok((cov / (var_x * var_y).sqrt()).clamp(-1.0, 1.0))
}

/// Ranks starting at 1; tied values share the average of their ranks.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let shared = (i + j) as f64 / 2.0 + 1.0;
        for &index in &order[i..=j] {
            ranks[index] = shared;
        }
        i = j + 1;
    }
    ranks
}

fn has_ties(values: &[f64]) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// Two-sided tail of the t distribution: `P(|T_df| >= |t|)`, computed as
/// `I_x(df/2, 1/2)` with `x = df / (df + t^2)`.
fn student_t_two_sided(t: f64, df: f64) -> f64 {
    let x = df / (df + t * t);
    inc_beta_reg(df / 2.0, 0.5, x).clamp(0.0, 1.0)
}

/// Regularized incomplete beta function `I_x(a, b)` via the continued
/// fraction with modified Lentz evaluation (Numerical Recipes 6.4).
fn inc_beta_reg(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front =
        ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_continued_fraction(a, b, x) / a
    } else {
        1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b
    }
}

fn beta_continued_fraction(a: f64, b: f64, x: f64) -> f64 {
    const MAX_ITERATIONS: usize = 300;
    const EPS: f64 = 3.0e-16;
    const TINY: f64 = 1.0e-300;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITERATIONS {
        let m = m as f64;
        let m2 = 2.0 * m;

        let numerator = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + numerator * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + numerator / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;

        let numerator = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + numerator * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + numerator / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// Natural log of the gamma function (Lanczos, g = 7, 9 terms).
#[allow(clippy::excessive_precision)] // published coefficients, kept verbatim
fn ln_gamma(x: f64) -> f64 {
    const COEFFICIENTS: [f64; 8] = [
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_59,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    use std::f64::consts::PI;
    if x < 0.5 {
        // Reflection formula.
        return PI.ln() - (PI * x).sin().ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = 0.999_999_999_999_809_93;
    for (i, &c) in COEFFICIENTS.iter().enumerate() {
        acc += c / (x + (i + 1) as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}
