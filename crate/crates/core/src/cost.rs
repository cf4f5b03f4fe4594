//! Cost landscape of head placement on a line.
//!
//! A head and its `n` dependents occupy positions `1..=n+1` of a sequence.
//! Each head–dependent pair carries a cost `g(d)` where `d` is the distance
//! between the two positions and `g` is any strictly increasing positive
//! function ([`CostFunction`]). [`total_cost`] sums that cost over all `n`
//! dependencies for one head position; sweeping the head across the sequence
//! yields a [`Landscape`].
//!
//! For every strictly increasing `g` the landscape has the same shape: two
//! equal maxima at the ends, a single central minimum when `n` is even, two
//! adjacent central minima when `n` is odd, and quasi-convexity in between.
//! [`optimal_placements`] and [`worst_placements`] return those sets
//! analytically; the `oracle` module confirms them by exhaustive enumeration.

use std::collections::BTreeSet;

use thiserror::Error;

/// Absolute tolerance for cost-value comparisons when `g` is real-valued.
/// Integer-valued cost functions (identity, integer tables) are exact in
/// `f64` at the scales this crate enumerates, so the tolerance only matters
/// for fractional powers, exponentials and affine costs.
pub const COST_EQ_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CostError {
    #[error("invalid cost function parameter: {reason}")]
    InvalidParameter { reason: &'static str },
    #[error("cost table must be finite, positive and strictly increasing (violated at entry {index})")]
    InvalidTable { index: usize },
    #[error("dependency lengths start at 1; got 0")]
    LengthZero,
    #[error("dependency length {d} exceeds the cost table domain [1, {d_max}]")]
    LengthOutOfDomain { d: usize, d_max: usize },
    #[error("head position {l} must lie in [1, {max}]")]
    PositionOutOfRange { l: usize, max: usize },
    #[error("operation requires at least {min} dependents, got {n}")]
    TooFewDependents { n: usize, min: usize },
    #[error("cost function domain ends at {d_max} but lengths up to {needed} are needed")]
    DomainTooSmall { d_max: usize, needed: usize },
    #[error("a star of {n_total} total elements is below the minimum of 3")]
    TooFewElements { n_total: usize },
}

/// A strictly increasing, positive map from dependency length to memory cost.
///
/// Construction enforces strict monotonicity on the whole domain, so every
/// value of this type is a valid cost function: the closed families are
/// monotone by parameter constraints, and tables are checked entry by entry.
#[derive(Debug, Clone, PartialEq)]
pub struct CostFunction {
    kind: CostKind,
}

#[derive(Debug, Clone, PartialEq)]
enum CostKind {
    Identity,
    Power { exponent: f64 },
    Exponential { base: f64 },
    Affine { slope: f64, intercept: f64 },
    Table { values: Vec<f64> },
}

impl CostFunction {
    /// `g(d) = d`.
    pub fn identity() -> Self {
        Self { kind: CostKind::Identity }
    }

    /// `g(d) = d^exponent` with `exponent > 0`.
    pub fn power(exponent: f64) -> Result<Self, CostError> {
        if !exponent.is_finite() || exponent <= 0.0 {
            return Err(CostError::InvalidParameter { reason: "power exponent must be finite and > 0" });
        }
        Ok(Self { kind: CostKind::Power { exponent } })
    }

    /// `g(d) = base^d` with `base > 1`.
    pub fn exponential(base: f64) -> Result<Self, CostError> {
        if !base.is_finite() || base <= 1.0 {
            return Err(CostError::InvalidParameter { reason: "exponential base must be finite and > 1" });
        }
        Ok(Self { kind: CostKind::Exponential { base } })
    }

    /// `g(d) = slope * d + intercept` with `slope > 0` and `intercept >= 0`.
    pub fn affine(slope: f64, intercept: f64) -> Result<Self, CostError> {
        if !slope.is_finite() || slope <= 0.0 {
            return Err(CostError::InvalidParameter { reason: "affine slope must be finite and > 0" });
        }
        if !intercept.is_finite() || intercept < 0.0 {
            return Err(CostError::InvalidParameter { reason: "affine intercept must be finite and >= 0" });
        }
        Ok(Self { kind: CostKind::Affine { slope, intercept } })
    }

    /// Explicit values `g(1), g(2), ..., g(d_max)`. Rejects tables that are
    /// empty, non-positive, non-finite or not strictly increasing.
    pub fn table(values: Vec<f64>) -> Result<Self, CostError> {
        if values.is_empty() {
            return Err(CostError::InvalidParameter { reason: "cost table must not be empty" });
        }
        for (index, &v) in values.iter().enumerate() {
            if !v.is_finite() || v <= 0.0 {
                return Err(CostError::InvalidTable { index });
            }
            if index > 0 && v <= values[index - 1] {
                return Err(CostError::InvalidTable { index });
            }
        }
        Ok(Self { kind: CostKind::Table { values } })
    }

    /// Largest length this function is defined for; `None` means unbounded.
    pub fn d_max(&self) -> Option<usize> {
        match &self.kind {
            CostKind::Table { values } => Some(values.len()),
            _ => None,
        }
    }

    /// The cost `g(d)` of a dependency of length `d >= 1`.
    pub fn eval(&self, d: usize) -> Result<f64, CostError> {
        if d == 0 {
            return Err(CostError::LengthZero);
        }
        if let Some(d_max) = self.d_max() {
            if d > d_max {
                return Err(CostError::LengthOutOfDomain { d, d_max });
            }
        }
        Ok(self.eval_in_domain(d))
    }

    /// Requires callers to have validated `1 <= d <= d_max` already.
    pub(crate) fn eval_in_domain(&self, d: usize) -> f64 {
        match &self.kind {
            CostKind::Identity => d as f64,
            CostKind::Power { exponent } => (d as f64).powf(*exponent),
            CostKind::Exponential { base } => base.powi(d as i32),
            CostKind::Affine { slope, intercept } => slope * d as f64 + intercept,
            CostKind::Table { values } => values[d - 1],
        }
    }

    pub(crate) fn require_d_max(&self, needed: usize) -> Result<(), CostError> {
        match self.d_max() {
            Some(d_max) if d_max < needed => Err(CostError::DomainTooSmall { d_max, needed }),
            _ => Ok(()),
        }
    }
}

fn check_position(l: usize, max: usize) -> Result<(), CostError> {
    if l < 1 || l > max {
        return Err(CostError::PositionOutOfRange { l, max });
    }
    Ok(())
}

fn require_dependents(n: usize, min: usize) -> Result<(), CostError> {
    if n < min {
        return Err(CostError::TooFewDependents { n, min });
    }
    Ok(())
}

/// Total cost of all `n` dependencies with the head at position `l` in
/// `[1, n+1]`: the sum of `g(d)` for `d = 1..l-1` (dependents to the left)
/// plus the sum for `d = 1..n+1-l` (dependents to the right). Empty sums
/// contribute zero, so `g(0)` is never evaluated.
pub fn total_cost(n: usize, l: usize, g: &CostFunction) -> Result<f64, CostError> {
    require_dependents(n, 1)?;
    check_position(l, n + 1)?;
    g.require_d_max(n)?;
    let left: f64 = (1..l).map(|d| g.eval_in_domain(d)).sum();
    let right: f64 = (1..=n + 1 - l).map(|d| g.eval_in_domain(d)).sum();
    Ok(left + right)
}

/// Closed form of [`total_cost`] for the identity cost function:
/// `l(l-1)/2 + (n+2-l)(n+1-l)/2`, the quadratic
/// `l^2 - (n+2)l + (n+1)(n+2)/2` written without negative intermediates.
pub fn total_cost_identity(n: usize, l: usize) -> Result<u64, CostError> {
    require_dependents(n, 1)?;
    check_position(l, n + 1)?;
    let (n, l) = (n as u64, l as u64);
    Ok(l * (l - 1) / 2 + (n + 2 - l) * (n + 1 - l) / 2)
}

/// Forward difference of the landscape at `l` in `[1, n]`:
/// `total_cost(n, l+1, g) - total_cost(n, l, g)`, which telescopes to
/// `g(l) - g(n+1-l)`. Negative below the center, positive above it, and zero
/// exactly at `l = (n+1)/2` (attainable only for odd `n`).
pub fn discrete_derivative(n: usize, l: usize, g: &CostFunction) -> Result<f64, CostError> {
    require_dependents(n, 1)?;
    check_position(l, n)?;
    g.require_d_max(n)?;
    Ok(g.eval_in_domain(l) - g.eval_in_domain(n + 1 - l))
}

/// First central position of a sequence of `n + 1` elements:
/// `ceil((n+1)/2)`. The only central position when `n` is even; the first of
/// two when `n` is odd.
pub fn first_central_position(n: usize) -> usize {
    (n + 2) / 2
}

/// Head positions minimizing the total cost, for any strictly increasing `g`:
/// the central position for even `n`, the two central positions for odd `n`.
///
/// The result does not depend on which `g` is supplied — construction already
/// guarantees strict monotonicity, and that alone fixes the minima. Callers
/// still pass `g` because the placements are claims about its landscape.
pub fn optimal_placements(n: usize, g: &CostFunction) -> Result<BTreeSet<usize>, CostError> {
    require_dependents(n, 2)?;
    let _ = g;
    let center = first_central_position(n);
    let mut placements = BTreeSet::from([center]);
    if n % 2 == 1 {
        placements.insert(center + 1);
    }
    Ok(placements)
}

/// Head positions maximizing the total cost: always the two ends `{1, n+1}`,
/// with equal cost values, for any strictly increasing `g`.
pub fn worst_placements(n: usize, g: &CostFunction) -> Result<BTreeSet<usize>, CostError> {
    require_dependents(n, 2)?;
    let _ = g;
    Ok(BTreeSet::from([1, n + 1]))
}

/// The cost of every head placement for fixed `n` and `g`, with the minima
/// and maxima position sets.
#[derive(Debug, Clone, PartialEq)]
pub struct Landscape {
    n: usize,
    costs: Vec<f64>,
    minima: BTreeSet<usize>,
    maxima: BTreeSet<usize>,
}

impl Landscape {
    /// Costs for head positions `1..=n+1`. Requires `n >= 2`; with fewer
    /// dependents there is nothing to optimize.
    pub fn new(n: usize, g: &CostFunction) -> Result<Self, CostError> {
        require_dependents(n, 2)?;
        let costs = (1..=n + 1)
            .map(|l| total_cost(n, l, g))
            .collect::<Result<Vec<_>, _>>()?;
        let minima = optimal_placements(n, g)?;
        let maxima = worst_placements(n, g)?;
        Ok(Self { n, costs, minima, maxima })
    }

    pub fn dependent_count(&self) -> usize {
        self.n
    }

    /// Cost at head position `l` (1-based), or `None` outside `[1, n+1]`.
    pub fn cost_at(&self, l: usize) -> Option<f64> {
        if l < 1 {
            return None;
        }
        self.costs.get(l - 1).copied()
    }

    /// All costs; index `i` holds the cost for head position `i + 1`.
    pub fn costs(&self) -> &[f64] {
        &self.costs
    }

    /// `(position, cost)` pairs for `position = 1..=n+1`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.costs.iter().enumerate().map(|(i, &c)| (i + 1, c))
    }

    pub fn minima(&self) -> &BTreeSet<usize> {
        &self.minima
    }

    pub fn maxima(&self) -> &BTreeSet<usize> {
        &self.maxima
    }

    pub fn min_cost(&self) -> f64 {
        self.costs[*self.minima.first().expect("minima set is never empty") - 1]
    }

    pub fn max_cost(&self) -> f64 {
        self.costs[*self.maxima.first().expect("maxima set is never empty") - 1]
    }
}

/// Exact extremes of a star of `n_total >= 3` elements under the identity
/// cost: the maximum `n_total(n_total-1)/2` is reached with the hub at either
/// end, the minimum with the hub central —
/// `(n_total-1)(n_total+1)/4` for odd `n_total`, `n_total^2/4` for even.
pub fn star_extremes_identity(n_total: usize) -> Result<StarExtremes, CostError> {
    if n_total < 3 {
        return Err(CostError::TooFewElements { n_total });
    }
    let n = n_total as u64;
    let max = n * (n - 1) / 2;
    let min = if n % 2 == 1 { (n - 1) * (n + 1) / 4 } else { n * n / 4 };
    Ok(StarExtremes { max, min })
}

/// Extremes of a star-tree arrangement cost; see [`star_extremes_identity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarExtremes {
    pub max: u64,
    pub min: u64,
}

/// True iff `costs[l2] <= max(costs[l1], costs[l3])` for every index triple
/// `l1 <= l2 <= l3`. Checked exhaustively; the vectors this crate produces
/// are short enough that the cubic sweep is instant.
pub fn check_quasiconvex(costs: &[f64]) -> bool {
    for i in 0..costs.len() {
        for j in i..costs.len() {
            for k in j..costs.len() {
                if costs[j] > costs[i].max(costs[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimum and maximum of `costs` together with the 1-based position sets
/// attaining them, treating values within `tol` of the extreme as ties.
pub(crate) fn extreme_position_sets(
    costs: &[f64],
    tol: f64,
) -> (f64, BTreeSet<usize>, f64, BTreeSet<usize>) {
    let min = costs.iter().copied().fold(f64::INFINITY, f64::min);
    let max = costs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let minima = costs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c <= min + tol)
        .map(|(i, _)| i + 1)
        .collect();
    let maxima = costs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c >= max - tol)
        .map(|(i, _)| i + 1)
        .collect();
    (min, minima, max, maxima)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity() -> CostFunction {
        CostFunction::identity()
    }

    #[test]
    fn eval_identity() {
        assert_eq!(identity().eval(5).unwrap(), 5.0);
    }

    #[test]
    fn eval_power() {
        let g = CostFunction::power(2.0).unwrap();
        assert!((g.eval(3).unwrap() - 9.0).abs() < 1e-12);
    }

    #[test]
    fn eval_rejects_zero_length() {
        assert_eq!(identity().eval(0), Err(CostError::LengthZero));
    }

    #[test]
    fn table_rejects_non_strict_entries() {
        // 4 == 4 breaks strictness.
        assert_eq!(
            CostFunction::table(vec![1.0, 4.0, 4.0]),
            Err(CostError::InvalidTable { index: 2 })
        );
        assert_eq!(
            CostFunction::table(vec![0.0, 1.0]),
            Err(CostError::InvalidTable { index: 0 })
        );
        assert!(CostFunction::table(vec![]).is_err());
        assert!(CostFunction::table(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn table_domain_is_explicit() {
        let g = CostFunction::table(vec![1.0, 4.0, 5.0]).unwrap();
        assert_eq!(g.d_max(), Some(3));
        assert_eq!(g.eval(2).unwrap(), 4.0);
        assert_eq!(g.eval(4), Err(CostError::LengthOutOfDomain { d: 4, d_max: 3 }));
    }

    #[test]
    fn closed_family_parameter_validation() {
        assert!(CostFunction::power(0.0).is_err());
        assert!(CostFunction::power(-1.0).is_err());
        assert!(CostFunction::exponential(1.0).is_err());
        assert!(CostFunction::affine(0.0, 1.0).is_err());
        assert!(CostFunction::affine(1.0, -0.5).is_err());
        assert!(CostFunction::power(0.5).is_ok());
        assert!(CostFunction::exponential(2.0).is_ok());
        assert!(CostFunction::affine(3.0, 1.0).is_ok());
    }

    #[test]
    fn total_cost_worked_example() {
        // n = 3 under identity: 6 at the ends, 4 in the middle.
        assert_eq!(total_cost(3, 1, &identity()).unwrap(), 6.0);
        assert_eq!(total_cost(3, 2, &identity()).unwrap(), 4.0);
        assert_eq!(total_cost(3, 3, &identity()).unwrap(), 4.0);
        assert_eq!(total_cost(3, 4, &identity()).unwrap(), 6.0);
    }

    #[test]
    fn total_cost_end_position_is_full_sum() {
        assert_eq!(total_cost(10, 1, &identity()).unwrap(), 55.0);
    }

    #[test]
    fn total_cost_power_expansion() {
        // distances 1,2 on the left and 1,2 on the right: 1+4+1+4.
        let g = CostFunction::power(2.0).unwrap();
        assert!((total_cost(4, 3, &g).unwrap() - 10.0).abs() < 1e-9);
    }

    #[test]
    fn total_cost_domain_errors() {
        assert_eq!(
            total_cost(3, 0, &identity()),
            Err(CostError::PositionOutOfRange { l: 0, max: 4 })
        );
        assert_eq!(
            total_cost(3, 5, &identity()),
            Err(CostError::PositionOutOfRange { l: 5, max: 4 })
        );
        assert_eq!(
            total_cost(0, 1, &identity()),
            Err(CostError::TooFewDependents { n: 0, min: 1 })
        );
        let short = CostFunction::table(vec![1.0, 2.0]).unwrap();
        assert_eq!(
            total_cost(3, 1, &short),
            Err(CostError::DomainTooSmall { d_max: 2, needed: 3 })
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(total_cost_identity(3, 4).unwrap(), 6);
        assert_eq!(total_cost_identity(10, 6).unwrap(), 30);
        // A single dependent costs the same wherever the head goes.
        assert_eq!(total_cost_identity(1, 1).unwrap(), 1);
        assert_eq!(total_cost_identity(1, 2).unwrap(), 1);
    }

    #[test]
    fn closed_form_matches_quadratic() {
        // Same polynomial written as l^2 - (n+2)l + (n+1)(n+2)/2.
        for n in 1..=50usize {
            for l in 1..=n + 1 {
                let quadratic =
                    (l * l) as i64 - ((n + 2) * l) as i64 + ((n + 1) * (n + 2) / 2) as i64;
                assert_eq!(total_cost_identity(n, l).unwrap() as i64, quadratic);
            }
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(discrete_derivative(3, 2, &identity()).unwrap(), 0.0);
        assert_eq!(discrete_derivative(3, 1, &identity()).unwrap(), -2.0);
        let g = CostFunction::power(2.0).unwrap();
        assert!((discrete_derivative(4, 4, &g).unwrap() - 15.0).abs() < 1e-9);
    }

    #[test]
    fn derivative_domain_ends_at_n() {
        assert_eq!(
            discrete_derivative(3, 4, &identity()),
            Err(CostError::PositionOutOfRange { l: 4, max: 3 })
        );
    }

    #[test]
    fn landscape_worked_example() {
        let ls = Landscape::new(3, &identity()).unwrap();
        assert_eq!(ls.costs(), &[6.0, 4.0, 4.0, 6.0]);
        assert_eq!(ls.minima(), &BTreeSet::from([2, 3]));
        assert_eq!(ls.maxima(), &BTreeSet::from([1, 4]));
        assert_eq!(ls.min_cost(), 4.0);
        assert_eq!(ls.max_cost(), 6.0);
        assert_eq!(ls.cost_at(1), Some(6.0));
        assert_eq!(ls.cost_at(0), None);
        assert_eq!(ls.cost_at(5), None);
    }

    #[test]
    fn landscape_ten_dependents() {
        let ls = Landscape::new(10, &identity()).unwrap();
        assert_eq!(ls.minima(), &BTreeSet::from([6]));
        assert_eq!(ls.cost_at(6), Some(30.0));
        assert_eq!(ls.maxima(), &BTreeSet::from([1, 11]));
        assert_eq!(ls.cost_at(1), Some(55.0));
        assert_eq!(ls.cost_at(11), Some(55.0));
    }

    #[test]
    fn landscape_rejects_single_dependent() {
        assert_eq!(
            Landscape::new(1, &identity()),
            Err(CostError::TooFewDependents { n: 1, min: 2 })
        );
    }

    #[test]
    fn placements_follow_parity() {
        for g in [
            identity(),
            CostFunction::exponential(2.0).unwrap(),
            CostFunction::table(vec![2.0, 3.0, 7.0, 20.0, 21.0]).unwrap(),
        ] {
            assert_eq!(optimal_placements(3, &g).unwrap(), BTreeSet::from([2, 3]));
            assert_eq!(optimal_placements(2, &g).unwrap(), BTreeSet::from([2]));
            assert_eq!(optimal_placements(5, &g).unwrap(), BTreeSet::from([3, 4]));
            assert_eq!(worst_placements(2, &g).unwrap(), BTreeSet::from([1, 3]));
            assert_eq!(worst_placements(5, &g).unwrap(), BTreeSet::from([1, 6]));
        }
        assert_eq!(optimal_placements(10, &identity()).unwrap(), BTreeSet::from([6]));
        assert!(optimal_placements(1, &identity()).is_err());
        assert!(worst_placements(1, &identity()).is_err());
    }

    #[test]
    fn star_extremes_closed_forms() {
        assert_eq!(star_extremes_identity(4).unwrap(), StarExtremes { max: 6, min: 4 });
        assert_eq!(star_extremes_identity(11).unwrap(), StarExtremes { max: 55, min: 30 });
        assert_eq!(star_extremes_identity(5).unwrap(), StarExtremes { max: 10, min: 6 });
        assert_eq!(star_extremes_identity(2), Err(CostError::TooFewElements { n_total: 2 }));
    }

    #[test]
    fn star_extremes_match_landscape() {
        for n_total in 3..=12usize {
            let extremes = star_extremes_identity(n_total).unwrap();
            let ls = Landscape::new(n_total - 1, &identity()).unwrap();
            assert_eq!(ls.max_cost(), extremes.max as f64);
            assert_eq!(ls.min_cost(), extremes.min as f64);
        }
    }

    #[test]
    fn quasiconvex_examples() {
        assert!(check_quasiconvex(&[6.0, 4.0, 4.0, 6.0]));
        assert!(check_quasiconvex(&[1.0, 1.0, 1.0]));
        assert!(!check_quasiconvex(&[4.0, 6.0, 4.0]));
        assert!(check_quasiconvex(&[]));
    }

    #[test]
    fn quasiconvex_rejects_non_monotone_table_landscape() {
        // Bypass validation: a decreasing "cost" table. Its landscape bulges
        // in the middle, which the checker must catch.
        let bad = CostFunction { kind: CostKind::Table { values: vec![5.0, 1.0] } };
        let costs: Vec<f64> = (1..=3).map(|l| total_cost(2, l, &bad).unwrap()).collect();
        assert_eq!(costs, vec![6.0, 10.0, 6.0]);
        assert!(!check_quasiconvex(&costs));
    }

    #[test]
    fn analytic_extremes_match_numeric_argminmax() {
        let costs_fns = [
            identity(),
            CostFunction::power(2.0).unwrap(),
            CostFunction::power(0.5).unwrap(),
            CostFunction::exponential(2.0).unwrap(),
            CostFunction::affine(3.0, 1.0).unwrap(),
        ];
        for n in 2..=12usize {
            for g in &costs_fns {
                let ls = Landscape::new(n, g).unwrap();
                let (_, lo, _, hi) = extreme_position_sets(ls.costs(), COST_EQ_TOLERANCE);
                assert_eq!(&lo, ls.minima(), "n={n} g={g:?}");
                assert_eq!(&hi, ls.maxima(), "n={n} g={g:?}");
            }
        }
    }

    #[test]
    fn symmetry_is_exact() {
        let g = CostFunction::power(0.5).unwrap();
        for n in 1..=20usize {
            for l in 1..=n + 1 {
                let a = total_cost(n, l, &g).unwrap();
                let b = total_cost(n, n + 2 - l, &g).unwrap();
                assert_eq!(a.to_bits(), b.to_bits(), "n={n} l={l}");
            }
        }
    }
}
