//! Dependency-length calculus for structured S, V and O constituents.
//!
//! Each constituent is a contiguous block of words with one head word;
//! the verb's head governs the heads of the subject and the object. With the
//! identity length-to-cost map, the external cost of a sentence is the sum
//! `delta` of the two head-to-head distances, and the full cost adds the
//! internal dependency sums `omega` of the three blocks
//! ([`omega_total`]).
//!
//! The `delta_*` functions give closed forms for `delta` in SOV and SVO as
//! functions of the head splits — `L_x` words before a head, `R_x` after it,
//! `|x| = L_x + 1 + R_x` ([`HeadSplit`]) — plus the two boundary layouts
//! where every dependent of a nominal head sits on one side. Everything is
//! exact integer arithmetic; this module deliberately does not take a
//! [`crate::cost::CostFunction`].

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstituentError {
    #[error("constituent {which} must contain at least one word")]
    EmptyConstituent { which: &'static str },
    #[error("head split {left} + 1 words exceed the constituent length {total}")]
    SplitTooLarge { left: u64, total: u64 },
    #[error("internal cost {which} must be finite and non-negative")]
    InvalidInternalCost { which: &'static str },
    #[error("length distribution needs a non-empty support")]
    EmptyDistribution,
    #[error("length distribution entries need length >= 1 and probability > 0")]
    InvalidDistributionEntry,
    #[error("length distribution probabilities sum to {sum}, not 1")]
    UnnormalizedDistribution { sum: f64 },
}

/// Word counts of the three constituents; none may be empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstituentLengths {
    s: u64,
    v: u64,
    o: u64,
}

impl ConstituentLengths {
    pub fn new(s: u64, v: u64, o: u64) -> Result<Self, ConstituentError> {
        for (len, which) in [(s, "S"), (v, "V"), (o, "O")] {
            if len == 0 {
                return Err(ConstituentError::EmptyConstituent { which });
            }
        }
        Ok(Self { s, v, o })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn o(&self) -> u64 {
        self.o
    }
}

/// Position of a head inside its constituent: `left` words precede it,
/// `right` follow it, and the block length is `left + 1 + right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeadSplit {
    left: u64,
    right: u64,
}

impl HeadSplit {
    pub fn new(left: u64, right: u64) -> Self {
        Self { left, right }
    }

    /// Split of a block of `total` words with `left` words before the head.
    pub fn with_total(left: u64, total: u64) -> Result<Self, ConstituentError> {
        if total == 0 {
            return Err(ConstituentError::EmptyConstituent { which: "split" });
        }
        if left + 1 > total {
            return Err(ConstituentError::SplitTooLarge { left, total });
        }
        Ok(Self { left, right: total - 1 - left })
    }

    pub fn left(&self) -> u64 {
        self.left
    }

    pub fn right(&self) -> u64 {
        self.right
    }

    pub fn total(&self) -> u64 {
        self.left + 1 + self.right
    }
}

/// Sum of head-to-head dependency lengths in S-O-V order:
/// `2 L_V + 2 R_O + L_O + R_S + 3`.
pub fn delta_sov(l_v: u64, r_o: u64, l_o: u64, r_s: u64) -> u64 {
    2 * l_v + 2 * r_o + l_o + r_s + 3
}

/// Sum of head-to-head dependency lengths in S-V-O order:
/// `R_S + |V| + L_O + 1`. Only the verb's total length matters, not where
/// its head sits inside it.
pub fn delta_svo(r_s: u64, v_len: u64, l_o: u64) -> Result<u64, ConstituentError> {
    if v_len == 0 {
        return Err(ConstituentError::EmptyConstituent { which: "V" });
    }
    Ok(r_s + v_len + l_o + 1)
}

/// [`delta_sov`] with all nominal dependents before their heads
/// (`R_O = 0`, `L_O = |O| - 1`, `R_S = 0`): `2 L_V + |O| + 2`.
pub fn delta_sov_left(l_v: u64, o_len: u64) -> Result<u64, ConstituentError> {
    if o_len == 0 {
        return Err(ConstituentError::EmptyConstituent { which: "O" });
    }
    Ok(2 * l_v + o_len + 2)
}

/// [`delta_sov`] with all nominal dependents after their heads
/// (`R_O = |O| - 1`, `L_O = 0`, `R_S = |S| - 1`): `2 L_V + 2|O| + |S|`.
pub fn delta_sov_right(l_v: u64, o_len: u64, s_len: u64) -> Result<u64, ConstituentError> {
    if o_len == 0 {
        return Err(ConstituentError::EmptyConstituent { which: "O" });
    }
    if s_len == 0 {
        return Err(ConstituentError::EmptyConstituent { which: "S" });
    }
    Ok(2 * l_v + 2 * o_len + s_len)
}

/// [`delta_svo`] with nominal dependents before their heads: `|V| + |O|`.
pub fn delta_svo_left(v_len: u64, o_len: u64) -> Result<u64, ConstituentError> {
    if v_len == 0 {
        return Err(ConstituentError::EmptyConstituent { which: "V" });
    }
    if o_len == 0 {
        return Err(ConstituentError::EmptyConstituent { which: "O" });
    }
    Ok(v_len + o_len)
}

/// [`delta_svo`] with nominal dependents after their heads: `|V| + |S|`.
pub fn delta_svo_right(v_len: u64, s_len: u64) -> Result<u64, ConstituentError> {
    if v_len == 0 {
        return Err(ConstituentError::EmptyConstituent { which: "V" });
    }
    if s_len == 0 {
        return Err(ConstituentError::EmptyConstituent { which: "S" });
    }
    Ok(v_len + s_len)
}

/// The two word orders whose left/right calculus is developed here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopLevelOrder {
    Sov,
    Svo,
}

/// Which side of a nominal head its dependents go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of comparing the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SidePreference {
    Left,
    Right,
    Tie,
}

/// The cheaper side for dependents of nominal heads, from the closed forms:
/// in SOV, left always wins except the degenerate `|S| = |O| = 1` tie (the
/// nominal heads then have no dependents at all); in SVO the comparison
/// reduces to `|O|` versus `|S|`.
pub fn preferred_side(order: TopLevelOrder, lengths: &ConstituentLengths) -> SidePreference {
    match order {
        TopLevelOrder::Sov => {
            if lengths.s() == 1 && lengths.o() == 1 {
                SidePreference::Tie
            } else {
                SidePreference::Left
            }
        }
        TopLevelOrder::Svo => {
            if lengths.o() < lengths.s() {
                SidePreference::Left
            } else if lengths.o() > lengths.s() {
                SidePreference::Right
            } else {
                SidePreference::Tie
            }
        }
    }
}

/// Total internal dependency length of each constituent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InternalCosts {
    omega_s: f64,
    omega_v: f64,
    omega_o: f64,
}

impl InternalCosts {
    pub fn new(omega_s: f64, omega_v: f64, omega_o: f64) -> Result<Self, ConstituentError> {
        for (value, which) in [(omega_s, "S"), (omega_v, "V"), (omega_o, "O")] {
            if !value.is_finite() || value < 0.0 {
                return Err(ConstituentError::InvalidInternalCost { which });
            }
        }
        Ok(Self { omega_s, omega_v, omega_o })
    }

    pub fn zero() -> Self {
        Self { omega_s: 0.0, omega_v: 0.0, omega_o: 0.0 }
    }

    pub fn omega_s(&self) -> f64 {
        self.omega_s
    }

    pub fn omega_v(&self) -> f64 {
        self.omega_v
    }

    pub fn omega_o(&self) -> f64 {
        self.omega_o
    }

    pub fn sum(&self) -> f64 {
        self.omega_s + self.omega_v + self.omega_o
    }
}

/// Total cost of a sentence: internal sums plus the external head-to-head
/// sum.
pub fn omega_total(internal: &InternalCosts, delta: f64) -> f64 {
    internal.sum() + delta
}

/// Cost of reordering an SVO sentence into SOV while freezing every
/// constituent's internal organization; see [`regression_comparison`].
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionComparison {
    /// Total SOV cost when the SVO source had nominal dependents on the left.
    pub omega_from_left: f64,
    /// Total SOV cost when the SVO source had nominal dependents on the right.
    pub omega_from_right: f64,
    /// Which source side makes the move to SOV more expensive. Depends only
    /// on the lengths: `Right` as soon as S or O has a dependent of its own.
    pub harder_from: SidePreference,
    /// Whether the two internal sums agree, i.e. whether the cost difference
    /// is carried by the external sums alone.
    pub conservation_holds: bool,
}

/// Compares the cost of becoming SOV from the two flavors of SVO: one with
/// nominal dependents left of their heads, one with them on the right. The
/// internal sums are carried over untouched; under conservation (equal
/// internal sums) the gap is `delta_sov_right - delta_sov_left = |S| + |O| - 2`.
///
/// Unequal internal sums are reported via `conservation_holds` rather than
/// rejected; the totals still use the sums as given.
pub fn regression_comparison(
    internal_left: &InternalCosts,
    internal_right: &InternalCosts,
    lengths: &ConstituentLengths,
    l_v: u64,
) -> RegressionComparison {
    let delta_left = delta_sov_left(l_v, lengths.o()).expect("lengths are validated");
    let delta_right =
        delta_sov_right(l_v, lengths.o(), lengths.s()).expect("lengths are validated");
    let harder_from = if lengths.s() == 1 && lengths.o() == 1 {
        SidePreference::Tie
    } else {
        SidePreference::Right
    };
    RegressionComparison {
        omega_from_left: omega_total(internal_left, delta_left as f64),
        omega_from_right: omega_total(internal_right, delta_right as f64),
        harder_from,
        conservation_holds: (internal_left.sum() - internal_right.sum()).abs() <= 1e-9,
    }
}

/// A finite distribution over constituent lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthDistribution {
    support: Vec<(u64, f64)>,
}

impl LengthDistribution {
    /// `(length, probability)` pairs: lengths at least 1, probabilities
    /// positive and summing to 1 within `1e-12`.
    pub fn new(support: Vec<(u64, f64)>) -> Result<Self, ConstituentError> {
        if support.is_empty() {
            return Err(ConstituentError::EmptyDistribution);
        }
        for &(length, probability) in &support {
            if length == 0 || !probability.is_finite() || probability <= 0.0 {
                return Err(ConstituentError::InvalidDistributionEntry);
            }
        }
        let sum: f64 = support.iter().map(|&(_, p)| p).sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(ConstituentError::UnnormalizedDistribution { sum });
        }
        Ok(Self { support })
    }

    pub fn point(length: u64) -> Result<Self, ConstituentError> {
        Self::new(vec![(length, 1.0)])
    }

    pub fn support(&self) -> &[(u64, f64)] {
        &self.support
    }

    pub fn mean(&self) -> f64 {
        self.support.iter().map(|&(length, p)| length as f64 * p).sum()
    }
}

/// Expected external SVO cost over random constituent lengths:
/// `E[|V|] + E[|O|]` for left placement, `E[|V|] + E[|S|]` for right.
/// The two sides tie exactly when `E[|O|] = E[|S|]` — only the means matter.
pub fn expected_delta_svo(
    dist_s: &LengthDistribution,
    dist_o: &LengthDistribution,
    dist_v: &LengthDistribution,
    side: Side,
) -> f64 {
    match side {
        Side::Left => dist_v.mean() + dist_o.mean(),
        Side::Right => dist_v.mean() + dist_s.mean(),
    }
}
