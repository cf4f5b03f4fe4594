//! The six orderings of subject, verb and object and the ring connecting
//! them.
//!
//! Swapping one pair of adjacent constituents turns each ordering into
//! exactly two others, so the six orderings form a single 6-cycle — the
//! permutation ring. Distances on the ring come in two flavors and both are
//! exposed: the shortest-path metric ([`WordOrder::ring_distance`]) and the
//! position along the clockwise chain that starts at SOV
//! ([`WordOrder::clockwise_distance_from_sov`]). Which one a caller wants
//! depends on whether trajectories may run both ways around the ring.
//!
//! [`FrequencyTable`] holds how many languages use each ordering as their
//! dominant one, with a bundled dataset shipped in the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

const BUNDLED_DATASET: &str = include_str!("../data/word_order_frequencies.tsv");

/// One of the three top-level constituents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constituent {
    Subject,
    Verb,
    Object,
}

impl fmt::Display for Constituent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constituent::Subject => "S",
            Constituent::Verb => "V",
            Constituent::Object => "O",
        })
    }
}

/// A dominant ordering of {S, V, O}. Variants are declared in clockwise ring
/// order starting from SOV, so the discriminant is the clockwise distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WordOrder {
    Sov,
    Svo,
    Vso,
    Vos,
    Ovs,
    Osv,
}

impl WordOrder {
    /// All six orders, in clockwise ring order from SOV.
    pub const ALL: [WordOrder; 6] = [
        WordOrder::Sov,
        WordOrder::Svo,
        WordOrder::Vso,
        WordOrder::Vos,
        WordOrder::Ovs,
        WordOrder::Osv,
    ];

    pub fn constituents(self) -> [Constituent; 3] {
        use Constituent::{Object as O, Subject as S, Verb as V};
        match self {
            WordOrder::Sov => [S, O, V],
            WordOrder::Svo => [S, V, O],
            WordOrder::Vso => [V, S, O],
            WordOrder::Vos => [V, O, S],
            WordOrder::Ovs => [O, V, S],
            WordOrder::Osv => [O, S, V],
        }
    }

    pub fn from_constituents(sequence: [Constituent; 3]) -> Option<WordOrder> {
        WordOrder::ALL.into_iter().find(|order| order.constituents() == sequence)
    }

    /// The two orders reachable by swapping one adjacent pair: first the
    /// leading pair, then the trailing pair.
    pub fn swap_neighbors(self) -> [WordOrder; 2] {
        let [a, b, c] = self.constituents();
        let front = WordOrder::from_constituents([b, a, c]).expect("swap preserves the label set");
        let back = WordOrder::from_constituents([a, c, b]).expect("swap preserves the label set");
        [front, back]
    }

    /// Whether one adjacent swap turns `self` into `other`.
    pub fn is_swap_adjacent(self, other: WordOrder) -> bool {
        self.swap_neighbors().contains(&other)
    }

    /// Steps along the clockwise chain SOV, SVO, VSO, VOS, OVS, OSV.
    pub fn clockwise_distance_from_sov(self) -> usize {
        self as usize
    }

    /// Shortest-path distance in the 6-cycle, at most 3.
    pub fn ring_distance(self, other: WordOrder) -> usize {
        let k = self
            .clockwise_distance_from_sov()
            .abs_diff(other.clockwise_distance_from_sov());
        k.min(6 - k)
    }
}

impl fmt::Display for WordOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.constituents();
        write!(f, "{a}{b}{c}")
    }
}

impl FromStr for WordOrder {
    type Err = UnknownWordOrder;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "SOV" => Ok(WordOrder::Sov),
            "SVO" => Ok(WordOrder::Svo),
            "VSO" => Ok(WordOrder::Vso),
            "VOS" => Ok(WordOrder::Vos),
            "OVS" => Ok(WordOrder::Ovs),
            "OSV" => Ok(WordOrder::Osv),
            _ => Err(UnknownWordOrder { token: s.to_string() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown word order {token:?}; expected one of SOV, SVO, VSO, VOS, OVS, OSV")]
pub struct UnknownWordOrder {
    pub token: String,
}

/// The adjacent-swap 6-cycle over the word orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationRing {
    edges: [(WordOrder, WordOrder); 6],
}

impl PermutationRing {
    pub fn new() -> Self {
        let edges = std::array::from_fn(|i| {
            let from = WordOrder::ALL[i];
            let to = WordOrder::ALL[(i + 1) % 6];
            debug_assert!(from.is_swap_adjacent(to), "the clockwise successor is one swap away");
            (from, to)
        });
        Self { edges }
    }

    /// The six ring edges as (order, clockwise successor) pairs.
    pub fn edges(&self) -> &[(WordOrder, WordOrder); 6] {
        &self.edges
    }
}

impl Default for PermutationRing {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatasetError {
    #[error("line {line}: expected ORDER<TAB>COUNT")]
    MalformedLine { line: usize },
    #[error("line {line}: {source}")]
    UnknownOrder {
        line: usize,
        #[source]
        source: UnknownWordOrder,
    },
    #[error("line {line}: count {token:?} is not a non-negative integer")]
    InvalidCount { line: usize, token: String },
    #[error("line {line}: duplicate entry for {order}")]
    DuplicateOrder { line: usize, order: WordOrder },
    #[error("dataset is missing {}", format_orders(.missing))]
    MissingOrders { missing: Vec<WordOrder> },
    #[error("all counts are zero; percentages are undefined")]
    NoData,
}

fn format_orders(orders: &[WordOrder]) -> String {
    orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(", ")
}

/// Languages per dominant word order. Always holds all six orders; parsing
/// and construction reject partial tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    counts: BTreeMap<WordOrder, u64>,
}

impl FrequencyTable {
    pub fn from_counts(
        counts: impl IntoIterator<Item = (WordOrder, u64)>,
    ) -> Result<Self, DatasetError> {
        let mut map = BTreeMap::new();
        for (order, count) in counts {
            if map.insert(order, count).is_some() {
                return Err(DatasetError::DuplicateOrder { line: 0, order });
            }
        }
        let missing: Vec<WordOrder> =
            WordOrder::ALL.into_iter().filter(|o| !map.contains_key(o)).collect();
        if !missing.is_empty() {
            return Err(DatasetError::MissingOrders { missing });
        }
        Ok(Self { counts: map })
    }

    /// Parses the `ORDER<TAB>COUNT` format. Lines starting with `#` and
    /// blank lines are skipped; errors name the offending 1-based line.
    pub fn parse(text: &str) -> Result<Self, DatasetError> {
        let mut counts = BTreeMap::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let record = raw.trim_end();
            if record.is_empty() || record.starts_with('#') {
                continue;
            }
            let (order_token, count_token) =
                record.split_once('\t').ok_or(DatasetError::MalformedLine { line })?;
            let order: WordOrder = order_token
                .parse()
                .map_err(|source| DatasetError::UnknownOrder { line, source })?;
            let count: u64 = count_token.trim().parse().map_err(|_| {
                DatasetError::InvalidCount { line, token: count_token.to_string() }
            })?;
            if counts.insert(order, count).is_some() {
                return Err(DatasetError::DuplicateOrder { line, order });
            }
        }
        let missing: Vec<WordOrder> =
            WordOrder::ALL.into_iter().filter(|o| !counts.contains_key(o)).collect();
        if !missing.is_empty() {
            return Err(DatasetError::MissingOrders { missing });
        }
        Ok(Self { counts })
    }

    /// The dataset shipped with the crate (see `data/` for provenance).
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_DATASET).expect("bundled dataset is well-formed")
    }

    pub fn count(&self, order: WordOrder) -> u64 {
        self.counts[&order]
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `(order, clockwise distance from SOV, count)` in clockwise order.
    pub fn clockwise_rows(&self) -> [(WordOrder, usize, u64); 6] {
        std::array::from_fn(|i| {
            let order = WordOrder::ALL[i];
            (order, order.clockwise_distance_from_sov(), self.count(order))
        })
    }

    /// Collapses the table into the three verb placements. Errors with
    /// [`DatasetError::NoData`] when the total is zero, since percentages
    /// would be undefined.
    pub fn verb_placement_summary(&self) -> Result<VerbPlacementSummary, DatasetError> {
        let total = self.total();
        if total == 0 {
            return Err(DatasetError::NoData);
        }
        let row = |placement: VerbPlacement, count: u64| VerbPlacementRow {
            placement,
            count,
            percent_tenths: percent_tenths(count, total),
        };
        Ok(VerbPlacementSummary {
            rows: [
                row(
                    VerbPlacement::Initial,
                    self.count(WordOrder::Vso) + self.count(WordOrder::Vos),
                ),
                row(
                    VerbPlacement::Central,
                    self.count(WordOrder::Svo) + self.count(WordOrder::Ovs),
                ),
                row(VerbPlacement::Final, self.count(WordOrder::Sov) + self.count(WordOrder::Osv)),
            ],
            total,
        })
    }
}

/// Percentage of `count` in `total` in tenths of a percent, rounded half
/// away from zero. Integer arithmetic keeps the rounding exact.
fn percent_tenths(count: u64, total: u64) -> u64 {
    (2000 * count + total) / (2 * total)
}

/// Where the verb sits in an ordering of {S, V, O}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerbPlacement {
    /// VSO and VOS.
    Initial,
    /// SVO and OVS.
    Central,
    /// SOV and OSV.
    Final,
}

impl fmt::Display for VerbPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerbPlacement::Initial => "initial",
            VerbPlacement::Central => "central",
            VerbPlacement::Final => "final",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerbPlacementRow {
    pub placement: VerbPlacement,
    pub count: u64,
    /// Share of the total in tenths of a percent (`101` reads as `10.1%`).
    pub percent_tenths: u64,
}

impl VerbPlacementRow {
    pub fn percent(&self) -> f64 {
        self.percent_tenths as f64 / 10.0
    }

    /// One-decimal rendering, e.g. `"10.1"`.
    pub fn percent_text(&self) -> String {
        format!("{}.{}", self.percent_tenths / 10, self.percent_tenths % 10)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbPlacementSummary {
    /// Initial, central, final — in that order.
    pub rows: [VerbPlacementRow; 3],
    pub total: u64,
}
