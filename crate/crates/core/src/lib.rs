//! Where should a head go among its dependents on a line, and what does a
//! misplaced head cost?
//!
//! The crate answers that question for the smallest interesting case — one
//! head, `n` dependents, all on a line — and for the classic three-constituent
//! case of subject, verb and object:
//!
//! - [`cost`] computes the total memory cost of every head placement under any
//!   strictly increasing length-to-cost function, together with the analytic
//!   minima (center), maxima (ends) and the quasi-convexity of the landscape.
//! - [`oracle`] re-derives those results by brute force: exhaustive
//!   enumeration of all linear arrangements of small trees, plus crossing
//!   counts.
//! - [`word_order`] models the six orderings of {S, V, O}, the adjacent-swap
//!   ring connecting them, and a bundled language-frequency dataset.
//! - [`stats`] provides Spearman and Pearson correlation with an exact
//!   permutation test and a t-based test.
//! - [`constituents`] carries the cost calculus down one level: heads inside
//!   S, V and O, left/right dependent placement, and the price of reordering.

pub mod constituents;
pub mod cost;
pub mod oracle;
mod perm;
pub mod stats;
pub mod word_order;

pub use constituents::{ConstituentLengths, HeadSplit, InternalCosts, LengthDistribution};
pub use cost::{CostError, CostFunction, Landscape, StarExtremes};
pub use oracle::{Arrangement, OracleError, TreeInstance};
pub use stats::{PairedSample, StatsError};
pub use word_order::{FrequencyTable, PermutationRing, WordOrder};
