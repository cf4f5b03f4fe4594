//! Brute-force verification of arrangement costs on small trees.
//!
//! Everything here exists to check the analytic results of [`crate::cost`]
//! the hard way: enumerate every linear arrangement of a small tree, sum the
//! edge costs, and report the exact extremes. No pruning, no heuristics —
//! the point of the module is independence from the formulas it verifies.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cost::{extreme_position_sets, CostError, CostFunction, COST_EQ_TOLERANCE};
use crate::perm::for_each_permutation;

/// Exhaustive enumeration walks all `N!` arrangements; 9! = 362,880 is the
/// largest factorial we are willing to pay for twice per report.
pub const MAX_ENUMERATION_VERTICES: usize = 9;

/// Tie sets can be huge (every leaf permutation of a star ties); stored
/// arrangements are capped and a truncation flag is raised instead.
pub const MAX_STORED_ARRANGEMENTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("a tree needs at least 2 vertices, got {vertices}")]
    TooFewVertices { vertices: usize },
    #[error("a tree on {vertices} vertices needs exactly {expected} edges, got {edges}")]
    WrongEdgeCount { vertices: usize, expected: usize, edges: usize },
    #[error("edge ({u}, {v}) mentions a vertex outside 0..{vertices}")]
    EdgeOutOfRange { u: usize, v: usize, vertices: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("edges do not form a connected acyclic graph")]
    NotATree,
    #[error("exhaustive enumeration is capped at {max} vertices, got {vertices}")]
    TooManyVertices { vertices: usize, max: usize },
    #[error("arrangement must assign the positions 1..={expected} bijectively")]
    InvalidArrangement { expected: usize },
    #[error("arrangement covers {got} vertices but the tree has {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Cost(#[from] CostError),
}

/// A small undirected tree over vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeInstance {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl TreeInstance {
    /// Validates that the edges form a tree: exactly `vertex_count - 1` of
    /// them, all endpoints in range, no self-loops, every vertex reachable.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, OracleError> {
        if vertex_count < 2 {
            return Err(OracleError::TooFewVertices { vertices: vertex_count });
        }
        if edges.len() != vertex_count - 1 {
            return Err(OracleError::WrongEdgeCount {
                vertices: vertex_count,
                expected: vertex_count - 1,
                edges: edges.len(),
            });
        }
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(OracleError::EdgeOutOfRange { u, v, vertices: vertex_count });
            }
            if u == v {
                return Err(OracleError::SelfLoop { v });
            }
        }
        // N-1 edges and connectivity together imply acyclicity.
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut seen = vec![false; vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(OracleError::NotATree);
        }
        Ok(Self { vertex_count, edges })
    }

    /// Star with hub vertex `0` joined to leaves `1..=n`.
    ///
    /// Panics if `n == 0`; a star needs at least one leaf.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "a star needs at least one leaf");
        let edges = (1..=n).map(|leaf| (0, leaf)).collect();
        Self { vertex_count: n + 1, edges }
    }

    /// Path `0 - 1 - ... - vertex_count-1`.
    ///
    /// Panics if `vertex_count < 2`.
    pub fn path(vertex_count: usize) -> Self {
        assert!(vertex_count >= 2, "a path needs at least two vertices");
        let edges = (0..vertex_count - 1).map(|v| (v, v + 1)).collect();
        Self { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// A bijection from vertices to the positions `1..=N` of a line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    positions: Vec<usize>,
}

impl Arrangement {
    /// `positions[v]` is the 1-based line position of vertex `v`.
    pub fn new(positions: Vec<usize>) -> Result<Self, OracleError> {
        let n = positions.len();
        let mut used = vec![false; n];
        for &p in &positions {
            if p < 1 || p > n || used[p - 1] {
                return Err(OracleError::InvalidArrangement { expected: n });
            }
            used[p - 1] = true;
        }
        Ok(Self { positions })
    }

    fn from_zero_based(perm: &[usize]) -> Self {
        Self { positions: perm.iter().map(|&p| p + 1).collect() }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// 1-based position of `vertex`. Panics if the vertex is out of range.
    pub fn position_of(&self, vertex: usize) -> usize {
        self.positions[vertex]
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

fn check_sizes(tree: &TreeInstance, arrangement: &Arrangement) -> Result<(), OracleError> {
    if arrangement.len() != tree.vertex_count() {
        return Err(OracleError::SizeMismatch {
            got: arrangement.len(),
            expected: tree.vertex_count(),
        });
    }
    Ok(())
}

/// Sum over all edges of `g(|pos(u) - pos(v)|)`.
pub fn arrangement_cost(
    tree: &TreeInstance,
    arrangement: &Arrangement,
    g: &CostFunction,
) -> Result<f64, OracleError> {
    check_sizes(tree, arrangement)?;
    g.require_d_max(tree.vertex_count() - 1)?;
    Ok(cost_of_positions(tree, arrangement.positions(), g))
}

/// Positions may be 0- or 1-based; only differences matter.
fn cost_of_positions(tree: &TreeInstance, positions: &[usize], g: &CostFunction) -> f64 {
    tree.edges()
        .iter()
        .map(|&(u, v)| g.eval_in_domain(positions[u].abs_diff(positions[v])))
        .sum()
}

/// Exact cost extremes over all `N!` arrangements of a tree.
///
/// Tie sets are tracked two ways: the position sets of every vertex across
/// all extreme arrangements (always exact), and the arrangements themselves
/// (capped at [`MAX_STORED_ARRANGEMENTS`] with a truncation flag).
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremesReport {
    pub min_cost: f64,
    pub max_cost: f64,
    pub min_count: u64,
    pub max_count: u64,
    pub min_arrangements: Vec<Arrangement>,
    pub max_arrangements: Vec<Arrangement>,
    pub min_truncated: bool,
    pub max_truncated: bool,
    min_positions: Vec<BTreeSet<usize>>,
    max_positions: Vec<BTreeSet<usize>>,
}

impl ExtremesReport {
    /// Positions `vertex` occupies across all minimizing arrangements.
    pub fn min_positions_of(&self, vertex: usize) -> &BTreeSet<usize> {
        &self.min_positions[vertex]
    }

    /// Positions `vertex` occupies across all maximizing arrangements.
    pub fn max_positions_of(&self, vertex: usize) -> &BTreeSet<usize> {
        &self.max_positions[vertex]
    }
}

/// Enumerates all `N!` arrangements of `tree` and reports the exact cost
/// extremes. Refuses trees above [`MAX_ENUMERATION_VERTICES`].
///
/// Costs within [`COST_EQ_TOLERANCE`] of an extreme count as ties, which
/// makes tie detection robust for real-valued cost functions whose equal
/// sums are accumulated in different orders.
pub fn enumerate_extremes(
    tree: &TreeInstance,
    g: &CostFunction,
) -> Result<ExtremesReport, OracleError> {
    let n = tree.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(OracleError::TooManyVertices { vertices: n, max: MAX_ENUMERATION_VERTICES });
    }
    g.require_d_max(n - 1)?;

    // Pass 1: exact extreme values.
    let mut min_cost = f64::INFINITY;
    let mut max_cost = f64::NEG_INFINITY;
    for_each_permutation(n, |perm| {
        let cost = cost_of_positions(tree, perm, g);
        min_cost = min_cost.min(cost);
        max_cost = max_cost.max(cost);
    });

    // Pass 2: collect ties.
    let mut report = ExtremesReport {
        min_cost,
        max_cost,
        min_count: 0,
        max_count: 0,
        min_arrangements: Vec::new(),
        max_arrangements: Vec::new(),
        min_truncated: false,
        max_truncated: false,
        min_positions: vec![BTreeSet::new(); n],
        max_positions: vec![BTreeSet::new(); n],
    };
    for_each_permutation(n, |perm| {
        let cost = cost_of_positions(tree, perm, g);
        if cost <= min_cost + COST_EQ_TOLERANCE {
            report.min_count += 1;
            for (vertex, &p) in perm.iter().enumerate() {
                report.min_positions[vertex].insert(p + 1);
            }
            if report.min_arrangements.len() < MAX_STORED_ARRANGEMENTS {
                report.min_arrangements.push(Arrangement::from_zero_based(perm));
            } else {
                report.min_truncated = true;
            }
        }
        if cost >= max_cost - COST_EQ_TOLERANCE {
            report.max_count += 1;
            for (vertex, &p) in perm.iter().enumerate() {
                report.max_positions[vertex].insert(p + 1);
            }
            if report.max_arrangements.len() < MAX_STORED_ARRANGEMENTS {
                report.max_arrangements.push(Arrangement::from_zero_based(perm));
            } else {
                report.max_truncated = true;
            }
        }
    });
    Ok(report)
}

/// Cost extremes of a star over hub positions only.
///
/// A star's arrangement cost depends only on where the hub sits, so instead
/// of `(n+1)!` arrangements it suffices to slide the hub across the `n+1`
/// positions and charge each leaf its positional distance explicitly. This
/// is the cheap oracle route for stars too large to enumerate fully.
#[derive(Debug, Clone, PartialEq)]
pub struct HubExtremes {
    /// Cost with the hub at position `index + 1`.
    pub costs: Vec<f64>,
    pub min_cost: f64,
    pub max_cost: f64,
    pub min_positions: BTreeSet<usize>,
    pub max_positions: BTreeSet<usize>,
}

/// See [`HubExtremes`]. `n` is the number of leaves.
pub fn star_hub_extremes(n: usize, g: &CostFunction) -> Result<HubExtremes, OracleError> {
    if n < 1 {
        return Err(OracleError::TooFewVertices { vertices: n + 1 });
    }
    g.require_d_max(n)?;
    let costs: Vec<f64> = (1..=n + 1)
        .map(|hub| {
            (1..=n + 1)
                .filter(|&p| p != hub)
                .map(|p| g.eval_in_domain(p.abs_diff(hub)))
                .sum()
        })
        .collect();
    let (min_cost, min_positions, max_cost, max_positions) =
        extreme_position_sets(&costs, COST_EQ_TOLERANCE);
    Ok(HubExtremes { costs, min_cost, max_cost, min_positions, max_positions })
}

/// Number of edge pairs whose line spans strictly interleave:
/// `pos(u) < pos(x) < pos(v) < pos(y)` with all four endpoints distinct.
/// Pairs sharing a vertex never count.
pub fn crossing_count(tree: &TreeInstance, arrangement: &Arrangement) -> Result<u64, OracleError> {
    check_sizes(tree, arrangement)?;
    let spans: Vec<(usize, usize, usize, usize)> = tree
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (pu, pv) = (arrangement.position_of(u), arrangement.position_of(v));
            (pu.min(pv), pu.max(pv), u, v)
        })
        .collect();
    let mut crossings = 0;
    for (i, &(a_lo, a_hi, a_u, a_v)) in spans.iter().enumerate() {
        for &(b_lo, b_hi, b_u, b_v) in &spans[i + 1..] {
            if a_u == b_u || a_u == b_v || a_v == b_u || a_v == b_v {
                continue;
            }
            let interleaved = (a_lo < b_lo && b_lo < a_hi && a_hi < b_hi)
                || (b_lo < a_lo && a_lo < b_hi && b_hi < a_hi);
            if interleaved {
                crossings += 1;
            }
        }
    }
    Ok(crossings)
}
