//! Spanning tree counting by repeated vertex deletion.
//!
//! For a non-cut vertex `u` joined to `p_1..p_r` by `a_1..a_r` edges and
//! `H = G - u`,
//!
//! ```text
//! t(G) = (a_1 + .. + a_r) t(H) + sum over S ⊆ N(u), |S| >= 2 of (prod_{i in S} a_i) t(H_S)
//! ```
//!
//! where `H_S` identifies the vertices of `S` in `H`. The recursion applies
//! this at a chosen pivot until the pieces are small, with pendant vertices
//! and cut vertices peeled off first.

mod canon;

use std::collections::HashMap;
use std::sync::Mutex;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use canon::{canonical_key, canonical_key_with_limit, MemoKey, DEFAULT_CANONICAL_LIMIT};

use crate::error::{Error, Result};
use crate::multigraph::{ExpansionTerm, MultiGraph, VertexId};
use crate::oracles::matrix_tree_count;
use crate::{par, BigCount};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PivotStrategy {
    /// Fewest neighbours; ties to the lowest id.
    #[default]
    MinDegree,
    /// Most neighbours; ties to the lowest id.
    MaxDegree,
    /// Lowest-id non-cut vertex.
    FirstNonCut,
}

impl PivotStrategy {
    pub const ALL: [PivotStrategy; 3] = [
        PivotStrategy::MinDegree,
        PivotStrategy::MaxDegree,
        PivotStrategy::FirstNonCut,
    ];
}

pub const DEFAULT_NEIGHBORHOOD_LIMIT: usize = 20;
pub const DEFAULT_ORACLE_FLOOR: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeletionConfig {
    pub strategy: PivotStrategy,
    /// Cache counts of isomorphic subproblems.
    pub memo: bool,
    /// Graphs with at most this many vertices go straight to the Matrix-Tree
    /// determinant. `None` recurses all the way down.
    pub oracle_floor: Option<usize>,
    /// Refuse pivots with more neighbours than this.
    pub neighborhood_limit: usize,
    /// Graphs larger than this are not memoized.
    pub canonical_limit: usize,
    /// Evaluate sibling terms on the rayon pool.
    pub parallel: bool,
}

impl Default for DeletionConfig {
    fn default() -> Self {
        DeletionConfig {
            strategy: PivotStrategy::default(),
            memo: true,
            oracle_floor: Some(DEFAULT_ORACLE_FLOOR),
            neighborhood_limit: DEFAULT_NEIGHBORHOOD_LIMIT,
            canonical_limit: DEFAULT_CANONICAL_LIMIT,
            parallel: true,
        }
    }
}

impl DeletionConfig {
    /// Recursion only, no determinant shortcut.
    pub fn pure() -> Self {
        DeletionConfig {
            oracle_floor: None,
            ..Default::default()
        }
    }
}

/// One application of the vertex-deletion identity at `u`.
///
/// The first term is `(sum a_i, G - u)`; then one term per neighbour subset
/// of size at least two, in order of subset size and then lexicographically.
/// A pivot with a single neighbour yields only the first term, which is the
/// pendant reduction `t(G) = a t(G - u)`.
pub fn expand_at(g: &MultiGraph, u: VertexId) -> Result<Vec<ExpansionTerm>> {
    if u >= g.vertex_count() {
        return Err(Error::InvalidVertex {
            vertex: u,
            vertex_count: g.vertex_count(),
        });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.degree(u) == 0 {
        return Err(Error::IsolatedPivot(u));
    }
    if g.cut_vertices().contains(&u) {
        return Err(Error::CutVertexPivot(u));
    }

    let rest = g.delete_vertex(u)?;
    // neighbour ids as seen in H = G - u
    let neighbours: Vec<(VertexId, &BigUint)> = g
        .neighbors(u)
        .map(|(v, m)| (if v > u { v - 1 } else { v }, m))
        .collect();

    let mut terms = Vec::new();
    let weight: BigUint = neighbours.iter().map(|&(_, m)| m).sum();
    for size in 2..=neighbours.len() {
        for subset in neighbours.iter().combinations(size) {
            let ids: Vec<VertexId> = subset.iter().map(|&&(v, _)| v).collect();
            let coefficient = subset.iter().fold(BigUint::one(), |acc, &&(_, m)| acc * m);
            terms.push(ExpansionTerm {
                coefficient,
                graph: rest.identify_vertices(&ids)?,
            });
        }
    }
    terms.insert(
        0,
        ExpansionTerm {
            coefficient: weight,
            graph: rest,
        },
    );
    Ok(terms)
}

/// Picks a non-cut pivot with at least one neighbour.
pub fn select_pivot(g: &MultiGraph, strategy: PivotStrategy) -> Option<VertexId> {
    let candidates = g.non_cut_vertices().ok()?;
    let mut candidates = candidates.into_iter().filter(|&v| g.degree(v) > 0);
    match strategy {
        PivotStrategy::FirstNonCut => candidates.next(),
        PivotStrategy::MinDegree => candidates.min_by_key(|&v| (g.degree(v), v)),
        PivotStrategy::MaxDegree => {
            candidates.min_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v))
        }
    }
}

/// Exact spanning tree count by recursive vertex deletion.
///
/// In order: disconnected graphs count 0, one vertex counts 1, two vertices
/// count their multiplicity; small graphs may bottom out at the determinant;
/// a pendant vertex multiplies by its multiplicity; a graph with a cut vertex
/// is the product of its blocks; otherwise the pivot is expanded and every
/// term recursed on.
pub fn count_by_deletion(g: &MultiGraph, config: &DeletionConfig) -> Result<BigCount> {
    assert!(g.vertex_count() >= 1, "graph has no vertices");
    let engine = Engine {
        config,
        memo: Mutex::new(HashMap::new()),
    };
    engine.count(g)
}

struct Engine<'a> {
    config: &'a DeletionConfig,
    memo: Mutex<HashMap<MemoKey, BigCount>>,
}

impl Engine<'_> {
    fn count(&self, g: &MultiGraph) -> Result<BigCount> {
        let n = g.vertex_count();
        if !g.is_connected() {
            return Ok(BigCount::zero());
        }
        match n {
            1 => return Ok(BigCount::one()),
            2 => return Ok(g.multiplicity(0, 1)),
            _ => {}
        }
        if self.config.oracle_floor.is_some_and(|floor| n <= floor) {
            return Ok(matrix_tree_count(g));
        }
        if let Some(v) = g.pendant_vertex() {
            let (_, a) = g.neighbors(v).next().expect("pendant has a neighbour");
            let a = a.clone();
            return Ok(a * self.count(&g.delete_vertex(v)?)?);
        }

        let key = if self.config.memo {
            canonical_key_with_limit(g, self.config.canonical_limit).ok()
        } else {
            None
        };
        if let Some(key) = &key {
            if let Some(hit) = self.memo.lock().unwrap().get(key) {
                return Ok(hit.clone());
            }
        }

        let count = if g.cut_vertices().is_empty() {
            self.expand(g)?
        } else {
            let blocks = g.block_decomposition()?;
            let counts = par::map(&blocks, self.config.parallel, |b| self.count(b));
            let mut product = BigCount::one();
            for c in counts {
                product *= c?;
            }
            product
        };

        if let Some(key) = key {
            self.memo.lock().unwrap().insert(key, count.clone());
        }
        Ok(count)
    }

    fn expand(&self, g: &MultiGraph) -> Result<BigCount> {
        let pivot = select_pivot(g, self.config.strategy).expect("biconnected graph has a pivot");
        let size = g.degree(pivot);
        if size > self.config.neighborhood_limit {
            return Err(Error::NeighborhoodTooLarge {
                size,
                limit: self.config.neighborhood_limit,
            });
        }
        let terms = expand_at(g, pivot)?;
        let counts = par::map(&terms, self.config.parallel, |t| self.count(&t.graph));
        let mut total = BigCount::zero();
        for (term, c) in terms.iter().zip(counts) {
            total += &term.coefficient * c?;
        }
        Ok(total)
    }
}
