//! Exact canonical labeling for small multigraphs.
//!
//! The canonical form is the lexicographically smallest lower-triangular
//! multiplicity matrix over all vertex orders that list vertices by
//! nondecreasing invariant (degree, weighted degree, sorted incident
//! multiplicities). Two pruning rules keep the search small without
//! losing exactness:
//!
//! * at each position only the candidates producing the smallest next row
//!   can lead to the minimum, since earlier rows are shared;
//! * of two interchangeable vertices (twins: equal multiplicity to every
//!   other vertex) only one is tried, since swapping twins is an automorphism.

use std::cmp::Ordering;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

pub const DEFAULT_CANONICAL_LIMIT: usize = 10;

/// Labeling-invariant encoding of a multigraph: equal keys exactly when the
/// graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemoKey(Vec<u8>);

impl MemoKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_key(g: &MultiGraph) -> Result<MemoKey> {
    canonical_key_with_limit(g, DEFAULT_CANONICAL_LIMIT)
}

pub fn canonical_key_with_limit(g: &MultiGraph, limit: usize) -> Result<MemoKey> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::TooLargeToCanonicalize { size: n, limit });
    }
    let rows = Search::new(g).run();
    let mut bytes = Vec::new();
    bytes.extend_from_slice(&(n as u32).to_le_bytes());
    for row in &rows {
        for m in row {
            let digits = m.to_bytes_le();
            bytes.extend_from_slice(&(digits.len() as u32).to_le_bytes());
            bytes.extend_from_slice(&digits);
        }
    }
    Ok(MemoKey(bytes))
}

type Invariant = (usize, BigUint, Vec<BigUint>);

struct Search {
    n: usize,
    matrix: Vec<Vec<BigUint>>,
    invariant: Vec<Invariant>,
    // invariant required at each position of the canonical order
    slots: Vec<Invariant>,
    twins: Vec<Vec<bool>>,
    order: Vec<usize>,
    used: Vec<bool>,
    rows: Vec<Vec<BigUint>>,
    best: Option<Vec<Vec<BigUint>>>,
}

impl Search {
    fn new(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let matrix: Vec<Vec<BigUint>> = (0..n)
            .map(|u| (0..n).map(|v| g.multiplicity(u, v)).collect())
            .collect();
        let invariant: Vec<Invariant> = (0..n)
            .map(|u| {
                let mut incident: Vec<BigUint> = g.neighbors(u).map(|(_, m)| m.clone()).collect();
                incident.sort();
                (g.degree(u), g.weighted_degree(u), incident)
            })
            .collect();
        let mut slots = invariant.clone();
        slots.sort();
        let twins = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| (0..n).all(|w| w == u || w == v || matrix[u][w] == matrix[v][w]))
                    .collect()
            })
            .collect();
        Search {
            n,
            matrix,
            invariant,
            slots,
            twins,
            order: Vec::with_capacity(n),
            used: vec![false; n],
            rows: Vec::with_capacity(n),
            best: None,
        }
    }

    fn run(mut self) -> Vec<Vec<BigUint>> {
        self.descend();
        self.best.unwrap_or_default()
    }

    fn row_for(&self, v: usize) -> Vec<BigUint> {
        self.order.iter().map(|&w| self.matrix[v][w].clone()).collect()
    }

    fn descend(&mut self) {
        let position = self.order.len();
        if position == self.n {
            if self.best.as_ref().is_none_or(|best| self.rows < *best) {
                self.best = Some(self.rows.clone());
            }
            return;
        }

        let mut smallest: Option<Vec<BigUint>> = None;
        let mut candidates: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.used[v] || self.invariant[v] != self.slots[position] {
                continue;
            }
            let row = self.row_for(v);
            match smallest.as_ref().map(|s| row.cmp(s)) {
                Some(Ordering::Greater) => continue,
                Some(Ordering::Equal) => {}
                _ => {
                    smallest = Some(row);
                    candidates.clear();
                }
            }
            if !candidates.iter().any(|&c| self.twins[c][v]) {
                candidates.push(v);
            }
        }
        let Some(row) = smallest else {
            return;
        };

        self.rows.push(row);
        if let Some(best) = &self.best {
            if self.rows.as_slice() > &best[..=position] {
                self.rows.pop();
                return;
            }
        }
        for v in candidates {
            self.used[v] = true;
            self.order.push(v);
            self.descend();
            self.order.pop();
            self.used[v] = false;
        }
        self.rows.pop();
    }
}
