//! Ground-truth spanning tree counters that share no code with the deletion
//! recursion: Kirchhoff's Matrix-Tree theorem evaluated by exact fraction-free
//! elimination, and exhaustive enumeration of edge subsets.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::binomial;
use crate::multigraph::MultiGraph;
use crate::{par, BigCount};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = IntMatrix::zeros(order);
        for i in 0..order {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            assert_eq!(row.len(), order, "matrix must be square");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// The principal minor obtained by removing row and column `index`.
    pub fn without(&self, index: usize) -> Self {
        assert!(index < self.order);
        let order = self.order - 1;
        let mut entries = Vec::with_capacity(order * order);
        for i in (0..self.order).filter(|&i| i != index) {
            for j in (0..self.order).filter(|&j| j != index) {
                entries.push(self[(i, j)].clone());
            }
        }
        IntMatrix { order, entries }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    ///
    /// The pivot for column `k` is the first nonzero entry at or below the
    /// diagonal; a column with no such entry makes the determinant zero.
    /// Every division is exact (Sylvester's identity), so intermediate
    /// entries stay integral and bounded by minors of the input.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.order;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut previous = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, r);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let value = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = value / &previous;
                }
            }
            previous = a[(k, k)].clone();
        }
        let det = a[(n - 1, n - 1)].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    fn swap_rows(&mut self, r: usize, s: usize) {
        for j in 0..self.order {
            self.entries.swap(r * self.order + j, s * self.order + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.order + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.order + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Kirchhoff matrix: weighted degrees on the diagonal, negated
/// multiplicities off it.
pub fn laplacian(g: &MultiGraph) -> IntMatrix {
    let mut l = IntMatrix::zeros(g.vertex_count());
    for (u, v, m) in g.edges() {
        let m = BigInt::from(m.clone());
        l[(u, u)] += &m;
        l[(v, v)] += &m;
        l[(u, v)] -= &m;
        l[(v, u)] -= &m;
    }
    l
}

/// Spanning tree count as the determinant of the Laplacian with row and
/// column 0 removed. Zero for disconnected graphs, one for a single vertex.
pub fn matrix_tree_count(g: &MultiGraph) -> BigCount {
    assert!(g.vertex_count() >= 1, "graph has no vertices");
    let det = laplacian(g).without(0).det_bareiss();
    match det.sign() {
        Sign::Minus => unreachable!("reduced Laplacian is positive semidefinite"),
        _ => det.magnitude().clone(),
    }
}

pub const DEFAULT_BRUTE_FORCE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForceConfig {
    /// Maximum number of `(n-1)`-subsets of support edges to consider.
    pub budget: u64,
    pub parallel: bool,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        BruteForceConfig {
            budget: DEFAULT_BRUTE_FORCE_BUDGET,
            parallel: true,
        }
    }
}

/// Number of candidate subsets `brute_force_count` would examine.
pub fn brute_force_candidates(g: &MultiGraph) -> BigUint {
    let n = g.vertex_count() as u64;
    binomial(g.support_edge_count() as u64, n.saturating_sub(1))
}

/// Sums, over every `(n-1)`-subset of support edges that forms a spanning
/// tree, the product of the chosen multiplicities.
pub fn brute_force_count(g: &MultiGraph, config: &BruteForceConfig) -> Result<BigCount> {
    let n = g.vertex_count();
    assert!(n >= 1, "graph has no vertices");
    let candidates = brute_force_candidates(g);
    if candidates > BigUint::from(config.budget) {
        return Err(Error::TooLargeForBruteForce {
            candidates: candidates.to_string(),
            budget: config.budget,
        });
    }
    if n == 1 {
        return Ok(BigCount::one());
    }
    let edges: Vec<(usize, usize, BigUint)> =
        g.edges().map(|(u, v, m)| (u, v, m.clone())).collect();
    let need = n - 1;
    if edges.len() < need {
        return Ok(BigCount::zero());
    }
    // Slice the enumeration by the first (lowest-index) chosen edge.
    let firsts = edges.len() - need + 1;
    let partial = par::map_range(firsts, config.parallel, |first| {
        let mut forest = RollbackForest::new(n);
        let (u, v, ref m) = edges[first];
        forest.union(u, v);
        let mut total = BigUint::zero();
        extend_forest(&edges, first + 1, need - 1, m, &mut forest, &mut total);
        total
    });
    Ok(partial.into_iter().sum())
}

/// Chooses `remaining` more edges from `edges[from..]`, skipping any edge that
/// closes a cycle, and adds the multiplicity product of each completed tree.
fn extend_forest(
    edges: &[(usize, usize, BigUint)],
    from: usize,
    remaining: usize,
    product: &BigUint,
    forest: &mut RollbackForest,
    total: &mut BigUint,
) {
    if remaining == 0 {
        *total += product;
        return;
    }
    for i in from..=edges.len() - remaining {
        let (u, v, ref m) = edges[i];
        if forest.union(u, v) {
            let next = product * m;
            extend_forest(edges, i + 1, remaining - 1, &next, forest, total);
            forest.rollback();
        }
    }
}

/// Union-find with union by size and undo, no path compression.
struct RollbackForest {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl RollbackForest {
    fn new(n: usize) -> Self {
        RollbackForest {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns false (and records nothing) when `u` and `v` are already joined.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push(b);
        true
    }

    fn rollback(&mut self) {
        let b = self.history.pop().expect("nothing to roll back");
        let a = self.parent[b];
        self.size[a] -= self.size[b];
        self.parent[b] = b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{banana, complete, cycle, path};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(laplacian(&banana(3)), IntMatrix::from_rows(&[vec![3, -3], vec![-3, 3]]));
        assert_eq!(laplacian(&banana(2)), IntMatrix::from_rows(&[vec![2, -2], vec![-2, 2]]));
        let k3 = laplacian(&complete(3));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k3[(i, j)], big(if i == j { 2 } else { -1 }));
            }
        }
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(IntMatrix::identity(3).det_bareiss(), big(1));
        assert_eq!(IntMatrix::zeros(0).det_bareiss(), big(1));
        assert_eq!(IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]).det_bareiss(), big(3));
        assert_eq!(laplacian(&complete(4)).without(0).det_bareiss(), big(16));
    }

    #[test]
    fn bareiss_pivots_and_signs() {
        // needs a row swap at k = 0
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.det_bareiss(), big(-1));
        let m = IntMatrix::from_rows(&[vec![0, 2, 1], vec![0, 1, 3], vec![0, 5, 7]]);
        assert_eq!(m.det_bareiss(), big(0));
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 5], vec![3, 5, 6]]);
        assert_eq!(m.det_bareiss(), big(-1));
    }

    #[test]
    fn full_laplacian_is_singular() {
        assert_eq!(laplacian(&complete(5)).det_bareiss(), big(0));
        assert_eq!(laplacian(&banana(7)).det_bareiss(), big(0));
    }

    #[test]
    fn matrix_tree_examples() {
        assert_eq!(matrix_tree_count(&complete(5)), BigCount::from(125u32));
        assert_eq!(matrix_tree_count(&cycle(4)), BigCount::from(4u32));
        assert_eq!(matrix_tree_count(&MultiGraph::new(1)), BigCount::one());
        assert_eq!(matrix_tree_count(&MultiGraph::new(3)), BigCount::zero());
    }

    #[test]
    fn brute_force_examples() {
        let cfg = BruteForceConfig::default();
        for m in 1..6 {
            assert_eq!(brute_force_count(&banana(m), &cfg).unwrap(), BigCount::from(m));
        }
        assert_eq!(brute_force_count(&cycle(4), &cfg).unwrap(), BigCount::from(4u32));
        assert_eq!(brute_force_count(&path(5), &cfg).unwrap(), BigCount::one());
        assert_eq!(brute_force_count(&complete(4), &cfg).unwrap(), BigCount::from(16u32));
        assert_eq!(brute_force_count(&MultiGraph::new(1), &cfg).unwrap(), BigCount::one());
        assert_eq!(brute_force_count(&MultiGraph::new(3), &cfg).unwrap(), BigCount::zero());
    }

    #[test]
    fn brute_force_respects_budget() {
        let cfg = BruteForceConfig {
            budget: 10,
            parallel: false,
        };
        // C(6, 3) = 20 candidates
        let err = brute_force_count(&complete(4), &cfg).unwrap_err();
        assert_eq!(
            err,
            Error::TooLargeForBruteForce {
                candidates: "20".into(),
                budget: 10
            }
        );
        assert!(err.is_budget());
    }

    #[test]
    fn brute_force_sequential_equals_parallel() {
        let g = complete(6).add_edges(0, 1, 3u32).unwrap();
        let seq = BruteForceConfig {
            parallel: false,
            ..Default::default()
        };
        let par = BruteForceConfig::default();
        assert_eq!(brute_force_count(&g, &seq), brute_force_count(&g, &par));
        assert_eq!(brute_force_count(&g, &seq).unwrap(), matrix_tree_count(&g));
    }
}
