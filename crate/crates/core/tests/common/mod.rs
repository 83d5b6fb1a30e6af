#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use treecount_core::MultiGraph;

/// Random spanning tree on `n` vertices plus up to `2n` extra edges.
pub fn connected_multigraph(max_n: usize, max_mult: u32) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let tree = vec(1..=max_mult, n - 1);
            let extra = vec((0..n, 0..n, 1..=max_mult), 0..=2 * n);
            (Just(n), parents, tree, extra)
        })
        .prop_map(|(n, parents, tree, extra)| {
            let mut edges: Vec<(usize, usize, u32)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (i + 1, p, tree[i]))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v, _)| u != v));
            MultiGraph::from_edges(n, edges).unwrap()
        })
}

/// Any multigraph, possibly disconnected.
pub fn multigraph(max_n: usize, max_mult: u32) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| (Just(n), vec((0..n, 0..n, 1..=max_mult), 0..=2 * n)))
        .prop_map(|(n, edges)| {
            MultiGraph::from_edges(n, edges.into_iter().filter(|(u, v, _)| u != v)).unwrap()
        })
}

/// A graph together with a permutation of its vertices.
pub fn with_permutation<S: Strategy<Value = MultiGraph>>(
    graphs: S,
) -> impl Strategy<Value = (MultiGraph, Vec<usize>)> {
    graphs.prop_flat_map(|g| {
        let perm = Just((0..g.vertex_count()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for col in 0..n {
        if rows[0][col] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, &x)| x).collect())
            .collect();
        let term = BigInt::from(rows[0][col]) * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Isomorphism by trying every vertex permutation.
pub fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    let n = a.vertex_count();
    n == b.vertex_count()
        && (0..n)
            .permutations(n)
            .any(|perm| a.permuted(&perm) == *b)
}
