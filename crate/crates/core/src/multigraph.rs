//! Undirected multigraphs stored as symmetric edge-multiplicity maps.
//!
//! Self-loops are never stored: they belong to no spanning tree, so they are
//! rejected on insertion and dropped when identification folds an edge onto
//! a single vertex. Every structural operation returns a new graph with
//! vertices re-indexed densely; ids are not stable across operations.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::BigCount;

pub type VertexId = usize;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    // adjacency[u][v] == adjacency[v][u] >= 1; adjacency[u] never contains u.
    adjacency: Vec<BTreeMap<VertexId, BigUint>>,
}

/// Vertex count, number of adjacent pairs and number of edges with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSummary {
    pub vertices: usize,
    pub support_edges: usize,
    pub total_multiplicity: BigUint,
}

/// One summand of a vertex-deletion expansion: `coefficient * t(graph)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub coefficient: BigCount,
    pub graph: MultiGraph,
}

impl MultiGraph {
    /// Graph with `vertex_count` isolated vertices.
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            adjacency: vec![BTreeMap::new(); vertex_count],
        }
    }

    pub fn from_edges<I, M>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, M)>,
        M: Into<BigUint>,
    {
        let mut g = MultiGraph::new(vertex_count);
        for (u, v, mult) in edges {
            g.insert_edges(u, v, mult.into())?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of vertex pairs joined by at least one edge.
    pub fn support_edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    /// Number of edges counted with multiplicity.
    pub fn total_multiplicity(&self) -> BigUint {
        self.edges().map(|(_, _, m)| m).sum()
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            vertices: self.vertex_count(),
            support_edges: self.support_edge_count(),
            total_multiplicity: self.total_multiplicity(),
        }
    }

    /// Multiplicity of the pair, zero when the vertices are not adjacent.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> BigUint {
        self.adjacency
            .get(u)
            .and_then(|row| row.get(&v))
            .cloned()
            .unwrap_or_default()
    }

    /// Returns a copy with `mult` more parallel edges between `u` and `v`.
    pub fn add_edges(&self, u: VertexId, v: VertexId, mult: impl Into<BigUint>) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edges(u, v, mult.into())?;
        Ok(g)
    }

    pub(crate) fn insert_edges(&mut self, u: VertexId, v: VertexId, mult: BigUint) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoopRejected(u));
        }
        if mult.is_zero() {
            return Err(Error::ZeroMultiplicity);
        }
        *self.adjacency[u].entry(v).or_default() += &mult;
        *self.adjacency[v].entry(u).or_default() += mult;
        Ok(())
    }

    fn check_vertex(&self, u: VertexId) -> Result<()> {
        if u < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: u,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Neighbours of `u` with their multiplicities, in ascending id order.
    ///
    /// Panics if `u` is out of range.
    pub fn neighbors(&self, u: VertexId) -> impl Iterator<Item = (VertexId, &BigUint)> + '_ {
        self.adjacency[u].iter().map(|(&v, m)| (v, m))
    }

    /// Number of distinct neighbours.
    pub fn degree(&self, u: VertexId) -> usize {
        self.adjacency[u].len()
    }

    /// Sum of the multiplicities incident to `u`.
    pub fn weighted_degree(&self, u: VertexId) -> BigUint {
        self.adjacency[u].values().sum()
    }

    /// Every support edge once as `(u, v, multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, &BigUint)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, row)| {
            row.range(u + 1..).map(move |(&v, m)| (u, v, m))
        })
    }

    /// `G - u`: removes `u` and its edges; later ids shift down by one.
    pub fn delete_vertex(&self, u: VertexId) -> Result<Self> {
        self.check_vertex(u)?;
        if self.vertex_count() == 1 {
            return Err(Error::WouldEmptyGraph);
        }
        let shift = |v: VertexId| if v > u { v - 1 } else { v };
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != u)
            .map(|(_, row)| {
                row.iter()
                    .filter(|&(&w, _)| w != u)
                    .map(|(&w, m)| (shift(w), m.clone()))
                    .collect()
            })
            .collect();
        Ok(MultiGraph { adjacency })
    }

    /// Merges every vertex of `set` into one.
    ///
    /// The merged vertex takes the position of the smallest member; an outside
    /// vertex is joined to it by the sum of its multiplicities to the members.
    /// Edges inside `set` become loops and are dropped.
    pub fn identify_vertices(&self, set: &[VertexId]) -> Result<Self> {
        let members: BTreeSet<VertexId> = set.iter().copied().collect();
        if members.len() < 2 {
            return Err(Error::NothingToIdentify(members.len()));
        }
        for &v in &members {
            self.check_vertex(v)?;
        }
        let representative = *members.first().unwrap();
        let mut new_id = vec![0; self.vertex_count()];
        let mut next = 0;
        for (v, slot) in new_id.iter_mut().enumerate() {
            if members.contains(&v) && v != representative {
                continue;
            }
            *slot = next;
            next += 1;
        }
        for &v in &members {
            new_id[v] = new_id[representative];
        }
        let mut merged = MultiGraph::new(next);
        for (u, v, m) in self.edges() {
            let (a, b) = (new_id[u], new_id[v]);
            if a != b {
                *merged.adjacency[a].entry(b).or_default() += m;
                *merged.adjacency[b].entry(a).or_default() += m;
            }
        }
        Ok(merged)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation.
    pub fn permuted(&self, perm: &[VertexId]) -> Self {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        let mut adjacency = vec![BTreeMap::new(); self.vertex_count()];
        for (u, row) in self.adjacency.iter().enumerate() {
            adjacency[perm[u]] = row.iter().map(|(&v, m)| (perm[v], m.clone())).collect();
        }
        MultiGraph { adjacency }
    }

    /// Subgraph induced by `vertices` (ascending), re-indexed in that order.
    pub fn induced(&self, vertices: &[VertexId]) -> Self {
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&(&w, _)| position[w] != usize::MAX)
                    .map(|(&w, m)| (position[w], m.clone()))
                    .collect()
            })
            .collect();
        MultiGraph { adjacency }
    }

    /// True iff the graph has a single connected component. Graphs with at
    /// most one vertex are connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in self.adjacency[u].keys() {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// Vertices whose removal leaves the graph connected, ascending.
    pub fn non_cut_vertices(&self) -> Result<Vec<VertexId>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let (_, is_cut) = self.biconnected_components();
        Ok((0..self.vertex_count()).filter(|&v| !is_cut[v]).collect())
    }

    /// Cut vertices, ascending. Works on disconnected graphs too.
    pub fn cut_vertices(&self) -> Vec<VertexId> {
        let (_, is_cut) = self.biconnected_components();
        (0..self.vertex_count()).filter(|&v| is_cut[v]).collect()
    }

    /// Biconnected blocks; a cut vertex appears in every block it touches.
    /// The spanning tree count of the graph is the product over its blocks.
    pub fn block_decomposition(&self) -> Result<Vec<MultiGraph>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.vertex_count() <= 1 {
            return Ok(vec![self.clone()]);
        }
        let (blocks, _) = self.biconnected_components();
        Ok(blocks.iter().map(|vs| self.induced(vs)).collect())
    }

    /// Hopcroft-Tarjan over the support graph, iteratively. Returns the vertex
    /// set of each block (sorted) and a cut-vertex flag per vertex. Isolated
    /// vertices form no block.
    fn biconnected_components(&self) -> (Vec<Vec<VertexId>>, Vec<bool>) {
        let n = self.vertex_count();
        let neighbours: Vec<Vec<VertexId>> =
            self.adjacency.iter().map(|row| row.keys().copied().collect()).collect();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
        let mut clock = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(frame) = stack.last_mut() {
                let (v, parent) = (frame.0, frame.1);
                if frame.2 < neighbours[v].len() {
                    let w = neighbours[v][frame.2];
                    frame.2 += 1;
                    if disc[w] == usize::MAX {
                        if v == root {
                            root_children += 1;
                        }
                        edge_stack.push((v, w));
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                    continue;
                }
                stack.pop();
                let Some(&(p, _, _)) = stack.last() else {
                    continue;
                };
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    if p != root {
                        is_cut[p] = true;
                    }
                    let mut vertices = BTreeSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        vertices.insert(a);
                        vertices.insert(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    blocks.push(vertices.into_iter().collect());
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (blocks, is_cut)
    }

    /// Vertices with exactly one neighbour.
    pub(crate) fn pendant_vertex(&self) -> Option<VertexId> {
        (0..self.vertex_count()).find(|&v| self.degree(v) == 1)
    }
}

/// The banana graph `B_m`: two vertices joined by `m` parallel edges.
pub fn banana(m: u32) -> MultiGraph {
    MultiGraph::from_edges(2, [(0, 1, m)]).expect("valid banana")
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edges(u, v, BigUint::one()).expect("valid edge");
        }
    }
    g
}

/// The path on `n` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> MultiGraph {
    MultiGraph::from_edges(n, (1..n).map(|v| (v - 1, v, 1u32))).expect("valid path")
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> MultiGraph {
    path(n).add_edges(n - 1, 0, 1u32).expect("valid cycle")
}
