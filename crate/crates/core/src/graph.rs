//! Simple undirected graphs on dense vertex labels 0..n−1, the standard
//! family constructors, BFS distance matrices, and the structural
//! predicates used by the classifier.
//!
//! Values are immutable once constructed; adjacency lives in a symmetric
//! bit matrix, so sharing across worker threads is free.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on explicit graph order. Large clique-join families are handled
/// symbolically through their closed-form polynomials, never as built graphs.
pub const MAX_ORDER: usize = 1024;

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    fn empty(order: usize) -> Result<Graph> {
        if order == 0 {
            return Err(Error::InvalidParameter("graph order must be at least 1".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                requested: order as u64,
                max: MAX_ORDER,
            });
        }
        let stride = order.div_ceil(64);
        Ok(Graph {
            order,
            stride,
            bits: vec![0; order * stride],
        })
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
        self.bits[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.stride + u / 64] &= !(1 << (u % 64));
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(())
    }

    /// Builds a graph from an explicit edge list. Loops are rejected;
    /// duplicate edges are harmless.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph K_n, n ≥ 1.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Path P_n in traversal order 0−1−⋯−(n−1), n ≥ 1.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 1..n {
            g.set_edge(u - 1, u);
        }
        Ok(g)
    }

    /// Cycle C_n, n ≥ 3.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::path(n)?;
        g.set_edge(n - 1, 0);
        Ok(g)
    }

    /// Star S_n on n vertices with the center at index 0, n ≥ 2.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("star needs n >= 2, got {n}")));
        }
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.set_edge(0, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.order && v < self.order, "vertex out of range");
        u != v && (self.bits[u * self.stride + v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.order, "vertex out of range");
        self.bits[v * self.stride..(v + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(v < self.order, "vertex out of range");
        (0..self.order).filter(move |&u| self.has_edge(v, u))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.order * (self.order - 1) / 2
    }

    /// G₁ ∪ G₂ with the second graph's vertices relabeled after the first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order + other.order;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.order + u, self.order + v);
        }
        Ok(g)
    }

    /// G₁ ∨ G₂: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.order {
            for v in 0..other.order {
                g.set_edge(u, self.order + v);
            }
        }
        Ok(g)
    }

    /// k vertex-disjoint copies, k ≥ 1.
    pub fn scalar_union(k: usize, g: &Graph) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidParameter("scalar union needs k >= 1".into()));
        }
        let mut out = g.clone();
        for _ in 1..k {
            out = out.disjoint_union(g)?;
        }
        Ok(out)
    }

    /// Complement: every off-diagonal adjacency flipped.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order).expect("order already validated");
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Removes exactly the edge {u,v}; erroring on a non-edge.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    fn bfs(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            for (v, d) in self.bfs(s).iter().enumerate() {
                if d.is_some() && !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    /// All-pairs shortest path lengths; rejects disconnected input.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.order;
        let mut entries = vec![0u32; n * n];
        for src in 0..n {
            for (v, d) in self.bfs(src).iter().enumerate() {
                entries[src * n + v] = d.ok_or(Error::Disconnected)?;
            }
        }
        Ok(DistanceMatrix { order: n, entries })
    }

    fn check_subset(&self, s: &[usize]) -> Result<()> {
        if s.is_empty() {
            return Err(Error::BadSubset("empty subset".into()));
        }
        for &v in s {
            self.check_vertex(v)?;
        }
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadSubset("duplicate vertices".into()));
        }
        Ok(())
    }

    /// Subgraph induced on `s`, vertices relabeled in the order given.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph> {
        self.check_subset(s)?;
        let mut g = Graph::empty(s.len())?;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if self.has_edge(s[i], s[j]) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// The relation H ⊴ G: the subgraph induced on `s` is connected and all
    /// its internal distances agree with the distances in self.
    pub fn is_isometric_induced(&self, s: &[usize]) -> Result<bool> {
        self.check_subset(s)?;
        if s.len() < 2 {
            return Err(Error::BadSubset("isometric test needs at least 2 vertices".into()));
        }
        let h = self.induced_subgraph(s)?;
        if !h.is_connected() {
            return Ok(false);
        }
        let dh = h.distance_matrix()?;
        let dg = self.distance_matrix()?;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if dh.entry(i, j) != dg.entry(s[i], s[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Finds an induced path on four vertices, returned in path order.
    pub fn find_induced_p4(&self) -> Option<[usize; 4]> {
        let n = self.order;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if let Some(p4) = self.p4_order(a, b, c, d) {
                            return Some(p4);
                        }
                    }
                }
            }
        }
        None
    }

    /// If {a,b,c,d} induces a P₄, returns the vertices in path order.
    fn p4_order(&self, a: usize, b: usize, c: usize, d: usize) -> Option<[usize; 4]> {
        let vs = [a, b, c, d];
        let mut deg = [0usize; 4];
        let mut edge_count = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.has_edge(vs[i], vs[j]) {
                    deg[i] += 1;
                    deg[j] += 1;
                    edge_count += 1;
                }
            }
        }
        // P₄ is the unique 4-vertex graph with 3 edges and max degree 2
        // that has no isolated vertex.
        if edge_count != 3 || deg.iter().any(|&d| d == 0 || d > 2) {
            return None;
        }
        let start = vs[deg.iter().position(|&d| d == 1)?];
        let mut order = [start, 0, 0, 0];
        let mut prev = usize::MAX;
        for i in 1..4 {
            let cur = order[i - 1];
            let next = vs
                .iter()
                .find(|&&v| v != cur && v != prev && self.has_edge(cur, v))?;
            order[i] = *next;
            prev = cur;
        }
        Some(order)
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&v| self.degree(v) == self.order - 1)
            .collect()
    }

    /// When every component is a clique, the sorted multiset of their sizes.
    pub fn is_union_of_cliques(&self) -> Option<Vec<usize>> {
        let mut sizes = Vec::new();
        for comp in self.components() {
            let k = comp.len();
            let complete = comp
                .iter()
                .enumerate()
                .all(|(i, &u)| comp[i + 1..].iter().all(|&v| self.has_edge(u, v)));
            if !complete {
                return None;
            }
            sizes.push(k);
        }
        sizes.sort_unstable();
        Some(sizes)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

/// Symmetric integer matrix of pairwise shortest-path lengths.
///
/// Principal submatrices keep every structural invariant (symmetry, zero
/// diagonal, triangle inequality), so they are represented by the same type
/// even when they are not the distance matrix of any graph.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        assert!(i < self.order && j < self.order, "index out of range");
        self.entries[i * self.order + j]
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Principal submatrix on the (distinct, in-range) vertex subset `s`.
    pub fn principal_submatrix(&self, s: &[usize]) -> Result<DistanceMatrix> {
        if s.is_empty() {
            return Err(Error::BadSubset("empty subset".into()));
        }
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadSubset("duplicate vertices".into()));
        }
        for &v in s {
            if v >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
        }
        let m = s.len();
        let mut entries = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                entries[i * m + j] = self.entry(s[i], s[j]);
            }
        }
        Ok(DistanceMatrix { order: m, entries })
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix(n={}):", self.order)?;
        for i in 0..self.order {
            let row: Vec<u32> = (0..self.order).map(|j| self.entry(i, j)).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
