//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is kept as packed bitset rows next to a degree cache. Values are
//! immutable once built; every "mutation" returns a fresh graph.

mod builders;
pub mod format;

pub use builders::{
    build_complete, build_edgeless, build_extremal, degrees_ascending, disjoint_union, join,
    Family, ExtremalSpec, Partition,
};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),
    #[error("graph order must be positive")]
    EmptyOrder,
    #[error("invalid extremal parameters: {0}")]
    InvalidSpec(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    degrees: Vec<usize>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices (`n = 0` allowed internally).
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; words * n],
            degrees: vec![0; n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_pair(u, v)?;
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v);
        }
        g.debug_check();
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    #[inline]
    fn bit(&self, u: usize, v: usize) -> (usize, u64) {
        (u * self.words + v / 64, 1u64 << (v % 64))
    }

    /// Adds `{u, v}`; caller guarantees the pair is valid and absent.
    pub(crate) fn set(&mut self, u: usize, v: usize) {
        let (i, b) = self.bit(u, v);
        self.rows[i] |= b;
        let (i, b) = self.bit(v, u);
        self.rows[i] |= b;
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.m += 1;
    }

    /// Removes `{u, v}`; caller guarantees the edge is present.
    pub(crate) fn unset(&mut self, u: usize, v: usize) {
        let (i, b) = self.bit(u, v);
        self.rows[i] &= !b;
        let (i, b) = self.bit(v, u);
        self.rows[i] &= !b;
        self.degrees[u] -= 1;
        self.degrees[v] -= 1;
        self.m -= 1;
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            let mut sum = 0;
            for v in 0..self.n {
                let row = &self.rows[v * self.words..(v + 1) * self.words];
                let d: usize = row.iter().map(|w| w.count_ones() as usize).sum();
                debug_assert_eq!(d, self.degrees[v], "degree cache out of sync at {v}");
                debug_assert!(!self.has_edge(v, v));
                sum += d;
            }
            debug_assert_eq!(sum, 2 * self.m);
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        let (i, b) = self.bit(u, v);
        self.rows[i] & b != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[v * self.words..(v + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    /// Neighborhood of `v` as a single word; only valid for `n <= 64`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        assert!(self.n <= 64, "neighbor_mask requires n <= 64");
        self.rows[v * self.words]
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Nonadjacent pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.m == self.n * (self.n - 1) / 2
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.unset(u, v);
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g.debug_check();
        g
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True iff `n >= 3`, the graph is connected and has no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        // Tarjan low-link, iterative.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| self.neighbors(v).collect()).collect();
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = 0;
        low[0] = 0;
        time += 1;
        let mut root_children = 0;
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < nbrs[u].len() {
                let w = nbrs[u][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == 0 {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= disc[p] {
                        return false;
                    }
                }
            }
        }
        root_children < 2
    }

    /// Checks that `seq` visits every vertex once and consecutive entries
    /// are adjacent (closing edge included when `closed`).
    pub fn is_hamiltonian_sequence(&self, seq: &[usize], closed: bool) -> bool {
        if seq.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &v in seq {
            if v >= self.n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if !seq.windows(2).all(|w| self.has_edge(w[0], w[1])) {
            return false;
        }
        if closed {
            if self.n < 3 {
                return false;
            }
            return self.has_edge(seq[self.n - 1], seq[0]);
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn degree_cache_tracks_edits() {
        let g = path(4);
        assert_eq!(g.degrees(), &[1, 2, 2, 1]);
        let h = g.with_edge(0, 3).unwrap();
        assert_eq!(h.degrees(), &[2, 2, 2, 2]);
        assert_eq!(h.size(), 4);
        let back = h.without_edge(3, 0).unwrap();
        assert_eq!(back, g);
        assert!(g.without_edge(0, 2).is_err());
    }

    #[test]
    fn wide_rows_span_several_words() {
        let n = 130;
        let g = Graph::from_edges(n, [(0, 129), (64, 65), (1, 127)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges().count(), 3);
    }

    #[test]
    fn biconnectivity() {
        assert!(!path(4).is_biconnected());
        let c4 = path(4).with_edge(0, 3).unwrap();
        assert!(c4.is_biconnected());
        // Two triangles sharing vertex 2.
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(!bowtie.is_biconnected());
        assert!(!Graph::from_edges(2, [(0, 1)]).unwrap().is_biconnected());
    }

    #[test]
    fn hamiltonian_sequence_validation() {
        let c4 = path(4).with_edge(0, 3).unwrap();
        assert!(c4.is_hamiltonian_sequence(&[0, 1, 2, 3], true));
        assert!(!c4.is_hamiltonian_sequence(&[0, 2, 1, 3], false));
        assert!(path(4).is_hamiltonian_sequence(&[3, 2, 1, 0], false));
        assert!(!path(4).is_hamiltonian_sequence(&[0, 1, 2, 3], true));
    }

    #[test]
    fn components_and_relabel() {
        let g = Graph::from_edges(5, [(0, 3), (1, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 4], vec![2]]);
        let h = g.relabel(&[4, 3, 2, 1, 0]);
        assert!(h.has_edge(4, 1) && h.has_edge(3, 0));
        let sub = g.induced_subgraph(&[0, 3, 2]);
        assert_eq!(sub.size(), 1);
        assert!(sub.has_edge(0, 1));
    }
}
