//! Finite simple graphs with the reflexive convention applied at query time.
//!
//! Adjacency is stored loop-free as one bitset row per vertex. Every
//! neighborhood query that the game cares about goes through
//! [`Graph::closed_neighborhood`], which adds the vertex itself.

mod canon;
mod io;
mod set;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use io::{parse_compact, parse_graph, sniff_format, GraphFormat, LabeledGraph};
pub(crate) use io::parse_pairs;
pub(crate) use canon::canonical_rows;
pub use set::VertexSet;

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// Largest order a [`Graph`] can hold (one machine word per adjacency row).
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("a graph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::argument(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Graph {
            rows: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from 0-based edge pairs. Repeated edges collapse;
    /// self-pairs are rejected because loops are implicit.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::argument(format!("self-pair ({u},{u}) is not an edge")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.rows[u] = VertexSet::full(n).without(u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::argument("a cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Trusted constructor for hot paths: `rows` must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_VERTICES);
        debug_assert!((0..rows.len()).all(|u| !rows[u].contains(u)
            && rows[u].iter().all(|v| v < rows.len() && rows[v].contains(u))));
        Graph { rows }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Stored (loop-free) neighborhood.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        self.rows[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::Range {
                vertex: v,
                n: self.n(),
            })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::Range {
                vertex: v,
                n: self.n(),
            }),
            None => Ok(()),
        }
    }

    /// `N[v]`: the vertex together with its neighbors.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.closed(v))
    }

    /// True iff every vertex of `s` lies in `N[v]`.
    pub fn dominates(&self, v: usize, s: VertexSet) -> Result<bool> {
        self.check(v)?;
        self.check_set(s)?;
        Ok(s.is_subset(self.closed(v)))
    }

    /// True iff `N[v]` is a proper subset of `N[w]`.
    pub fn strictly_corners(&self, w: usize, v: usize) -> Result<bool> {
        self.check(w)?;
        self.check(v)?;
        if v == w {
            return Err(Error::argument("a vertex cannot corner itself"));
        }
        Ok(self.closed(v).is_proper_subset(self.closed(w)))
    }

    pub fn twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::argument("twins must be distinct vertices"));
        }
        Ok(self.closed(u) == self.closed(v))
    }

    /// True iff the vertices of `s` are pairwise adjacent.
    pub fn is_clique_on(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.is_subset(self.closed(v)))
    }

    pub fn is_clique(&self) -> bool {
        self.is_clique_on(self.vertices())
    }

    /// Induced subgraph on `s`, with `map[i]` the original index of new vertex `i`.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::argument("induced subgraph on an empty set"));
        }
        let map: Vec<usize> = s.iter().collect();
        let mut back = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let rows = map
            .iter()
            .map(|&v| (self.rows[v] & s).iter().map(|u| back[u]).collect())
            .collect();
        Ok((Graph::from_rows(rows), map))
    }

    /// Image of the graph under `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = VertexSet::EMPTY;
        if perm.len() != n {
            return Err(Error::argument("permutation length differs from vertex count"));
        }
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::argument("not a permutation"));
            }
            seen.insert(p);
        }
        let mut rows = vec![VertexSet::EMPTY; n];
        for (u, row) in self.rows.iter().enumerate() {
            rows[perm[u]] = row.iter().map(|v| perm[v]).collect();
        }
        Ok(Graph::from_rows(rows))
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.reach_within(left, start);
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(self.vertices(), 0) == self.vertices()
    }

    fn reach_within(&self, allowed: VertexSet, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.rows[v];
            }
            frontier = next & allowed & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Shortest-path distance between `u` and `v` using only vertices of `allowed`.
    pub fn distance_within(&self, allowed: VertexSet, u: usize, v: usize) -> Option<usize> {
        if !allowed.contains(u) || !allowed.contains(v) {
            return None;
        }
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([u]);
        dist[u] = 0;
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Some(dist[x]);
            }
            for y in (self.rows[x] & allowed).iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distance_within(self.vertices(), u, v)
    }

    /// Disjoint union, with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n();
        let mut g = Graph::empty(n + other.n())?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(n + u, n + v);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_compact())
    }
}
