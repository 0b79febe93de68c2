//! Canonical labeling by equitable partition refinement plus an
//! individualization search tree.
//!
//! The search tree depends only on the isomorphism class of the graph, so the
//! lexicographically largest leaf graph is a canonical representative. Two
//! prunings skip subtrees whose leaves repeat ones already seen: vertices in
//! the same twin class (the transposition is an automorphism), and vertices in
//! the same orbit of automorphisms discovered so far that fix the current
//! individualized prefix.

use super::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Isomorphism-class key: equal iff the graphs are isomorphic.
///
/// Byte 0 is the order; each following group of `ceil(n/8)` bytes is one row
/// of the canonical adjacency matrix, little-endian.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub(crate) fn from_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        let width = n.div_ceil(8);
        let mut bytes = Vec::with_capacity(1 + n * width);
        bytes.push(n as u8);
        for r in rows {
            // Search codes put column j at bit n-1-j; store column j at bit j.
            let natural = r.reverse_bits() >> (64 - n);
            bytes.extend_from_slice(&natural.to_le_bytes()[..width]);
        }
        CanonicalForm(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let width = n.div_ceil(8);
        let rows = (0..n)
            .map(|i| {
                let mut word = [0u8; 8];
                word[..width].copy_from_slice(&self.0[1 + i * width..1 + (i + 1) * width]);
                VertexSet::from_bits(u64::from_le_bytes(word))
            })
            .collect();
        Graph::from_rows(rows)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_graph().to_compact())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm::from_rows(&canonical_rows(g))
}

/// `order[i]` is the vertex of `g` placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut search = Search::new(g);
    search.run();
    search.best.map(|(_, order)| order).expect("search visits at least one leaf")
}

/// Rows of the canonical adjacency matrix.
pub(crate) fn canonical_rows(g: &Graph) -> Vec<u64> {
    let mut search = Search::new(g);
    search.run();
    search.best.map(|(code, _)| code).expect("search visits at least one leaf")
}

struct Search<'g> {
    g: &'g Graph,
    twin_class: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let mut twin_class: Vec<usize> = (0..n).collect();
        for v in 0..n {
            for u in 0..v {
                if twin_class[u] == u
                    && (g.closed(u) == g.closed(v) || g.neighbors(u) == g.neighbors(v))
                {
                    twin_class[v] = u;
                    break;
                }
            }
        }
        Search {
            g,
            twin_class,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(&mut self) {
        let mut cells = vec![self.g.vertices()];
        refine(self.g, &mut cells);
        let mut prefix = Vec::with_capacity(self.g.n());
        self.descend(cells, &mut prefix);
    }

    fn descend(&mut self, cells: Vec<VertexSet>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in cell.iter() {
            if explored.iter().any(|&u| self.twin_class[u] == self.twin_class[v]) {
                continue;
            }
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(VertexSet::singleton(v));
            next.push(cell.without(v));
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, cells: &[VertexSet]) {
        let n = self.g.n();
        let order: Vec<usize> = cells.iter().map(|c| c.first().unwrap()).collect();
        let mut position = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        // Rows are stored with bit (n-1-j) for column j so that integer order
        // matches lexicographic order of the matrix rows.
        let code: Vec<u64> = order
            .iter()
            .map(|&v| {
                self.g
                    .neighbors(v)
                    .iter()
                    .fold(0u64, |acc, u| acc | 1u64 << (n - 1 - position[u]))
            })
            .collect();
        match &self.best {
            None => self.best = Some((code, order)),
            Some((best_code, best_order)) => match code.cmp(best_code) {
                std::cmp::Ordering::Greater => self.best = Some((code, order)),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0usize; n];
                    for i in 0..n {
                        gamma[best_order[i]] = order[i];
                    }
                    self.automorphisms.push(gamma);
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}

/// Refines an ordered partition to the coarsest equitable one below it.
/// Fragments of a split cell are ordered by neighbor count, so the result is
/// determined by the isomorphism class of `(g, cells)`.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    loop {
        let mut split_any = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.len() > 1 {
                    if let Some(parts) = split(g, cell, splitter) {
                        let k = parts.len();
                        cells.splice(i..=i, parts);
                        split_any = true;
                        if i < s {
                            s += k - 1;
                        }
                        i += k;
                        continue;
                    }
                }
                i += 1;
            }
            s += 1;
        }
        if !split_any {
            return;
        }
    }
}

fn split(g: &Graph, cell: VertexSet, splitter: VertexSet) -> Option<Vec<VertexSet>> {
    let mut buckets: [(usize, VertexSet); 64] = [(0, VertexSet::EMPTY); 64];
    let mut used = 0usize;
    for v in cell.iter() {
        let count = (g.neighbors(v) & splitter).len();
        match buckets[..used].iter_mut().find(|(c, _)| *c == count) {
            Some((_, set)) => set.insert(v),
            None => {
                buckets[used] = (count, VertexSet::singleton(v));
                used += 1;
            }
        }
    }
    if used == 1 {
        return None;
    }
    let parts = &mut buckets[..used];
    parts.sort_unstable_by_key(|(c, _)| *c);
    Some(parts.iter().map(|(_, s)| *s).collect())
}
