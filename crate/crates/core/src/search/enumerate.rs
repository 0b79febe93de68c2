//! Connected graphs up to isomorphism, grown one vertex at a time.
//!
//! Every connected graph on `n >= 2` vertices has a non-cut vertex (a leaf of
//! a spanning tree), so it arises from a connected graph on `n - 1` vertices
//! by adding a vertex joined to a nonempty subset. Children are deduplicated
//! by canonical key.

use crate::error::{Error, Result};
use crate::graph::{canonical_rows, Graph, VertexSet};
use rayon::prelude::*;
use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

/// Default largest order swept exhaustively.
pub const DEFAULT_CAP: usize = 9;
/// Largest order the enumerator accepts at all.
pub const MAX_CAP: usize = 10;
/// Largest order whose canonical key fits in a `u64`.
pub const KEY_MAX_N: usize = 11;

/// Upper-triangle bits of the canonical adjacency matrix, row-major.
pub fn canonical_key(g: &Graph) -> u64 {
    assert!(g.n() <= KEY_MAX_N, "canonical_key needs n <= {KEY_MAX_N}");
    pack_rows(&canonical_rows(g))
}

/// Packs rows in the canonical search layout (column `j` at bit `n-1-j`).
fn pack_rows(rows: &[u64]) -> u64 {
    let n = rows.len();
    let mut key = 0u64;
    for (i, &row) in rows.iter().enumerate() {
        for j in i + 1..n {
            key = key << 1 | (row >> (n - 1 - j) & 1);
        }
    }
    key
}

/// Inverse of [`canonical_key`].
pub fn graph_from_key(n: usize, key: u64) -> Graph {
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut bit = n * (n - 1) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if key >> bit & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    Graph::from_rows(rows)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::argument("order must be at least 1"));
    }
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(Error::Resource { requested: n, cap });
    }
    Ok(())
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<u64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<u64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Sorted canonical keys of the connected graphs on `n` vertices.
pub fn connected_keys(n: usize, cap: usize) -> Result<Arc<Vec<u64>>> {
    check_cap(n, cap)?;
    if let Some(keys) = cache().lock().unwrap().get(&n) {
        return Ok(Arc::clone(keys));
    }
    let keys = if n == 1 {
        Arc::new(vec![0])
    } else {
        let parents = connected_keys(n - 1, cap)?;
        Arc::new(grow(n - 1, &parents))
    };
    cache().lock().unwrap().insert(n, Arc::clone(&keys));
    Ok(keys)
}

fn grow(m: usize, parents: &[u64]) -> Vec<u64> {
    let set: HashSet<u64> = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, &key| {
            let parent = graph_from_key(m, key);
            let mut rows: Vec<VertexSet> = (0..m).map(|v| parent.neighbors(v)).collect();
            rows.push(VertexSet::EMPTY);
            for s in 1u64..1 << m {
                let attach = VertexSet::from_bits(s);
                for v in attach.iter() {
                    rows[v].insert(m);
                }
                rows[m] = attach;
                acc.insert(pack_rows(&canonical_rows(&Graph::from_rows(rows.clone()))));
                for v in attach.iter() {
                    rows[v].remove(m);
                }
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut keys: Vec<u64> = set.into_iter().collect();
    keys.sort_unstable();
    keys
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical-key order.
pub fn enumerate_connected(n: usize, cap: usize) -> Result<Vec<Graph>> {
    Ok(connected_keys(n, cap)?.iter().map(|&k| graph_from_key(n, k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let want = [1, 1, 2, 6, 21, 112, 853];
        for (i, &c) in want.iter().enumerate() {
            assert_eq!(connected_keys(i + 1, DEFAULT_CAP).unwrap().len(), c, "n={}", i + 1);
        }
    }

    #[test]
    fn key_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let key = canonical_key(&g);
        let back = graph_from_key(5, key);
        assert_eq!(canonical_key(&back), key);
        assert_eq!(crate::graph::canonical_form(&back), crate::graph::canonical_form(&g));
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate_connected(10, 9), Err(Error::Resource { requested: 10, cap: 9 })));
        assert!(matches!(enumerate_connected(11, 11), Err(Error::Resource { requested: 11, cap: 10 })));
        assert!(enumerate_connected(0, 9).is_err());
    }
}
