//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's canonical labeling, ranking or game solver.
#![allow(dead_code)]

use copwin::Graph;

/// Every permutation of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    (0..n).map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect()).collect()
}

/// Upper-triangle bit code of `g` relabeled by `p` (vertex `v` becomes `p[v]`).
fn code(adj: &[Vec<bool>], p: &[usize]) -> u64 {
    let n = adj.len();
    let mut inv = vec![0; n];
    for (v, &pv) in p.iter().enumerate() {
        inv[pv] = v;
    }
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = (c << 1) | adj[inv[i]][inv[j]] as u64;
        }
    }
    c
}

/// Largest code over all relabelings; equal iff isomorphic.
pub fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let adj = adjacency(g);
    perms.iter().map(|p| code(&adj, p)).max().unwrap_or(0)
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let perms = permutations(g.n());
    let target = code(&adjacency(h), &(0..h.n()).collect::<Vec<_>>());
    let adj = adjacency(g);
    perms.iter().any(|p| code(&adj, p) == target)
}

pub fn automorphism_count(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let adj = adjacency(g);
    let id = code(&adj, &(0..g.n()).collect::<Vec<_>>());
    perms.iter().filter(|p| code(&adj, p) == id).count() as u64
}

/// Graph on `n` vertices whose edges are the set bits of `mask` over the
/// pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut b = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> b & 1 == 1 {
                edges.push((i, j));
            }
            b += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Labeled connected graphs on `n` vertices, by the standard recurrence over
/// the component containing vertex 1.
pub fn labeled_connected(n: usize) -> u128 {
    let binom = |n: usize, k: usize| -> u128 { (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) };
    let all = |m: usize| -> u128 { 1u128 << (m * m.saturating_sub(1) / 2) };
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let mut x = all(m);
        for k in 1..m {
            x -= binom(m - 1, k - 1) * c[k] * all(m - k);
        }
        c[m] = x;
    }
    c[n]
}

/// Corner ranks straight from the definition, with `None` for infinity:
/// repeatedly strip every vertex whose closed neighborhood (within the
/// remaining graph) is strictly inside another's.
pub fn naive_ranks(g: &Graph) -> Vec<Option<u32>> {
    let n = g.n();
    let adj = adjacency(g);
    let mut alive = vec![true; n];
    let mut rank = vec![None; n];
    let closed = |alive: &[bool], v: usize| -> Vec<bool> { (0..n).map(|u| alive[u] && (u == v || adj[v][u])).collect() };
    let mut level = 1;
    loop {
        let live: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        if live.is_empty() {
            break;
        }
        let clique = live.iter().all(|&u| live.iter().all(|&v| u == v || adj[u][v]));
        if clique {
            for &v in &live {
                rank[v] = Some(level);
            }
            break;
        }
        let corners: Vec<usize> = live
            .iter()
            .copied()
            .filter(|&v| {
                let nv = closed(&alive, v);
                live.iter().any(|&w| {
                    let nw = closed(&alive, w);
                    w != v && (0..n).all(|i| !nv[i] || nw[i]) && nv != nw
                })
            })
            .collect();
        if corners.is_empty() {
            break;
        }
        for &v in &corners {
            rank[v] = Some(level);
            alive[v] = false;
        }
        level += 1;
    }
    rank
}

/// Capture time by backward induction over (cop, robber, mover) states, with
/// the cop choosing a start and the robber answering. `None` if robber-win.
pub fn naive_capture_time(g: &Graph) -> Option<u32> {
    let n = g.n();
    let adj = adjacency(g);
    let nbhd: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&u| u == v || adj[v][u]).collect()).collect();
    // cop_to_move[c][r]: rounds until capture with the cop about to move.
    let mut cop = vec![vec![None::<u32>; n]; n];
    // robber_to_move[c][r]: same, robber about to move.
    let mut rob = vec![vec![None::<u32>; n]; n];
    for c in 0..n {
        rob[c][c] = Some(0);
    }
    loop {
        let mut changed = false;
        for c in 0..n {
            for r in 0..n {
                let best = nbhd[c].iter().filter_map(|&c2| if c2 == r { Some(1) } else { rob[c2][r].map(|t| t + 1) }).min();
                if best.is_some() && cop[c][r] != best {
                    cop[c][r] = best;
                    changed = true;
                }
            }
        }
        for c in 0..n {
            for r in 0..n {
                if c == r {
                    continue;
                }
                let mut worst = Some(0);
                for &r2 in &nbhd[r] {
                    worst = match (worst, if r2 == c { Some(0) } else { cop[c][r2] }) {
                        (Some(a), Some(b)) => Some(a.max(b)),
                        _ => None,
                    };
                }
                if worst.is_some() && rob[c][r] != worst {
                    rob[c][r] = worst;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // Cop places, robber places anywhere (capture on placement costs 0).
    (0..n)
        .filter_map(|c| {
            (0..n).try_fold(0u32, |acc, r| {
                let t = if r == c { Some(0) } else { cop[c][r] };
                t.map(|t| acc.max(t))
            })
        })
        .min()
}

/// xorshift, so random instances do not depend on the library's RNG use.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, k: u64) -> u64 {
        self.next() % k
    }
}
