//! One cop against one robber, solved by value iteration.
//!
//! `V(c, r)` counts the cop moves still needed to force capture with the cop
//! to move. Starting from 0 the iterates are `min(D, t)` for the true values
//! `D`, and the finite values form a contiguous range `1..=max`: a state with
//! value `k >= 2` has an optimal cop move whose worst robber reply sits at
//! `k - 1`. So the first round `t >= 1` in which no state settles at exactly
//! `t` ends the finite part, and every state still climbing is infinite.

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};
use crate::rank::CaptureTime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaptureTable {
    n: usize,
    value: Vec<CaptureTime>,
    best: Vec<Option<usize>>,
}

impl CaptureTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, cop: usize, robber: usize) -> CaptureTime {
        self.value[cop * self.n + robber]
    }

    /// Optimal cop step from `(cop, robber)`; ties go to the smallest index.
    pub fn best_cop_move(&self, cop: usize, robber: usize) -> Result<usize> {
        for v in [cop, robber] {
            if v >= self.n {
                return Err(Error::Range { vertex: v, n: self.n });
            }
        }
        if cop == robber {
            return Err(Error::State("robber already caught".into()));
        }
        self.best[cop * self.n + robber]
            .ok_or_else(|| Error::State(format!("cop at {cop} cannot force capture of robber at {robber}")))
    }
}

pub fn optimal_cop_move(t: &CaptureTable, cop: usize, robber: usize) -> Result<usize> {
    t.best_cop_move(cop, robber)
}

pub fn solve_game(g: &Graph) -> CaptureTable {
    let n = g.n();
    let idx = |c: usize, r: usize| c * n + r;
    let mut cur = vec![0u32; n * n];
    let mut next = vec![0u32; n * n];
    let mut t = 0u32;
    let infinite: Vec<bool> = loop {
        for c in 0..n {
            for r in 0..n {
                next[idx(c, r)] = if c == r { 0 } else { 1 + bellman_min(g, &cur, n, c, r) };
            }
        }
        if next == cur {
            break vec![false; n * n];
        }
        // A state settles at t when V_t = V_{t+1} = t. Past round 0, a round
        // where nothing settles leaves only infinite states climbing.
        let settled = t >= 1 && (0..n * n).any(|s| cur[s] == t && next[s] == t);
        std::mem::swap(&mut cur, &mut next);
        t += 1;
        if (t >= 2 && !settled) || t as usize > n * n {
            break cur.iter().map(|&x| x == t).collect();
        }
    };
    let mut value = vec![CaptureTime::Finite(0); n * n];
    let mut best = vec![None; n * n];
    for c in 0..n {
        for r in 0..n {
            let s = idx(c, r);
            if infinite[s] {
                value[s] = CaptureTime::Infinite;
            } else {
                value[s] = CaptureTime::Finite(cur[s]);
                if c != r {
                    best[s] = Some(bellman_argmin(g, &cur, &infinite, n, c, r));
                }
            }
        }
    }
    CaptureTable { n, value, best }
}

/// Min over cop steps of the worst robber reply under `v`.
fn bellman_min(g: &Graph, v: &[u32], n: usize, c: usize, r: usize) -> u32 {
    g.closed(c)
        .iter()
        .map(|c2| {
            if c2 == r {
                0
            } else {
                // The robber may always stay put, so this set is never empty.
                g.closed(r).without(c2).iter().map(|r2| v[c2 * n + r2]).max().unwrap()
            }
        })
        .min()
        .unwrap()
}

/// Argmin of the Bellman step once the table is final, treating infinite
/// states as larger than every finite one.
fn bellman_argmin(g: &Graph, v: &[u32], inf: &[bool], n: usize, c: usize, r: usize) -> usize {
    let key = |s: usize| if inf[s] { u64::MAX } else { v[s] as u64 };
    let mut best = (u64::MAX, usize::MAX);
    for c2 in g.closed(c).iter() {
        let worst = if c2 == r {
            0
        } else {
            g.closed(r).without(c2).iter().map(|r2| key(c2 * n + r2)).max().unwrap()
        };
        if worst < best.0 || best.1 == usize::MAX {
            best = (worst, c2);
        }
    }
    best.1
}

/// Cop places first, then the robber, who sees the cop.
pub fn capture_time_from_table(t: &CaptureTable) -> CaptureTime {
    let n = t.n;
    if n == 1 {
        return CaptureTime::Finite(0);
    }
    (0..n)
        .map(|c| (0..n).filter(|&r| r != c).map(|r| t.value(c, r)).max().unwrap())
        .min()
        .unwrap()
}

pub fn capture_time_by_game(g: &Graph) -> CaptureTime {
    capture_time_from_table(&solve_game(g))
}

/// Largest finite capture time among `graphs` and the canonical forms of the
/// graphs attaining it, sorted.
pub fn max_capture_time<I>(graphs: I) -> Result<(u32, Vec<CanonicalForm>)>
where
    I: IntoIterator<Item = Graph>,
{
    let mut best: Option<(u32, Vec<CanonicalForm>)> = None;
    let mut seen = false;
    for g in graphs {
        seen = true;
        let CaptureTime::Finite(t) = capture_time_by_game(&g) else {
            continue;
        };
        match &mut best {
            Some((b, forms)) if *b == t => forms.push(crate::graph::canonical_form(&g)),
            Some((b, _)) if *b > t => {}
            _ => best = Some((t, vec![crate::graph::canonical_form(&g)])),
        }
    }
    if !seen {
        return Err(Error::argument("no graphs to maximize over"));
    }
    let (t, mut forms) = best.ok_or_else(|| Error::argument("no cop-win graph in the stream"))?;
    forms.sort();
    forms.dedup();
    Ok((t, forms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::{fig2, h7};

    #[test]
    fn small_values() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(solve_game(&k2).value(0, 1), CaptureTime::Finite(1));
        let p5 = Graph::path(5).unwrap();
        let t = solve_game(&p5);
        assert_eq!(t.value(2, 0), CaptureTime::Finite(2));
        assert_eq!(t.best_cop_move(2, 0).unwrap(), 1);
        assert_eq!(t.best_cop_move(2, 4).unwrap(), 3);
        assert_eq!(capture_time_by_game(&Graph::path(4).unwrap()), CaptureTime::Finite(2));
        assert_eq!(capture_time_by_game(&Graph::complete(1).unwrap()), CaptureTime::Finite(0));
        assert_eq!(capture_time_by_game(&h7().graph), CaptureTime::Finite(3));
    }

    #[test]
    fn cliques_capture_at_once() {
        let k = Graph::complete(5).unwrap();
        let t = solve_game(&k);
        for c in 0..5 {
            for r in 0..5 {
                if c != r {
                    assert_eq!(t.best_cop_move(c, r).unwrap(), r);
                }
            }
        }
        assert!(t.best_cop_move(1, 1).is_err());
    }

    #[test]
    fn non_cop_win() {
        let g = fig2();
        let t = solve_game(&g);
        assert_eq!(t.value(6, 2), CaptureTime::Infinite);
        assert!(t.best_cop_move(6, 2).is_err());
        assert_eq!(capture_time_from_table(&t), CaptureTime::Infinite);
        // The robber on the pendant end is still catchable from next door.
        assert_eq!(t.value(5, 6), CaptureTime::Finite(1));
        let two = Graph::empty(2).unwrap();
        assert_eq!(capture_time_by_game(&two), CaptureTime::Infinite);
    }

    #[test]
    fn h7_best_moves_decrease_value() {
        let h = h7();
        let g = &h.graph;
        let t = solve_game(g);
        let (a1, d, b1) = (h.vertex("a1").unwrap(), h.vertex("d").unwrap(), h.vertex("b1").unwrap());
        // b1 dominates N[d], so a1 -> b1 catches the robber on the next move.
        assert_eq!(t.value(a1, d), CaptureTime::Finite(2));
        assert_eq!(t.best_cop_move(a1, d).unwrap(), b1);
        let worst_from_a1 = (0..7).filter(|&r| r != a1).map(|r| t.value(a1, r)).max().unwrap();
        assert_eq!(worst_from_a1, CaptureTime::Finite(3));
        for c in 0..7 {
            for r in (0..7).filter(|&r| r != c) {
                let CaptureTime::Finite(k) = t.value(c, r) else { panic!("H7 is cop-win") };
                let c2 = t.best_cop_move(c, r).unwrap();
                let after = if c2 == r {
                    CaptureTime::Finite(0)
                } else {
                    g.closed(r).without(c2).iter().map(|r2| t.value(c2, r2)).max().unwrap()
                };
                assert_eq!(after, CaptureTime::Finite(k - 1), "({c},{r})");
            }
        }
    }

    #[test]
    fn maximum_over_a_stream() {
        let graphs = vec![Graph::path(4).unwrap(), Graph::complete(4).unwrap(), Graph::cycle(4).unwrap()];
        let (t, forms) = max_capture_time(graphs).unwrap();
        assert_eq!(t, 2);
        assert_eq!(forms, vec![crate::graph::canonical_form(&Graph::path(4).unwrap())]);
        assert!(max_capture_time(Vec::new()).is_err());
    }
}
