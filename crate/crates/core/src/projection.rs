//! Projection maps `f_k: V(G^(k)) -> 2^V(G^(k+1))` and their composites `F_k`.
//!
//! `f_k(u) = {u}` when `cr(u) > k`; otherwise the vertices of `G^(k+1)` that
//! strictly corner `u` inside `G^(k)`. Maps are evaluated on demand from the
//! level sets, so building a `ProjectionMap` costs nothing beyond the ranking.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rank::{CornerRanking, Rank};

pub struct ProjectionMap<'a> {
    g: &'a Graph,
    r: &'a CornerRanking,
    alpha: usize,
}

pub fn build_projections<'a>(g: &'a Graph, r: &'a CornerRanking) -> Result<ProjectionMap<'a>> {
    let alpha = r.alpha().finite().ok_or(Error::NotCopWin)? as usize;
    Ok(ProjectionMap { g, r, alpha })
}

impl ProjectionMap<'_> {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// `f_k(u)` for `1 <= k < α` and `u` in `G^(k)`.
    pub fn f(&self, k: usize, u: usize) -> Result<VertexSet> {
        if k == 0 || k >= self.alpha {
            return Err(Error::argument(format!("f_{k} needs 1 <= k < {}", self.alpha)));
        }
        let here = self.r.level_set(k);
        if !here.contains(u) {
            return Err(Error::argument(format!("vertex {u} is not in G^({k})")));
        }
        if self.r.rank(u) > Rank::Finite(k as u32) {
            return Ok(VertexSet::singleton(u));
        }
        let nu = self.g.closed(u) & here;
        let above = self.r.level_set(k + 1);
        Ok(above.iter().filter(|&w| nu.is_proper_subset(self.g.closed(w) & here)).collect())
    }

    /// `f_k` applied to each member of `s`, united.
    pub fn f_set(&self, k: usize, s: VertexSet) -> Result<VertexSet> {
        s.iter().try_fold(VertexSet::EMPTY, |acc, u| Ok(acc | self.f(k, u)?))
    }

    /// `F_k(v) = f_{k-1}(...f_1(v))` for `1 <= k <= α`; `F_1` is the identity.
    #[allow(non_snake_case)]
    pub fn F(&self, k: usize, v: usize) -> Result<VertexSet> {
        if k == 0 || k > self.alpha {
            return Err(Error::argument(format!("F_{k} needs 1 <= k <= {}", self.alpha)));
        }
        if v >= self.g.n() {
            return Err(Error::Range { vertex: v, n: self.g.n() });
        }
        let mut s = VertexSet::singleton(v);
        for j in 1..k {
            s = self.f_set(j, s)?;
        }
        Ok(s)
    }

    /// First edge `uv` of `G^(k)` with images `u*`, `v*` neither equal nor
    /// adjacent, or `None` when `f_k` is a homomorphism. Loops count as
    /// edges, so each `f_k(u)` must itself be a clique.
    pub fn homomorphism_violation(&self, k: usize) -> Result<Option<(usize, usize, usize, usize)>> {
        let here = self.r.level_set(k);
        for u in here.iter() {
            let fu = self.f(k, u)?;
            for v in (self.g.closed(u) & here).iter().filter(|&v| v >= u) {
                let fv = self.f(k, v)?;
                for a in fu.iter() {
                    if let Some(b) = fv.iter().find(|&b| !self.g.closed(a).contains(b)) {
                        return Ok(Some((u, v, a, b)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Whether the path `p` in `G` projects to a walk of `G^(k)` of the same
    /// length: some choice `p_i* ∈ F_k(p_i)` with consecutive choices equal
    /// or adjacent. Endpoints of rank at least `k` are fixed by `F_k`, so the
    /// walk then connects them inside `G^(k)`.
    pub fn path_projects(&self, k: usize, path: &[usize]) -> Result<bool> {
        let Some((&first, rest)) = path.split_first() else {
            return Err(Error::argument("empty path"));
        };
        let mut reach = self.F(k, first)?;
        for (&prev, &next) in path.iter().zip(rest) {
            if !self.g.has_edge(prev, next) {
                return Err(Error::argument(format!("{prev}-{next} is not an edge")));
            }
            let frontier = reach.iter().fold(VertexSet::EMPTY, |a, x| a | self.g.closed(x));
            reach = self.F(k, next)? & frontier;
            if reach.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `dist_G(v,w) >= dist_{G^(k)}(v,w)` for `v`, `w` of equal finite rank `k`.
pub fn check_path_contraction(g: &Graph, r: &CornerRanking, v: usize, w: usize) -> Result<bool> {
    for x in [v, w] {
        if x >= g.n() {
            return Err(Error::Range { vertex: x, n: g.n() });
        }
    }
    let (Rank::Finite(k), Rank::Finite(k2)) = (r.rank(v), r.rank(w)) else {
        return Err(Error::argument("path contraction needs finite ranks"));
    };
    if k != k2 {
        return Err(Error::argument(format!("ranks differ: {k} vs {k2}")));
    }
    let in_g = g.distance(v, w);
    let in_level = g.distance_within(r.level_set(k as usize), v, w);
    Ok(match (in_g, in_level) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => a >= b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::h7;
    use crate::rank::corner_rank;

    #[test]
    fn h7_projections() {
        let h = h7();
        let g = &h.graph;
        let r = corner_rank(g);
        let p = build_projections(g, &r).unwrap();
        let v = |s| h.vertex(s).unwrap();
        assert_eq!(p.f(1, v("d")).unwrap(), VertexSet::singleton(v("b1")));
        assert_eq!(p.f(1, v("a1")).unwrap(), VertexSet::singleton(v("a1")));
        let top: VertexSet = [v("a1"), v("a2")].into_iter().collect();
        let f4 = p.F(4, v("d")).unwrap();
        assert!(!f4.is_empty() && f4.is_subset(top));
        for k in 1..4 {
            assert_eq!(p.homomorphism_violation(k).unwrap(), None);
        }
        assert!(check_path_contraction(g, &r, v("c1"), v("c2")).unwrap());
        assert!(check_path_contraction(g, &r, v("d"), v("d")).unwrap());
        assert!(check_path_contraction(g, &r, v("c1"), v("d")).is_err());
        assert!(p.path_projects(2, &[v("c1"), v("d"), v("c2")]).unwrap());
        assert!(p.f(4, 0).is_err());
    }
}
