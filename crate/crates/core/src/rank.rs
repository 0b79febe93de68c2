//! The corner ranking procedure: at each step every strict corner of the
//! current level graph is removed at once, until a clique (finite rank) or a
//! corner-free non-clique (infinite rank) remains.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::vector::RankVector;
use serde::{Serialize, Serializer};
use std::fmt;

/// A positive integer or infinity. `Finite` sorts below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Finite(u32),
    Infinite,
}

impl Rank {
    pub fn finite(self) -> Option<u32> {
        match self {
            Rank::Finite(k) => Some(k),
            Rank::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Rank::Finite(_))
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(k) => write!(f, "{k}"),
            Rank::Infinite => write!(f, "infinity"),
        }
    }
}

/// A non-negative number of cop moves, or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaptureTime {
    Finite(u32),
    Infinite,
}

impl CaptureTime {
    pub fn finite(self) -> Option<u32> {
        match self {
            CaptureTime::Finite(k) => Some(k),
            CaptureTime::Infinite => None,
        }
    }
}

impl fmt::Display for CaptureTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaptureTime::Finite(k) => write!(f, "{k}"),
            CaptureTime::Infinite => write!(f, "infinity"),
        }
    }
}

macro_rules! serialize_extended {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                match self.finite() {
                    Some(k) => s.serialize_u32(k),
                    None => s.serialize_str("infinity"),
                }
            }
        }
    };
}
serialize_extended!(Rank);
serialize_extended!(CaptureTime);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TopHeaviness {
    /// A rank-α vertex dominates `V(G^(α-1))`.
    Top1,
    Top0,
    /// α = 1: the graph is a clique.
    CliqueRank1,
}

impl TopHeaviness {
    /// `Some(1)`, `Some(0)` or `None` for cliques.
    pub fn r(self) -> Option<u8> {
        match self {
            TopHeaviness::Top1 => Some(1),
            TopHeaviness::Top0 => Some(0),
            TopHeaviness::CliqueRank1 => None,
        }
    }
}

impl fmt::Display for TopHeaviness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopHeaviness::Top1 => write!(f, "1"),
            TopHeaviness::Top0 => write!(f, "0"),
            TopHeaviness::CliqueRank1 => write!(f, "clique"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerRanking {
    ranks: Vec<Rank>,
    alpha: Rank,
    /// `levels[k-1]` is `X_k`, for the finite ranks only.
    levels: Vec<VertexSet>,
    infinite_set: VertexSet,
}

pub fn corner_rank(g: &Graph) -> CornerRanking {
    let n = g.n();
    let mut ranks = vec![Rank::Infinite; n];
    let mut levels = Vec::new();
    let mut alive = g.vertices();
    let mut k = 1u32;
    loop {
        if g.is_clique_on(alive) {
            for v in alive.iter() {
                ranks[v] = Rank::Finite(k);
            }
            levels.push(alive);
            return CornerRanking {
                ranks,
                alpha: Rank::Finite(k),
                levels,
                infinite_set: VertexSet::EMPTY,
            };
        }
        let corners = strict_corners_within(g, alive);
        if corners.is_empty() {
            return CornerRanking {
                ranks,
                alpha: Rank::Infinite,
                levels,
                infinite_set: alive,
            };
        }
        for v in corners.iter() {
            ranks[v] = Rank::Finite(k);
        }
        levels.push(corners);
        alive = alive - corners;
        k += 1;
    }
}

/// Vertices `v` of `alive` with `N[v] ⊊ N[w]` in the subgraph induced by `alive`.
pub(crate) fn strict_corners_within(g: &Graph, alive: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for v in alive.iter() {
        let nv = g.closed(v) & alive;
        // Any w strictly cornering v is adjacent to it.
        if (nv.without(v)).iter().any(|w| nv.is_proper_subset(g.closed(w) & alive)) {
            out.insert(v);
        }
    }
    out
}

impl CornerRanking {
    pub fn rank(&self, v: usize) -> Rank {
        self.ranks[v]
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn alpha(&self) -> Rank {
        self.alpha
    }

    pub fn is_cop_win(&self) -> bool {
        self.alpha.is_finite()
    }

    /// `X_k` for finite `k >= 1`; empty past the last finite level.
    pub fn level(&self, k: usize) -> VertexSet {
        match k {
            0 => VertexSet::EMPTY,
            _ => self.levels.get(k - 1).copied().unwrap_or(VertexSet::EMPTY),
        }
    }

    /// Number of finite levels.
    pub fn finite_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn infinite_set(&self) -> VertexSet {
        self.infinite_set
    }

    /// `V(G^(k))`: vertices of rank at least `k`, infinite ones included.
    pub fn level_set(&self, k: usize) -> VertexSet {
        let below = self.levels.iter().take(k.saturating_sub(1)).fold(VertexSet::EMPTY, |a, &b| a | b);
        VertexSet::full(self.ranks.len()) - below
    }

    /// `G^(k)` with the map back to vertices of `g`.
    pub fn level_graph(&self, g: &Graph, k: usize) -> Result<(Graph, Vec<usize>)> {
        if k == 0 || k > self.levels.len() + usize::from(!self.is_cop_win()) {
            return Err(Error::argument(format!("no level graph G^({k})")));
        }
        g.induced(self.level_set(k))
    }

    pub fn vector(&self) -> Result<RankVector> {
        rank_cardinality_vector(self)
    }
}

/// `(x_α, ..., x_1)` with `x_k = |X_k|`.
pub fn rank_cardinality_vector(r: &CornerRanking) -> Result<RankVector> {
    if !r.is_cop_win() {
        return Err(Error::NotCopWin);
    }
    Ok(RankVector::from_vec_unchecked(
        r.levels.iter().rev().map(|x| x.len() as u32).collect(),
    ))
}

/// Rank-α vertices dominating `V(G^(α-1))`, for α ≥ 2.
pub fn top_dominators(g: &Graph, r: &CornerRanking) -> Result<VertexSet> {
    let alpha = r.alpha.finite().ok_or(Error::NotCopWin)? as usize;
    if alpha < 2 {
        return Ok(VertexSet::EMPTY);
    }
    let below = r.level_set(alpha - 1);
    Ok(r.level(alpha).iter().filter(|&v| below.is_subset(g.closed(v))).collect())
}

pub fn top_heaviness(g: &Graph, r: &CornerRanking) -> Result<TopHeaviness> {
    let alpha = r.alpha.finite().ok_or(Error::NotCopWin)?;
    if alpha == 1 {
        return Ok(TopHeaviness::CliqueRank1);
    }
    let dominators = top_dominators(g, r)?;
    debug_assert!(
        dominators.is_empty() || dominators == r.level(alpha as usize),
        "some but not every top vertex dominates the level below"
    );
    Ok(if dominators.is_empty() {
        TopHeaviness::Top0
    } else {
        TopHeaviness::Top1
    })
}

pub fn capture_time_by_rank(g: &Graph, r: &CornerRanking) -> CaptureTime {
    match r.alpha {
        Rank::Infinite => CaptureTime::Infinite,
        Rank::Finite(1) => CaptureTime::Finite(u32::from(g.n() > 1)),
        Rank::Finite(alpha) => match top_heaviness(g, r) {
            Ok(TopHeaviness::Top1) => CaptureTime::Finite(alpha - 1),
            _ => CaptureTime::Finite(alpha),
        },
    }
}

/// Everything the rank module knows about one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankSummary {
    pub n: usize,
    pub cop_win: bool,
    pub rank: Rank,
    pub top: Option<TopHeaviness>,
    pub vector: Option<RankVector>,
    pub capture_time: CaptureTime,
    pub vertex_ranks: Vec<Rank>,
}

pub fn summarize(g: &Graph) -> RankSummary {
    let r = corner_rank(g);
    RankSummary {
        n: g.n(),
        cop_win: r.is_cop_win(),
        rank: r.alpha,
        top: top_heaviness(g, &r).ok(),
        vector: r.vector().ok(),
        capture_time: capture_time_by_rank(g, &r),
        vertex_ranks: r.ranks.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::h7;
    use crate::rv;

    #[test]
    fn h7_walkthrough() {
        let h = h7();
        let g = &h.graph;
        let r = corner_rank(g);
        let want = [("d", 1), ("c1", 2), ("c2", 2), ("b1", 3), ("b2", 3), ("a1", 4), ("a2", 4)];
        for (name, k) in want {
            let v = h.vertex(name).unwrap();
            assert_eq!(r.rank(v), Rank::Finite(k), "{name}");
        }
        assert_eq!(r.alpha(), Rank::Finite(4));
        assert_eq!(r.vector().unwrap(), rv![2, 2, 2, 1]);
        assert_eq!(top_heaviness(g, &r).unwrap(), TopHeaviness::Top1);
        assert_eq!(capture_time_by_rank(g, &r), CaptureTime::Finite(3));
    }

    #[test]
    fn paths_and_cliques() {
        let p5 = Graph::path(5).unwrap();
        let r = corner_rank(&p5);
        assert_eq!(r.ranks(), &[1, 2, 3, 2, 1].map(Rank::Finite));
        assert_eq!(r.vector().unwrap(), rv![1, 2, 2]);
        assert_eq!(capture_time_by_rank(&p5, &r), CaptureTime::Finite(2));
        let p6 = Graph::path(6).unwrap();
        assert_eq!(top_heaviness(&p6, &corner_rank(&p6)).unwrap(), TopHeaviness::Top0);
        let p8 = Graph::path(8).unwrap();
        assert_eq!(corner_rank(&p8).vector().unwrap(), rv![2, 2, 2, 2]);
        for n in 1..=5 {
            let k = Graph::complete(n).unwrap();
            let r = corner_rank(&k);
            assert_eq!(r.alpha(), Rank::Finite(1));
            assert_eq!(r.vector().unwrap(), rv![n as u32]);
            assert_eq!(top_heaviness(&k, &r).unwrap(), TopHeaviness::CliqueRank1);
            assert_eq!(capture_time_by_rank(&k, &r), CaptureTime::Finite(u32::from(n > 1)));
        }
    }

    #[test]
    fn non_cop_win() {
        let fig2 = crate::catalog::named::fig2();
        let r = corner_rank(&fig2);
        assert_eq!(r.alpha(), Rank::Infinite);
        assert_eq!(r.rank(6), Rank::Finite(1));
        assert_eq!(r.rank(5), Rank::Finite(2));
        assert_eq!(r.infinite_set().len(), 5);
        assert_eq!(r.vector(), Err(Error::NotCopWin));
        assert_eq!(top_heaviness(&fig2, &r), Err(Error::NotCopWin));
        assert_eq!(capture_time_by_rank(&fig2, &r), CaptureTime::Infinite);
        let split = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(corner_rank(&split).alpha(), Rank::Infinite);
    }

    #[test]
    fn level_graphs() {
        let g = h7().graph;
        let r = corner_rank(&g);
        let (g2, _) = r.level_graph(&g, 2).unwrap();
        assert_eq!(corner_rank(&g2).vector().unwrap(), rv![2, 2, 2]);
        assert_eq!(r.level_graph(&g, 1).unwrap().0, g);
        assert!(r.level_graph(&g, 5).is_err());
    }
}
