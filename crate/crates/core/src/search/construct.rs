//! Constructions that turn one realizer into another.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rank::{corner_rank, CornerRanking};

/// Adds a vertex with closed neighborhood `N[v]`, making it a twin of `v`.
pub fn add_twin(g: &Graph, v: usize) -> Result<Graph> {
    let nv = g.closed_neighborhood(v)?;
    let mut out = Graph::empty(g.n() + 1)?;
    for (a, b) in g.edges() {
        out.insert_edge(a, b);
    }
    for u in nv.iter() {
        out.insert_edge(u, g.n());
    }
    Ok(out)
}

/// Hangs a pendant vertex off every rank-1 vertex, `l` times over.
pub fn extend_tail(g: &Graph, l: usize) -> Result<Graph> {
    let mut cur = g.clone();
    for _ in 0..l {
        let r = corner_rank(&cur);
        if !r.is_cop_win() {
            return Err(Error::NotCopWin);
        }
        let ones: VertexSet = r.level(1);
        let n = cur.n();
        let mut next = Graph::empty(n + ones.len())?;
        for (a, b) in cur.edges() {
            next.insert_edge(a, b);
        }
        for (i, v) in ones.iter().enumerate() {
            next.insert_edge(v, n + i);
        }
        cur = next;
    }
    if l == 0 && !corner_rank(g).is_cop_win() {
        return Err(Error::NotCopWin);
    }
    Ok(cur)
}

/// `G^(k)`, with vertices in their original relative order.
pub fn truncate(g: &Graph, r: &CornerRanking, k: usize) -> Result<Graph> {
    let alpha = r.alpha().finite().ok_or(Error::NotCopWin)? as usize;
    if k == 0 || k > alpha {
        return Err(Error::argument(format!("truncation level {k} outside 1..={alpha}")));
    }
    Ok(r.level_graph(g, k)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::h7;
    use crate::graph::canonical_form;
    use crate::rv;

    #[test]
    fn twins() {
        assert_eq!(add_twin(&Graph::complete(1).unwrap(), 0).unwrap(), Graph::complete(2).unwrap());
        let h = h7();
        let g = add_twin(&h.graph, h.vertex("c1").unwrap()).unwrap();
        assert_eq!(corner_rank(&g).vector().unwrap(), rv![2, 2, 3, 1]);
        assert!(g.twins(h.vertex("c1").unwrap(), 7).unwrap());
        assert!(add_twin(&h.graph, 7).is_err());
    }

    #[test]
    fn tails() {
        let h = h7().graph;
        let g = extend_tail(&h, 1).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(corner_rank(&g).vector().unwrap(), rv![2, 2, 2, 1, 1]);
        assert_eq!(extend_tail(&h, 0).unwrap(), h);
        let p7 = extend_tail(&Graph::path(5).unwrap(), 1).unwrap();
        assert_eq!(canonical_form(&p7), canonical_form(&Graph::path(7).unwrap()));
        assert_eq!(extend_tail(&crate::catalog::named::fig2(), 1), Err(Error::NotCopWin));
    }

    #[test]
    fn truncation() {
        let h = h7().graph;
        let r = corner_rank(&h);
        let t = truncate(&h, &r, 2).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(corner_rank(&t).vector().unwrap(), rv![2, 2, 2]);
        assert_eq!(truncate(&h, &r, 1).unwrap(), h);
        assert!(truncate(&h, &r, 5).is_err());
        let p7 = Graph::path(7).unwrap();
        let t = truncate(&p7, &corner_rank(&p7), 2).unwrap();
        assert_eq!(canonical_form(&t), canonical_form(&Graph::path(5).unwrap()));
    }
}
