//! Small named graphs from the figures, with their vertex names and
//! the corner ranks printed inside the vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedGraph {
    pub name: String,
    #[serde(skip)]
    pub graph: Graph,
    /// Figure names for each vertex index.
    pub vertex_names: Vec<String>,
    /// Ranks drawn in the figure, where it has them.
    pub printed_ranks: Option<Vec<u32>>,
}

impl NamedGraph {
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|s| s == name)
    }
}

/// Registry entry: name, whether it takes an order parameter, description.
pub const REGISTRY: &[(&str, bool, &str)] = &[
    ("P", true, "path on n vertices"),
    ("K", true, "complete graph on n vertices"),
    ("C", true, "cycle on n >= 3 vertices"),
    ("H7", false, "the unique graph realizing (2,2,2,1)"),
    ("fig2", false, "5-cycle with a pendant path of length 2; not cop-win"),
    ("fig2531-1top", false, "a graph 1-realizing (1,4,2,1)"),
    ("fig2531-0top", false, "a graph 0-realizing (3,3,2,1)"),
    ("fig1232-132", false, "the unique graph realizing (1,3,2)"),
    ("fig1232-1232", false, "the unique graph realizing (1,2,3,2)"),
];

pub fn named_graph(name: &str, n: Option<usize>) -> Result<NamedGraph> {
    let (_, takes_n, _) = REGISTRY
        .iter()
        .find(|(k, _, _)| k.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::argument(format!("unknown graph name {name:?}")))?;
    match (takes_n, n) {
        (true, None) => return Err(Error::argument(format!("{name} needs an order n"))),
        (false, Some(_)) => return Err(Error::argument(format!("{name} takes no order"))),
        _ => {}
    }
    let numbered = |g: Graph, label: &str| NamedGraph {
        name: format!("{label}{}", g.n()),
        vertex_names: (1..=g.n()).map(|i| i.to_string()).collect(),
        printed_ranks: None,
        graph: g,
    };
    Ok(match name.to_ascii_uppercase().as_str() {
        "P" => numbered(Graph::path(n.unwrap())?, "P"),
        "K" => numbered(Graph::complete(n.unwrap())?, "K"),
        "C" => numbered(Graph::cycle(n.unwrap())?, "C"),
        "H7" => h7(),
        "FIG2" => {
            let mut g = figure(
                "fig2",
                &[("v1", 0), ("v2", 0), ("v3", 0), ("v4", 0), ("v5", 0), ("y", 2), ("x", 1)],
                "v1/v2, v2/v3, v3/v4, v4/v5, v5/v1, v1/y, y/x",
            );
            // Ranks drawn only on x and y; the cycle is infinite.
            g.printed_ranks = None;
            g
        }
        "FIG2531-1TOP" => figure(
            "fig2531-1top",
            &[("v", 4), ("a", 3), ("b", 3), ("c", 3), ("d", 3), ("x", 2), ("y", 2), ("w", 1)],
            "x/y, a/b, b/c, c/d, d/a, x/a, x/c, y/b, y/d, \
             w/x, w/y, a/v, b/v, c/v, d/v, x/b, y/c",
        ),
        "FIG2531-0TOP" => figure(
            "fig2531-0top",
            &[("a", 4), ("b", 4), ("c", 4), ("d", 3), ("e", 3), ("f", 3), ("g", 2), ("h", 2), ("i", 1)],
            // The figure draws c/h twice; the duplicate collapses.
            "a/b, a/c, b/c, a/d, a/e, a/g, b/e, b/f, c/d, c/f, c/h, c/h, e/f, \
             d/i, d/g, d/h, e/g, f/h, g/i, h/i",
        ),
        "FIG1232-132" => figure(
            "fig1232-132",
            &[("a1", 3), ("b1", 2), ("b2", 2), ("b3", 2), ("c1", 1), ("c2", 1)],
            "b1/b2, a1/b1, a1/b2, a1/b3, b1/c1, b2/c1, b3/c2",
        ),
        "FIG1232-1232" => figure(
            "fig1232-1232",
            &[("a", 4), ("b1", 3), ("b2", 3), ("c1", 2), ("c2", 2), ("c3", 2), ("d1", 1), ("d2", 1)],
            "c3/c2, a/b1, a/b2, b1/c1, b2/c2, b2/c3, c1/d1, c2/d2, c3/d2",
        ),
        _ => unreachable!("registry and match arms agree"),
    })
}

/// The 7-vertex graph with vector (2,2,2,1).
pub fn h7() -> NamedGraph {
    figure(
        "H7",
        &[("a1", 4), ("a2", 4), ("b1", 3), ("b2", 3), ("c1", 2), ("c2", 2), ("d", 1)],
        "a1/a2, b1/c1, b1/c2, b2/c1, b2/c2, c1/d, c2/d, \
         a1/b2, a1/b1, a2/b2, a2/b1, a2/c1, a1/c2, b1/d",
    )
}

/// C5 `v1..v5` with the path `v1 - y - x`; `y` is index 5 and `x` index 6.
pub fn fig2() -> Graph {
    named_graph("fig2", None).expect("registered").graph
}

/// Builds a figure graph from `from/to` pairs over named vertices.
fn figure(name: &str, vertices: &[(&str, u32)], edges: &str) -> NamedGraph {
    let index = |v: &str| {
        vertices
            .iter()
            .position(|(n, _)| *n == v)
            .unwrap_or_else(|| panic!("{name}: unknown vertex {v}"))
    };
    let pairs: Vec<(usize, usize)> = edges
        .split(',')
        .map(|e| {
            let (a, b) = e.trim().split_once('/').expect("from/to pair");
            (index(a), index(b))
        })
        .collect();
    NamedGraph {
        name: name.to_string(),
        graph: Graph::from_edges(vertices.len(), &pairs).expect("figure edges are valid"),
        vertex_names: vertices.iter().map(|(n, _)| n.to_string()).collect(),
        printed_ranks: Some(vertices.iter().map(|&(_, r)| r).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::{corner_rank, Rank};

    #[test]
    fn printed_ranks_reproduce() {
        for (name, takes_n, _) in REGISTRY {
            if *takes_n {
                continue;
            }
            let ng = named_graph(name, None).unwrap();
            let r = corner_rank(&ng.graph);
            if let Some(printed) = &ng.printed_ranks {
                let got: Vec<Rank> = printed.iter().map(|&k| Rank::Finite(k)).collect();
                assert_eq!(r.ranks(), &got[..], "{name}");
            }
        }
    }

    #[test]
    fn sizes() {
        let h = h7();
        assert_eq!((h.graph.n(), h.graph.edge_count()), (7, 14));
        assert_eq!(named_graph("fig2531-0top", None).unwrap().graph.n(), 9);
        assert_eq!(named_graph("P", Some(1)).unwrap().graph.n(), 1);
        assert_eq!(named_graph("p", Some(7)).unwrap().graph, Graph::path(7).unwrap());
        assert!(named_graph("P", None).is_err());
        assert!(named_graph("H7", Some(3)).is_err());
        assert!(named_graph("nope", None).is_err());
    }

    #[test]
    fn h7_neighborhoods() {
        let h = h7();
        let v = |s| h.vertex(s).unwrap();
        let nd: Vec<usize> = h.graph.closed_neighborhood(v("d")).unwrap().iter().collect();
        let mut want = vec![v("d"), v("b1"), v("c1"), v("c2")];
        want.sort();
        assert_eq!(nd, want);
        let s = [v("b1"), v("b2"), v("a2")].into_iter().collect();
        assert!(h.graph.dominates(v("a1"), s).unwrap());
        assert!(h.graph.strictly_corners(v("b1"), v("d")).unwrap());
        assert!(!h.graph.twins(v("a1"), v("a2")).unwrap());
        assert_eq!(h.graph.connected_components().len(), 1);
    }
}
